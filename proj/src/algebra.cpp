#include "fim/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace fim {

Polynomial trim(Polynomial p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    return p;
}

int degree(const Polynomial& p) { return static_cast<int>(trim(p).size()) - 1; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trim(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return trim(std::move(out));
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
    const Polynomial d = trim(b);
    if (d.empty()) throw std::domain_error("polynomial division by zero");
    Polynomial r = trim(a);
    if (r.size() < d.size()) return {{}, r};
    Polynomial q(r.size() - d.size() + 1);
    while (!r.empty() && r.size() >= d.size()) {
        const std::size_t shift = r.size() - d.size();
        const Rational c = r.back() / d.back();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), r};
}

Bezout extended_gcd(const Polynomial& x, const Polynomial& y) {
    Polynomial r0 = trim(x), r1 = trim(y);
    Polynomial a0{1}, a1{}, b0{}, b1{1};
    while (!r1.empty()) {
        auto [q, r] = divide(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial a2 = a0 - q * a1, b2 = b0 - q * b1;
        a0 = std::move(a1);
        a1 = std::move(a2);
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    if (r0.empty()) return {{}, a0, b0};
    const Rational lead = r0.back();
    auto normalise = [&](Polynomial p) {
        for (auto& c : p) c /= lead;
        return p;
    };
    return {normalise(r0), normalise(a0), normalise(b0)};
}

Rational evaluate(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
    n = abs(n);
    if (n > mpz_class("1000000000000")) return std::nullopt;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Polynomial& poly) {
    Polynomial p = trim(poly);
    if (p.size() <= 1) return std::vector<Rational>{};
    std::vector<Rational> roots;
    if (sgn(p.front()) == 0) {
        roots.push_back(0);
        while (sgn(p.front()) == 0) p.erase(p.begin());
    }
    if (p.size() == 1) return roots;
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class c0 = mpz_class(p.front() * lcm);
    const mpz_class cd = mpz_class(p.back() * lcm);
    const auto num = positive_divisors(c0), den = positive_divisors(cd);
    if (!num || !den) return std::nullopt;
    for (const auto& u : *num)
        for (const auto& v : *den)
            for (int s : {1, -1}) {
                Rational r(u * s, v);
                r.canonicalize();
                if (sgn(evaluate(p, r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------

FiniteAlgebra::FiniteAlgebra(std::vector<std::vector<Vector>> constants, Vector unit)
    : constants_(std::move(constants)), unit_(std::move(unit)) {
    const std::size_t d = unit_.size();
    if (constants_.size() != d) throw std::invalid_argument("FiniteAlgebra: constants have the wrong size");
    for (const auto& row : constants_) {
        if (row.size() != d) throw std::invalid_argument("FiniteAlgebra: constants have the wrong size");
        for (const auto& c : row)
            if (c.size() != d) throw std::invalid_argument("FiniteAlgebra: constants have the wrong size");
    }
}

FiniteAlgebra FiniteAlgebra::from_blocks(const std::vector<std::vector<Matrix>>& basis) {
    const std::size_t d = basis.size();
    auto flatten = [](const std::vector<Matrix>& blocks) {
        Vector out;
        for (const auto& b : blocks)
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(b(r, c));
        return out;
    };
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    const std::size_t len = cols.empty() ? 0 : cols[0].size();
    const Matrix frame = Matrix::from_columns(cols, len);
    if (rank(frame) != d) throw std::invalid_argument("FiniteAlgebra: basis is not linearly independent");
    auto coordinates = [&](const Vector& flat) {
        auto x = solve(frame, flat);
        if (!x) throw std::invalid_argument("FiniteAlgebra: span is not closed");
        return *x;
    };
    std::vector<std::vector<Vector>> constants(d, std::vector<Vector>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            std::vector<Matrix> prod;
            for (std::size_t k = 0; k < basis[a].size(); ++k) prod.push_back(basis[a][k] * basis[b][k]);
            constants[a][b] = coordinates(flatten(prod));
        }
    Vector unit(d);
    if (d > 0) {
        std::vector<Matrix> id;
        for (const auto& b : basis[0]) id.push_back(Matrix::identity(b.rows()));
        unit = coordinates(flatten(id));
    }
    return FiniteAlgebra(std::move(constants), std::move(unit));
}

Vector FiniteAlgebra::multiply(const Vector& x, const Vector& y) const {
    Vector out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
        if (sgn(x[a]) == 0) continue;
        for (std::size_t b = 0; b < dim(); ++b) {
            if (sgn(y[b]) == 0) continue;
            const Rational s = x[a] * y[b];
            for (std::size_t c = 0; c < dim(); ++c) out[c] += s * constants_[a][b][c];
        }
    }
    return out;
}

Matrix FiniteAlgebra::left_regular(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t b = 0; b < dim(); ++b) {
        Vector e(dim());
        e[b] = 1;
        cols.push_back(multiply(x, e));
    }
    return Matrix::from_columns(cols, dim());
}

namespace {
Vector basis_vector(std::size_t d, std::size_t i) {
    Vector e(d);
    e[i] = 1;
    return e;
}
}  // namespace

bool FiniteAlgebra::is_associative() const {
    const std::size_t d = dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                const Vector ea = basis_vector(d, a), ec = basis_vector(d, c);
                if (multiply(constants_[a][b], ec) != multiply(ea, constants_[b][c])) return false;
            }
    for (std::size_t a = 0; a < d; ++a) {
        const Vector ea = basis_vector(d, a);
        if (multiply(unit_, ea) != ea || multiply(ea, unit_) != ea) return false;
    }
    return true;
}

bool FiniteAlgebra::is_commutative() const {
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = a + 1; b < dim(); ++b)
            if (constants_[a][b] != constants_[b][a]) return false;
    return true;
}

Subspace FiniteAlgebra::radical() const {
    const std::size_t d = dim();
    Vector traces(d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < d; ++i) traces[c] += constants_[c][i][i];
    Matrix gram(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) gram(a, b) += constants_[a][b][c] * traces[c];
    return kernel_basis(gram);
}

Polynomial FiniteAlgebra::minimal_polynomial(const Vector& x) const {
    std::vector<Vector> powers{unit_};
    for (;;) {
        Vector next = multiply(x, powers.back());
        const Matrix frame = Matrix::from_columns(powers, dim());
        if (auto coeffs = solve(frame, next)) {
            Polynomial p(powers.size() + 1);
            for (std::size_t j = 0; j < powers.size(); ++j) p[j] = -(*coeffs)[j];
            p.back() = 1;
            return trim(std::move(p));
        }
        powers.push_back(std::move(next));
    }
}

Vector FiniteAlgebra::evaluate(const Polynomial& p, const Vector& x) const {
    Vector acc(dim());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = multiply(x, acc);
        for (std::size_t c = 0; c < dim(); ++c) acc[c] += *it * unit_[c];
    }
    return acc;
}

bool FiniteAlgebra::is_idempotent(const Vector& e) const { return multiply(e, e) == e; }

std::optional<Vector> FiniteAlgebra::split_idempotent(const Vector& x) const {
    if (dim() == 0) return std::nullopt;
    const Polynomial p = minimal_polynomial(x);
    const auto roots = rational_roots(p);
    if (!roots) return std::nullopt;
    for (const auto& r : *roots) {
        const Polynomial linear{-r, 1};
        Polynomial power{1}, rest = p;
        for (;;) {
            auto [q, rem] = divide(rest, linear);
            if (!rem.empty()) break;
            rest = std::move(q);
            power = power * linear;
        }
        if (degree(rest) < 1) continue;
        const Bezout bz = extended_gcd(power, rest);
        const Vector e = evaluate(bz.b * rest, x);
        if (is_idempotent(e) && e != unit_ && std::any_of(e.begin(), e.end(), [](const Rational& c) { return sgn(c) != 0; }))
            return e;
    }
    return std::nullopt;
}

}  // namespace fim
