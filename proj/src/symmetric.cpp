#include "fim/symmetric.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace fim {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 0; j < (parts_.empty() ? 0 : parts_[0]); ++j) {
        int len = 0;
        for (int p : parts_)
            if (p > j) ++len;
        c.push_back(len);
    }
    return Partition(std::move(c));
}

std::string to_string(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::size_t hook_length_dimension(const Partition& p) {
    const Partition c = p.conjugate();
    std::size_t hooks = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) hooks *= static_cast<std::size_t>(p[i] - j - 1 + c[j] - i - 1 + 1);
    return factorial(p.size()) / hooks;
}

Partition cycle_type(const Injection& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lengths;
    for (std::size_t x = 0; x < perm.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(perm[y])) {
            seen[y] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

std::size_t class_size(const Partition& mu) {
    std::size_t z = 1;
    std::map<int, int> mult;
    for (int p : mu.parts()) {
        z *= static_cast<std::size_t>(p);
        ++mult[p];
    }
    for (auto [part, k] : mult) z *= factorial(k);
    return factorial(mu.size()) / z;
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
    std::vector<Tableau> out;
    Tableau cur(static_cast<std::size_t>(p.length()));
    std::function<void(int)> rec = [&](int next) {
        if (next == p.size()) {
            out.push_back(cur);
            return;
        }
        for (int r = 0; r < p.length(); ++r) {
            auto& row = cur[static_cast<std::size_t>(r)];
            const auto len = static_cast<int>(row.size());
            if (len >= p[r]) continue;
            if (r > 0 && static_cast<int>(cur[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
            row.push_back(next);
            rec(next + 1);
            row.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

// Tabloid given by the row of each entry.
using Tabloid = std::vector<int>;

Vector polytabloid(const Tableau& t, int n, const std::map<Tabloid, std::size_t>& index) {
    Vector v(index.size());
    std::vector<std::vector<int>> columns;
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (columns.size() <= c) columns.emplace_back();
            columns[c].push_back(t[r][c]);
        }
    std::vector<std::vector<Injection>> column_perms;
    for (const auto& col : columns) column_perms.push_back(injections(static_cast<int>(col.size()), static_cast<int>(col.size())));
    Tabloid rows(static_cast<std::size_t>(n));
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int sign) {
        if (c == columns.size()) {
            v[index.at(rows)] += sign;
            return;
        }
        const auto& col = columns[c];
        for (const auto& p : column_perms[c]) {
            for (std::size_t r = 0; r < col.size(); ++r) rows[static_cast<std::size_t>(col[static_cast<std::size_t>(p[r])])] = static_cast<int>(r);
            rec(c + 1, sign * permutation_sign(p));
        }
    };
    rec(0, 1);
    return v;
}

}  // namespace

bool satisfies_coxeter(const std::vector<Matrix>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] * s[i]).is_identity()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Matrix prod = s[i] * s[j];
            if (j == i + 1) {
                if (!(prod * prod * prod).is_identity()) return false;
            } else if (!(prod * prod).is_identity()) {
                return false;
            }
        }
    }
    return true;
}

SpechtRep specht(const Partition& lambda) {
    const int n = lambda.size();
    SpechtRep rep{lambda, 0, {}};
    if (n <= 1) {
        rep.dim = 1;
        return rep;
    }
    Tabloid labels;
    for (int r = 0; r < lambda.length(); ++r) labels.insert(labels.end(), static_cast<std::size_t>(lambda[r]), r);
    std::map<Tabloid, std::size_t> index;
    do {
        index.emplace(labels, index.size());
    } while (std::next_permutation(labels.begin(), labels.end()));

    const auto tableaux = standard_tableaux(lambda);
    rep.dim = tableaux.size();
    std::vector<Vector> basis;
    for (const auto& t : tableaux) basis.push_back(polytabloid(t, n, index));
    const Matrix b = Matrix::from_columns(basis, index.size());

    for (int k = 0; k + 1 < n; ++k) {
        std::vector<Vector> images;
        for (const auto& t : tableaux) {
            Tableau moved = t;
            for (auto& row : moved)
                for (int& e : row) {
                    if (e == k) e = k + 1;
                    else if (e == k + 1) e = k;
                }
            images.push_back(polytabloid(moved, n, index));
        }
        auto x = solve(b, Matrix::from_columns(images, index.size()));
        if (!x) throw std::logic_error("polytabloid image outside the Specht span");
        rep.generators.push_back(*x);
    }
    if (!satisfies_coxeter(rep.generators)) throw std::logic_error("Specht matrices fail the Coxeter relations");
    return rep;
}

long murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("character: size mismatch");
    const int len = lambda.length();
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
    std::function<long(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& b, std::size_t part) -> long {
        if (part == static_cast<std::size_t>(mu.length())) return 1;
        const int r = mu[static_cast<int>(part)];
        long total = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int from = b[i], to = b[i] - r;
            if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
            int between = 0;
            for (int x : b)
                if (x > to && x < from) ++between;
            b[i] = to;
            total += (between % 2 ? -1 : 1) * rec(b, part + 1);
            b[i] = from;
        }
        return total;
    };
    return rec(beta, 0);
}

CharacterVector character(const Partition& lambda) {
    CharacterVector chi{partitions(lambda.size()), {}};
    for (const auto& mu : chi.classes) chi.values.emplace_back(murnaghan_nakayama(lambda, mu));
    return chi;
}

Rational inner_product(const CharacterVector& a, const CharacterVector& b) {
    if (a.classes != b.classes) throw std::invalid_argument("inner product: different groups");
    Rational sum = 0;
    std::size_t order = 1;
    for (std::size_t c = 0; c < a.classes.size(); ++c) {
        sum += Rational(static_cast<long>(class_size(a.classes[c]))) * a.values[c] * b.values[c];
        order = factorial(a.classes[c].size());
    }
    return sum / Rational(static_cast<long>(order));
}

// ---------------------------------------------------------------------------

GroupCharacters rational_character_table(const GroupTable& group) {
    GroupCharacters out;
    out.classes = group.conjugacy_classes();
    const std::size_t r = out.classes.size();
    out.class_of.assign(static_cast<std::size_t>(group.order()), 0);
    for (std::size_t c = 0; c < r; ++c)
        for (int x : out.classes[c]) out.class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);

    // Class constant matrices: (M_j)_{l,k} = #{x in C_j : x^{-1} z_k in C_l}.
    std::vector<Matrix> constants(r, Matrix(r, r));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
            const int z = out.classes[k][0];
            for (int x : out.classes[j]) {
                const auto l = static_cast<std::size_t>(out.class_of[static_cast<std::size_t>(group.multiply(group.inverse(x), z))]);
                constants[j](l, k) += 1;
            }
        }

    std::vector<Matrix> spaces{Matrix::identity(r)};  // columns span common eigenspaces
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Matrix> next;
        const long bound = static_cast<long>(out.classes[j].size());
        for (const auto& basis : spaces) {
            if (basis.cols() == 1) {
                next.push_back(basis);
                continue;
            }
            auto restricted = solve(basis, constants[j] * basis);
            if (!restricted) throw std::logic_error("class constant matrix does not preserve an eigenspace");
            std::size_t found = 0;
            for (long lambda = -bound; lambda <= bound; ++lambda) {
                Matrix shifted = *restricted - Matrix::identity(basis.cols()) * Rational(lambda);
                Subspace ker = kernel_basis(shifted);
                if (ker.dim() == 0) continue;
                found += ker.dim();
                next.push_back(basis * ker.columns());
            }
            if (found != basis.cols())
                throw std::domain_error("group has characters with irrational values");
        }
        spaces = std::move(next);
    }

    const Rational order(group.order());
    for (const auto& space : spaces) {
        if (space.cols() != 1) throw std::logic_error("class constants did not separate the characters");
        Vector w = space.column(0);
        const Rational w0 = w[0];
        for (auto& x : w) x /= w0;
        Rational norm = 0;
        for (std::size_t k = 0; k < r; ++k) norm += w[k] * w[k] / Rational(static_cast<long>(out.classes[k].size()));
        const Rational deg_sq = order / norm;
        if (deg_sq.get_den() != 1) throw std::domain_error("non-integral character degree");
        mpz_class deg = sqrt(deg_sq.get_num());
        if (deg * deg != deg_sq.get_num()) throw std::domain_error("non-integral character degree");
        std::vector<Rational> chi;
        for (std::size_t k = 0; k < r; ++k) chi.push_back(Rational(deg) * w[k] / Rational(static_cast<long>(out.classes[k].size())));
        out.table.push_back(std::move(chi));
    }
    std::sort(out.table.begin(), out.table.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return b < a;
    });
    return out;
}

std::vector<Matrix> element_matrices(const GroupTable& group, const std::vector<Matrix>& generator_matrices,
                                     std::size_t dim) {
    if (generator_matrices.size() != group.generators().size())
        throw std::invalid_argument("one matrix per group generator required");
    std::vector<Matrix> out(static_cast<std::size_t>(group.order()));
    std::vector<bool> seen(out.size(), false);
    out[0] = Matrix::identity(dim);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int e = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < generator_matrices.size(); ++j) {
            const int x = group.multiply(group.generators()[j], e);
            if (seen[static_cast<std::size_t>(x)]) continue;
            seen[static_cast<std::size_t>(x)] = true;
            out[static_cast<std::size_t>(x)] = generator_matrices[j] * out[static_cast<std::size_t>(e)];
            queue.push_back(x);
        }
    }
    return out;
}

std::vector<Constituent> decompose(const ObjectIndex& s, const GroupTable& g,
                                   const std::vector<Matrix>& generator_matrices, std::size_t dim) {
    const GroupPtr aut = GroupTable::automorphisms(s);
    const GroupPtr product = GroupTable::product(*aut, g);
    const auto rho = element_matrices(*product, generator_matrices, dim);
    for (int x = 0; x < product->order(); ++x)
        for (std::size_t j = 0; j < generator_matrices.size(); ++j) {
            const int y = product->multiply(product->generators()[j], x);
            if (generator_matrices[j] * rho[static_cast<std::size_t>(x)] != rho[static_cast<std::size_t>(y)])
                throw std::invalid_argument("matrices violate the group relations at generator " + std::to_string(j));
        }

    const GroupCharacters gchars = rational_character_table(g);
    std::vector<Rational> traces;
    std::vector<std::vector<Partition>> types;
    for (int x = 0; x < product->order(); ++x) {
        Rational t = 0;
        for (std::size_t i = 0; i < dim; ++i) t += rho[static_cast<std::size_t>(x)](i, i);
        traces.push_back(t);
        std::vector<Partition> ct;
        for (const auto& p : automorphism_element(s, x / g.order())) ct.push_back(cycle_type(p));
        types.push_back(std::move(ct));
    }

    std::vector<std::vector<Partition>> tuples{{}};
    for (int i = 0; i < s.m(); ++i) {
        std::vector<std::vector<Partition>> next;
        for (const auto& t : tuples)
            for (const auto& p : partitions(s[i])) {
                auto u = t;
                u.push_back(p);
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }

    std::vector<Constituent> out;
    std::size_t total = 0;
    for (const auto& lambdas : tuples)
        for (std::size_t psi = 0; psi < gchars.table.size(); ++psi) {
            Rational sum = 0;
            for (int x = 0; x < product->order(); ++x) {
                Rational chi = gchars.table[psi][static_cast<std::size_t>(gchars.class_of[static_cast<std::size_t>(x % g.order())])];
                for (int i = 0; i < s.m(); ++i)
                    chi *= murnaghan_nakayama(lambdas[static_cast<std::size_t>(i)], types[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)]);
                sum += traces[static_cast<std::size_t>(x)] * chi;
            }
            sum /= product->order();
            if (sum.get_den() != 1 || sum < 0) throw std::logic_error("non-integral multiplicity");
            const int mult = static_cast<int>(sum.get_num().get_si());
            if (mult == 0) continue;
            std::size_t d = static_cast<std::size_t>(gchars.table[psi][0].get_num().get_si());
            for (const auto& l : lambdas) d *= hook_length_dimension(l);
            total += d * static_cast<std::size_t>(mult);
            out.push_back({lambdas, static_cast<int>(psi), mult});
        }
    if (total != dim) throw std::logic_error("decomposition does not account for the dimension");
    return out;
}

}  // namespace fim
