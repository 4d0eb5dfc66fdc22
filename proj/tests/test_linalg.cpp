#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fim/linalg.hpp"
#include "oracles.hpp"

#include <random>

using namespace fim;

namespace {

// Leading entries are 1, move strictly right, and their columns are otherwise zero;
// zero rows sit at the bottom.
bool is_reduced_echelon(const Matrix& m) {
    long last = -1;
    bool seen_zero = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = 0;
        while (c < m.cols() && sgn(m(r, c)) == 0) ++c;
        if (c == m.cols()) {
            seen_zero = true;
            continue;
        }
        if (seen_zero || static_cast<long>(c) <= last || m(r, c) != 1) return false;
        for (std::size_t r2 = 0; r2 < m.rows(); ++r2)
            if (r2 != r && sgn(m(r2, c)) != 0) return false;
        last = static_cast<long>(c);
    }
    return true;
}

Matrix random_low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(rows, cols))(rng);
    return oracle::random_matrix(rng, rows, k) * oracle::random_matrix(rng, k, cols);
}

}  // namespace

TEST_CASE("rational text round trip") {
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    Rational two(6, 3);
    two.canonicalize();
    CHECK(to_string(two) == "2");
    CHECK(parse_rational("10/-4") == Rational(-5, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("rref examples") {
    CHECK(rref(Matrix{{0}}) == Matrix{{0}});
    CHECK(rref(Matrix{{2, 4}, {1, 2}}) == Matrix{{1, 2}, {0, 0}});
    const Matrix m{{1, 2}, {3, 4}};
    const Matrix r = rref(m);
    CHECK(r == Matrix::identity(2));
    // Same row space as the input.
    CHECK(Subspace::row_span(m) == Subspace::row_span(r));
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(Matrix::zero(2, 3)).dim() == 3);
    const Matrix m{{1, 1, 0}};
    const Subspace k = kernel_basis(m);
    CHECK(k.dim() == 2);
    for (std::size_t r = 0; r < k.dim(); ++r) CHECK(m.apply(k.basis().row(r)) == Vector{0});
}

TEST_CASE("quotient, kron and solve examples") {
    const Subspace line = Subspace::row_span(Matrix{{1, 0}});
    const Matrix q = quotient_map(2, line);
    CHECK(q.rows() == 1);
    CHECK(q.apply(Vector{1, 0}) == Vector{0});
    CHECK(rank(q) == 1);
    CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
    const auto x = solve(Matrix{{1, 2}, {3, 4}}, Vector{1, 1});
    REQUIRE(x);
    CHECK(*x == Vector{-1, 1});
    CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{1, 2}));
}

TEST_CASE("subspace operations") {
    const Subspace a = Subspace::row_span(Matrix{{1, 0, 0}, {0, 1, 0}});
    const Subspace b = Subspace::row_span(Matrix{{0, 1, 0}, {0, 0, 1}});
    CHECK(a.intersect(b) == Subspace::row_span(Matrix{{0, 1, 0}}));
    CHECK(a.sum(b) == Subspace::full(3));
    CHECK(a.contains(Vector{2, -1, 0}));
    CHECK_FALSE(a.contains(Vector{0, 0, 1}));
    CHECK(a.coordinates(Vector{2, -1, 0}) == Vector{2, -1});
    SpanBuilder s(3);
    CHECK(s.add(Vector{1, 1, 0}));
    CHECK_FALSE(s.add(Vector{2, 2, 0}));
    CHECK(s.add(Vector{0, 0, 1}));
    CHECK(s.subspace() == Subspace::row_span(Matrix{{1, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("property: rref is idempotent and reduced") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const Matrix m = random_low_rank(rng, r, c);
        const Matrix once = rref(m);
        CHECK(rref(once) == once);
        CHECK(is_reduced_echelon(once));
        CHECK(Subspace::row_span(m) == Subspace::row_span(once));
    }
}

TEST_CASE("property: rank-nullity up to 12x12") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const Matrix m = random_low_rank(rng, r, c);
        const Subspace k = kernel_basis(m);
        CHECK(k.dim() + image_basis(m).dim() == c);
        CHECK(rank(m) == image_basis(m).dim());
        if (k.dim() > 0) CHECK((m * k.columns()).is_zero());
    }
}

TEST_CASE("property: quotient maps and sections") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        const Subspace sub = Subspace::column_span(random_low_rank(rng, d, d));
        const Matrix q = quotient_map(d, sub);
        CHECK(rank(q) == d - sub.dim());
        if (sub.dim() > 0) CHECK((q * sub.columns()).is_zero());
        CHECK((q * quotient_section(d, sub)).is_identity());
    }
}

TEST_CASE("property: kron mixed product") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        auto dim = [&] { return std::uniform_int_distribution<std::size_t>(1, 3)(rng); };
        const std::size_t p = dim(), q = dim(), r = dim(), s = dim(), t = dim(), u = dim();
        const Matrix a = oracle::random_matrix(rng, p, q), c = oracle::random_matrix(rng, q, r);
        const Matrix b = oracle::random_matrix(rng, s, t), d = oracle::random_matrix(rng, t, u);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("property: solve agrees with substitution") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = random_low_rank(rng, 5, 4);
        const Matrix b = m * oracle::random_matrix(rng, 4, 2);
        const auto x = solve(m, b);
        REQUIRE(x);
        CHECK(m * *x == b);
    }
}
