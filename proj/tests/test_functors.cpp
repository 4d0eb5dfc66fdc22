#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fim/functors.hpp"
#include "fim/hom.hpp"
#include "fim/lab.hpp"
#include "fim/sampling.hpp"
#include "oracles.hpp"

#include <random>

using namespace fim;

namespace {

const GroupPtr trivial = GroupTable::trivial();

/// An isomorphism found by the library, re-checked here.
bool isomorphic(const TruncatedModule& a, const TruncatedModule& b) {
    if (a.window() != b.window() || a.dims() != b.dims()) return false;
    const auto iso = find_isomorphism(share(a), share(b));
    return iso && is_natural(*iso) && is_isomorphism(*iso);
}

bool bare_equal(TruncatedModule a, TruncatedModule b) {
    a.set_presentation(std::nullopt);
    b.set_presentation(std::nullopt);
    return a == b;
}

TruncatedModule specht_slice(const Partition& lambda) {
    const ObjectIndex s{lambda.size()};
    const SpechtRep rep = specht(lambda);
    const GroupPtr g = GroupTable::product(*GroupTable::automorphisms(s), *trivial);
    TruncatedModule w(Window(ObjectIndex(std::vector<int>{})), g, {rep.dim});
    for (std::size_t j = 0; j < rep.generators.size(); ++j)
        w.set_group_action(ObjectIndex(std::vector<int>{}), static_cast<int>(j), rep.generators[j]);
    return w;
}

}  // namespace

TEST_CASE("shift of free modules") {
    const TruncatedModule s1 = shift(make_free({1}, Window(ObjectIndex{4}), trivial), 0);
    CHECK(s1.window().bound() == ObjectIndex{3});
    for (int t = 0; t <= 3; ++t) CHECK(s1.dim(ObjectIndex{t}) == static_cast<std::size_t>(t + 1));

    const Window w(ObjectIndex{3, 3});
    const TruncatedModule s11 = shift(make_free({1, 1}, w, trivial), 1);
    const ObjectIndex b{3, 2};
    CHECK(isomorphic(s11, direct_sum(make_free({1, 1}, Window(b), trivial), make_free({1, 0}, Window(b), trivial))));
    CHECK_THROWS(shift(make_free({0}, Window(ObjectIndex{0}), trivial), 0));
}

TEST_CASE("canonical maps") {
    const Window w(ObjectIndex{3});
    const auto m0 = share(make_free({0}, w, trivial));
    for (const auto& b : canonical_map(m0, 0).blocks) CHECK(b.is_identity());
    const ModuleMap pt = canonical_map(share(make_point(w, trivial)), 0);
    CHECK(pt.target->is_zero());
    CHECK(is_natural(pt));
    const ModuleMap c1 = canonical_map(share(make_free({1}, w, trivial)), 0);
    CHECK(is_natural(c1));
    CHECK(is_blockwise_injective(c1));
}

TEST_CASE("kernel and derivative functors") {
    for (const ObjectIndex& bound : {ObjectIndex{3}, ObjectIndex{2, 2}}) {
        const Window w(bound);
        for (const auto& n : w.objects())
            for (int i = 0; i < bound.m(); ++i) CHECK(kernel_functor(make_free(n, w, trivial), i).is_zero());
    }
    const Window w(ObjectIndex{3});
    CHECK(isomorphic(derivative(make_free({1}, w, trivial), 0), make_free({0}, Window(ObjectIndex{2}), trivial)));
    const TruncatedModule k = kernel_functor(make_point(w, trivial), 0);
    CHECK(k.dims() == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("product shifts") {
    std::mt19937 rng(7);
    const Window w(ObjectIndex{3, 3});
    const TruncatedModule v = random_presentation(rng, 2, trivial).build(w);
    CHECK(shift_prod(v, {0}, 1) == shift(v, 0));
    const TruncatedModule m0 = make_free({0, 0}, w, trivial);
    CHECK(bare_equal(shift_prod(m0, {0, 1}, 1), restrict_window(m0, ObjectIndex{2, 2})));
    // Two applications of the shift decomposition: M(1,1) + M(0,1) + M(1,0) + M(0,0).
    const TruncatedModule s = shift_prod(make_free({1, 1}, w, trivial), {0, 1}, 1);
    for (const auto& n : s.window().objects())
        CHECK(s.dim(n) == static_cast<std::size_t>((n[0] + 1) * (n[1] + 1)));
    const ModuleMap c = canonical_prod_map(share(make_free({1, 1}, w, trivial)), {0, 1}, 1);
    CHECK(is_natural(c));
    CHECK(is_blockwise_injective(c));
}

TEST_CASE("property: shift commutes with derivative") {
    std::mt19937 rng(8);
    const Window w(ObjectIndex{3, 3});
    for (int k = 0; k < 6; ++k) {
        const auto v = share(random_presentation(rng, 2, trivial).build(w));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const auto si = share(shift(*v, i));
                const QuotientResult a = cokernel(canonical_map(si, j));  // D_j Sigma_i V
                const QuotientResult b = cokernel(canonical_map(v, j));   // D_j V
                const auto sb = share(shift(*b.module, i));              // Sigma_i D_j V
                REQUIRE(sb->window() == a.module->window());
                const ObjectIndex oi = ObjectIndex::unit(2, i);
                ModuleMap phi{sb, a.module, {}};
                // For i = j the two images differ by the transposition of the two new points.
                for (const auto& n : sb->window().objects()) {
                    const Matrix twist = i == j ? v->swap(n + oi + oi, i, 0) : Matrix::identity(v->dim(n + oi + ObjectIndex::unit(2, j)));
                    phi.blocks.push_back(a.projection.at(n) * twist * b.section_at(n + oi));
                }
                CHECK(is_natural(phi));
                CHECK(is_isomorphism(phi));
            }
    }
}

TEST_CASE("property: shift is exact") {
    std::mt19937 rng(9);
    const Window w(ObjectIndex{3, 3});
    for (int k = 0; k < 6; ++k) {
        const auto v = share(random_presentation(rng, 2, trivial).build(w));
        SubspaceFamily gens = zero_family(*v);
        const std::size_t idx = v->window().index(ObjectIndex{1, 1});
        if (v->dim_at(idx) == 0) continue;
        gens[idx] = Subspace::row_span(oracle::random_matrix(rng, 1, v->dim_at(idx)));
        const SubmoduleResult sub = submodule_generated(v, gens);
        const QuotientResult quo = quotient(v, image_family(sub.inclusion));
        for (int i = 0; i < 2; ++i) {
            const TruncatedModule a = shift(*sub.module, i), b = shift(*v, i), c = shift(*quo.module, i);
            const ObjectIndex oi = ObjectIndex::unit(2, i);
            for (const auto& n : b.window().objects()) {
                const Matrix& inc = sub.inclusion.at(n + oi);
                const Matrix& pr = quo.projection.at(n + oi);
                CHECK(a.dim(n) + c.dim(n) == b.dim(n));
                CHECK(rank(inc) == a.dim(n));
                CHECK(rank(pr) == c.dim(n));
                CHECK((pr * inc).is_zero());
            }
        }
    }
}

TEST_CASE("property: repeated shifts eventually kill the kernel") {
    std::mt19937 rng(10);
    const Window w(ObjectIndex{7});
    for (int k = 0; k < 10; ++k) {
        const TruncatedModule v = random_presentation(rng, 1, trivial).build(w);
        bool found = false;
        for (int n = 0; n <= 4 && !found; ++n) found = kernel_functor(shift_prod(v, {0}, n), 0).is_zero();
        CHECK(found);
    }
}

TEST_CASE("induced modules from slices") {
    // F_s of an irreducible slice is the induced module.
    for (const auto& lambda : {Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
        const ObjectIndex s{lambda.size()};
        const TruncatedModule f = induced_module(s, {0}, specht_slice(lambda), trivial, ObjectIndex{4});
        CHECK(validate(f).ok);
        CHECK(isomorphic(f, make_induced({lambda}, Window(ObjectIndex{4}), trivial)));
    }

    // F_s(W' x kAut(s)) = M(s) x W'.
    const ObjectIndex s{2};
    const TruncatedModule w_prime = make_free({1}, Window(ObjectIndex{2}), trivial);
    const TruncatedModule f = induced_module(s, {0}, tensor_regular(w_prime, s), trivial, ObjectIndex{3, 2});
    CHECK(validate(f).ok);
    CHECK(isomorphic(f, external_tensor(make_free({2}, Window(ObjectIndex{3}), trivial), w_prime)));
    CHECK(induced_combinations(ObjectIndex{2}, ObjectIndex{3}).size() == oracle::binomial(3, 2));
    CHECK(induced_combinations(ObjectIndex{2}, ObjectIndex{1}).empty());
}

TEST_CASE("property: F_s sends surjections to surjections") {
    const ObjectIndex s{1};
    const auto w = share(make_free({1}, Window(ObjectIndex{3}), trivial));
    SubspaceFamily gens = zero_family(*w);
    gens[2] = Subspace::full(w->dim(ObjectIndex{2}));
    const QuotientResult q = quotient(w, image_family(submodule_generated(w, gens).inclusion));
    const auto fa = share(induced_module(s, {0}, *w, trivial, ObjectIndex{3, 3}));
    const auto fb = share(induced_module(s, {0}, *q.module, trivial, ObjectIndex{3, 3}));
    ModuleMap f{fa, fb, {}};
    for (const auto& n : fa->window().objects()) {
        const std::size_t c = induced_combinations(s, n.project({0})).size();
        f.blocks.push_back(kron(Matrix::identity(c), q.projection.at(n.project({1}))));
    }
    CHECK(is_natural(f));
    CHECK(is_blockwise_surjective(f));
}

TEST_CASE("induction and the adjunction") {
    const Window w(ObjectIndex{3});
    const GroupPtr s2 = GroupTable::symmetric(2);
    const auto v = share(make_free({1}, w, trivial));
    const auto target = share(make_cofree({2}, w, s2));
    const auto res_w = share(res(*target));
    const HomResult left = hom_space_bounded(share(ind(*v, s2)), target);
    const HomResult right = hom_space_bounded(v, res_w);
    CHECK(left.basis.size() == right.basis.size());
    for (const auto& phi : left.basis) CHECK(is_natural(adjunction_restrict(phi, v, res_w)));

    // A random 3-dimensional S3-representation at a single object.
    std::mt19937 rng(11);
    const GroupPtr s3 = GroupTable::symmetric(3);
    const Matrix p = oracle::random_matrix(rng, 3, 3);
    REQUIRE(rank(p) == 3);
    const Matrix p_inv = *solve(p, Matrix::identity(3));
    TruncatedModule single(Window(ObjectIndex{0}), s3, {3});
    for (std::size_t j = 0; j < s3->generators().size(); ++j) {
        Matrix perm(3, 3);
        const Injection swap = j == 0 ? Injection{1, 0, 2} : Injection{0, 2, 1};
        for (std::size_t x = 0; x < 3; ++x) perm(static_cast<std::size_t>(swap[x]), x) = 1;
        single.set_group_action(ObjectIndex{0}, static_cast<int>(j), p * perm * p_inv);
    }
    REQUIRE(validate(single).ok);
    const auto [phi, eps] = averaging_splitting(share(single));
    CHECK(compose(eps, phi).blocks.front().is_identity());
}
