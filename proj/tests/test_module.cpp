#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fim/functors.hpp"
#include "fim/hom.hpp"
#include "fim/module.hpp"
#include "fim/module_io.hpp"
#include "fim/sampling.hpp"
#include "oracles.hpp"

#include <random>

using namespace fim;

namespace {

const GroupPtr trivial = GroupTable::trivial();

std::size_t falling(int b, int a) {
    std::size_t out = 1;
    for (int k = 0; k < a; ++k) out *= static_cast<std::size_t>(b - k);
    return out;
}

// Rank of the lambda-isotypic projector sum_sigma chi(sigma) R(sigma), divided by dim
// lambda. R is precomposition on Inj(s, t) (induced) or postcomposition on Inj(t, s)
// (co-induced), with m = 1.
std::size_t isotypic_dim(const Partition& lambda, int t, bool co) {
    const int s = lambda.size();
    const auto basis = co ? enumerate_injections(ObjectIndex{t}, ObjectIndex{s}) : enumerate_injections(ObjectIndex{s}, ObjectIndex{t});
    Matrix p(basis.size(), basis.size());
    for (const auto& sigma : enumerate_injections(ObjectIndex{s}, ObjectIndex{s})) {
        const Injection& perm = sigma.maps[0];
        const long chi = murnaghan_nakayama(lambda, cycle_type(perm));
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Morphism image = basis[c];
            Injection& f = image.maps[0];
            if (co)
                for (int& x : f) x = perm[static_cast<std::size_t>(x)];
            else
                f = compose(f, perm);
            p(oracle::position(basis, image), c) += chi;
        }
    }
    return rank(p) / hook_length_dimension(lambda);
}

Vector flatten(const ModuleMap& f) {
    Vector out;
    for (const auto& b : f.blocks)
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(b(r, c));
    return out;
}

bool in_span(const std::vector<ModuleMap>& basis, const ModuleMap& f) {
    const Vector target = flatten(f);
    if (basis.empty()) return std::all_of(target.begin(), target.end(), [](const Rational& q) { return sgn(q) == 0; });
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    return solve(Matrix::from_columns(cols, target.size()), target).has_value();
}

}  // namespace

TEST_CASE("free module examples") {
    CHECK(make_free(ObjectIndex{1}, Window(ObjectIndex{3}), trivial).dim(ObjectIndex{3}) == 3);
    CHECK(make_free(ObjectIndex{1, 1}, Window(ObjectIndex{2, 2}), trivial).dim(ObjectIndex{2, 2}) == 4);
    CHECK_THROWS(make_free(ObjectIndex{4}, Window(ObjectIndex{3}), trivial));
}

TEST_CASE("property: free module dimensions match the closed form") {
    for (const GroupPtr& g : {trivial, GroupTable::cyclic(2)}) {
        const Window w1(ObjectIndex{4});
        for (const auto& n : w1.objects()) {
            const TruncatedModule v = make_free(n, w1, g);
            for (const auto& t : w1.objects())
                CHECK(v.dim(t) == (leq(n, t) ? falling(t[0], n[0]) * static_cast<std::size_t>(g->order()) : 0));
        }
        const Window w2(ObjectIndex{3, 3});
        for (const auto& n : w2.objects()) {
            const TruncatedModule v = make_free(n, w2, g);
            for (const auto& t : w2.objects())
                CHECK(v.dim(t) == (leq(n, t) ? falling(t[0], n[0]) * falling(t[1], n[1]) * static_cast<std::size_t>(g->order()) : 0));
        }
    }
}

TEST_CASE("property: free module actions agree with composition of injections") {
    for (const ObjectIndex& bound : {ObjectIndex{3}, ObjectIndex{2, 2}}) {
        const Window w(bound);
        for (const auto& n : w.objects()) {
            const TruncatedModule v = make_free(n, w, trivial);
            for (const auto& a : w.objects())
                for (const auto& b : w.objects()) {
                    if (!leq(a, b) || !leq(n, a)) continue;
                    for (const auto& f : enumerate_injections(a, b)) CHECK(v.action(f) == oracle::free_action(n, f));
                }
        }
    }
}

TEST_CASE("induced and co-induced dimensions") {
    const Window w(ObjectIndex{3});
    CHECK(make_induced({Partition{2}}, w, trivial).dim(ObjectIndex{3}) == 3);
    CHECK(make_induced({Partition{1, 1}}, w, trivial).dim(ObjectIndex{2}) == 1);
    const TruncatedModule co = make_coinduced({Partition{1, 1}}, w, trivial);
    CHECK(co.dim(ObjectIndex{2}) == 1);
    CHECK(co.dim(ObjectIndex{1}) == 1);
    CHECK(co.dim(ObjectIndex{0}) == 0);
    const TruncatedModule e0 = make_cofree(ObjectIndex{0}, Window(ObjectIndex{4}), trivial);
    CHECK(e0.dims() == std::vector<std::size_t>{1, 0, 0, 0, 0});
    const TruncatedModule e2 = make_cofree(ObjectIndex{2}, Window(ObjectIndex{4}), trivial);
    CHECK(e2.dims() == std::vector<std::size_t>{1, 2, 2, 0, 0});
}

TEST_CASE("property: induced and co-induced dimensions match isotypic projector ranks") {
    const Window w(ObjectIndex{4});
    for (int s = 0; s <= 3; ++s)
        for (const auto& lambda : partitions(s)) {
            const TruncatedModule ind_v = make_induced({lambda}, w, trivial);
            const TruncatedModule co_v = make_coinduced({lambda}, w, trivial);
            for (int t = 0; t <= 4; ++t) {
                CHECK(ind_v.dim(ObjectIndex{t}) == (t >= s ? isotypic_dim(lambda, t, false) : 0));
                CHECK(co_v.dim(ObjectIndex{t}) == (t <= s ? isotypic_dim(lambda, t, true) : 0));
            }
        }
}

TEST_CASE("property: co-free modules vanish outside the order ideal") {
    const Window w(ObjectIndex{3, 3});
    for (const auto& l : Window(ObjectIndex{2, 2}).objects()) {
        const TruncatedModule e = make_cofree(l, w, trivial);
        for (const auto& n : w.objects())
            if (!leq(n, l)) CHECK(e.dim(n) == 0);
        CHECK(validate(e).ok);
    }
}

TEST_CASE("external tensor of free modules is free") {
    const Window w1(ObjectIndex{2});
    const auto tensor = share(external_tensor(make_free({1}, w1, trivial), make_free({1}, w1, trivial)));
    const auto free = share(make_free({1, 1}, Window(ObjectIndex{2, 2}), trivial));
    CHECK(tensor->dims() == free->dims());
    const auto homs = hom_space(tensor, free);
    REQUIRE(homs.size() == 1);
    CHECK(is_isomorphism(homs[0]));
    CHECK(is_natural(homs[0]));
    CHECK(validate(*tensor).ok);

    for (const auto& a : Window(ObjectIndex{1}).objects())
        for (const auto& b : Window(ObjectIndex{1, 1}).objects()) {
            const auto t = share(external_tensor(make_free(a, w1, trivial), make_free(b, Window(ObjectIndex{2, 2}), trivial)));
            const auto f = share(make_free(ObjectIndex{a[0], b[0], b[1]}, Window(ObjectIndex{2, 2, 2}), trivial));
            const auto maps = hom_space(t, f);
            bool found = false;
            for (const auto& m : maps) found = found || is_isomorphism(m);
            CHECK(found);
        }
}

TEST_CASE("submodules and quotients") {
    const auto m1 = share(make_free({1}, Window(ObjectIndex{3}), trivial));
    CHECK(quotient(m1, full_family(*m1)).module->is_zero());
    SubspaceFamily gens = zero_family(*m1);
    gens[2] = Subspace::full(m1->dim(ObjectIndex{2}));
    const SubmoduleResult sub = submodule_generated(m1, gens);
    CHECK(sub.module->dims() == std::vector<std::size_t>{0, 0, 2, 3});
    CHECK(is_natural(sub.inclusion));
    CHECK(is_blockwise_injective(sub.inclusion));
    const QuotientResult q = quotient(m1, image_family(sub.inclusion));
    CHECK(q.module->dims() == std::vector<std::size_t>{0, 1, 0, 0});
    CHECK(is_natural(q.projection));
    CHECK(is_blockwise_surjective(q.projection));
    SubspaceFamily not_closed = zero_family(*m1);
    not_closed[1] = Subspace::full(1);
    CHECK_FALSE(is_action_closed(*m1, not_closed));
    CHECK_THROWS(submodule(m1, not_closed));
}

TEST_CASE("hom examples") {
    const Window w(ObjectIndex{3});
    const auto m0 = share(make_free({0}, w, trivial));
    const auto m1 = share(make_free({1}, w, trivial));
    const auto e0 = share(make_cofree({0}, w, trivial));
    CHECK(hom_space(m0, m0).size() == 1);
    CHECK(hom_space(m1, m0).size() == 1);
    // E(0) is the point module: its image in M(0) would be killed by the injective inclusion.
    CHECK(hom_space(e0, m0).empty());
    CHECK(hom_space(m0, e0).size() == 1);
}

TEST_CASE("property: hom solver agrees with the brute-force naturality system") {
    std::mt19937 rng(4);
    const Window w(ObjectIndex{3});
    const Window w2(ObjectIndex{2, 2});
    std::vector<TruncatedModule> mods{
        make_free({0}, w, trivial),     make_free({1}, w, trivial),    make_point(w, trivial),
        make_cofree({1}, w, trivial),   make_induced({Partition{1, 1}}, w, trivial),
        make_coinduced({Partition{2}}, w, trivial)};
    for (int k = 0; k < 3; ++k) mods.push_back(random_presentation(rng, 1, trivial).build(w));
    for (const auto& a : mods)
        for (const auto& b : mods) {
            const HomResult r = hom_space_bounded(share(a), share(b));
            if (r.status != Status::Exact) continue;
            CHECK(r.basis.size() == oracle::brute_hom_dim(a, b));
            for (const auto& f : r.basis) CHECK(is_natural(f));
        }
    std::vector<TruncatedModule> mods2{make_free({1, 0}, w2, trivial), make_point(w2, trivial),
                                       make_cofree({1, 1}, w2, trivial)};
    for (int k = 0; k < 3; ++k) mods2.push_back(random_presentation(rng, 2, trivial).build(w2));
    for (const auto& a : mods2)
        for (const auto& b : mods2) {
            const HomResult r = hom_space_bounded(share(a), share(b));
            if (r.status == Status::Exact) CHECK(r.basis.size() == oracle::brute_hom_dim(a, b));
        }
    const GroupPtr s2 = GroupTable::symmetric(2);
    const auto g1 = make_free({1}, w, s2);
    const auto g2 = ind(make_cofree({1}, w, trivial), s2);
    CHECK(hom_space_bounded(share(g1), share(g2)).basis.size() == oracle::brute_hom_dim(g1, g2));
}

TEST_CASE("property: endomorphisms contain the identity; composition is associative") {
    std::mt19937 rng(5);
    const Window w(ObjectIndex{3});
    for (int k = 0; k < 6; ++k) {
        const auto v = share(random_presentation(rng, 1, trivial).build(w));
        const auto ends = hom_space_bounded(v, v).basis;
        CHECK(in_span(ends, identity_map(v)));
        if (ends.empty()) continue;
        auto pick = [&] { return ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)]; };
        const ModuleMap f = pick(), g = pick(), h = pick();
        CHECK(flatten(compose(f, compose(g, h))) == flatten(compose(compose(f, g), h)));
        CHECK(is_natural(compose(f, g)));
        CHECK(in_span(ends, compose(f, g)));
    }
}

TEST_CASE("validation") {
    const Window w(ObjectIndex{3});
    for (const auto& n : w.objects()) CHECK(validate(make_free(n, w, trivial)).ok);
    TruncatedModule bad = make_free({1}, w, trivial);
    Matrix a = bad.inclusion(ObjectIndex{1}, 0);
    a(0, 0) += 1;
    bad.set_inclusion(ObjectIndex{1}, 0, a);
    const ValidationReport r = validate(bad);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failure.empty());
    CHECK(validate(external_tensor(make_cofree({1}, w, trivial), make_free({1}, w, GroupTable::cyclic(3)))).ok);
}

TEST_CASE("json round trips") {
    std::mt19937 rng(6);
    const Window w(ObjectIndex{2, 2});
    const std::vector<TruncatedModule> mods{make_free({1, 1}, w, GroupTable::symmetric(3)),
                                            make_coinduced({Partition{1, 1}, Partition{}}, w, trivial),
                                            random_presentation(rng, 2, GroupTable::cyclic(2)).build(w)};
    for (const auto& v : mods) {
        const Json j = module_to_json(v);
        const TruncatedModule back = module_from_json(Json::parse(j.dump()));
        CHECK(back == v);
        CHECK(module_to_json(back).dump() == j.dump());
    }
    const GroupPtr g = GroupTable::symmetric(3);
    CHECK(*group_from_json(group_to_json(*g)) == *g);
    CHECK(parse_rational(matrix_to_json(Matrix{{1, -2}})[0][1].get<std::string>()) == -2);
    CHECK_THROWS(module_from_json(Json::parse(R"({"m": 1})")));
}

TEST_CASE("induction, restriction and averaging") {
    const Window w(ObjectIndex{3});
    const TruncatedModule m1 = make_free({1}, w, trivial);
    CHECK(ind(m1, trivial) == m1);
    const GroupPtr c3 = GroupTable::cyclic(3);
    const TruncatedModule i3 = ind(m1, c3);
    for (const auto& n : w.objects()) CHECK(i3.dim(n) == 3 * m1.dim(n));
    CHECK(res(i3).group().is_trivial());

    const auto [phi0, eps0] = averaging_splitting(share(m1));
    for (const auto& b : phi0.blocks) CHECK(b.is_identity());
    for (const auto& b : eps0.blocks) CHECK(b.is_identity());

    const GroupPtr s2 = GroupTable::symmetric(2);
    const auto v = share(ind(make_free({0}, w, trivial), s2));
    const auto [phi, eps] = averaging_splitting(v);
    const ModuleMap id = compose(eps, phi);
    for (const auto& b : id.blocks) CHECK(b.is_identity());
    CHECK(is_natural(phi));
    CHECK(is_natural(eps));
}
