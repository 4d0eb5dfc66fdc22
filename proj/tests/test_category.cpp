#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fim/category.hpp"

#include <random>
#include <set>

using namespace fim;

namespace {

std::size_t falling(int b, int a) {
    std::size_t out = 1;
    for (int k = 0; k < a; ++k) out *= static_cast<std::size_t>(b - k);
    return out;
}

Morphism random_morphism(std::mt19937& rng, const ObjectIndex& source, const ObjectIndex& target) {
    const auto all = enumerate_injections(source, target);
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

ObjectIndex random_object(std::mt19937& rng, int m, int max) {
    std::vector<int> c;
    for (int i = 0; i < m; ++i) c.push_back(std::uniform_int_distribution<int>(0, max)(rng));
    return ObjectIndex(c);
}

ObjectIndex random_above(std::mt19937& rng, const ObjectIndex& n, int extra) {
    std::vector<int> c;
    for (int i = 0; i < n.m(); ++i) c.push_back(n[i] + std::uniform_int_distribution<int>(0, extra)(rng));
    return ObjectIndex(c);
}

}  // namespace

TEST_CASE("degrees and order") {
    CHECK(ObjectIndex{0, 0}.degree() == 0);
    CHECK(ObjectIndex{2, 3}.degree({0}) == 2);
    CHECK(ObjectIndex{2, 3}.degree() == 5);
    CHECK(leq(ObjectIndex{1, 2}, ObjectIndex{1, 3}));
    CHECK_FALSE(leq(ObjectIndex{2, 1}, ObjectIndex{1, 3}));
    std::mt19937 rng(1);
    for (int k = 0; k < 20; ++k) {
        const ObjectIndex n = random_object(rng, 3, 4);
        CHECK(leq(n, n));
    }
    CHECK(ObjectIndex::unit(3, 1) == ObjectIndex{0, 1, 0});
    CHECK(ObjectIndex{4, 5, 6}.project({2, 0}) == ObjectIndex{6, 4});
}

TEST_CASE("windows enumerate in lexicographic order") {
    const Window w(ObjectIndex{1, 2});
    CHECK(w.size() == 6);
    const auto objs = w.objects();
    CHECK(objs.front() == ObjectIndex{0, 0});
    CHECK(objs[1] == ObjectIndex{0, 1});
    CHECK(objs.back() == ObjectIndex{1, 2});
    for (std::size_t idx = 0; idx < w.size(); ++idx) CHECK(w.index(w.object(idx)) == idx);
    CHECK_FALSE(w.contains(ObjectIndex{2, 0}));
    CHECK_FALSE(w.find(ObjectIndex{0, 3}));
}

TEST_CASE("injection enumeration examples") {
    CHECK(enumerate_injections(ObjectIndex{1}, ObjectIndex{1}).size() == 1);
    CHECK(enumerate_injections(ObjectIndex{1}, ObjectIndex{1}).front() == identity_morphism(ObjectIndex{1}));
    CHECK(enumerate_injections(ObjectIndex{1}, ObjectIndex{2}).size() == 2);
    CHECK(enumerate_injections(ObjectIndex{1, 2}, ObjectIndex{2, 3}).size() == 12);
    CHECK_THROWS(enumerate_injections(ObjectIndex{2}, ObjectIndex{1}));
}

TEST_CASE("property: injection counts match the closed form on (3,3)") {
    const Window w(ObjectIndex{3, 3});
    for (const auto& a : w.objects())
        for (const auto& b : w.objects()) {
            if (!leq(a, b)) continue;
            const auto all = enumerate_injections(a, b);
            CHECK(all.size() == falling(b[0], a[0]) * falling(b[1], a[1]));
            CHECK(all.size() == count_injections(a, b));
            std::set<std::vector<Injection>> distinct;
            for (std::size_t k = 0; k < all.size(); ++k) {
                CHECK(is_valid(all[k]));
                CHECK(morphism_rank(all[k]) == k);
                distinct.insert(all[k].maps);
            }
            CHECK(distinct.size() == all.size());
        }
}

TEST_CASE("property: composition has identities and is associative") {
    std::mt19937 rng(2);
    const GroupPtr g = GroupTable::cyclic(3);
    for (int trial = 0; trial < 50; ++trial) {
        const ObjectIndex a = random_object(rng, 2, 2);
        const ObjectIndex b = random_above(rng, a, 1);
        const ObjectIndex c = random_above(rng, b, 1);
        const ObjectIndex d = random_above(rng, c, 1);
        Morphism f = random_morphism(rng, a, b), h = random_morphism(rng, b, c), k = random_morphism(rng, c, d);
        f.group_element = std::uniform_int_distribution<int>(0, 2)(rng);
        k.group_element = std::uniform_int_distribution<int>(0, 2)(rng);
        CHECK(compose(identity_morphism(b), f, *g) == f);
        CHECK(compose(f, identity_morphism(a), *g) == f);
        CHECK(compose(k, compose(h, f, *g), *g) == compose(compose(k, h, *g), f, *g));
    }
    CHECK_THROWS(compose(identity_morphism(ObjectIndex{1}), identity_morphism(ObjectIndex{2}), *g));
}

TEST_CASE("generator examples") {
    const GroupPtr trivial = GroupTable::trivial();
    const auto g2 = generators(Window(ObjectIndex{2}), *trivial);
    int inclusions = 0, swaps = 0;
    for (const auto& g : g2) {
        if (g.kind == Generator::Kind::Inclusion) ++inclusions;
        if (g.kind == Generator::Kind::Swap) {
            ++swaps;
            CHECK(g.at == ObjectIndex{2});
        }
    }
    CHECK(inclusions == 2);
    CHECK(swaps == 1);
    CHECK(generators(Window(ObjectIndex{0}), *trivial).empty());
    const auto g11 = generators(Window(ObjectIndex{1, 1}), *trivial);
    CHECK(g11.size() == 4);
    for (const auto& g : g11) CHECK(g.kind == Generator::Kind::Inclusion);
    CHECK(to_morphism(Generator{Generator::Kind::Inclusion, ObjectIndex{2}, 0, 0, 0}, *trivial).maps[0] == Injection{1, 2});
}

TEST_CASE("property: generators reach every morphism of the (3,3) window") {
    const GroupPtr trivial = GroupTable::trivial();
    const Window w(ObjectIndex{3, 3});
    const auto gens = generators(w, *trivial);
    for (const auto& n : w.objects()) {
        // Breadth-first closure of composites of generators out of n.
        std::set<std::pair<ObjectIndex, std::vector<Injection>>> seen;
        std::vector<Morphism> frontier{identity_morphism(n)};
        seen.insert({n, frontier.front().maps});
        while (!frontier.empty()) {
            std::vector<Morphism> next;
            for (const auto& f : frontier)
                for (const auto& g : gens) {
                    if (g.at != f.target) continue;
                    const Morphism h = compose(to_morphism(g, *trivial), f, *trivial);
                    if (seen.insert({h.target, h.maps}).second) next.push_back(h);
                }
            frontier = std::move(next);
        }
        std::size_t expected = 0;
        for (const auto& t : w.objects())
            if (leq(n, t)) expected += count_injections(n, t);
        CHECK(seen.size() == expected);
    }
}

TEST_CASE("property: the order on a window is a partial order") {
    const Window w(ObjectIndex{2, 2});
    for (const auto& a : w.objects())
        for (const auto& b : w.objects()) {
            if (leq(a, b) && leq(b, a)) CHECK(a == b);
            for (const auto& c : w.objects())
                if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
        }
}

TEST_CASE("group tables") {
    const GroupPtr s3 = GroupTable::symmetric(3);
    CHECK(s3->order() == 6);
    CHECK(s3->conjugacy_classes().size() == 3);
    CHECK(GroupTable::cyclic(4)->conjugacy_classes().size() == 4);
    for (const GroupPtr& g : {s3, GroupTable::cyclic(5), GroupTable::trivial()})
        for (int x = 0; x < g->order(); ++x) {
            CHECK(g->multiply(x, g->inverse(x)) == 0);
            int acc = 0;
            for (int w : g->word(x)) acc = g->multiply(acc, g->generators()[static_cast<std::size_t>(w)]);
            CHECK(acc == x);
        }
    CHECK_THROWS(GroupTable({{0, 1}, {0, 1}}, {1}));

    const GroupPtr p = GroupTable::product(*GroupTable::cyclic(2), *GroupTable::cyclic(3));
    CHECK(p->order() == 6);
    CHECK(p->generators().size() == 2);
    // a * |B| + b layout.
    CHECK(p->multiply(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);

    const ObjectIndex s{2, 3};
    const GroupPtr aut = GroupTable::automorphisms(s);
    CHECK(aut->order() == 12);
    for (int x = 0; x < aut->order(); ++x) CHECK(automorphism_index(s, automorphism_element(s, x)) == x);
}
