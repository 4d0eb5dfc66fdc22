#include "fim/category.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace fim {

ObjectIndex::ObjectIndex(std::vector<int> coords) : coords_(std::move(coords)) {
    for (int c : coords_)
        if (c < 0) throw std::invalid_argument("object coordinates must be natural numbers");
}

ObjectIndex ObjectIndex::unit(int m, int i) {
    std::vector<int> c(static_cast<std::size_t>(m), 0);
    c.at(static_cast<std::size_t>(i)) = 1;
    return ObjectIndex(std::move(c));
}

int ObjectIndex::degree() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

int ObjectIndex::degree(const std::vector<int>& subset) const {
    int d = 0;
    for (int i : subset) d += (*this)[i];
    return d;
}

ObjectIndex ObjectIndex::operator+(const ObjectIndex& other) const {
    if (m() != other.m()) throw std::invalid_argument("object sum: arity mismatch");
    std::vector<int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
    return ObjectIndex(std::move(c));
}

ObjectIndex ObjectIndex::operator-(const ObjectIndex& other) const {
    if (m() != other.m()) throw std::invalid_argument("object difference: arity mismatch");
    std::vector<int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
    return ObjectIndex(std::move(c));
}

ObjectIndex ObjectIndex::with(int i, int value) const {
    std::vector<int> c(coords_);
    c.at(static_cast<std::size_t>(i)) = value;
    return ObjectIndex(std::move(c));
}

ObjectIndex ObjectIndex::project(const std::vector<int>& subset) const {
    std::vector<int> c;
    c.reserve(subset.size());
    for (int i : subset) c.push_back((*this)[i]);
    return ObjectIndex(std::move(c));
}

std::string to_string(const ObjectIndex& n) {
    std::string s = "(";
    for (int i = 0; i < n.m(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    return s + ")";
}

bool leq(const ObjectIndex& a, const ObjectIndex& b) {
    if (a.m() != b.m()) return false;
    for (int i = 0; i < a.m(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ObjectIndex componentwise_max(const ObjectIndex& a, const ObjectIndex& b) {
    std::vector<int> c(static_cast<std::size_t>(a.m()));
    for (int i = 0; i < a.m(); ++i) c[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
    return ObjectIndex(std::move(c));
}

Window::Window(ObjectIndex bound) : bound_(std::move(bound)) {
    const int m = bound_.m();
    strides_.assign(static_cast<std::size_t>(m), 1);
    size_ = 1;
    for (int i = m - 1; i >= 0; --i) {
        strides_[static_cast<std::size_t>(i)] = size_;
        size_ *= static_cast<std::size_t>(bound_[i] + 1);
    }
}

bool Window::contains(const ObjectIndex& n) const { return leq(n, bound_); }

std::size_t Window::index(const ObjectIndex& n) const {
    if (!contains(n)) throw std::out_of_range("object " + to_string(n) + " outside window " + to_string(bound_));
    std::size_t idx = 0;
    for (int i = 0; i < n.m(); ++i) idx += static_cast<std::size_t>(n[i]) * strides_[static_cast<std::size_t>(i)];
    return idx;
}

std::optional<std::size_t> Window::find(const ObjectIndex& n) const {
    if (!contains(n)) return std::nullopt;
    return index(n);
}

ObjectIndex Window::object(std::size_t idx) const {
    std::vector<int> c(static_cast<std::size_t>(m()));
    for (int i = 0; i < m(); ++i) {
        const auto s = strides_[static_cast<std::size_t>(i)];
        c[static_cast<std::size_t>(i)] = static_cast<int>(idx / s);
        idx %= s;
    }
    return ObjectIndex(std::move(c));
}

std::vector<ObjectIndex> Window::objects() const {
    std::vector<ObjectIndex> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(object(i));
    return out;
}

// ---------------------------------------------------------------------------

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

std::size_t falling_factorial(int b, int a) {
    if (a > b) return 0;
    std::size_t f = 1;
    for (int i = 0; i < a; ++i) f *= static_cast<std::size_t>(b - i);
    return f;
}

std::vector<Injection> injections(int a, int b) {
    std::vector<Injection> out;
    if (a > b) return out;
    Injection cur;
    std::vector<bool> used(static_cast<std::size_t>(b), false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == a) {
            out.push_back(cur);
            return;
        }
        for (int y = 0; y < b; ++y) {
            if (used[static_cast<std::size_t>(y)]) continue;
            used[static_cast<std::size_t>(y)] = true;
            cur.push_back(y);
            self(self);
            cur.pop_back();
            used[static_cast<std::size_t>(y)] = false;
        }
    };
    rec(rec);
    return out;
}

std::size_t injection_rank(const Injection& f, int b) {
    const int a = static_cast<int>(f.size());
    std::size_t rank = 0;
    std::vector<bool> used(static_cast<std::size_t>(b), false);
    for (int p = 0; p < a; ++p) {
        int smaller = 0;
        for (int y = 0; y < f[static_cast<std::size_t>(p)]; ++y)
            if (!used[static_cast<std::size_t>(y)]) ++smaller;
        rank += static_cast<std::size_t>(smaller) * falling_factorial(b - p - 1, a - p - 1);
        used[static_cast<std::size_t>(f[static_cast<std::size_t>(p)])] = true;
    }
    return rank;
}

Injection compose(const Injection& g, const Injection& f) {
    Injection h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) h[x] = g.at(static_cast<std::size_t>(f[x]));
    return h;
}

Injection identity_injection(int n) {
    Injection p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Injection inverse_permutation(const Injection& p) {
    Injection q(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) q[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
    return q;
}

Injection standard_inclusion(int a, int d) {
    Injection f(static_cast<std::size_t>(a));
    for (int x = 0; x < a; ++x) f[static_cast<std::size_t>(x)] = x + d;
    return f;
}

int permutation_sign(const Injection& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> bfs_words(const std::vector<std::vector<int>>& mult, const std::vector<int>& gens) {
    const std::size_t n = mult.size();
    std::vector<std::vector<int>> words(n);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            int x = mult[static_cast<std::size_t>(gens[j])][static_cast<std::size_t>(e)];
            if (seen[static_cast<std::size_t>(x)]) continue;
            seen[static_cast<std::size_t>(x)] = true;
            std::vector<int> w{static_cast<int>(j)};
            w.insert(w.end(), words[static_cast<std::size_t>(e)].begin(), words[static_cast<std::size_t>(e)].end());
            words[static_cast<std::size_t>(x)] = std::move(w);
            queue.push_back(x);
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw std::invalid_argument("group generators do not generate the group");
    return words;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<int>> mult, std::vector<int> generators)
    : mult_(std::move(mult)), generators_(std::move(generators)) {
    const int n = static_cast<int>(mult_.size());
    if (n == 0) throw std::invalid_argument("group must be nonempty");
    for (const auto& row : mult_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("multiplication table must be square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (multiply(0, a) != a || multiply(a, 0) != a) throw std::invalid_argument("index 0 is not the identity");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (multiply(a, b) == 0) {
                if (multiply(b, a) != 0) throw std::invalid_argument("left and right inverses differ");
                inverse_[static_cast<std::size_t>(a)] = b;
            }
    for (int a = 0; a < n; ++a)
        if (inverse_[static_cast<std::size_t>(a)] < 0) throw std::invalid_argument("element without inverse");
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                        throw std::invalid_argument("multiplication is not associative");
    }
    for (int g : generators_)
        if (g < 0 || g >= n) throw std::invalid_argument("generator index out of range");
    words_ = bfs_words(mult_, generators_);
}

GroupPtr GroupTable::trivial() {
    static const GroupPtr g = std::make_shared<const GroupTable>(std::vector<std::vector<int>>{{0}}, std::vector<int>{});
    return g;
}

GroupPtr GroupTable::cyclic(int n) {
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return std::make_shared<const GroupTable>(std::move(mult), n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

GroupPtr GroupTable::symmetric(int n) { return automorphisms(ObjectIndex{n}); }

GroupPtr GroupTable::automorphisms(const ObjectIndex& s) {
    GroupPtr acc = trivial();
    for (int i = 0; i < s.m(); ++i) {
        const int k = s[i];
        auto perms = injections(k, k);
        const int n = static_cast<int>(perms.size());
        std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(
                    injection_rank(compose(perms[static_cast<std::size_t>(a)], perms[static_cast<std::size_t>(b)]), k));
        std::vector<int> gens;
        for (int t = 0; t + 1 < k; ++t) {
            Injection p = identity_injection(k);
            std::swap(p[static_cast<std::size_t>(t)], p[static_cast<std::size_t>(t + 1)]);
            gens.push_back(static_cast<int>(injection_rank(p, k)));
        }
        GroupTable factor(std::move(mult), std::move(gens));
        acc = product(*acc, factor);
    }
    return acc;
}

GroupPtr GroupTable::product(const GroupTable& a, const GroupTable& b) {
    const int na = a.order(), nb = b.order();
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(na * nb), std::vector<int>(static_cast<std::size_t>(na * nb)));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y)
            mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
    std::vector<int> gens;
    for (int g : a.generators()) gens.push_back(g * nb);
    for (int g : b.generators()) gens.push_back(g);
    return std::make_shared<const GroupTable>(std::move(mult), std::move(gens));
}

std::vector<std::vector<int>> GroupTable::conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<bool> done(static_cast<std::size_t>(order()), false);
    for (int g = 0; g < order(); ++g) {
        if (done[static_cast<std::size_t>(g)]) continue;
        std::vector<int> cls;
        for (int h = 0; h < order(); ++h) {
            int c = multiply(multiply(h, g), inverse(h));
            if (!done[static_cast<std::size_t>(c)]) {
                done[static_cast<std::size_t>(c)] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<Injection> automorphism_element(const ObjectIndex& s, int index) {
    std::vector<Injection> out(static_cast<std::size_t>(s.m()));
    for (int i = s.m() - 1; i >= 0; --i) {
        const auto f = static_cast<int>(factorial(s[i]));
        out[static_cast<std::size_t>(i)] = injections(s[i], s[i])[static_cast<std::size_t>(index % f)];
        index /= f;
    }
    return out;
}

int automorphism_index(const ObjectIndex& s, const std::vector<Injection>& perms) {
    std::size_t idx = 0;
    for (int i = 0; i < s.m(); ++i)
        idx = idx * factorial(s[i]) + injection_rank(perms[static_cast<std::size_t>(i)], s[i]);
    return static_cast<int>(idx);
}

// ---------------------------------------------------------------------------

Morphism identity_morphism(const ObjectIndex& n) {
    Morphism f{n, n, {}, 0};
    for (int i = 0; i < n.m(); ++i) f.maps.push_back(identity_injection(n[i]));
    return f;
}

bool is_valid(const Morphism& f) {
    if (f.source.m() != f.target.m() || static_cast<int>(f.maps.size()) != f.source.m()) return false;
    if (!leq(f.source, f.target)) return false;
    for (int i = 0; i < f.source.m(); ++i) {
        const auto& map = f.maps[static_cast<std::size_t>(i)];
        if (static_cast<int>(map.size()) != f.source[i]) return false;
        std::vector<bool> hit(static_cast<std::size_t>(f.target[i]), false);
        for (int y : map) {
            if (y < 0 || y >= f.target[i] || hit[static_cast<std::size_t>(y)]) return false;
            hit[static_cast<std::size_t>(y)] = true;
        }
    }
    return true;
}

std::size_t count_injections(const ObjectIndex& a, const ObjectIndex& b) {
    std::size_t n = 1;
    for (int i = 0; i < a.m(); ++i) n *= falling_factorial(b[i], a[i]);
    return n;
}

std::vector<Morphism> enumerate_injections(const ObjectIndex& a, const ObjectIndex& b) {
    if (!leq(a, b)) throw std::invalid_argument("empty hom-set: " + to_string(a) + " is not <= " + to_string(b));
    std::vector<std::vector<Injection>> per;
    for (int i = 0; i < a.m(); ++i) per.push_back(injections(a[i], b[i]));
    std::vector<Morphism> out;
    out.reserve(count_injections(a, b));
    std::vector<Injection> cur(static_cast<std::size_t>(a.m()));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == a.m()) {
            out.push_back(Morphism{a, b, cur, 0});
            return;
        }
        for (const auto& f : per[static_cast<std::size_t>(i)]) {
            cur[static_cast<std::size_t>(i)] = f;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::size_t morphism_rank(const Morphism& f) {
    std::size_t idx = 0;
    for (int i = 0; i < f.source.m(); ++i)
        idx = idx * falling_factorial(f.target[i], f.source[i]) +
              injection_rank(f.maps[static_cast<std::size_t>(i)], f.target[i]);
    return idx;
}

Morphism compose(const Morphism& f, const Morphism& g, const GroupTable& group) {
    if (g.target != f.source)
        throw std::invalid_argument("compose: " + to_string(g.target) + " != " + to_string(f.source));
    Morphism h{g.source, f.target, {}, group.multiply(f.group_element, g.group_element)};
    for (std::size_t i = 0; i < f.maps.size(); ++i) h.maps.push_back(compose(f.maps[i], g.maps[i]));
    return h;
}

Morphism inclusion_morphism(const ObjectIndex& n, int i) {
    Morphism f = identity_morphism(n);
    f.target = n + ObjectIndex::unit(n.m(), i);
    f.maps[static_cast<std::size_t>(i)] = standard_inclusion(n[i], 1);
    return f;
}

Morphism swap_morphism(const ObjectIndex& n, int i, int k) {
    Morphism f = identity_morphism(n);
    auto& p = f.maps[static_cast<std::size_t>(i)];
    std::swap(p.at(static_cast<std::size_t>(k)), p.at(static_cast<std::size_t>(k + 1)));
    return f;
}

Morphism to_morphism(const Generator& g, const GroupTable& group) {
    switch (g.kind) {
        case Generator::Kind::Inclusion: return inclusion_morphism(g.at, g.coord);
        case Generator::Kind::Swap: return swap_morphism(g.at, g.coord, g.k);
        case Generator::Kind::Group: {
            Morphism f = identity_morphism(g.at);
            f.group_element = group.generators().at(static_cast<std::size_t>(g.group_gen));
            return f;
        }
    }
    throw std::logic_error("unknown generator kind");
}

std::vector<Generator> generators(const Window& window, const GroupTable& group) {
    std::vector<Generator> out;
    for (const auto& n : window.objects()) {
        for (int i = 0; i < n.m(); ++i)
            if (window.contains(n + ObjectIndex::unit(n.m(), i)))
                out.push_back({Generator::Kind::Inclusion, n, i, 0, 0});
        for (int i = 0; i < n.m(); ++i)
            for (int k = 0; k + 1 < n[i]; ++k) out.push_back({Generator::Kind::Swap, n, i, k, 0});
        for (int j = 0; j < static_cast<int>(group.generators().size()); ++j)
            out.push_back({Generator::Kind::Group, n, 0, 0, j});
    }
    return out;
}

}  // namespace fim
