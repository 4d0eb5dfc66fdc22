#include "fim/functors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fim {

CoordSet complement(const CoordSet& s, int m) {
    CoordSet out;
    for (int i = 0; i < m; ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
    return out;
}

CoordSet all_coords(int m) {
    CoordSet out;
    for (int i = 0; i < m; ++i) out.push_back(i);
    return out;
}

void check_coord_set(const CoordSet& s, int m) {
    if (s.empty()) throw std::invalid_argument("coordinate set must be nonempty");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0 || s[k] >= m) throw std::invalid_argument("coordinate out of range");
        if (k > 0 && s[k] <= s[k - 1]) throw std::invalid_argument("coordinate set must be sorted and distinct");
    }
}

ObjectIndex indicator(const CoordSet& s, int m) {
    std::vector<int> c(static_cast<std::size_t>(m), 0);
    for (int i : s) c.at(static_cast<std::size_t>(i)) = 1;
    return ObjectIndex(c);
}

ObjectIndex combine(const ObjectIndex& s_part, const CoordSet& s, const ObjectIndex& t_part) {
    const int m = s_part.m() + t_part.m();
    std::vector<int> c(static_cast<std::size_t>(m));
    int ps = 0, pt = 0;
    for (int i = 0; i < m; ++i) {
        if (std::binary_search(s.begin(), s.end(), i))
            c[static_cast<std::size_t>(i)] = s_part[ps++];
        else
            c[static_cast<std::size_t>(i)] = t_part[pt++];
    }
    return ObjectIndex(c);
}

// ---------------------------------------------------------------------------

TruncatedModule shift(const TruncatedModule& v, int i) {
    const int m = v.m();
    if (i < 0 || i >= m) throw std::invalid_argument("shift: coordinate out of range");
    const ObjectIndex oi = ObjectIndex::unit(m, i);
    if (v.window().bound()[i] < 1)
        throw std::invalid_argument("shift: window margin exhausted in coordinate " + std::to_string(i + 1));
    const Window window(v.window().bound() - oi);
    std::vector<std::size_t> dims;
    for (const auto& n : window.objects()) dims.push_back(v.dim(n + oi));
    TruncatedModule out(window, v.group_ptr(), dims);
    for (const auto& g : generators(window, v.group())) {
        const ObjectIndex up = g.at + oi;
        switch (g.kind) {
            case Generator::Kind::Inclusion:
                if (g.coord == i)
                    out.set_generator_matrix(g, v.swap(up + oi, i, 0) * v.inclusion(up, i));
                else
                    out.set_generator_matrix(g, v.inclusion(up, g.coord));
                break;
            case Generator::Kind::Swap:
                out.set_generator_matrix(g, v.swap(up, g.coord, g.coord == i ? g.k + 1 : g.k));
                break;
            case Generator::Kind::Group: out.set_generator_matrix(g, v.group_action(up, g.group_gen)); break;
        }
    }
    out.set_presentation(v.presentation());
    return out;
}

ModuleMap canonical_map(const ModulePtr& v, int i) {
    auto target = share(shift(*v, i));
    auto source = share(restrict_window(*v, target->window().bound()));
    ModuleMap f{source, target, {}};
    for (const auto& n : target->window().objects()) f.blocks.push_back(v->inclusion(n, i));
    return f;
}

TruncatedModule kernel_functor(const TruncatedModule& v, int i) {
    const ModuleMap c = canonical_map(share(v), i);
    TruncatedModule k = *submodule(c.source, kernel_family(c)).module;
    k.set_presentation(std::nullopt);
    return k;
}

TruncatedModule derivative(const TruncatedModule& v, int i) {
    const ModuleMap c = canonical_map(share(v), i);
    TruncatedModule d = *cokernel(c).module;
    if (v.presentation()) {
        Presentation p = *v.presentation();
        if (p.relation_bound) p.relation_bound = componentwise_max(*p.relation_bound, p.generator_bound(v.m()));
        d.set_presentation(std::move(p));
    }
    return d;
}

TruncatedModule shift_prod(const TruncatedModule& v, const CoordSet& s, int n) {
    check_coord_set(s, v.m());
    TruncatedModule out = v;
    for (int r = 0; r < n; ++r)
        for (int i : s) out = shift(out, i);
    return out;
}

ModuleMap canonical_prod_map(const ModulePtr& v, const CoordSet& s, int n) {
    check_coord_set(s, v->m());
    ModulePtr cur = v;
    std::vector<ModuleMap> steps;
    for (int r = 0; r < n; ++r)
        for (int i : s) {
            steps.push_back(canonical_map(cur, i));
            cur = steps.back().target;
        }
    const Window& final_window = cur->window();
    auto source = share(restrict_window(*v, final_window.bound()));
    ModuleMap f{source, cur, {}};
    for (const auto& x : final_window.objects()) {
        Matrix b = Matrix::identity(v->dim(x));
        for (const auto& step : steps) b = step.at(x) * b;
        f.blocks.push_back(std::move(b));
    }
    return f;
}

namespace {

template <class F>
TruncatedModule sum_over(const TruncatedModule& v, const CoordSet& s, F functor) {
    check_coord_set(s, v.m());
    const ObjectIndex bound = v.window().bound() - indicator(s, v.m());
    std::vector<TruncatedModule> parts;
    for (int i : s) parts.push_back(restrict_window(functor(v, i), bound));
    return direct_sum(parts);
}

}  // namespace

TruncatedModule shift_sum(const TruncatedModule& v, const CoordSet& s) { return sum_over(v, s, shift); }
TruncatedModule kernel_sum(const TruncatedModule& v, const CoordSet& s) { return sum_over(v, s, kernel_functor); }
TruncatedModule derivative_sum(const TruncatedModule& v, const CoordSet& s) { return sum_over(v, s, derivative); }

// ---------------------------------------------------------------------------

namespace {

/// Order-preserving injections [a] -> [b] (a-subsets of [b]) in lexicographic order.
std::vector<Injection> combinations(int a, int b) {
    std::vector<Injection> out;
    if (a > b) return out;
    Injection cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == a) {
            out.push_back(cur);
            return;
        }
        for (int y = start; y < b; ++y) {
            cur.push_back(y);
            self(self, y + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::size_t combination_rank(const Injection& c, int b) {
    const auto all = combinations(static_cast<int>(c.size()), b);
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), c) - all.begin());
}

/// Tuples of combinations over the coordinates of s, first coordinate most significant.
struct ComboBasis {
    std::vector<std::vector<Injection>> tuples;
    std::size_t size() const { return tuples.size(); }
};

ComboBasis combo_basis(const ObjectIndex& s, const ObjectIndex& n_s) {
    ComboBasis b;
    b.tuples = {{}};
    for (int q = 0; q < s.m(); ++q) {
        std::vector<std::vector<Injection>> next;
        const auto cs = combinations(s[q], n_s[q]);
        for (const auto& t : b.tuples)
            for (const auto& c : cs) {
                auto u = t;
                u.push_back(c);
                next.push_back(std::move(u));
            }
        b.tuples = std::move(next);
    }
    return b;
}

std::size_t combo_index(const std::vector<Injection>& tuple, const ObjectIndex& n_s) {
    std::size_t idx = 0;
    for (std::size_t q = 0; q < tuple.size(); ++q) {
        const auto total = combinations(static_cast<int>(tuple[q].size()), n_s[static_cast<int>(q)]).size();
        idx = idx * total + combination_rank(tuple[q], n_s[static_cast<int>(q)]);
    }
    return idx;
}

}  // namespace

TruncatedModule induced_module(const ObjectIndex& s, const CoordSet& coords, const TruncatedModule& w,
                               const GroupPtr& group, const ObjectIndex& bound) {
    const int m = bound.m();
    check_coord_set(coords, m);
    if (s.m() != static_cast<int>(coords.size())) throw std::invalid_argument("induced_module: s has the wrong arity");
    const CoordSet rest = complement(coords, m);
    if (!(w.window().bound() == bound.project(rest)))
        throw std::invalid_argument("induced_module: W window must be the complement projection of the bound");
    const GroupPtr aut = GroupTable::automorphisms(s);
    const GroupPtr r = GroupTable::product(*aut, *group);
    if (!(w.group() == *r)) throw std::invalid_argument("induced_module: W must carry the group Aut(s) x G");
    if (!leq(s, bound.project(coords))) throw std::invalid_argument("induced_module: s outside the window");

    // Position of the Aut(s) generator transposing points p, p+1 of coordinate q.
    std::vector<int> gen_offset;
    int offset = 0;
    for (int q = 0; q < s.m(); ++q) {
        gen_offset.push_back(offset);
        offset += std::max(s[q] - 1, 0);
    }
    const int aut_gens = offset;

    const Window window(bound);
    std::vector<std::size_t> dims;
    for (const auto& n : window.objects()) {
        const ObjectIndex ns = n.project(coords);
        dims.push_back(leq(s, ns) ? combo_basis(s, ns).size() * w.dim(n.project(rest)) : 0);
    }
    TruncatedModule out(window, group, dims);
    for (const auto& g : generators(window, *group)) {
        const ObjectIndex ns = g.at.project(coords), nt = g.at.project(rest);
        if (!leq(s, ns)) continue;
        const Morphism gamma = to_morphism(g, *group);
        const ObjectIndex ts = gamma.target.project(coords), tt = gamma.target.project(rest);
        const ComboBasis basis = combo_basis(s, ns);
        const std::size_t dw = w.dim(nt), dw_t = w.dim(tt);
        const auto pos = std::find(coords.begin(), coords.end(), g.coord);
        const bool in_s = g.kind != Generator::Kind::Group && pos != coords.end();
        const int q = static_cast<int>(pos - coords.begin());
        const int r_pos = static_cast<int>(std::find(rest.begin(), rest.end(), g.coord) - rest.begin());

        if (!in_s) {
            Matrix wm;
            if (g.kind == Generator::Kind::Inclusion)
                wm = w.inclusion(nt, r_pos);
            else if (g.kind == Generator::Kind::Swap)
                wm = w.swap(nt, r_pos, g.k);
            else
                wm = w.group_action(nt, aut_gens + g.group_gen);
            out.set_generator_matrix(g, kron(Matrix::identity(basis.size()), wm));
            continue;
        }
        Matrix a(combo_basis(s, ts).size() * dw_t, basis.size() * dw);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            auto tuple = basis.tuples[c];
            auto& comb = tuple[static_cast<std::size_t>(q)];
            Matrix factor = Matrix::identity(dw);
            if (g.kind == Generator::Kind::Inclusion) {
                for (int& y : comb) ++y;
            } else {
                const auto lo = std::find(comb.begin(), comb.end(), g.k);
                const auto hi = std::find(comb.begin(), comb.end(), g.k + 1);
                if (lo != comb.end() && hi != comb.end()) {
                    const int p = static_cast<int>(lo - comb.begin());
                    factor = w.group_action(nt, gen_offset[static_cast<std::size_t>(q)] + p);
                } else if (lo != comb.end()) {
                    *lo = g.k + 1;
                } else if (hi != comb.end()) {
                    *hi = g.k;
                }
            }
            const std::size_t row = combo_index(tuple, ts);
            a.set_block(row * dw_t, c * dw, factor);
        }
        out.set_generator_matrix(g, std::move(a));
    }
    if (w.presentation()) {
        const auto& pw = *w.presentation();
        Presentation p;
        for (const auto& t : pw.generator_slots) p.generator_slots.push_back(combine(s, coords, t));
        if (pw.generator_slots.empty()) p.generator_slots.push_back(combine(s, coords, ObjectIndex::zero(w.m())));
        if (pw.relation_bound) p.relation_bound = combine(s, coords, *pw.relation_bound);
        out.set_presentation(std::move(p));
    }
    return out;
}

std::vector<std::vector<Injection>> induced_combinations(const ObjectIndex& s, const ObjectIndex& n_s) {
    if (!leq(s, n_s)) return {};
    return combo_basis(s, n_s).tuples;
}

TruncatedModule tensor_regular(const TruncatedModule& w, const ObjectIndex& s) {
    const GroupPtr aut = GroupTable::automorphisms(s);
    const GroupPtr r = GroupTable::product(*aut, w.group());
    const auto order = static_cast<std::size_t>(aut->order());
    std::vector<std::size_t> dims;
    for (auto d : w.dims()) dims.push_back(d * order);
    TruncatedModule out(w.window(), r, dims);
    const int aut_gens = static_cast<int>(aut->generators().size());
    for (const auto& g : generators(w.window(), *r)) {
        const std::size_t d = w.dim(g.at);
        if (g.kind != Generator::Kind::Group) {
            out.set_generator_matrix(g, kron(w.generator_matrix(g), Matrix::identity(order)));
        } else if (g.group_gen < aut_gens) {
            out.set_generator_matrix(
                g, kron(Matrix::identity(d), regular_matrix(*aut, aut->generators()[static_cast<std::size_t>(g.group_gen)])));
        } else {
            out.set_generator_matrix(g, kron(w.group_action(g.at, g.group_gen - aut_gens), Matrix::identity(order)));
        }
    }
    out.set_presentation(w.presentation());
    return out;
}

std::pair<ModuleMap, ModuleMap> averaging_splitting(const ModulePtr& v) {
    const GroupTable& group = v->group();
    auto ir = share(ind(res(*v), v->group_ptr()));
    const auto order = static_cast<std::size_t>(group.order());
    ModuleMap phi{v, ir, {}}, eps{ir, v, {}};
    for (const auto& n : v->window().objects()) {
        const std::size_t d = v->dim(n);
        Matrix p(d * order, d), e(d, d * order);
        for (int g = 0; g < group.order(); ++g) {
            const Matrix vg = v->group_element_action(n, g);
            const Matrix vginv = v->group_element_action(n, group.inverse(g));
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    p(a * order + static_cast<std::size_t>(g), b) = vginv(a, b) / Rational(group.order());
                    e(a, b * order + static_cast<std::size_t>(g)) = vg(a, b);
                }
        }
        phi.blocks.push_back(std::move(p));
        eps.blocks.push_back(std::move(e));
    }
    return {phi, eps};
}

ModuleMap adjunction_restrict(const ModuleMap& phi, const ModulePtr& v, const ModulePtr& res_w) {
    const auto order = static_cast<std::size_t>(phi.source->group().order());
    ModuleMap out{v, res_w, {}};
    for (std::size_t idx = 0; idx < v->window().size(); ++idx) {
        std::vector<std::size_t> cols;
        for (std::size_t a = 0; a < v->dim_at(idx); ++a) cols.push_back(a * order);
        out.blocks.push_back(phi.blocks[idx].select_columns(cols));
    }
    return out;
}

}  // namespace fim
