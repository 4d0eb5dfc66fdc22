#include "fim/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace fim {

namespace {

bool strictly_inside(const ObjectIndex& n, const ObjectIndex& bound) {
    for (int i = 0; i < n.m(); ++i)
        if (n[i] >= bound[i]) return false;
    return true;
}

Status margin_status(const TruncatedModule& v) {
    return presentation_margin(v).fits ? Status::Exact : Status::WindowBounded;
}

Status worst(Status a, Status b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

/// Expresses `inner` (inside `outer`, both subspaces of V(n)) in the coordinates of the
/// submodule inclusion block `incl`.
Subspace relative(const Matrix& incl, const Subspace& inner) {
    auto x = solve(incl, inner.columns());
    if (!x) throw std::logic_error("relative: family is not nested");
    return Subspace::column_span(*x);
}

}  // namespace

TruncatedModule slice(const TruncatedModule& v, const CoordSet& coords, const ObjectIndex& s) {
    check_coord_set(coords, v.m());
    if (s.m() != static_cast<int>(coords.size())) throw std::invalid_argument("slice: s has the wrong arity");
    if (!leq(s, v.window().bound().project(coords))) throw std::invalid_argument("slice: s outside the window");
    const CoordSet rest = complement(coords, v.m());
    const GroupPtr group = GroupTable::product(*GroupTable::automorphisms(s), v.group());
    const Window window(v.window().bound().project(rest));

    std::vector<std::pair<int, int>> aut_gens;  // (position in coords, point)
    for (int q = 0; q < s.m(); ++q)
        for (int p = 0; p + 1 < s[q]; ++p) aut_gens.emplace_back(q, p);

    std::vector<std::size_t> dims;
    for (const auto& t : window.objects()) dims.push_back(v.dim(combine(s, coords, t)));
    TruncatedModule out(window, group, dims);
    for (const auto& g : generators(window, *group)) {
        const ObjectIndex n = combine(s, coords, g.at);
        switch (g.kind) {
        case Generator::Kind::Inclusion:
            out.set_generator_matrix(g, v.inclusion(n, rest[static_cast<std::size_t>(g.coord)]));
            break;
        case Generator::Kind::Swap:
            out.set_generator_matrix(g, v.swap(n, rest[static_cast<std::size_t>(g.coord)], g.k));
            break;
        case Generator::Kind::Group: {
            const auto j = static_cast<std::size_t>(g.group_gen);
            if (j < aut_gens.size())
                out.set_generator_matrix(
                    g, v.swap(n, coords[static_cast<std::size_t>(aut_gens[j].first)], aut_gens[j].second));
            else
                out.set_generator_matrix(g, v.group_action(n, static_cast<int>(j - aut_gens.size())));
            break;
        }
        }
    }
    return out;
}

DegreeBounds degree_bounds(const TruncatedModule& v) {
    const ObjectIndex& bound = v.window().bound();
    DegreeBounds out;
    if (v.presentation()) {
        const auto& p = *v.presentation();
        out.generators = p.generator_bound(v.m());
        out.relations = p.relation_bound;
        out.declared = true;
        out.fits = strictly_inside(out.generators, bound) && (!out.relations || strictly_inside(*out.relations, bound));
        if (out.fits) return out;
    }
    out = DegreeBounds{};
    out.generators = ObjectIndex::zero(v.m());
    const FreeCover cover = free_cover(std::make_shared<const TruncatedModule>(v));
    for (const auto& g : cover.generators) out.generators = componentwise_max(out.generators, g.at);
    const auto k = submodule(cover.free, cover.kernel).module;
    const SubspaceFamily ik = positive_image(*k, all_coords(v.m()));
    for (const auto& n : v.window().objects())
        if (ik[v.window().index(n)].dim() != k->dim(n))
            out.relations = out.relations ? componentwise_max(*out.relations, n) : n;
    out.fits = strictly_inside(out.generators, bound) && (!out.relations || strictly_inside(*out.relations, bound));
    return out;
}

TorsionVerdict detect_torsion(const TruncatedModule& v, const CoordSet& coords) {
    check_coord_set(coords, v.m());
    const ObjectIndex& bound = v.window().bound();
    TorsionVerdict out;
    for (const auto& n : v.window().objects()) {
        ObjectIndex top = n;
        for (int i : coords) top = top.with(i, bound[i]);
        out.torsion.push_back(kernel_basis(v.standard_map(n, top)));
    }
    const DegreeBounds b = degree_bounds(v);
    bool exact = b.fits;
    if (exact && b.relations)
        for (int i : coords)
            if (b.generators[i] + (*b.relations)[i] > bound[i]) exact = false;
    // Zero on every boundary face of S: everything generated inside dies there.
    if (!exact && b.fits) {
        exact = true;
        for (const auto& n : v.window().objects())
            for (int i : coords)
                if (n[i] == bound[i] && v.dim(n) > 0) exact = false;
    }
    out.status = exact ? Status::Exact : Status::WindowBounded;
    return out;
}

TorFiltration tor_filtration(const TruncatedModule& v) {
    TorFiltration out;
    out.status = Status::Exact;
    for (int i = 0; i < v.m(); ++i) {
        TorsionVerdict t = detect_torsion(v, {i});
        out.status = worst(out.status, t.status);
        out.terms.push_back(out.terms.empty() ? std::move(t.torsion) : intersect(out.terms.back(), t.torsion));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> h1_dims(const FreeCover& cover, const CoordSet& coords) {
    const TruncatedModule& p = *cover.free;
    const Window& w = p.window();
    const auto k = submodule(cover.free, cover.kernel);
    const SubspaceFamily ik = positive_image(*k.module, coords);
    const auto order = static_cast<std::size_t>(p.group().order());
    std::vector<std::size_t> out;
    for (const auto& t : w.objects()) {
        // I_S P(t) is spanned by the summands whose generator differs from t on S.
        const std::size_t d = p.dim(t);
        std::vector<Vector> rows;
        std::size_t offset = 0;
        for (const auto& g : cover.generators) {
            if (!leq(g.at, t)) continue;
            const std::size_t size = count_injections(g.at, t) * order;
            if (!(g.at.project(coords) == t.project(coords)))
                for (std::size_t c = 0; c < size; ++c) {
                    Vector e(d);
                    e[offset + c] = 1;
                    rows.push_back(std::move(e));
                }
            offset += size;
        }
        const Subspace isp = Subspace::row_span(Matrix::from_rows(rows, d));
        const std::size_t idx = w.index(t);
        out.push_back(cover.kernel[idx].intersect(isp).dim() - ik[idx].dim());
    }
    return out;
}

HomologyReport homology(const ModulePtr& v, const CoordSet& coords) {
    check_coord_set(coords, v->m());
    const Window& w = v->window();
    HomologyReport out;
    out.coords = coords;
    const SubspaceFamily iv = positive_image(*v, coords);
    for (std::size_t idx = 0; idx < w.size(); ++idx) out.h0_dims.push_back(v->dim_at(idx) - iv[idx].dim());
    out.h1_dims = h1_dims(free_cover(v), coords);
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
        const ObjectIndex s = w.object(idx).project(coords);
        if (out.h0_dims[idx] > 0) {
            out.h0_slices[s] += out.h0_dims[idx];
            out.t0 = std::max(out.t0, s.degree());
        }
        if (out.h1_dims[idx] > 0) {
            out.h1_slices[s] += out.h1_dims[idx];
            out.t1 = std::max(out.t1, s.degree());
        }
    }
    out.status = margin_status(*v);
    return out;
}

QuotientResult h0_module(const ModulePtr& v, const CoordSet& coords) {
    return quotient(v, positive_image(*v, coords));
}

// ---------------------------------------------------------------------------

ModuleMap induced_comparison(const ModulePtr& v, const CoordSet& coords, const ObjectIndex& s) {
    const CoordSet rest = complement(coords, v->m());
    const auto w = share(slice(*v, coords, s));
    const auto f = share(induced_module(s, coords, *w, v->group_ptr(), v->window().bound()));
    ModuleMap out{f, v, {}};
    for (const auto& n : v->window().objects()) {
        Matrix block(v->dim(n), f->dim(n));
        const ObjectIndex nt = n.project(rest);
        const std::size_t dw = w->dim(nt);
        const auto tuples = induced_combinations(s, n.project(coords));
        for (std::size_t c = 0; c < tuples.size(); ++c) {
            Morphism mor{combine(s, coords, nt), n, {}, 0};
            std::size_t q = 0, r = 0;
            for (int i = 0; i < v->m(); ++i) {
                if (q < coords.size() && coords[q] == i)
                    mor.maps.push_back(tuples[c][q++]);
                else
                    mor.maps.push_back(identity_injection(nt[static_cast<int>(r++)]));
            }
            block.set_block(0, c * dw, v->action(mor));
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

InducedWitness is_S_induced(const ModulePtr& v, const CoordSet& coords) {
    const HomologyReport report = homology(v, coords);
    InducedWitness out;
    out.status = report.status;
    out.s = ObjectIndex::zero(static_cast<int>(coords.size()));
    if (v->is_zero()) {
        out.induced = true;
        out.reason = "zero module";
        return out;
    }
    if (!report.h1_vanishes()) {
        out.reason = "H1 nonzero in degree " + std::to_string(report.t1);
        return out;
    }
    if (report.h0_slices.size() != 1) {
        out.reason = "H0 spread over " + std::to_string(report.h0_slices.size()) + " slices";
        return out;
    }
    out.s = report.h0_slices.begin()->first;
    ModuleMap iso = induced_comparison(v, coords, out.s);
    out.slice = share(slice(*v, coords, out.s));
    out.induced_module = iso.source;
    if (const auto failure = naturality_failure(iso)) {
        out.reason = "comparison map not natural: " + *failure;
        return out;
    }
    if (!is_isomorphism(iso)) {
        out.reason = "comparison map is not an isomorphism";
        return out;
    }
    out.induced = true;
    out.iso = std::move(iso);
    return out;
}

// ---------------------------------------------------------------------------

SemiInducedResult is_S_semi_induced(const ModulePtr& v, const CoordSet& coords) {
    const HomologyReport report = homology(v, coords);
    SemiInducedResult out;
    out.status = report.status;
    if (!report.h1_vanishes()) {
        out.reason = "H1 nonzero in degree " + std::to_string(report.t1);
        return out;
    }
    const Window& w = v->window();
    SubspaceFamily current = full_family(*v);
    std::vector<SemiInducedStep> peeled;
    while (total_dim(current) > 0) {
        const auto x = submodule(v, current);
        const SubspaceFamily ix = positive_image(*x.module, coords);
        std::optional<ObjectIndex> top;
        for (std::size_t idx = 0; idx < w.size(); ++idx) {
            if (x.module->dim_at(idx) == ix[idx].dim()) continue;
            const ObjectIndex s = w.object(idx).project(coords);
            if (!top || s.degree() > top->degree() || (s.degree() == top->degree() && s < *top)) top = s;
        }
        SubspaceFamily lower;
        for (std::size_t idx = 0; idx < w.size(); ++idx) {
            const ObjectIndex ns = w.object(idx).project(coords);
            lower.push_back(!(ns == *top) && ns.degree() <= top->degree() ? current[idx]
                                                                         : Subspace(v->dim_at(idx)));
        }
        lower = closure(*v, lower);
        if (total_dim(lower) >= total_dim(current)) {
            out.reason = "peeling slice " + to_string(*top) + " made no progress";
            return out;
        }
        peeled.push_back({*top, current});
        current = std::move(lower);
    }
    out.filtration.assign(peeled.rbegin(), peeled.rend());
    if (const auto failure = certificate_failure(v, coords, out)) {
        out.reason = *failure;
        out.filtration.clear();
        if (out.status == Status::Exact) out.status = Status::Inconclusive;
        return out;
    }
    out.semi_induced = true;
    return out;
}

std::optional<std::string> certificate_failure(const ModulePtr& v, const CoordSet& coords,
                                               const SemiInducedResult& cert) {
    const Window& w = v->window();
    if (cert.filtration.empty()) {
        if (v->is_zero()) return std::nullopt;
        return "empty filtration for a nonzero module";
    }
    if (!(cert.filtration.back().submodule == full_family(*v))) return "filtration does not end with V";
    SubspaceFamily prev = zero_family(*v);
    for (std::size_t step = 0; step < cert.filtration.size(); ++step) {
        const auto& cur = cert.filtration[step].submodule;
        const std::string where = "step " + std::to_string(step + 1) + ": ";
        if (cur.size() != w.size()) return where + "family has the wrong size";
        if (!is_action_closed(*v, cur)) return where + "not a submodule";
        for (std::size_t idx = 0; idx < w.size(); ++idx)
            if (!cur[idx].contains(prev[idx])) return where + "not nested";
        const auto sub = submodule(v, cur);
        SubspaceFamily lower;
        for (std::size_t idx = 0; idx < w.size(); ++idx) lower.push_back(relative(sub.inclusion.blocks[idx], prev[idx]));
        const auto q = quotient(sub.module, lower).module;
        if (q->is_zero()) return where + "trivial quotient";
        const InducedWitness witness = is_S_induced(q, coords);
        if (!witness.induced) return where + "quotient not induced (" + witness.reason + ")";
        if (!(witness.s == cert.filtration[step].s)) return where + "quotient induced from a different slice";
        prev = cur;
    }
    return std::nullopt;
}

}  // namespace fim
