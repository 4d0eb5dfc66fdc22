#include "fim/hom.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fim {

std::vector<Matrix> free_images(const TruncatedModule& x, const ObjectIndex& n, const Matrix& start,
                                const ObjectIndex& t) {
    const GroupTable& group = x.group();
    const auto order = static_cast<std::size_t>(group.order());
    const std::size_t count = count_injections(n, t) * order;
    std::vector<Matrix> out(count);
    std::vector<bool> seen(count, false);

    Morphism base = identity_morphism(n);
    base.target = t;
    for (int i = 0; i < n.m(); ++i) base.maps[static_cast<std::size_t>(i)] = standard_inclusion(n[i], t[i] - n[i]);

    struct Node {
        std::vector<Injection> maps;
        int h;
        std::size_t index;
    };
    auto index_of = [&](const std::vector<Injection>& maps, int h) {
        return morphism_rank(Morphism{n, t, maps, 0}) * order + static_cast<std::size_t>(h);
    };
    std::deque<Node> queue;
    const std::size_t i0 = index_of(base.maps, 0);
    out[i0] = x.standard_map(n, t) * start;
    seen[i0] = true;
    queue.push_back({base.maps, 0, i0});
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < t.m(); ++i)
            for (int k = 0; k + 1 < t[i]; ++k) {
                auto maps = node.maps;
                for (int& y : maps[static_cast<std::size_t>(i)]) {
                    if (y == k) y = k + 1;
                    else if (y == k + 1) y = k;
                }
                const std::size_t idx = index_of(maps, node.h);
                if (seen[idx]) continue;
                seen[idx] = true;
                out[idx] = x.swap(t, i, k) * out[node.index];
                queue.push_back({std::move(maps), node.h, idx});
            }
        for (std::size_t j = 0; j < group.generators().size(); ++j) {
            const int h = group.multiply(group.generators()[j], node.h);
            const std::size_t idx = index_of(node.maps, h);
            if (seen[idx]) continue;
            seen[idx] = true;
            out[idx] = x.group_action(t, static_cast<int>(j)) * out[node.index];
            queue.push_back({node.maps, h, idx});
        }
    }
    return out;
}

void close_under_automorphisms(const TruncatedModule& x, const ObjectIndex& n, SpanBuilder& span) {
    std::deque<Vector> queue(span.accepted().begin(), span.accepted().end());
    while (!queue.empty()) {
        Vector v = std::move(queue.front());
        queue.pop_front();
        auto offer = [&](const Matrix& a) {
            Vector w = a.apply(v);
            if (span.add(w)) queue.push_back(std::move(w));
        };
        for (int i = 0; i < n.m(); ++i)
            for (int k = 0; k + 1 < n[i]; ++k) offer(x.swap(n, i, k));
        for (std::size_t j = 0; j < x.group().generators().size(); ++j) offer(x.group_action(n, static_cast<int>(j)));
    }
}

SubspaceFamily positive_image(const TruncatedModule& x, const std::vector<int>& coords) {
    SubspaceFamily out;
    for (const auto& n : x.window().objects()) {
        SpanBuilder span(x.dim(n));
        for (int i : coords) {
            if (n[i] == 0) continue;
            const Matrix& a = x.inclusion(n - ObjectIndex::unit(x.m(), i), i);
            for (std::size_t c = 0; c < a.cols(); ++c) span.add(a.column(c));
        }
        close_under_automorphisms(x, n, span);
        out.push_back(span.subspace());
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> every_coord(int m) {
    std::vector<int> c;
    for (int i = 0; i < m; ++i) c.push_back(i);
    return c;
}

}  // namespace

FreeCover cover_from_generators(const ModulePtr& v, std::vector<CoverGenerator> gens) {
    const Window& w = v->window();
    std::vector<TruncatedModule> parts;
    std::vector<ModulePtr> part_ptrs;
    for (const auto& g : gens) {
        if (g.vector.size() != v->dim(g.at)) throw std::invalid_argument("cover generator has the wrong length");
        parts.push_back(make_free(g.at, w, v->group_ptr()));
    }
    ModulePtr p = parts.empty() ? share(make_zero(w, v->group_ptr())) : share(direct_sum(parts));

    ModuleMap pi{p, v, {}};
    for (const auto& t : w.objects()) {
        Matrix block(v->dim(t), p->dim(t));
        std::size_t col = 0;
        for (const auto& g : gens) {
            if (!leq(g.at, t)) continue;
            const auto imgs = free_images(*v, g.at, Matrix::from_columns({g.vector}, g.vector.size()), t);
            for (const auto& img : imgs) block.set_block(0, col++, img);
        }
        pi.blocks.push_back(std::move(block));
    }
    if (!is_blockwise_surjective(pi)) throw std::invalid_argument("cover generators do not generate the module");
    FreeCover cover{std::move(gens), p, pi, kernel_family(pi)};
    return cover;
}

FreeCover free_cover(const ModulePtr& v) {
    const Window& w = v->window();
    const SubspaceFamily image = positive_image(*v, every_coord(v->m()));
    std::vector<CoverGenerator> gens;
    for (const auto& n : w.objects()) {
        const std::size_t d = v->dim(n);
        SpanBuilder span(d);
        const auto& basis = image[w.index(n)].basis();
        for (std::size_t r = 0; r < basis.rows(); ++r) span.add(basis.row(r));
        for (std::size_t b = 0; b < d && span.dim() < d; ++b) {
            Vector e(d);
            e[b] = 1;
            if (span.contains(e)) continue;
            gens.push_back({n, e});
            span.add(e);
            close_under_automorphisms(*v, n, span);
        }
    }
    return cover_from_generators(v, std::move(gens));
}

MarginCheck presentation_margin(const TruncatedModule& v) {
    const ObjectIndex& bound = v.window().bound();
    auto strictly_inside = [&](const ObjectIndex& n) {
        for (int i = 0; i < v.m(); ++i)
            if (n[i] >= bound[i]) return false;
        return true;
    };
    if (v.presentation()) {
        const auto& p = *v.presentation();
        const bool gens_fit = strictly_inside(p.generator_bound(v.m()));
        const bool rels_fit = !p.relation_bound || strictly_inside(*p.relation_bound);
        if (gens_fit && rels_fit) return {true, true, ""};
    }
    const auto vp = std::make_shared<const TruncatedModule>(v);
    const FreeCover cover = free_cover(vp);
    for (const auto& g : cover.generators)
        if (!strictly_inside(g.at)) return {false, false, "generator at the window boundary " + to_string(g.at)};
    const auto k = submodule(cover.free, cover.kernel).module;
    const SubspaceFamily ik = positive_image(*k, every_coord(v.m()));
    for (const auto& n : v.window().objects())
        if (!strictly_inside(n) && ik[v.window().index(n)].dim() != k->dim(n))
            return {false, false, "relation at the window boundary " + to_string(n)};
    return {true, false, ""};
}

HomSolver::HomSolver(ModulePtr v) : v_(std::move(v)), cover_(free_cover(v_)) {
    const Window& win = v_->window();
    const auto k = submodule(cover_.free, cover_.kernel);
    const SubspaceFamily ik = positive_image(*k.module, every_coord(v_->m()));
    for (std::size_t idx = 0; idx < win.size(); ++idx) {
        // Relations: a complement of I K(t) in K(t), in the coordinates of P(t).
        SpanBuilder span(cover_.free->dim_at(idx));
        const Matrix ib = k.inclusion.blocks[idx] * ik[idx].columns();
        for (std::size_t c = 0; c < ib.cols(); ++c) span.add(ib.column(c));
        const Matrix kcols = cover_.kernel[idx].columns();
        std::vector<Vector> rels;
        for (std::size_t c = 0; c < kcols.cols(); ++c)
            if (span.add(kcols.column(c))) rels.push_back(kcols.column(c));
        relations_.push_back(std::move(rels));
        auto x = fim::solve(cover_.projection.blocks[idx], Matrix::identity(v_->dim_at(idx)));
        if (!x) throw std::logic_error("cover projection is not surjective");
        sections_.push_back(std::move(*x));
    }
    status_ = presentation_margin(*v_).fits ? Status::Exact : Status::WindowBounded;
}

HomResult HomSolver::solve(const ModulePtr& w) const {
    if (!(v_->window() == w->window())) throw std::invalid_argument("hom_space: different windows");
    if (!(v_->group() == w->group())) throw std::invalid_argument("hom_space: different groups");
    const Window& win = v_->window();
    const auto& gens = cover_.generators;

    // Unknowns: w_j in W(n_j), stacked.
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& g : gens) {
        offset.push_back(unknowns);
        unknowns += w->dim(g.at);
    }
    // images[t][j]: W((beta, h)) on the unknown w_j, one matrix per basis element of M(n_j)(t).
    std::vector<std::vector<std::vector<Matrix>>> images(win.size());
    std::vector<Vector> rows;
    for (const auto& t : win.objects()) {
        const std::size_t idx = win.index(t);
        for (const auto& g : gens)
            images[idx].push_back(leq(g.at, t) ? free_images(*w, g.at, Matrix::identity(w->dim(g.at)), t)
                                               : std::vector<Matrix>{});
        for (const auto& rel : relations_[idx]) {
            // sum_{j, basis b} rel_b W(b) w_j = 0: dim W(t) equations.
            Matrix eq(w->dim(t), unknowns);
            std::size_t col = 0;
            for (std::size_t j = 0; j < gens.size(); ++j)
                for (const auto& m : images[idx][j]) {
                    if (sgn(rel[col]) != 0) {
                        Matrix cur = eq.block(0, offset[j], eq.rows(), m.cols());
                        eq.set_block(0, offset[j], cur + m * rel[col]);
                    }
                    ++col;
                }
            for (std::size_t r = 0; r < eq.rows(); ++r) rows.push_back(eq.row(r));
        }
    }
    const Subspace solutions = fim::kernel_basis(Matrix::from_rows(rows, unknowns));

    HomResult result;
    result.status = status_;
    for (std::size_t s = 0; s < solutions.dim(); ++s) {
        const Vector sol = solutions.basis().row(s);
        ModuleMap phi{v_, w, {}};
        for (const auto& t : win.objects()) {
            const std::size_t idx = win.index(t);
            Matrix fp(w->dim(t), cover_.free->dim(t));
            std::size_t col = 0;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                const Vector wj(sol.begin() + static_cast<std::ptrdiff_t>(offset[j]),
                                sol.begin() + static_cast<std::ptrdiff_t>(offset[j] + w->dim(gens[j].at)));
                for (const auto& m : images[idx][j]) {
                    const Vector c = m.apply(wj);
                    for (std::size_t r = 0; r < c.size(); ++r) fp(r, col) = c[r];
                    ++col;
                }
            }
            phi.blocks.push_back(fp * sections_[idx]);
        }
        result.basis.push_back(std::move(phi));
    }
    return result;
}

HomResult hom_space_bounded(const ModulePtr& v, const ModulePtr& w) { return HomSolver(v).solve(w); }

std::vector<ModuleMap> hom_space(const ModulePtr& v, const ModulePtr& w) {
    const MarginCheck margin = presentation_margin(*v);
    if (!margin.fits) throw std::domain_error("hom_space: presentation margin violated (" + margin.reason + ")");
    return hom_space_bounded(v, w).basis;
}

ModuleMap combination(const std::vector<ModuleMap>& maps, const std::vector<Rational>& coeffs) {
    if (maps.empty()) throw std::invalid_argument("combination: no maps");
    ModuleMap out = scale(maps[0], coeffs.at(0));
    for (std::size_t k = 1; k < maps.size(); ++k) out = out + scale(maps[k], coeffs.at(k));
    return out;
}

}  // namespace fim
