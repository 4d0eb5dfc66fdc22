#include "fim/lab.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace fim {

namespace {

std::vector<Rational> random_coefficients(std::mt19937& rng, std::size_t count) {
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<Rational> out;
    for (std::size_t k = 0; k < count; ++k) {
        int c = dist(rng);
        out.emplace_back(c == 0 ? 1 : c);
    }
    return out;
}

Matrix stack_rows(const std::vector<Matrix>& blocks, std::size_t cols) {
    Matrix out(0, cols);
    for (const auto& b : blocks) out = vstack(out, b);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

ObjectIndex shift_search_budget(const TruncatedModule& v, const CoordSet& coords, int max_n) {
    check_coord_set(coords, v.m());
    const DegreeBounds b = degree_bounds(v);
    if (!b.fits) throw std::domain_error("shift_theorem_search: presentation does not fit the window");
    ObjectIndex out = ObjectIndex::zero(v.m());
    for (int i : coords) {
        const int rel = b.relations ? (*b.relations)[i] : 0;
        out = out.with(i, max_n + std::max(b.generators[i], rel) + 1);
    }
    return out;
}

ShiftSearchResult shift_theorem_search(const ModulePtr& v, const CoordSet& coords, int max_n) {
    if (max_n < 0) throw std::invalid_argument("shift_theorem_search: max_n must be nonnegative");
    const ObjectIndex budget = shift_search_budget(*v, coords, max_n);
    for (int i : coords)
        if (v->window().bound()[i] < budget[i])
            throw std::domain_error("shift_theorem_search: window " + to_string(v->window().bound()) +
                                    " below the budget " + to_string(budget));
    ShiftSearchResult out;
    for (int n = 0; n <= max_n; ++n) {
        const ModulePtr w = share(shift_prod(*v, coords, n));
        const TorsionVerdict tor = detect_torsion(*w, coords);
        const HomologyReport report = homology(w, coords);
        SemiInducedResult semi = is_S_semi_induced(w, coords);
        out.log.push_back({n, tor.total_dim(), report.t0, report.t1, semi.semi_induced, semi.status});
        if (semi.semi_induced && semi.status == Status::Exact) {
            out.N = n;
            out.shifted = w;
            out.recertified = !certificate_failure(w, coords, semi).has_value();
            out.certificate = std::move(semi);
            out.status = out.recertified ? Status::Exact : Status::Inconclusive;
            return out;
        }
    }
    out.status = Status::Inconclusive;
    return out;
}

ModuleMap embed_into_shift(const ModulePtr& v, const CoordSet& coords, int n) {
    const TorsionVerdict tor = detect_torsion(*v, coords);
    if (tor.total_dim() > 0) throw std::domain_error("embed_into_shift: module has S-torsion");
    if (tor.status != Status::Exact) throw std::domain_error("embed_into_shift: torsion-freeness is only window-bounded");
    ModuleMap f = canonical_prod_map(v, coords, n);
    if (!is_blockwise_injective(f)) throw std::logic_error("embed_into_shift: canonical map is not injective");
    return f;
}

// ---------------------------------------------------------------------------

TruncatedModule UMember::build(const Window& window, const GroupPtr& group) const {
    if (static_cast<int>(factors.size()) != window.m()) throw std::invalid_argument("UMember: one factor per coordinate");
    const GroupPtr trivial = GroupTable::trivial();
    std::optional<TruncatedModule> acc;
    for (int i = 0; i < window.m(); ++i) {
        const auto& f = factors[static_cast<std::size_t>(i)];
        const Window w1(ObjectIndex{window.bound()[i]});
        TruncatedModule part = f.kind == InjectiveFactor::Kind::Induced
                                   ? make_induced({f.shape}, w1, trivial, GroupRep::Trivial)
                                   : make_coinduced({f.shape}, w1, trivial, GroupRep::Trivial);
        acc = acc ? external_tensor(*acc, part) : std::move(part);
    }
    if (!acc) throw std::invalid_argument("UMember: no factors");
    return group->is_trivial() ? std::move(*acc) : ind(*acc, group);
}

std::string UMember::describe() const {
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += " x ";
        out += (f.kind == InjectiveFactor::Kind::Induced ? "Ind" : "Co") + to_string(f.shape);
    }
    return out;
}

std::vector<UMember> u_members(const std::vector<int>& max_degree) {
    std::vector<UMember> out{UMember{}};
    for (int d : max_degree) {
        std::vector<InjectiveFactor> choices;
        for (auto kind : {InjectiveFactor::Kind::Induced, InjectiveFactor::Kind::Coinduced})
            for (int k = 0; k <= d; ++k)
                for (const auto& p : partitions(k)) choices.push_back({kind, p});
        std::vector<UMember> next;
        for (const auto& u : out)
            for (const auto& c : choices) {
                UMember x = u;
                x.factors.push_back(c);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

CogenerationWitness cogenerate(const ModulePtr& v, std::uint32_t seed) {
    const MarginCheck margin = presentation_margin(*v);
    if (!margin.fits) throw std::domain_error("cogenerate: " + margin.reason);
    const Window& w = v->window();
    const int m = v->m();
    std::vector<SubspaceFamily> torsion;
    for (int i = 0; i < m; ++i) torsion.push_back(detect_torsion(*v, {i}).torsion);

    const HomSolver solver(v);
    std::vector<int> max_degree;
    for (int i = 0; i < m; ++i) max_degree.push_back(w.bound()[i]);
    const std::vector<UMember> pool = u_members(max_degree);
    std::map<std::size_t, std::pair<ModulePtr, std::vector<ModuleMap>>> cache;
    auto member = [&](std::size_t k) -> const std::pair<ModulePtr, std::vector<ModuleMap>>& {
        auto it = cache.find(k);
        if (it == cache.end()) {
            ModulePtr u = share(pool[k].build(w, v->group_ptr()));
            auto basis = solver.solve(u).basis;
            it = cache.emplace(k, std::make_pair(std::move(u), std::move(basis))).first;
        }
        return it->second;
    };

    std::mt19937 rng(seed);
    CogenerationWitness out;
    std::vector<ModuleMap> chosen;
    std::vector<ModulePtr> built;
    SubspaceFamily remaining = full_family(*v);
    while (total_dim(remaining) > 0) {
        std::size_t idx = 0;
        while (remaining[idx].dim() == 0) ++idx;
        const ObjectIndex n = w.object(idx);
        const Vector x = remaining[idx].basis().row(0);

        // Co-induced factors where x is torsion, induced ones elsewhere, degrees near n.
        std::vector<std::pair<int, std::size_t>> order;
        for (std::size_t k = 0; k < pool.size(); ++k) {
            int score = 0;
            for (int i = 0; i < m; ++i) {
                const auto& f = pool[k].factors[static_cast<std::size_t>(i)];
                const bool wants_co = torsion[static_cast<std::size_t>(i)][idx].contains(x);
                if ((f.kind == InjectiveFactor::Kind::Coinduced) != wants_co) score += 100;
                score += std::abs(f.shape.size() - n[i]);
            }
            order.emplace_back(score, k);
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });

        bool progress = false;
        for (const auto& [score, k] : order) {
            const auto& [u, basis] = member(k);
            if (u->dim(n) == 0 || basis.empty()) continue;
            std::vector<ModuleMap> tries{combination(basis, random_coefficients(rng, basis.size()))};
            tries.insert(tries.end(), basis.begin(), basis.end());
            for (const auto& f : tries) {
                const Vector image = f.at(n).apply(x);
                if (std::all_of(image.begin(), image.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
                remaining = intersect(remaining, kernel_family(f));
                chosen.push_back(f);
                built.push_back(u);
                out.targets.push_back(pool[k]);
                progress = true;
                break;
            }
            if (progress) break;
        }
        if (!progress) {
            out.reason = "no member detects a vector at " + to_string(n);
            break;
        }
    }

    std::vector<TruncatedModule> parts;
    for (const auto& u : built) parts.push_back(*u);
    out.target = share(parts.empty() ? make_zero(w, v->group_ptr()) : direct_sum(parts));
    out.embedding = ModuleMap{v, out.target, {}};
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
        std::vector<Matrix> rows;
        for (const auto& f : chosen) rows.push_back(f.blocks[idx]);
        out.embedding.blocks.push_back(stack_rows(rows, v->dim_at(idx)));
    }
    out.verified = out.reason.empty() && is_natural(out.embedding) && is_blockwise_injective(out.embedding);
    out.status = out.verified ? solver.status() : Status::Inconclusive;
    return out;
}

// ---------------------------------------------------------------------------

EndRingData end_ring(const ModulePtr& v, std::uint32_t seed) {
    const HomSolver solver(v);
    EndRingData out;
    out.basis = solver.solve(v).basis;
    if (out.basis.empty()) {
        out.status = solver.status();
        out.reason = "zero module";
        return out;
    }
    std::vector<std::vector<Matrix>> blocks;
    for (const auto& f : out.basis) blocks.push_back(f.blocks);
    out.algebra = FiniteAlgebra::from_blocks(blocks);
    out.radical_dim = out.algebra.radical().dim();
    const std::size_t d = out.dim();
    if (d - out.radical_dim == 1) {
        out.is_local = true;
        out.status = solver.status();
        return out;
    }
    std::vector<Vector> candidates;
    for (std::size_t a = 0; a < d; ++a) {
        Vector e(d);
        e[a] = 1;
        candidates.push_back(e);
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Vector e(d);
            e[a] = 1;
            e[b] = 1;
            candidates.push_back(e);
        }
    std::mt19937 rng(seed);
    for (int k = 0; k < 24; ++k) candidates.push_back(random_coefficients(rng, d));
    for (const auto& x : candidates)
        if (auto e = out.algebra.split_idempotent(x)) {
            out.idempotent = combination(out.basis, *e);
            out.status = solver.status();
            return out;
        }
    out.status = Status::Inconclusive;
    out.reason = "no idempotent found and the semisimple quotient has dimension " + std::to_string(d - out.radical_dim);
    return out;
}

bool is_local_end(const ModulePtr& v) { return end_ring(v).is_local; }

Ext1Solver::Ext1Solver(ModulePtr v)
    : source_(std::move(v)),
      kernel_(submodule(source_.cover().free, source_.cover().kernel).module) {}

Ext1Report Ext1Solver::compute(const ModulePtr& target) const {
    Ext1Report out;
    out.hom_v = source_.solve(target).basis.size();
    for (const auto& g : source_.cover().generators) out.hom_p += target->dim(g.at);
    out.hom_k = kernel_.solve(target).basis.size();
    out.dim = out.hom_k + out.hom_v - out.hom_p;
    out.status = source_.status() == Status::Exact && kernel_.status() == Status::Exact ? Status::Exact
                                                                                        : Status::WindowBounded;
    return out;
}

Ext1Report ext1(const ModulePtr& v, const ModulePtr& target) { return Ext1Solver(v).compute(target); }

// ---------------------------------------------------------------------------

std::optional<ModuleMap> find_isomorphism(const ModulePtr& a, const ModulePtr& b, std::uint32_t seed) {
    if (a->dims() != b->dims() || !(a->window() == b->window()) || !(a->group() == b->group())) return std::nullopt;
    const auto basis = HomSolver(a).solve(b).basis;
    if (basis.empty()) return a->is_zero() ? std::optional<ModuleMap>(zero_map(a, b)) : std::nullopt;
    std::vector<ModuleMap> tries(basis.begin(), basis.end());
    std::mt19937 rng(seed);
    for (int k = 0; k < 8; ++k) tries.push_back(combination(basis, random_coefficients(rng, basis.size())));
    for (const auto& f : tries)
        if (is_isomorphism(f)) return f;
    return std::nullopt;
}

SummandReport identify_summands(const ModulePtr& x, const std::vector<ModulePtr>& candidates, int budget,
                                std::uint32_t seed) {
    SummandReport out;
    out.status = Status::Exact;
    std::vector<ModulePtr> pending{x};
    int splits = 0;
    while (!pending.empty()) {
        ModulePtr piece = pending.back();
        pending.pop_back();
        if (piece->is_zero()) continue;
        const EndRingData end = end_ring(piece, seed);
        out.status = std::max(out.status, end.status);
        if (end.is_local || !end.idempotent) {
            if (!end.is_local) out.reason = "summand with undecided endomorphism ring";
            out.summands.push_back(piece);
            continue;
        }
        if (++splits > budget) {
            out.status = Status::Inconclusive;
            out.reason = "split budget exhausted";
            out.summands.push_back(piece);
            continue;
        }
        const ModuleMap& e = *end.idempotent;
        const ModuleMap complement = identity_map(piece) + scale(e, -1);
        pending.push_back(submodule(piece, image_family(complement)).module);
        pending.push_back(submodule(piece, image_family(e)).module);
    }
    for (const auto& s : out.summands) {
        int match = -1;
        for (std::size_t c = 0; c < candidates.size() && match < 0; ++c)
            if (find_isomorphism(candidates[c], s, seed)) match = static_cast<int>(c);
        out.matches.push_back(match);
    }
    return out;
}

}  // namespace fim
