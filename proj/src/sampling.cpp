#include "fim/sampling.hpp"

#include <stdexcept>

namespace fim {

ObjectIndex PresentationData::support_bound() const {
    ObjectIndex out = ObjectIndex::zero(m());
    for (const auto& g : generators) out = componentwise_max(out, g);
    for (const auto& r : relations) out = componentwise_max(out, r.first);
    return out;
}

TruncatedModule quotient_by_vectors(const ModulePtr& v, const std::vector<std::pair<ObjectIndex, Vector>>& vectors) {
    SubspaceFamily gens = zero_family(*v);
    for (const auto& [at, x] : vectors) {
        const std::size_t idx = v->window().index(at);
        gens[idx] = gens[idx].sum(Subspace::row_span(Matrix::from_rows({x}, x.size())));
    }
    const auto sub = submodule_generated(v, gens);
    return *quotient(v, image_family(sub.inclusion)).module;
}

TruncatedModule PresentationData::build(const Window& window) const {
    if (generators.empty()) throw std::invalid_argument("PresentationData: no generators");
    if (!leq(support_bound(), window.bound())) throw std::invalid_argument("PresentationData: window too small");
    std::vector<TruncatedModule> parts;
    for (const auto& g : generators) parts.push_back(make_free(g, window, group));
    const auto free = share(direct_sum(parts));
    TruncatedModule out = relations.empty() ? *free : quotient_by_vectors(free, relations);
    Presentation p{generators, std::nullopt};
    for (const auto& r : relations) p.relation_bound = p.relation_bound ? componentwise_max(*p.relation_bound, r.first) : r.first;
    out.set_presentation(std::move(p));
    return out;
}

PresentationData random_presentation(std::mt19937& rng, int m, const GroupPtr& group, const SampleOptions& options) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    PresentationData out;
    out.group = group;
    const int gens = uniform(1, options.max_generators);
    for (int j = 0; j < gens; ++j) {
        std::vector<int> c;
        for (int i = 0; i < m; ++i) c.push_back(uniform(0, options.max_generator_degree));
        out.generators.emplace_back(c);
    }
    const int rels = uniform(0, options.max_relations);
    const auto order = static_cast<std::size_t>(group->order());
    for (int r = 0; r < rels; ++r) {
        const ObjectIndex& base = out.generators[static_cast<std::size_t>(uniform(0, gens - 1))];
        std::vector<int> c;
        for (int i = 0; i < m; ++i) c.push_back(base[i] + uniform(0, options.max_relation_lift));
        const ObjectIndex at(c);
        std::size_t dim = 0;
        for (const auto& g : out.generators)
            if (leq(g, at)) dim += count_injections(g, at) * order;
        Vector x(dim);
        bool nonzero = false;
        for (auto& e : x) {
            // Sparse: about a third of the entries are nonzero.
            if (uniform(0, 2) != 0) continue;
            int v = uniform(-options.coefficient_range, options.coefficient_range);
            e = v;
            nonzero = nonzero || v != 0;
        }
        if (!nonzero && dim > 0) x[static_cast<std::size_t>(uniform(0, static_cast<int>(dim) - 1))] = 1;
        if (dim > 0) out.relations.emplace_back(at, std::move(x));
    }
    return out;
}

}  // namespace fim
