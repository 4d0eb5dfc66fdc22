#pragma once

#include "fim/module.hpp"

#include <random>
#include <utility>
#include <vector>

namespace fim {

/// A finitely presented module: free generators and relation vectors, buildable on any
/// window that contains every generator and relation object.
struct PresentationData {
    GroupPtr group;
    std::vector<ObjectIndex> generators;
    std::vector<std::pair<ObjectIndex, Vector>> relations;  // in the basis of the free module at that object

    int m() const { return generators.empty() ? 0 : generators.front().m(); }
    /// Componentwise maximum of all generator and relation objects.
    ObjectIndex support_bound() const;
    /// P / <relations> with the matching declared presentation.
    TruncatedModule build(const Window& window) const;
};

struct SampleOptions {
    int max_generators = 2;
    int max_generator_degree = 1;  // per coordinate
    int max_relations = 2;
    int max_relation_lift = 1;     // relation object = generator + up to this much per coordinate
    int coefficient_range = 2;
};

PresentationData random_presentation(std::mt19937& rng, int m, const GroupPtr& group,
                                     const SampleOptions& options = {});

/// Quotient of V by the submodule generated by the given vectors; keeps no presentation.
TruncatedModule quotient_by_vectors(const ModulePtr& v, const std::vector<std::pair<ObjectIndex, Vector>>& vectors);

}  // namespace fim
