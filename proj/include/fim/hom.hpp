#pragma once

#include "fim/module.hpp"

#include <string>
#include <vector>

namespace fim {

/// Columns X((beta, h)) * start for every basis element (beta, h) of (M(n) boxtimes kG)(t),
/// in make_free order; each entry has the shape of `start` moved to X(t).
std::vector<Matrix> free_images(const TruncatedModule& x, const ObjectIndex& n, const Matrix& start,
                                const ObjectIndex& t);

/// Closes `span` (a subspace of X(n)) under Aut(n) x G.
void close_under_automorphisms(const TruncatedModule& x, const ObjectIndex& n, SpanBuilder& span);

/// I_S X: at n, the span of images of all morphisms into n of positive S-degree.
SubspaceFamily positive_image(const TruncatedModule& x, const std::vector<int>& coords);

struct CoverGenerator {
    ObjectIndex at;
    Vector vector;
};

/// P = sum_j M(n_j) boxtimes kG mapping onto V, with kernel K.
struct FreeCover {
    std::vector<CoverGenerator> generators;
    ModulePtr free;
    ModuleMap projection;
    SubspaceFamily kernel;
};

/// Generators chosen greedily from the standard basis modulo I V and Aut x G orbits,
/// processing objects in window order.
FreeCover free_cover(const ModulePtr& v);
/// Cover on explicitly supplied generators; throws unless they generate V.
FreeCover cover_from_generators(const ModulePtr& v, std::vector<CoverGenerator> gens);

/// Does V's presentation fit strictly inside its window? Uses the declared presentation
/// when present and valid, otherwise observed generators and relations of the cover.
struct MarginCheck {
    bool fits = false;
    bool declared = false;
    std::string reason;
};
MarginCheck presentation_margin(const TruncatedModule& v);

struct HomResult {
    std::vector<ModuleMap> basis;
    Status status = Status::Exact;
};
/// Hom(V, -) for a fixed source: the cover of V and its relations are computed once.
class HomSolver {
public:
    explicit HomSolver(ModulePtr v);
    HomResult solve(const ModulePtr& w) const;
    const FreeCover& cover() const { return cover_; }
    const ModulePtr& source() const { return v_; }
    /// EXACT when V's presentation fits the window.
    Status status() const { return status_; }

private:
    ModulePtr v_;
    FreeCover cover_;
    std::vector<std::vector<Vector>> relations_;  // per object: complement of I K in K
    std::vector<Matrix> sections_;
    Status status_ = Status::WindowBounded;
};

/// Basis of Hom(V, W) computed from a free cover of V; status WINDOW_BOUNDED when the
/// presentation of V does not fit the window.
HomResult hom_space_bounded(const ModulePtr& v, const ModulePtr& w);
/// As hom_space_bounded, but throws std::domain_error when the margin is violated.
std::vector<ModuleMap> hom_space(const ModulePtr& v, const ModulePtr& w);
/// Linear combination of maps with the given coefficients.
ModuleMap combination(const std::vector<ModuleMap>& maps, const std::vector<Rational>& coeffs);

}  // namespace fim
