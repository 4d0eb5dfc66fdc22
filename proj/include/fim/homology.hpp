#pragma once

#include "fim/functors.hpp"
#include "fim/hom.hpp"
#include "fim/module.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fim {

/// V[[s]]: the objects s x t, t over the coordinates outside `coords`, as a module with
/// group Aut(s) x G (Aut generators act by the transpositions of the S-coordinates).
TruncatedModule slice(const TruncatedModule& v, const CoordSet& coords, const ObjectIndex& s);

/// Generation and relation degree bounds, declared or observed from a cover.
struct DegreeBounds {
    ObjectIndex generators;
    std::optional<ObjectIndex> relations;  // none: no relations
    bool declared = false;
    bool fits = false;  // strictly inside the window
};
DegreeBounds degree_bounds(const TruncatedModule& v);

struct TorsionVerdict {
    SubspaceFamily torsion;
    Status status = Status::WindowBounded;
    std::size_t total_dim() const { return fim::total_dim(torsion); }
};
/// At n: the kernel of the composite of standard S-inclusions to the window boundary.
TorsionVerdict detect_torsion(const TruncatedModule& v, const CoordSet& coords);

/// terms[k] = intersection of the {i}-torsion for i <= k (0-based), decreasing in k.
struct TorFiltration {
    std::vector<SubspaceFamily> terms;
    Status status = Status::WindowBounded;
};
TorFiltration tor_filtration(const TruncatedModule& v);

struct HomologyReport {
    CoordSet coords;
    std::vector<std::size_t> h0_dims;  // per window object
    std::vector<std::size_t> h1_dims;
    std::map<ObjectIndex, std::size_t> h0_slices;  // s -> total dimension over the slice
    std::map<ObjectIndex, std::size_t> h1_slices;
    int t0 = -1;
    int t1 = -1;
    Status status = Status::WindowBounded;
    bool h1_vanishes() const { return t1 < 0; }
};
/// H_0^S and H_1^S from one free cover.
HomologyReport homology(const ModulePtr& v, const CoordSet& coords);
/// H_0^S(V) = V / I_S V as a module.
QuotientResult h0_module(const ModulePtr& v, const CoordSet& coords);
/// H_1^S dims via an explicit cover.
std::vector<std::size_t> h1_dims(const FreeCover& cover, const CoordSet& coords);

struct InducedWitness {
    bool induced = false;
    ObjectIndex s;
    ModulePtr slice;     // W = V[[s]]
    ModulePtr induced_module;  // F_s(W)
    std::optional<ModuleMap> iso;  // F_s(W) -> V
    Status status = Status::WindowBounded;
    std::string reason;
};
InducedWitness is_S_induced(const ModulePtr& v, const CoordSet& coords);
/// The canonical map F_s(V[[s]]) -> V, [c (x) w] -> V(c x id) w.
ModuleMap induced_comparison(const ModulePtr& v, const CoordSet& coords, const ObjectIndex& s);

struct SemiInducedStep {
    ObjectIndex s;
    SubspaceFamily submodule;  // V^i; V^{i-1} is the previous step's (zero for the first)
};
struct SemiInducedResult {
    bool semi_induced = false;
    Status status = Status::WindowBounded;
    std::vector<SemiInducedStep> filtration;  // increasing, ends with V
    std::string reason;
};
SemiInducedResult is_S_semi_induced(const ModulePtr& v, const CoordSet& coords);
/// Re-checks a certificate from scratch: nesting, closure and S-inducedness of each quotient.
std::optional<std::string> certificate_failure(const ModulePtr& v, const CoordSet& coords,
                                               const SemiInducedResult& cert);

}  // namespace fim
