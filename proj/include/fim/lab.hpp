#pragma once

#include "fim/algebra.hpp"
#include "fim/functors.hpp"
#include "fim/hom.hpp"
#include "fim/homology.hpp"
#include "fim/module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fim {

// ---------------------------------------------------------------------------
// Shift theorem.

struct ShiftStep {
    int n = 0;
    std::size_t torsion_dim = 0;
    int t0 = -1;
    int t1 = -1;
    bool semi_induced = false;
    Status status = Status::WindowBounded;
};

struct ShiftSearchResult {
    std::optional<int> N;
    Status status = Status::Inconclusive;
    std::vector<ShiftStep> log;
    ModulePtr shifted;               // shift_prod(V, S, N) on success
    SemiInducedResult certificate;   // for `shifted`
    bool recertified = false;        // certificate re-checked from scratch
};

/// Window bound an S-coordinate needs for the search to stay EXACT up to max_n:
/// max_n + max(generator degree, relation degree) + 1.
ObjectIndex shift_search_budget(const TruncatedModule& v, const CoordSet& coords, int max_n);
/// Smallest n <= max_n with shift_prod(V, S, n) S-semi-induced with EXACT status.
/// Throws std::domain_error when the window is smaller than the budget.
ShiftSearchResult shift_theorem_search(const ModulePtr& v, const CoordSet& coords, int max_n);

/// The canonical map V -> shift_prod(V, S, n); throws std::domain_error unless V is
/// S-torsion-free with EXACT status, and std::logic_error if a block fails to be injective.
ModuleMap embed_into_shift(const ModulePtr& v, const CoordSet& coords, int n);

// ---------------------------------------------------------------------------
// Cogeneration.

/// One coordinate factor of a member of U^m: M(k) (x)_{S_k} S^lambda or the
/// S_k-invariants of E(k) (x) S^lambda, with k = |lambda|.
struct InjectiveFactor {
    enum class Kind { Induced, Coinduced };
    Kind kind = Kind::Induced;
    Partition shape;
    friend bool operator==(const InjectiveFactor&, const InjectiveFactor&) = default;
};

/// (I_1 boxtimes ... boxtimes I_m) boxtimes kG.
struct UMember {
    std::vector<InjectiveFactor> factors;

    TruncatedModule build(const Window& window, const GroupPtr& group) const;
    std::string describe() const;
    friend bool operator==(const UMember&, const UMember&) = default;
};

/// Every member whose factors have degree at most max_degree[i] in coordinate i.
std::vector<UMember> u_members(const std::vector<int>& max_degree);

struct CogenerationWitness {
    std::vector<UMember> targets;
    ModulePtr target;         // direct sum of the built targets
    ModuleMap embedding;      // V -> target
    bool verified = false;    // natural and injective at every window object
    Status status = Status::Inconclusive;
    std::string reason;
};

/// Embeds V into a finite direct sum of U^m members. Kernel vectors are killed one at a
/// time by generic maps into members whose factor types follow the torsion pattern of
/// the vector (co-induced in torsion coordinates, induced elsewhere).
/// Throws std::domain_error when V's presentation does not fit its window.
CogenerationWitness cogenerate(const ModulePtr& v, std::uint32_t seed = 1);

// ---------------------------------------------------------------------------
// Endomorphism rings, Ext^1 and summands.

struct EndRingData {
    std::vector<ModuleMap> basis;
    FiniteAlgebra algebra{{}, {}};
    std::size_t radical_dim = 0;
    bool is_local = false;
    std::optional<ModuleMap> idempotent;  // nontrivial, when found
    Status status = Status::Inconclusive;
    std::string reason;

    std::size_t dim() const { return basis.size(); }
};

EndRingData end_ring(const ModulePtr& v, std::uint32_t seed = 1);
bool is_local_end(const ModulePtr& v);

struct Ext1Report {
    std::size_t dim = 0;
    std::size_t hom_v = 0;  // dim Hom(V, I)
    std::size_t hom_p = 0;  // dim Hom(P, I) for the free cover P
    std::size_t hom_k = 0;  // dim Hom(K, I) for its kernel
    Status status = Status::Inconclusive;
    bool vanishes() const { return dim == 0; }
};
/// dim Ext^1(V, I) = dim Hom(K, I) - dim Hom(P, I) + dim Hom(V, I), for 0 -> K -> P -> V -> 0
/// the free cover. The cover and its kernel are prepared once per source.
class Ext1Solver {
public:
    explicit Ext1Solver(ModulePtr v);
    Ext1Report compute(const ModulePtr& target) const;

private:
    HomSolver source_;
    HomSolver kernel_;
};
Ext1Report ext1(const ModulePtr& v, const ModulePtr& target);

struct SummandReport {
    std::vector<ModulePtr> summands;  // indecomposable
    std::vector<int> matches;         // candidate index per summand, -1 when none
    Status status = Status::Inconclusive;
    std::string reason;
};
/// Splits X by idempotents of its endomorphism ring and matches each indecomposable
/// summand to a candidate by an explicit isomorphism. Inconclusive past `budget` splits.
SummandReport identify_summands(const ModulePtr& x, const std::vector<ModulePtr>& candidates, int budget = 16,
                                std::uint32_t seed = 1);
/// An isomorphism a -> b found among Hom basis elements and generic combinations.
std::optional<ModuleMap> find_isomorphism(const ModulePtr& a, const ModulePtr& b, std::uint32_t seed = 1);

}  // namespace fim
