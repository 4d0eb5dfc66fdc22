#pragma once

#include "fim/category.hpp"
#include "fim/linalg.hpp"
#include "fim/symmetric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fim {

/// Three-valued verdict for statements about the untruncated module.
enum class Status { Exact, WindowBounded, Inconclusive };
std::string to_string(Status s);

/// Generator objects and a relation degree bound. No relation bound means the
/// module is projective (free or induced).
struct Presentation {
    std::vector<ObjectIndex> generator_slots;
    std::optional<ObjectIndex> relation_bound;

    /// Componentwise maximum of the generator objects (zero when there are none).
    ObjectIndex generator_bound(int m) const;
    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// A C^m_G-module restricted to a window: one vector space per object and matrices for
/// the generating morphisms.
class TruncatedModule {
public:
    TruncatedModule() = default;
    /// All actions start as zero matrices of the right shape (identity for automorphisms of
    /// zero-dimensional spaces is vacuous); constructors then fill them in.
    TruncatedModule(Window window, GroupPtr group, std::vector<std::size_t> dims);

    const Window& window() const { return window_; }
    int m() const { return window_.m(); }
    const GroupPtr& group_ptr() const { return group_; }
    const GroupTable& group() const { return *group_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(const ObjectIndex& n) const { return dims_[window_.index(n)]; }
    std::size_t dim_at(std::size_t idx) const { return dims_[idx]; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    /// n -> n + o_i; requires n + o_i in the window.
    const Matrix& inclusion(const ObjectIndex& n, int i) const;
    const Matrix& swap(const ObjectIndex& n, int i, int k) const;
    const Matrix& group_action(const ObjectIndex& n, int j) const;
    void set_inclusion(const ObjectIndex& n, int i, Matrix a);
    void set_swap(const ObjectIndex& n, int i, int k, Matrix a);
    void set_group_action(const ObjectIndex& n, int j, Matrix a);

    const Matrix& generator_matrix(const Generator& g) const;
    void set_generator_matrix(const Generator& g, Matrix a);

    /// Matrix of an arbitrary window morphism, via its factorisation into generators.
    Matrix action(const Morphism& f) const;
    /// Matrix of the automorphism (perms, group element) of n.
    Matrix automorphism_action(const ObjectIndex& n, const std::vector<Injection>& perms, int group_element) const;
    Matrix group_element_action(const ObjectIndex& n, int element) const;
    /// Composite of standard inclusions n -> t (n <= t).
    Matrix standard_map(const ObjectIndex& n, const ObjectIndex& t) const;

    const std::optional<Presentation>& presentation() const { return presentation_; }
    void set_presentation(std::optional<Presentation> p) { presentation_ = std::move(p); }

    friend bool operator==(const TruncatedModule& a, const TruncatedModule& b);

private:
    Window window_;
    GroupPtr group_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Matrix>> incl_;                 // [obj][i]
    std::vector<std::vector<std::vector<Matrix>>> swaps_;  // [obj][i][k]
    std::vector<std::vector<Matrix>> group_actions_;       // [obj][j]
    std::optional<Presentation> presentation_;
};

using ModulePtr = std::shared_ptr<const TruncatedModule>;
ModulePtr share(TruncatedModule v);

/// A homomorphism given by one block per window object.
struct ModuleMap {
    ModulePtr source;
    ModulePtr target;
    std::vector<Matrix> blocks;  // indexed by window index

    const Matrix& at(const ObjectIndex& n) const { return blocks[source->window().index(n)]; }
};

ModuleMap identity_map(const ModulePtr& v);
ModuleMap zero_map(const ModulePtr& source, const ModulePtr& target);
/// f after g.
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
ModuleMap operator+(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(const ModuleMap& f, const Rational& c);
/// Empty when natural; otherwise a description of the first failing generator.
std::optional<std::string> naturality_failure(const ModuleMap& f);
bool is_natural(const ModuleMap& f);
bool is_blockwise_injective(const ModuleMap& f);
bool is_blockwise_surjective(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);
/// Blockwise inverse of an isomorphism.
ModuleMap inverse(const ModuleMap& f);

/// A subspace at every window object.
using SubspaceFamily = std::vector<Subspace>;

SubspaceFamily zero_family(const TruncatedModule& v);
SubspaceFamily full_family(const TruncatedModule& v);
SubspaceFamily kernel_family(const ModuleMap& f);
SubspaceFamily image_family(const ModuleMap& f);
SubspaceFamily intersect(const SubspaceFamily& a, const SubspaceFamily& b);
SubspaceFamily sum(const SubspaceFamily& a, const SubspaceFamily& b);
bool is_action_closed(const TruncatedModule& v, const SubspaceFamily& family);
/// Smallest action-closed family containing `family`.
SubspaceFamily closure(const TruncatedModule& v, const SubspaceFamily& family);
std::size_t total_dim(const SubspaceFamily& family);

struct SubmoduleResult {
    ModulePtr module;
    ModuleMap inclusion;
};
struct QuotientResult {
    ModulePtr module;
    ModuleMap projection;
    Matrix section_at(const ObjectIndex& n) const;  // right inverse of the projection block
    std::vector<Matrix> sections;
};

/// Submodule generated by the vectors of `generators` (closed under all window morphisms).
SubmoduleResult submodule_generated(const ModulePtr& v, const SubspaceFamily& generators);
/// The action-closed family as a module; throws if not closed.
SubmoduleResult submodule(const ModulePtr& v, const SubspaceFamily& closed);
/// Quotient by an action-closed family; throws if not closed.
QuotientResult quotient(const ModulePtr& v, const SubspaceFamily& closed);
/// Cokernel of a module map.
QuotientResult cokernel(const ModuleMap& f);

// ---------------------------------------------------------------------------
// Constructors.

TruncatedModule make_zero(const Window& window, const GroupPtr& group);
/// M(n) tensored with the regular representation kG; basis (beta, h) has index
/// rank(beta) * |G| + h.
TruncatedModule make_free(const ObjectIndex& n, const Window& window, const GroupPtr& group);
/// Dimension 1 at the zero object, zero elsewhere, trivial group action.
TruncatedModule make_point(const Window& window, const GroupPtr& group);

/// Representation of G placed on the G factor of induced/co-induced modules.
enum class GroupRep { Trivial, Regular };

/// M(n) tensored over kAut(n) with the outer product of Specht modules, with the chosen
/// G representation.
TruncatedModule make_induced(const std::vector<Partition>& lambdas, const Window& window, const GroupPtr& group,
                             GroupRep rep = GroupRep::Regular);
/// E(l) tensored with kG: functions on Inj(n, l) with (alpha f)(beta) = f(beta alpha).
TruncatedModule make_cofree(const ObjectIndex& l, const Window& window, const GroupPtr& group);
/// Aut(l)-invariants of E(l) tensored with the outer product of Specht modules.
TruncatedModule make_coinduced(const std::vector<Partition>& lambdas, const Window& window, const GroupPtr& group,
                               GroupRep rep = GroupRep::Regular);

/// V over the coordinates `v_coords` of the result and W over the remaining ones, in order.
/// At most one factor may carry a nontrivial group.
TruncatedModule external_tensor(const TruncatedModule& v, const TruncatedModule& w, const std::vector<int>& v_coords);
/// V over coordinates 0..m_V-1 and W after.
TruncatedModule external_tensor(const TruncatedModule& v, const TruncatedModule& w);

TruncatedModule direct_sum(const TruncatedModule& v, const TruncatedModule& w);
TruncatedModule direct_sum(const std::vector<TruncatedModule>& parts);
/// Inclusion of the k-th summand and projection onto it.
ModuleMap summand_inclusion(const ModulePtr& sum, const std::vector<ModulePtr>& parts, std::size_t k);
ModuleMap summand_projection(const ModulePtr& sum, const std::vector<ModulePtr>& parts, std::size_t k);

/// Same data on a smaller window.
TruncatedModule restrict_window(const TruncatedModule& v, const ObjectIndex& bound);

struct ValidationReport {
    bool ok = true;
    std::string failure;
};
/// Shapes, Coxeter and group relations, and the defining relations between inclusions,
/// transpositions and group elements.
ValidationReport validate(const TruncatedModule& v);

/// Ind: V tensored with kG (G index fastest), and Res: forget the group.
TruncatedModule ind(const TruncatedModule& v, const GroupPtr& group);
TruncatedModule res(const TruncatedModule& v);

}  // namespace fim
