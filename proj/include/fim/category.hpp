#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fim {

/// Object ([n_1],...,[n_m]) of the product category FI^m.
class ObjectIndex {
public:
    ObjectIndex() = default;
    explicit ObjectIndex(std::vector<int> coords);
    ObjectIndex(std::initializer_list<int> coords) : ObjectIndex(std::vector<int>(coords)) {}

    static ObjectIndex zero(int m) { return ObjectIndex(std::vector<int>(static_cast<std::size_t>(m), 0)); }
    /// o_i: one point in coordinate i, nothing elsewhere.
    static ObjectIndex unit(int m, int i);

    int m() const { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const { return coords_; }

    int degree() const;
    /// Sum over the coordinates listed in `subset`.
    int degree(const std::vector<int>& subset) const;

    ObjectIndex operator+(const ObjectIndex& other) const;
    ObjectIndex operator-(const ObjectIndex& other) const;
    ObjectIndex with(int i, int value) const;
    /// Restriction to the listed coordinates, in the listed order.
    ObjectIndex project(const std::vector<int>& subset) const;

    friend auto operator<=>(const ObjectIndex&, const ObjectIndex&) = default;
    friend bool operator==(const ObjectIndex&, const ObjectIndex&) = default;

private:
    std::vector<int> coords_;
};

std::string to_string(const ObjectIndex& n);
/// Componentwise order: an injection a -> b exists.
bool leq(const ObjectIndex& a, const ObjectIndex& b);
ObjectIndex componentwise_max(const ObjectIndex& a, const ObjectIndex& b);

/// The objects n with n_i <= bound_i, indexed lexicographically (coordinate 0 most significant).
/// Every standard inclusion n -> n + o_i increases the index, so index order is a
/// topological order for the category.
class Window {
public:
    Window() = default;
    explicit Window(ObjectIndex bound);

    const ObjectIndex& bound() const { return bound_; }
    int m() const { return bound_.m(); }
    std::size_t size() const { return size_; }
    bool contains(const ObjectIndex& n) const;
    std::size_t index(const ObjectIndex& n) const;
    std::optional<std::size_t> find(const ObjectIndex& n) const;
    ObjectIndex object(std::size_t idx) const;
    std::vector<ObjectIndex> objects() const;

    friend bool operator==(const Window& a, const Window& b) { return a.bound_ == b.bound_; }

private:
    ObjectIndex bound_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

// ---------------------------------------------------------------------------
// Injections and permutations, 0-based image lists.

using Injection = std::vector<int>;

/// All injections [a] -> [b] in lexicographic order of image lists.
std::vector<Injection> injections(int a, int b);
/// Position of `f` in injections(a, b).
std::size_t injection_rank(const Injection& f, int b);
/// b! / (b-a)!
std::size_t falling_factorial(int b, int a);
std::size_t factorial(int n);

/// Composite g after f, as image lists.
Injection compose(const Injection& g, const Injection& f);
Injection identity_injection(int n);
Injection inverse_permutation(const Injection& p);
/// x -> x + d from [a] to [a + d].
Injection standard_inclusion(int a, int d);
/// Sign of a permutation.
int permutation_sign(const Injection& p);

// ---------------------------------------------------------------------------

/// A finite group given by its multiplication table; identity at index 0.
class GroupTable {
public:
    /// Validates the group axioms and that `generators` generate.
    GroupTable(std::vector<std::vector<int>> mult, std::vector<int> generators);

    static std::shared_ptr<const GroupTable> trivial();
    static std::shared_ptr<const GroupTable> cyclic(int n);
    /// S_n, elements are permutations in lexicographic order, generated by adjacent transpositions.
    static std::shared_ptr<const GroupTable> symmetric(int n);
    /// Aut(s) = S_{s_1} x ... x S_{s_k}; element index is the mixed-radix rank of the
    /// permutation tuple (coordinate 0 most significant); generators are adjacent
    /// transpositions coordinate by coordinate.
    static std::shared_ptr<const GroupTable> automorphisms(const ObjectIndex& s);
    /// A x B with index a * |B| + b; generators of A (paired with 1) then of B.
    static std::shared_ptr<const GroupTable> product(const GroupTable& a, const GroupTable& b);

    int order() const { return static_cast<int>(mult_.size()); }
    int multiply(int a, int b) const { return mult_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int identity() const { return 0; }
    const std::vector<int>& generators() const { return generators_; }
    const std::vector<std::vector<int>>& table() const { return mult_; }
    /// Generator indices w with element = gen[w_0] * gen[w_1] * ... (empty for the identity).
    const std::vector<int>& word(int element) const { return words_[static_cast<std::size_t>(element)]; }
    /// Conjugacy classes, the identity class first.
    std::vector<std::vector<int>> conjugacy_classes() const;
    bool is_trivial() const { return order() == 1; }

    friend bool operator==(const GroupTable& a, const GroupTable& b) {
        return a.mult_ == b.mult_ && a.generators_ == b.generators_;
    }

private:
    std::vector<std::vector<int>> mult_;
    std::vector<int> inverse_;
    std::vector<int> generators_;
    std::vector<std::vector<int>> words_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Permutation tuple of an element of GroupTable::automorphisms(s).
std::vector<Injection> automorphism_element(const ObjectIndex& s, int index);
int automorphism_index(const ObjectIndex& s, const std::vector<Injection>& perms);

// ---------------------------------------------------------------------------

/// A morphism (alpha, g) of FI^m x G.
struct Morphism {
    ObjectIndex source;
    ObjectIndex target;
    std::vector<Injection> maps;  // one injection per coordinate
    int group_element = 0;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism identity_morphism(const ObjectIndex& n);
/// Checks injectivity, ranges, and source <= target.
bool is_valid(const Morphism& f);
/// All injection tuples a -> b (group part identity), coordinate 0 most significant,
/// each coordinate in lexicographic image-list order. Throws when a is not <= b.
std::vector<Morphism> enumerate_injections(const ObjectIndex& a, const ObjectIndex& b);
/// Rank of the injection part of f in enumerate_injections(f.source, f.target).
std::size_t morphism_rank(const Morphism& f);
std::size_t count_injections(const ObjectIndex& a, const ObjectIndex& b);
/// f after g; throws when target(g) != source(f).
Morphism compose(const Morphism& f, const Morphism& g, const GroupTable& group);

/// The generating morphisms of a window.
struct Generator {
    enum class Kind { Inclusion, Swap, Group };
    Kind kind;
    ObjectIndex at;  // source object
    int coord = 0;   // Inclusion / Swap
    int k = 0;       // Swap: transposes points k and k+1 of coordinate `coord`
    int group_gen = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Standard inclusion n -> n + o_i in coordinate i: x -> x + 1, the new point is 0.
Morphism inclusion_morphism(const ObjectIndex& n, int i);
Morphism swap_morphism(const ObjectIndex& n, int i, int k);
Morphism to_morphism(const Generator& g, const GroupTable& group);
/// Standard inclusions (when the target is in the window), adjacent transpositions and
/// group generators at every window object.
std::vector<Generator> generators(const Window& window, const GroupTable& group);

}  // namespace fim
