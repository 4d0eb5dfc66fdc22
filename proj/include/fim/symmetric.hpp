#pragma once

#include "fim/category.hpp"
#include "fim/linalg.hpp"

#include <string>
#include <vector>

namespace fim {

class Partition {
public:
    Partition() = default;
    /// Throws unless the parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    Partition conjugate() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::string to_string(const Partition& p);
/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions(int n);
/// Number of standard Young tableaux.
std::size_t hook_length_dimension(const Partition& p);
/// Cycle type of a permutation of [n].
Partition cycle_type(const Injection& perm);
/// n! / z_mu.
std::size_t class_size(const Partition& mu);

/// Standard tableau as a row list of 0-based entries.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> standard_tableaux(const Partition& p);

/// Irreducible Q[S_n]-module on the standard polytabloid basis.
struct SpechtRep {
    Partition lambda;
    std::size_t dim = 0;
    std::vector<Matrix> generators;  // one per adjacent transposition s_k = (k k+1), k = 0..n-2
};

/// Throws std::logic_error if the constructed matrices fail the Coxeter relations.
SpechtRep specht(const Partition& lambda);
/// Coxeter relations for matrices indexed by adjacent transpositions.
bool satisfies_coxeter(const std::vector<Matrix>& s);

struct CharacterVector {
    std::vector<Partition> classes;  // partitions(n)
    std::vector<Rational> values;
};

/// Murnaghan-Nakayama value chi^lambda at cycle type mu.
long murnaghan_nakayama(const Partition& lambda, const Partition& mu);
CharacterVector character(const Partition& lambda);
/// (1/n!) sum over classes of |class| a(c) b(c); characters are real.
Rational inner_product(const CharacterVector& a, const CharacterVector& b);

/// Character table of a finite group whose characters are rational valued.
/// table[chi][c] indexed by conjugacy_classes() order; the trivial character first.
/// Throws std::domain_error when some character takes an irrational value.
struct GroupCharacters {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;  // element -> class index
    std::vector<std::vector<Rational>> table;
};
GroupCharacters rational_character_table(const GroupTable& group);

/// Matrices for every element of `group`, from matrices for its generators.
std::vector<Matrix> element_matrices(const GroupTable& group, const std::vector<Matrix>& generator_matrices,
                                    std::size_t dim);

/// Irreducible constituent of a representation of Aut(s) x G.
struct Constituent {
    std::vector<Partition> lambdas;  // one per coordinate of s
    int group_irrep = 0;             // row of rational_character_table(G)
    int multiplicity = 0;

    friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Decomposes the representation of GroupTable::product(*automorphisms(s), g) given by
/// `generator_matrices` (one per product generator). Throws std::invalid_argument when the
/// matrices are not a representation and std::domain_error for irrational G-characters.
std::vector<Constituent> decompose(const ObjectIndex& s, const GroupTable& g,
                                   const std::vector<Matrix>& generator_matrices, std::size_t dim);

}  // namespace fim
