#pragma once

#include "fim/linalg.hpp"

#include <optional>
#include <vector>

namespace fim {

/// Coefficients by degree, no trailing zeros; the zero polynomial is empty.
using Polynomial = std::vector<Rational>;

Polynomial trim(Polynomial p);
int degree(const Polynomial& p);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);
struct Bezout {
    Polynomial gcd;  // monic
    Polynomial a;
    Polynomial b;  // a * x + b * y = gcd
};
Bezout extended_gcd(const Polynomial& x, const Polynomial& y);
Rational evaluate(const Polynomial& p, const Rational& x);
/// Distinct rational roots, by the rational root theorem. Gives up (returns nothing) when a
/// coefficient is too large to factor by trial division.
std::optional<std::vector<Rational>> rational_roots(const Polynomial& p);

/// A unital finite-dimensional algebra over Q on a basis e_0..e_{d-1}.
class FiniteAlgebra {
public:
    /// constants[a][b] = coordinates of e_a e_b.
    FiniteAlgebra(std::vector<std::vector<Vector>> constants, Vector unit);
    /// The algebra spanned by a basis of block-matrix tuples closed under blockwise product.
    static FiniteAlgebra from_blocks(const std::vector<std::vector<Matrix>>& basis);

    std::size_t dim() const { return unit_.size(); }
    const Vector& unit() const { return unit_; }
    const std::vector<std::vector<Vector>>& constants() const { return constants_; }
    Vector multiply(const Vector& x, const Vector& y) const;
    /// Matrix of y -> x y.
    Matrix left_regular(const Vector& x) const;
    bool is_associative() const;
    bool is_commutative() const;

    /// Kernel of the trace form (x, y) -> tr(L_{xy}); this is the Jacobson radical in
    /// characteristic zero.
    Subspace radical() const;
    Polynomial minimal_polynomial(const Vector& x) const;
    Vector evaluate(const Polynomial& p, const Vector& x) const;
    bool is_idempotent(const Vector& e) const;
    /// A nontrivial idempotent obtained from a rational eigenvalue of x whose generalised
    /// eigenspace is proper, if there is one.
    std::optional<Vector> split_idempotent(const Vector& x) const;

private:
    std::vector<std::vector<Vector>> constants_;
    Vector unit_;
};

}  // namespace fim
