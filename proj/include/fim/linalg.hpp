#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fim {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    Matrix transpose() const;
    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Vector apply(const Vector& v) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::string to_string(const Matrix& m);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix reduced;                   // reduced row echelon form, zero rows trimmed
    std::vector<std::size_t> pivots;  // pivot column per row
};

Echelon row_reduce(Matrix m);
/// Reduced row echelon form with the original row count (zero rows kept at the bottom).
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q^ambient, stored canonically as the RREF of a basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Row span of `rows` (rows.cols() must equal ambient).
    static Subspace row_span(const Matrix& rows);
    static Subspace column_span(const Matrix& cols) { return row_span(cols.transpose()); }
    static Subspace full(std::size_t ambient) { return row_span(Matrix::identity(ambient)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// ambient x dim matrix whose columns are the basis vectors.
    Matrix columns() const { return basis_.transpose(); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of a vector known to lie in the subspace.
    Vector coordinates(const Vector& v) const;
    /// dim x ambient left inverse of columns() on the subspace (reads pivot entries).
    Matrix coordinate_map() const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);

/// Some x with m x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Some X with m X = b, or nothing when inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// (ambient - dim sub) x ambient surjection whose kernel is `sub`.
Matrix quotient_map(std::size_t ambient, const Subspace& sub);
/// ambient x (ambient - dim sub) section L of quotient_map with Q L = I.
Matrix quotient_section(std::size_t ambient, const Subspace& sub);

/// Incremental echelon basis; used for span closures.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}
    /// Adds v; returns true when it enlarged the span.
    bool add(const Vector& v);
    bool contains(const Vector& v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    /// The vectors as originally accepted (not reduced).
    const std::vector<Vector>& accepted() const { return accepted_; }
    Subspace subspace() const;

private:
    Vector reduce(Vector v) const;

    std::size_t ambient_;
    std::vector<Vector> rows_;  // echelon rows, pivot entry normalised to 1
    std::vector<std::size_t> pivots_;
    std::vector<Vector> accepted_;
};

}  // namespace fim
