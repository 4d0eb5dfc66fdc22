#include "fim/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fim {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0) out[r] += a * v[c];
        }
    }
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("set_block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
    Matrix m(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (sgn(y) == 0) continue;
                mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
                out(i, j) += tmp;
            }
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << to_string(m(r, c));
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            if (sgn(x) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b(k, l)) != 0) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return m;
}

Echelon row_reduce(Matrix m) {
    Echelon e;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    Rational f, tmp;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != lead)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(lead, j));
        const Rational inv = 1 / m(lead, c);
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(lead, j)) != 0) m(lead, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || sgn(m(r, c)) == 0) continue;
            f = m(r, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(m(lead, j)) == 0) continue;
                mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), m(lead, j).get_mpq_t());
                m(r, j) -= tmp;
            }
        }
        e.pivots.push_back(c);
        ++lead;
    }
    e.reduced = m.block(0, 0, lead, cols);
    return e;
}

Matrix rref(const Matrix& m) {
    Echelon e = row_reduce(m);
    Matrix out(m.rows(), m.cols());
    out.set_block(0, 0, e.reduced);
    return out;
}

std::size_t rank(const Matrix& m) {
    // Row-reduce along the smaller dimension.
    if (m.rows() > m.cols()) return row_reduce(m.transpose()).pivots.size();
    return row_reduce(m).pivots.size();
}

Subspace Subspace::row_span(const Matrix& rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    Echelon e = row_reduce(rows);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("contains: dimension mismatch");
    Vector r = v;
    Rational tmp;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rational f = r[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (sgn(basis_(i, c)) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), basis_(i, c).get_mpq_t());
            r[c] -= tmp;
        }
    }
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    Vector c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Matrix Subspace::coordinate_map() const {
    Matrix m(dim(), ambient_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) m(i, pivots_[i]) = 1;
    return m;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("sum: ambient mismatch");
    return row_span(vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    // a U = b W  <=>  (a, -b) in ker [U^T | -W^T]
    Matrix minus_w = other.basis_;
    minus_w *= Rational(-1);
    Matrix stacked = hstack(basis_.transpose(), minus_w.transpose());
    Subspace k = kernel_basis(stacked);
    Matrix coeffs = k.basis().block(0, 0, k.dim(), dim());
    return row_span(coeffs * basis_);
}

Subspace kernel_basis(const Matrix& m) {
    Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::row_span(Matrix::from_rows(vecs, cols));
}

Subspace image_basis(const Matrix& m) { return Subspace::column_span(m); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    Echelon e = row_reduce(hstack(m, b));
    const std::size_t n = m.cols();
    Matrix x(n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, n + c);
    }
    return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    auto x = solve(m, Matrix::from_columns({b}, b.size()));
    if (!x) return std::nullopt;
    return x->column(0);
}

Matrix quotient_map(std::size_t ambient, const Subspace& sub) {
    if (sub.ambient_dim() != ambient) throw std::invalid_argument("quotient_map: ambient mismatch");
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : sub.pivots()) is_pivot[p] = true;
    Matrix q(ambient - sub.dim(), ambient);
    std::size_t row = 0;
    for (std::size_t c = 0; c < ambient; ++c) {
        if (is_pivot[c]) continue;
        q(row, c) = 1;
        for (std::size_t j = 0; j < sub.dim(); ++j) q(row, sub.pivots()[j]) = -sub.basis()(j, c);
        ++row;
    }
    return q;
}

Matrix quotient_section(std::size_t ambient, const Subspace& sub) {
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : sub.pivots()) is_pivot[p] = true;
    Matrix l(ambient, ambient - sub.dim());
    std::size_t col = 0;
    for (std::size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) l(c, col++) = 1;
    return l;
}

Vector SpanBuilder::reduce(Vector v) const {
    Rational tmp;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (sgn(v[p]) == 0) continue;
        const Rational f = v[p];
        const Vector& row = rows_[i];
        for (std::size_t c = p; c < ambient_; ++c) {
            if (sgn(row[c]) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), row[c].get_mpq_t());
            v[c] -= tmp;
        }
    }
    return v;
}

bool SpanBuilder::contains(const Vector& v) const {
    Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool SpanBuilder::add(const Vector& v) {
    if (v.size() != ambient_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && sgn(r[p]) == 0) ++p;
    if (p == ambient_) return false;
    const Rational inv = 1 / r[p];
    for (std::size_t c = p; c < ambient_; ++c) r[c] *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    accepted_.push_back(v);
    return true;
}

Subspace SpanBuilder::subspace() const {
    return Subspace::row_span(Matrix::from_rows(rows_, ambient_));
}

}  // namespace fim
