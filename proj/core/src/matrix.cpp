#include "corank/matrix.hpp"

#include <sstream>

namespace corank {

Vector zero_vector(Ring ring, std::size_t n) {
    return Vector(n, Scalar::zero(ring));
}

Vector unit_vector(Ring ring, std::size_t n, std::size_t i) {
    Vector v = zero_vector(ring, n);
    v.at(i) = Scalar::one(ring);
    return v;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw domain_error("vector size mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw domain_error("vector size mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Scalar& c, const Vector& v) {
    Vector r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(ring)) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
}

Matrix Matrix::from_rows(Ring ring, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    if (v.size() != cols_) throw domain_error("row size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::append_row(const Vector& v) {
    if (v.size() != cols_) throw domain_error("row size mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Matrix::scale_row(std::size_t i, const Scalar& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) *= c;
}

void Matrix::add_multiple(std::size_t i, std::size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void Matrix::combine_rows(std::size_t i, std::size_t j, const Scalar& a, const Scalar& b,
                          const Scalar& c, const Scalar& d) {
    for (std::size_t k = 0; k < cols_; ++k) {
        Scalar ri = at(i, k), rj = at(j, k);
        at(i, k) = a * ri + b * rj;
        at(j, k) = c * ri + d * rj;
    }
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void Matrix::scale_col(std::size_t i, const Scalar& c) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) *= c;
}

void Matrix::add_col_multiple(std::size_t i, std::size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += c * at(r, j);
}

void Matrix::combine_cols(std::size_t i, std::size_t j, const Scalar& a, const Scalar& b,
                          const Scalar& c, const Scalar& d) {
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar vi = at(r, i), vj = at(r, j);
        at(r, i) = a * vi + b * vj;
        at(r, j) = c * vi + d * vj;
    }
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(ring_ == o.ring_)) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::row_is_zero(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c)
        if (!at(r, c).is_zero()) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ") << "[";
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << at(r, c).to_string();
        os << "]" << (r + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Vector mul(const Vector& v, const Matrix& m) {
    if (v.size() != m.rows()) throw domain_error("vector/matrix shape mismatch");
    Vector r = zero_vector(m.ring(), m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

} // namespace corank
