#pragma once

#include "corank/scalar.hpp"

#include <cstddef>
#include <vector>

namespace corank {

using Vector = std::vector<Scalar>;

Vector zero_vector(Ring ring, std::size_t n);
Vector unit_vector(Ring ring, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
bool is_zero(const Vector& v);

/// Dense row-major matrix over one coefficient ring.
class Matrix {
  public:
    Matrix() = default;
    Matrix(Ring ring, std::size_t rows, std::size_t cols);

    static Matrix identity(Ring ring, std::size_t n);
    static Matrix from_rows(Ring ring, std::size_t cols, const std::vector<Vector>& rows);

    Ring ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    void set_row(std::size_t r, const Vector& v);
    void append_row(const Vector& v);

    void swap_rows(std::size_t i, std::size_t j);
    void scale_row(std::size_t i, const Scalar& c);
    /// row_i += c * row_j
    void add_multiple(std::size_t i, std::size_t j, const Scalar& c);
    /// rows i,j <- (a*ri + b*rj, c*ri + d*rj)
    void combine_rows(std::size_t i, std::size_t j, const Scalar& a, const Scalar& b,
                      const Scalar& c, const Scalar& d);

    void swap_cols(std::size_t i, std::size_t j);
    void scale_col(std::size_t i, const Scalar& c);
    void add_col_multiple(std::size_t i, std::size_t j, const Scalar& c);
    /// col_i, col_j <- a*col_i + b*col_j, c*col_i + d*col_j
    void combine_cols(std::size_t i, std::size_t j, const Scalar& a, const Scalar& b,
                      const Scalar& c, const Scalar& d);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool row_is_zero(std::size_t r) const;
    std::string to_string() const;

  private:
    Ring ring_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// v * m for a row vector v.
Vector mul(const Vector& v, const Matrix& m);

} // namespace corank
