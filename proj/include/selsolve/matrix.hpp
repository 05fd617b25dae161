#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "selsolve/ncpoly.hpp"
#include "selsolve/rational.hpp"

namespace selsolve {

/// Small dense square matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  bool is_zero() const;
  /// Nullopt when singular.
  std::optional<Matrix> inverse() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

/// Matrix values of u, v and their inverses.
struct MatrixPoint {
  Matrix u, v, u_inv, v_inv;

  /// Throws NotInvertible when u or v is singular.
  MatrixPoint(Matrix u_value, Matrix v_value);
  const Matrix& letter(Generator g) const;
};

/// p at the point, with coefficients evaluated under `values`.
Matrix evaluate_at(const NCPoly& p, const Assignment& values, const MatrixPoint& at);

/// d(p) at the point for the derivation with d(u) = du, d(v) = dv (already
/// evaluated), by the Leibniz rule on matrices.
Matrix derivative_at(const NCPoly& p, const Assignment& values, const MatrixPoint& at,
                     const Matrix& du, const Matrix& dv);

}  // namespace selsolve
