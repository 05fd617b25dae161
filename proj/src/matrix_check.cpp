#include <random>
#include <string>

#include "selsolve/errors.hpp"
#include "selsolve/matrix.hpp"
#include "selsolve/pipeline.hpp"

namespace selsolve {

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!selsolve::is_zero(x)) return false;
  return true;
}

std::optional<Matrix> Matrix::inverse() const {
  Matrix a = *this;
  Matrix inv = identity(dim_);
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && selsolve::is_zero(a(pivot, col))) ++pivot;
    if (pivot == dim_) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < dim_; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < dim_; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r == col || selsolve::is_zero(a(r, col))) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < dim_; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

MatrixPoint::MatrixPoint(Matrix u_value, Matrix v_value)
    : u(std::move(u_value)), v(std::move(v_value)) {
  auto ui = u.inverse();
  auto vi = v.inverse();
  if (!ui || !vi) throw NotInvertible("matrix point needs invertible u and v");
  u_inv = std::move(*ui);
  v_inv = std::move(*vi);
}

const Matrix& MatrixPoint::letter(Generator g) const {
  switch (g) {
    case Generator::U:
      return u;
    case Generator::V:
      return v;
    case Generator::Uinv:
      return u_inv;
    case Generator::Vinv:
      return v_inv;
  }
  return u;
}

Matrix evaluate_at(const NCPoly& p, const Assignment& values, const MatrixPoint& at) {
  const std::size_t n = at.u.dim();
  Matrix out(n);
  for (const auto& [w, coef] : p.terms()) {
    const Rational c = evaluate(coef, values);
    if (is_zero(c)) continue;
    Matrix m = Matrix::identity(n);
    for (std::size_t i = 0; i < w.size(); ++i) m = m * at.letter(w[i]);
    m *= c;
    out += m;
  }
  return out;
}

Matrix derivative_at(const NCPoly& p, const Assignment& values, const MatrixPoint& at,
                     const Matrix& du, const Matrix& dv) {
  const std::size_t n = at.u.dim();
  Matrix du_inv = at.u_inv * du * at.u_inv;
  du_inv *= -1;
  Matrix dv_inv = at.v_inv * dv * at.v_inv;
  dv_inv *= -1;
  auto d_letter = [&](Generator g) -> const Matrix& {
    switch (g) {
      case Generator::U:
        return du;
      case Generator::V:
        return dv;
      case Generator::Uinv:
        return du_inv;
      case Generator::Vinv:
        return dv_inv;
    }
    return du;
  };

  Matrix out(n);
  for (const auto& [w, coef] : p.terms()) {
    const Rational c = evaluate(coef, values);
    if (is_zero(c) || w.empty()) continue;
    const std::size_t m = w.size();
    std::vector<Matrix> suffix(m + 1, Matrix::identity(n));
    for (std::size_t i = m; i-- > 0;) suffix[i] = at.letter(w[i]) * suffix[i + 1];
    Matrix prefix = Matrix::identity(n);
    Matrix sum(n);
    for (std::size_t i = 0; i < m; ++i) {
      sum += prefix * d_letter(w[i]) * suffix[i + 1];
      prefix = prefix * at.letter(w[i]);
    }
    sum *= c;
    out += sum;
  }
  return out;
}

namespace {

constexpr int kMaxResample = 100;

Matrix random_invertible(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    Matrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = entry(rng);
    if (m.inverse()) return m;
  }
  throw SingularSample("no invertible sample after " + std::to_string(kMaxResample) + " draws");
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

VerifyResult verify_by_matrices(const ODESystem& sys, const SymmetryAnsatz& ansatz,
                                const SolutionState& solution, int dim, int trials,
                                std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("verification needs dim >= 2");
  if (trials < 1) throw std::invalid_argument("verification needs at least one trial");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(dim);
  const Assignment none;

  VerifyResult result;
  for (int trial = 0; trial < trials; ++trial) {
    const MatrixPoint at(random_invertible(n, rng), random_invertible(n, rng));
    Assignment values;
    for (UnknownId f : solution.free) values[f] = random_rational(rng);
    for (const auto& [pivot, rhs] : solution.pivots) values[pivot] = evaluate(rhs, values);

    const NCPoly& q1 = ansatz.dtau.image_u();
    const NCPoly& q2 = ansatz.dtau.image_v();
    const Matrix q1_val = evaluate_at(q1, values, at);
    const Matrix q2_val = evaluate_at(q2, values, at);
    const Matrix p1_val = evaluate_at(sys.dt.image_u(), none, at);
    const Matrix p2_val = evaluate_at(sys.dt.image_v(), none, at);

    ++result.trials_run;
    const Matrix cu = derivative_at(sys.dt.image_u(), none, at, q1_val, q2_val) -
                      derivative_at(q1, values, at, p1_val, p2_val);
    const Matrix cv = derivative_at(sys.dt.image_v(), none, at, q1_val, q2_val) -
                      derivative_at(q2, values, at, p1_val, p2_val);
    if (!cu.is_zero() || !cv.is_zero()) {
      result.detail = "trial " + std::to_string(trial + 1) + ": commutator at " +
                      (cu.is_zero() ? "v" : "u") + " is not the zero matrix";
      return result;
    }
  }
  result.passed = true;
  result.detail = std::to_string(trials) + " trials, all commutators zero";
  return result;
}

}  // namespace selsolve
