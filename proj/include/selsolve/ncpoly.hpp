#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "selsolve/affine_form.hpp"
#include "selsolve/word.hpp"

namespace selsolve {

/// Non-commutative Laurent polynomial in u, v whose coefficients are affine
/// forms in the symbolic unknowns. Words are reduced, appear once, and never
/// carry a zero coefficient. Iteration is in degree-lexicographic word order.
class NCPoly {
 public:
  using TermMap = std::map<Word, AffineForm>;

  NCPoly() = default;

  static NCPoly constant(const Rational& c);
  static NCPoly monomial(const Word& w, const Rational& c = 1);
  static NCPoly monomial(const Word& w, AffineForm coef);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool has_unknowns() const;

  /// Zero form when w is absent.
  AffineForm coefficient(const Word& w) const;

  /// Adds scale * coef to the coefficient of w.
  void add(const Word& w, const AffineForm& coef, const Rational& scale = 1);
  void add(const Word& w, const Rational& c);
  /// *this += scale * other.
  void add_scaled(const NCPoly& other, const Rational& scale);

  /// Applies fn to every coefficient, dropping words whose coefficient becomes
  /// zero.
  template <typename Fn>
  void transform_coefficients(Fn fn) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      fn(it->second);
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    add_scaled(o, 1);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    add_scaled(o, -1);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Rational& s, const NCPoly& p) {
    NCPoly out;
    out.add_scaled(p, s);
    return out;
  }

  /// e.g. "(c1 + 2*c3)*u*v - 1*v^-1"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  TermMap terms_;
};

/// Product with free cancellation. At most one factor may carry unknowns;
/// otherwise throws NonlinearProduct.
NCPoly poly_mul(const NCPoly& a, const NCPoly& b);

/// p^k. For k < 0, p must be one word with coefficient 1 (throws
/// NotInvertible otherwise).
NCPoly poly_pow(const NCPoly& p, int k);

/// A derivation of the Laurent polynomial ring, fixed by the images of u and v.
/// Images of u^-1 and v^-1 follow from d(x x^-1) = 0: d(x^-1) = -x^-1 d(x) x^-1.
class Derivation {
 public:
  Derivation() = default;
  Derivation(NCPoly image_u, NCPoly image_v, std::string name = {});

  const NCPoly& image_u() const noexcept { return image_u_; }
  const NCPoly& image_v() const noexcept { return image_v_; }
  const std::string& name() const noexcept { return name_; }
  bool has_unknowns() const { return image_u_.has_unknowns() || image_v_.has_unknowns(); }

  /// Image of a single letter, including the derived images of inverses.
  const NCPoly& image(Generator g) const;

 private:
  NCPoly image_u_;
  NCPoly image_v_;
  NCPoly image_uinv_;
  NCPoly image_vinv_;
  std::string name_;
};

/// Leibniz-rule extension of d to p. At most one of d's images and p may carry
/// unknowns (NonlinearProduct otherwise).
NCPoly apply_derivation(const Derivation& d, const NCPoly& p);

}  // namespace selsolve
