#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "selsolve/rational.hpp"
#include "selsolve/unknown.hpp"

namespace selsolve {

struct Term {
  UnknownId id;
  Rational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact sparse affine expression constant + sum coef_i * x_i.
///
/// Terms are kept sorted by UnknownId with no zero coefficients, so equal forms
/// have equal representations.
class AffineForm {
 public:
  AffineForm() = default;
  explicit AffineForm(Rational constant) : constant_(std::move(constant)) {}

  static AffineForm unknown(UnknownId id, const Rational& coef = 1);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static AffineForm from_terms(std::vector<Term> terms, Rational constant = 0);

  const Rational& constant() const noexcept { return constant_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty() && selsolve::is_zero(constant_); }
  bool is_constant() const noexcept { return terms_.empty(); }
  bool has_unknowns() const noexcept { return !terms_.empty(); }

  /// Zero when id does not occur.
  Rational coefficient(UnknownId id) const;
  bool contains(UnknownId id) const;

  void add_constant(const Rational& c) { constant_ += c; }
  void add_term(UnknownId id, const Rational& coef);
  /// *this += scale * other.
  void add_scaled(const AffineForm& other, const Rational& scale);
  void scale(const Rational& factor);
  /// Drops the term for id; returns its coefficient (zero if absent).
  Rational remove(UnknownId id);

  /// Removes every term whose unknown satisfies pred. Used by zero pruning.
  template <typename Pred>
  std::size_t erase_if(Pred pred) {
    const auto before = terms_.size();
    std::erase_if(terms_, [&](const Term& t) { return pred(t.id); });
    return before - terms_.size();
  }

  AffineForm& operator+=(const AffineForm& o) {
    add_scaled(o, 1);
    return *this;
  }
  AffineForm& operator-=(const AffineForm& o) {
    add_scaled(o, -1);
    return *this;
  }
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(const Rational& s, AffineForm a) {
    a.scale(s);
    return a;
  }
  AffineForm operator-() const {
    AffineForm out = *this;
    out.scale(-1);
    return out;
  }

  /// e.g. "2*c1 - 3/4*c7 + 1"; "0" for the zero form.
  std::string to_string() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;

 private:
  Rational constant_{0};
  std::vector<Term> terms_;
};

using SubstitutionMap = std::map<UnknownId, AffineForm>;
using Assignment = std::map<UnknownId, Rational>;

/// Replaces every occurrence of a key of sol by its right-hand side. The
/// right-hand sides must not mention keys of sol.
AffineForm substitute(const AffineForm& form, const SubstitutionMap& sol);

/// Value of the form under a full assignment; unknowns missing from the
/// assignment are taken as zero.
Rational evaluate(const AffineForm& form, const Assignment& values);

/// Parses the AffineForm::to_string format; throws std::invalid_argument.
AffineForm parse_affine(const std::string& text);

}  // namespace selsolve
