#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "selsolve/affine_form.hpp"

namespace selsolve {

/// lhs = 0.
struct Equation {
  AffineForm lhs;
  std::size_t id = 0;

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Scales e to integer coefficients with content 1 and makes the coefficient
/// of its lowest unknown positive (the constant, for a constant equation).
/// 0 = 0 maps to the empty form.
Equation canonicalize(Equation e);
AffineForm canonical_form(AffineForm form);

/// Ordered equations plus the universe of unknowns they range over.
class LinearSystem {
 public:
  LinearSystem() = default;

  const std::vector<Equation>& equations() const noexcept { return equations_; }
  std::vector<Equation>& equations() noexcept { return equations_; }
  /// Sorted, duplicate-free.
  const std::vector<UnknownId>& universe() const noexcept { return universe_; }

  std::size_t size() const noexcept { return equations_.size(); }
  bool empty() const noexcept { return equations_.empty(); }

  /// Appends with id = current size. Unknowns of lhs join the universe.
  void add_equation(AffineForm lhs);
  /// Appends keeping e.id. Unknowns of e join the universe.
  void push_back(Equation e);
  void add_unknown(UnknownId id);
  void add_unknowns(std::span<const UnknownId> ids);
  /// Appends every equation of other (renumbered) and merges universes.
  void append(const LinearSystem& other);

  /// Sum of term counts over all equations.
  std::size_t total_terms() const;
  bool contains_unknown(UnknownId id) const;
  /// True iff every unknown of every equation is in the universe.
  bool is_closed() const;

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

 private:
  void note_unknowns(const AffineForm& f);

  std::vector<Equation> equations_;
  std::vector<UnknownId> universe_;
};

}  // namespace selsolve
