#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "selsolve/affine_form.hpp"
#include "selsolve/linear_system.hpp"
#include "selsolve/zero_registry.hpp"

namespace selsolve {

/// Solution space of a linear system: registered zeros, pivots expressed in
/// free unknowns only, and the free unknowns. The three domains are disjoint
/// and together form the universe.
struct SolutionState {
  ZeroRegistry zeros;
  std::map<UnknownId, AffineForm> pivots;
  std::set<UnknownId> free;
  /// Equations that reduced to 0 = 0 while streaming.
  std::size_t identities = 0;

  SolutionState() = default;
  /// Every unknown of the universe starts free.
  explicit SolutionState(std::span<const UnknownId> universe, ZeroRegistry zeros = {});

  std::size_t universe_size() const noexcept { return zeros.size() + pivots.size() + free.size(); }
  std::vector<UnknownId> universe() const;

  /// Expression after pruning zeros and substituting pivots; afterwards it
  /// mentions free unknowns only.
  AffineForm reduce(const AffineForm& form) const;

  /// Compares the solution space description; the identity counter is
  /// diagnostics only.
  friend bool operator==(const SolutionState& a, const SolutionState& b) {
    return a.zeros == b.zeros && a.pivots == b.pivots && a.free == b.free;
  }
};

/// Drops every term whose unknown is registered. Same result as substituting 0
/// for all registered unknowns; no other rewriting.
AffineForm prune_zeros(const AffineForm& form, const ZeroRegistry& reg);
/// In-place variant; returns the number of dropped terms.
std::size_t prune_zeros_in_place(AffineForm& form, const ZeroRegistry& reg);

struct FindZerosResult {
  ZeroRegistry registry;
  /// Pruned equations that are not identities.
  LinearSystem remaining;
  /// Zeros found per round; the last entry is the terminating 0.
  std::vector<std::size_t> new_per_round;

  std::size_t productive_rounds() const noexcept {
    return new_per_round.empty() ? 0 : new_per_round.size() - 1;
  }
};

/// Harvests 1-term equations r*x = 0 round by round until none is left.
/// Throws Inconsistent if some equation prunes to "nonzero constant = 0".
FindZerosResult find_zeros(const LinearSystem& system, ZeroRegistry reg = {});

/// Stable reorder by ascending term count via per-length bucket lists;
/// linear in the number of equations plus the largest term count.
LinearSystem length_sort(const LinearSystem& system);

/// Processes equations one at a time against the evolving solution. Memory
/// depends on the solution state only, not on how many equations pass through.
class StreamSolver {
 public:
  explicit StreamSolver(SolutionState state);

  /// Throws Inconsistent on "nonzero constant = 0".
  void push(const AffineForm& equation);

  const SolutionState& state() const noexcept { return state_; }
  SolutionState take() && { return std::move(state_); }

 private:
  void index_pivot(UnknownId pivot, const AffineForm& rhs);

  SolutionState state_;
  // free unknown -> pivots whose right-hand side may mention it (may be stale)
  std::unordered_map<UnknownId, std::unordered_set<UnknownId, UnknownIdHash>, UnknownIdHash>
      occurrences_;
};

SolutionState stream_solve(std::span<const Equation> equations, SolutionState state);

struct LsssReport {
  std::vector<std::size_t> zero_rounds;
  std::size_t streamed_equations = 0;
  std::size_t identities = 0;
};

/// find_zeros to fixpoint, length_sort, then stream_solve. Works for under-,
/// well- and overdetermined systems. `known_zeros` seeds the registry.
SolutionState lsss_solve(const LinearSystem& system, ZeroRegistry known_zeros = {},
                         LsssReport* report = nullptr);

/// One assignment per free unknown: that unknown 1, the others 0, pivots
/// evaluated. Spans the solution space of a homogeneous system.
std::vector<Assignment> solution_basis(const SolutionState& state);

/// True iff the assignment (missing unknowns read as 0) satisfies every zero
/// and pivot relation of the state.
bool admits(const SolutionState& state, const Assignment& values);

/// Assignment from a dense vector over the given columns.
Assignment to_assignment(std::span<const UnknownId> columns, std::span<const Rational> values);

}  // namespace selsolve
