#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "selsolve/lsss.hpp"
#include "selsolve/strategy.hpp"
#include "selsolve/symmetry.hpp"

namespace selsolve {

struct StepReport {
  Step step = Step::F;
  double seconds = 0;
  std::size_t new_zeros = 0;
  /// N/S: words left in the pruned condition. F: equations materialized.
  std::size_t live_equations = 0;
};

struct RunReport {
  int degree = 0;
  std::string strategy;
  std::vector<StepReport> steps;
  std::size_t peak_live_equations = 0;
  /// Equations handed to the solver by the F step.
  std::size_t final_equations = 0;
  std::size_t zeros = 0, pivots = 0, free = 0;

  /// Zeros found by the N and S steps.
  std::size_t selective_zeros() const;
  /// Line-oriented "key=value" text.
  std::string to_text() const;
};

struct RunResult {
  SolutionState state;
  RunReport report;
};

/// Executes the strategy for a symmetry ansatz of the given degree. N and S
/// steps grow one shared zero registry; F formulates the pruned necessary
/// condition for I and both symmetry conditions, splits them completely and
/// solves with lsss_solve. Throws TooLarge beyond desk_scale_limit().
RunResult run_strategy(const ODESystem& sys, int degree, const Strategy& strategy);

inline constexpr double kDefaultYieldThreshold = 0.01;

/// Adaptive strategy: keep an N step while it finds more than
/// threshold * (unknowns not yet zero) new zeros; then the same test for S,
/// each kept S followed by N steps chosen the same way; then F. A step that
/// fails the test is not kept and its zeros are discarded.
Strategy default_strategy(const ODESystem& sys, int degree,
                          double threshold = kDefaultYieldThreshold);

inline constexpr std::uint64_t kDefaultVerifySeed = 0x5eed5eedULL;

struct VerifyResult {
  bool passed = false;
  int trials_run = 0;
  std::string detail;
};

/// Evaluates [D_tau, D_t]u and [D_tau, D_t]v at random invertible dim x dim
/// rational matrices, with the ansatz coefficients taken from the solution
/// (random rationals for its free unknowns). Passes iff every evaluation is
/// the exact zero matrix. Throws SingularSample if no invertible sample is
/// found within the retry bound.
VerifyResult verify_by_matrices(const ODESystem& sys, const SymmetryAnsatz& ansatz,
                                const SolutionState& solution, int dim, int trials,
                                std::uint64_t seed = kDefaultVerifySeed);

}  // namespace selsolve
