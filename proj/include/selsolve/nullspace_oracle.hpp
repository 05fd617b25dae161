#pragma once

#include <cstddef>
#include <vector>

#include "selsolve/linear_system.hpp"

namespace selsolve {

/// Default ceiling on |universe| for dense elimination.
inline constexpr std::size_t kOracleMaxUnknowns = 20000;

struct NullspaceResult {
  std::size_t rank = 0;
  /// Column order of the basis vectors (the system's universe).
  std::vector<UnknownId> columns;
  /// One vector per non-pivot column, with a 1 in that column.
  std::vector<std::vector<Rational>> basis;

  std::size_t nullity() const noexcept { return basis.size(); }
};

/// Rank and nullspace of the coefficient matrix by exact dense Gauss-Jordan
/// elimination. Constant parts of the equations are ignored. Throws TooLarge
/// when the universe exceeds max_unknowns.
NullspaceResult dense_nullspace_oracle(const LinearSystem& system,
                                       std::size_t max_unknowns = kOracleMaxUnknowns);

}  // namespace selsolve
