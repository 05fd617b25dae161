#include "selsolve/nullspace_oracle.hpp"

#include <algorithm>
#include <string>

#include "selsolve/errors.hpp"

namespace selsolve {

// Incremental Gauss-Jordan: the pivot rows are kept fully reduced, so an
// incoming row is reduced by one subtraction per pivot column it touches.
NullspaceResult dense_nullspace_oracle(const LinearSystem& system, std::size_t max_unknowns) {
  const auto& columns = system.universe();
  const std::size_t n = columns.size();
  if (n > max_unknowns)
    throw TooLarge("dense oracle limited to " + std::to_string(max_unknowns) + " unknowns, got " +
                   std::to_string(n));

  auto column_of = [&](UnknownId id) {
    return static_cast<std::size_t>(std::lower_bound(columns.begin(), columns.end(), id) -
                                    columns.begin());
  };

  std::vector<std::vector<Rational>> rows;  // reduced pivot rows
  std::vector<std::size_t> pivot_col;       // pivot column of rows[r]
  std::vector<long> row_of_col(n, -1);

  std::vector<Rational> work(n);
  for (const auto& eq : system.equations()) {
    if (!eq.lhs.has_unknowns()) continue;
    std::fill(work.begin(), work.end(), Rational(0));
    for (const auto& t : eq.lhs.terms()) work[column_of(t.id)] = t.coef;

    // Entries in pivot columns come only from the original row, since every
    // pivot row is zero in every other pivot column.
    for (const auto& t : eq.lhs.terms()) {
      const std::size_t c = column_of(t.id);
      const long r = row_of_col[c];
      if (r < 0) continue;
      const Rational f = work[c];
      if (is_zero(f)) continue;
      const auto& pr = rows[static_cast<std::size_t>(r)];
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(pr[j])) work[j] -= f * pr[j];
    }

    std::size_t pc = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(work[j])) {
        pc = j;
        break;
      }
    if (pc == n) continue;

    const Rational inv = 1 / work[pc];
    for (std::size_t j = pc; j < n; ++j)
      if (!is_zero(work[j])) work[j] *= inv;

    for (auto& pr : rows) {
      if (is_zero(pr[pc])) continue;
      const Rational f = pr[pc];
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(work[j])) pr[j] -= f * work[j];
    }
    row_of_col[pc] = static_cast<long>(rows.size());
    pivot_col.push_back(pc);
    rows.push_back(work);
  }

  NullspaceResult result;
  result.rank = rows.size();
  result.columns = columns;
  for (std::size_t f = 0; f < n; ++f) {
    if (row_of_col[f] >= 0) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) v[pivot_col[r]] = -rows[r][f];
    result.basis.push_back(std::move(v));
  }
  return result;
}

}  // namespace selsolve
