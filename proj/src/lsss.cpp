#include "selsolve/lsss.hpp"

#include <algorithm>

#include "selsolve/errors.hpp"

namespace selsolve {

SolutionState::SolutionState(std::span<const UnknownId> universe, ZeroRegistry reg)
    : zeros(std::move(reg)) {
  for (UnknownId id : universe)
    if (!zeros.contains(id)) free.insert(free.end(), id);
}

std::vector<UnknownId> SolutionState::universe() const {
  std::vector<UnknownId> out = zeros.sorted();
  for (const auto& [id, rhs] : pivots) out.push_back(id);
  out.insert(out.end(), free.begin(), free.end());
  std::sort(out.begin(), out.end());
  return out;
}

AffineForm SolutionState::reduce(const AffineForm& form) const {
  AffineForm out(form.constant());
  for (const auto& t : form.terms()) {
    if (zeros.contains(t.id)) continue;
    auto it = pivots.find(t.id);
    if (it == pivots.end())
      out.add_term(t.id, t.coef);
    else
      out.add_scaled(it->second, t.coef);
  }
  return out;
}

AffineForm prune_zeros(const AffineForm& form, const ZeroRegistry& reg) {
  AffineForm out = form;
  prune_zeros_in_place(out, reg);
  return out;
}

std::size_t prune_zeros_in_place(AffineForm& form, const ZeroRegistry& reg) {
  if (reg.empty()) return 0;
  return form.erase_if([&](UnknownId id) { return reg.contains(id); });
}

FindZerosResult find_zeros(const LinearSystem& system, ZeroRegistry reg) {
  FindZerosResult result;
  std::vector<AffineForm> live;
  live.reserve(system.size());
  for (const auto& e : system.equations()) live.push_back(e.lhs);

  while (true) {
    std::size_t found = 0;
    std::vector<AffineForm> next;
    next.reserve(live.size());
    // Prune with the registry of the previous round, then harvest; the
    // harvested unknowns take effect at the next round boundary.
    std::vector<UnknownId> harvest;
    for (auto& f : live) {
      prune_zeros_in_place(f, reg);
      if (f.is_constant()) {
        if (!is_zero(f.constant())) throw Inconsistent(f.to_string() + " = 0");
        continue;
      }
      if (f.term_count() == 1 && is_zero(f.constant())) {
        harvest.push_back(f.terms().front().id);
        continue;
      }
      next.push_back(std::move(f));
    }
    for (UnknownId id : harvest)
      if (reg.insert(id)) ++found;
    result.new_per_round.push_back(found);
    live = std::move(next);
    if (found == 0) break;
  }

  result.remaining.add_unknowns(system.universe());
  for (auto& f : live) result.remaining.add_equation(std::move(f));
  result.registry = std::move(reg);
  return result;
}

LinearSystem length_sort(const LinearSystem& system) {
  const auto& eqs = system.equations();
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const std::size_t len = eqs[i].lhs.term_count();
    if (len >= buckets.size()) buckets.resize(len + 1);
    buckets[len].push_back(i);
  }
  LinearSystem out;
  out.add_unknowns(system.universe());
  out.equations().reserve(eqs.size());
  for (const auto& bucket : buckets)
    for (std::size_t i : bucket) out.equations().push_back(eqs[i]);
  return out;
}

StreamSolver::StreamSolver(SolutionState state) : state_(std::move(state)) {
  for (const auto& [pivot, rhs] : state_.pivots) index_pivot(pivot, rhs);
}

void StreamSolver::index_pivot(UnknownId pivot, const AffineForm& rhs) {
  for (const auto& t : rhs.terms()) occurrences_[t.id].insert(pivot);
}

void StreamSolver::push(const AffineForm& equation) {
  AffineForm f = state_.reduce(equation);
  if (f.is_constant()) {
    if (!is_zero(f.constant())) throw Inconsistent(equation.to_string() + " = 0");
    ++state_.identities;
    return;
  }

  // Cheapest coefficient by |num|*|den| (so +-1 wins), ties to the smallest id.
  const Term* best = nullptr;
  Integer best_cost;
  for (const auto& t : f.terms()) {
    Integer cost = abs(t.coef.get_num()) * t.coef.get_den();
    if (!best || cost < best_cost) {
      best = &t;
      best_cost = std::move(cost);
    }
  }
  const UnknownId pivot = best->id;
  const Rational c = f.remove(pivot);
  f.scale(Rational(-1) / c);

  if (auto occ = occurrences_.find(pivot); occ != occurrences_.end()) {
    const auto users = std::move(occ->second);
    occurrences_.erase(occ);
    for (UnknownId other : users) {
      auto& rhs = state_.pivots.at(other);
      const Rational k = rhs.remove(pivot);
      if (is_zero(k)) continue;
      rhs.add_scaled(f, k);
      index_pivot(other, f);
    }
  }

  state_.free.erase(pivot);
  for (const auto& t : f.terms()) state_.free.insert(t.id);
  index_pivot(pivot, f);
  state_.pivots.insert_or_assign(pivot, std::move(f));
}

SolutionState stream_solve(std::span<const Equation> equations, SolutionState state) {
  StreamSolver solver(std::move(state));
  for (const auto& e : equations) solver.push(e.lhs);
  return std::move(solver).take();
}

SolutionState lsss_solve(const LinearSystem& system, ZeroRegistry known_zeros, LsssReport* report) {
  FindZerosResult fz = find_zeros(system, std::move(known_zeros));
  LinearSystem sorted = length_sort(fz.remaining);
  SolutionState state(system.universe(), std::move(fz.registry));
  state = stream_solve(sorted.equations(), std::move(state));
  if (report) {
    report->zero_rounds = fz.new_per_round;
    report->streamed_equations = sorted.size();
    report->identities = state.identities;
  }
  return state;
}

std::vector<Assignment> solution_basis(const SolutionState& state) {
  std::vector<Assignment> basis;
  basis.reserve(state.free.size());
  for (UnknownId f : state.free) {
    Assignment a;
    a[f] = 1;
    const Assignment unit = a;
    for (const auto& [pivot, rhs] : state.pivots) {
      Rational v = evaluate(rhs, unit);
      if (!is_zero(v)) a[pivot] = std::move(v);
    }
    basis.push_back(std::move(a));
  }
  return basis;
}

bool admits(const SolutionState& state, const Assignment& values) {
  auto value = [&](UnknownId id) {
    auto it = values.find(id);
    return it == values.end() ? Rational(0) : it->second;
  };
  for (UnknownId z : state.zeros.in_order())
    if (!is_zero(value(z))) return false;
  for (const auto& [pivot, rhs] : state.pivots)
    if (value(pivot) != evaluate(rhs, values)) return false;
  return true;
}

Assignment to_assignment(std::span<const UnknownId> columns, std::span<const Rational> values) {
  Assignment a;
  for (std::size_t i = 0; i < columns.size() && i < values.size(); ++i)
    if (!is_zero(values[i])) a[columns[i]] = values[i];
  return a;
}

}  // namespace selsolve
