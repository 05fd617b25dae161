#include "selsolve/pipeline.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "selsolve/errors.hpp"

namespace selsolve {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// The ansatz plus whatever conditions have been formulated so far. Stored
/// conditions are pruned lazily against the committed registry, which equals
/// formulating them anew from the pruned ansatz.
class SelectiveSession {
 public:
  SelectiveSession(const ODESystem& sys, int degree) : sys_(sys), ansatz_(build_ansatz(degree)) {
    universe_ = ansatz_.unknowns();
    for (std::uint32_t i = 0; i <= 2 * kDefaultK0; ++i) universe_.push_back(UnknownId::a(i));
    if (universe_.size() > desk_scale_limit())
      throw TooLarge(std::to_string(universe_.size()) +
                     " unknowns exceed the desk-scale limit of " +
                     std::to_string(desk_scale_limit()));
  }

  const std::vector<UnknownId>& universe() const { return universe_; }

  /// Prunes the step's condition by `committed`, then selectively splits it
  /// into `target` (which may be `committed` itself). Returns the new zeros.
  std::size_t selective(Step step, const ZeroRegistry& committed, ZeroRegistry& target,
                        std::size_t& live) {
    NCPoly& cond = condition(step, committed);
    prune_ncpoly_in_place(cond, committed);
    live = cond.size();
    return selective_split(cond, target);
  }

  LinearSystem final_system(const ZeroRegistry& reg) {
    LinearSystem sys = complete_split(condition(Step::N, reg), universe_);
    const SymmetryAnsatz pruned = prune_ansatz(ansatz_, reg);
    NCPoly& symu = condition(Step::S, reg);
    sys.append(complete_split(symu));
    sys.append(complete_split(formulate_symcon(sys_, pruned, Generator::V)));
    return sys;
  }

 private:
  NCPoly& condition(Step step, const ZeroRegistry& reg) {
    std::optional<NCPoly>& slot = step == Step::N ? nc1_ : symu_;
    if (!slot) {
      const SymmetryAnsatz pruned = prune_ansatz(ansatz_, reg);
      slot = step == Step::N ? formulate_nc(sys_, pruned, FirstIntegral::I).residual
                             : formulate_symcon(sys_, pruned, Generator::U);
    }
    prune_ncpoly_in_place(*slot, reg);
    return *slot;
  }

  const ODESystem& sys_;
  SymmetryAnsatz ansatz_;
  std::vector<UnknownId> universe_;
  std::optional<NCPoly> nc1_;
  std::optional<NCPoly> symu_;
};

}  // namespace

std::size_t RunReport::selective_zeros() const {
  std::size_t n = 0;
  for (const auto& s : steps)
    if (s.step != Step::F) n += s.new_zeros;
  return n;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "degree=" << degree << "\n";
  out << "strategy=" << strategy << "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    out << "step=" << (i + 1) << " kind=" << static_cast<char>(s.step) << " new_zeros=" << s.new_zeros
        << " live_equations=" << s.live_equations << " seconds=" << s.seconds << "\n";
  }
  out << "selective_zeros=" << selective_zeros() << "\n";
  out << "final_equations=" << final_equations << "\n";
  out << "peak_live_equations=" << peak_live_equations << "\n";
  out << "zeros=" << zeros << " pivots=" << pivots << " free=" << free << "\n";
  return out.str();
}

RunResult run_strategy(const ODESystem& sys, int degree, const Strategy& strategy) {
  SelectiveSession session(sys, degree);
  ZeroRegistry reg;
  RunResult result;
  RunReport& report = result.report;
  report.degree = degree;
  report.strategy = strategy.compact();

  for (Step step : strategy.selective_steps()) {
    const auto start = Clock::now();
    StepReport sr;
    sr.step = step;
    sr.new_zeros = session.selective(step, reg, reg, sr.live_equations);
    sr.seconds = seconds_since(start);
    report.peak_live_equations = std::max(report.peak_live_equations, sr.live_equations);
    report.steps.push_back(sr);
  }

  const auto start = Clock::now();
  const std::size_t zeros_before = reg.size();
  const LinearSystem final_sys = session.final_system(reg);
  result.state = lsss_solve(final_sys, reg);
  StepReport sr;
  sr.step = Step::F;
  sr.live_equations = final_sys.size();
  sr.new_zeros = result.state.zeros.size() - zeros_before;
  sr.seconds = seconds_since(start);
  report.steps.push_back(sr);
  report.final_equations = final_sys.size();
  report.peak_live_equations = std::max(report.peak_live_equations, sr.live_equations);
  report.zeros = result.state.zeros.size();
  report.pivots = result.state.pivots.size();
  report.free = result.state.free.size();
  return result;
}

Strategy default_strategy(const ODESystem& sys, int degree, double threshold) {
  SelectiveSession session(sys, degree);
  ZeroRegistry reg;
  std::vector<Step> steps;
  const std::size_t universe = session.universe().size();

  // Runs the step on a scratch registry and keeps it only if it pays off.
  auto attempt = [&](Step step) {
    ZeroRegistry trial = reg;
    std::size_t live = 0;
    const std::size_t found = session.selective(step, reg, trial, live);
    const double nonzero = static_cast<double>(universe - reg.size());
    if (static_cast<double>(found) <= threshold * nonzero) return false;
    reg = std::move(trial);
    steps.push_back(step);
    return true;
  };

  while (attempt(Step::N)) {
  }
  while (attempt(Step::S))
    while (attempt(Step::N)) {
    }
  steps.push_back(Step::F);
  return Strategy(std::move(steps));
}

}  // namespace selsolve
