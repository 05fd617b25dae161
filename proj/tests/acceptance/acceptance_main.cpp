// Acceptance run: one [PASS]/[FAIL]/[SKIP] line per criterion.
// Usage: selsolve_acceptance [criterion...]   (default: all)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/properties.hpp"
#include "selsolve/errors.hpp"
#include "selsolve/lsss.hpp"
#include "selsolve/nullspace_oracle.hpp"
#include "selsolve/pipeline.hpp"
#include "selsolve/symmetry.hpp"

using namespace selsolve;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " FAILED(" << what << ")";
    }
  }
};

const ODESystem& kontsevich() {
  static const ODESystem sys = ODESystem::kontsevich();
  return sys;
}

// Full system: necessary condition for I plus both symmetry conditions.
LinearSystem full_system(int n) {
  const SymmetryAnsatz ans = build_ansatz(n);
  LinearSystem s = complete_split(formulate_nc(kontsevich(), ans, FirstIntegral::I).residual);
  s.append(complete_split(formulate_symcon(kontsevich(), ans, Generator::U)));
  s.append(complete_split(formulate_symcon(kontsevich(), ans, Generator::V)));
  return s;
}

bool same_space(const SolutionState& a, const SolutionState& b) {
  if (a.free.size() != b.free.size()) return false;
  for (const auto& v : solution_basis(a))
    if (!admits(b, v)) return false;
  for (const auto& v : solution_basis(b))
    if (!admits(a, v)) return false;
  return true;
}

void unknown_counts(Verdict& v) {
  const std::size_t k[] = {106, 322, 970, 2914, 8746, 26242};
  for (int n = 3; n <= 8; ++n) {
    const auto t0 = Clock::now();
    const SymmetryAnsatz ans = build_ansatz(n);
    const double dt = seconds_since(t0);
    v.detail << " n" << n << ":k=" << ans.unknown_count();
    v.check(ans.unknown_count() == k[n - 3], "k at n=" + std::to_string(n));
    v.check(dt < 1.0, "time at n=" + std::to_string(n));
  }
}

void free_parameters(Verdict& v) {
  const std::size_t p[] = {1, 2, 4, 5, 7, 8};
  for (int n = 3; n <= 8; ++n) {
    const auto t0 = Clock::now();
    const Strategy s = default_strategy(kontsevich(), n);
    const RunResult r = run_strategy(kontsevich(), n, s);
    const double dt = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof buf, " n%d:p=%zu(%s,%.1fs)", n, r.state.free.size(), s.compact().c_str(), dt);
    v.detail << buf;
    v.check(r.state.free.size() == p[n - 3], "p at n=" + std::to_string(n));
    if (n == 8) v.check(dt < 600.0, "n=8 over 10 minutes");
  }
}

void split_counts(Verdict& v) {
  for (int n = 3; n <= 8; ++n) {
    const SystemStats got = system_stats(kontsevich(), n);
    const SystemStats ref = *reference_stats(n);
    v.detail << " n" << n << ":" << got.e1 << "/" << got.t1 << "," << got.e2 << "/" << got.t2;
    v.check(got.k == ref.k && got.e1 == ref.e1 && got.t1 == ref.t1, "e1/t1 at n=" + std::to_string(n));
    v.check(got.e2 == ref.e2 && got.t2 == ref.t2, "e2/t2 at n=" + std::to_string(n));
    v.check(got.p == ref.p, "p at n=" + std::to_string(n));
  }
}

void first_integrals(Verdict& v) {
  v.check(apply_derivation(kontsevich().dt, first_integral(FirstIntegral::I)).is_zero(), "D_t I");
  v.check(apply_derivation(kontsevich().dt, first_integral(FirstIntegral::IInverse)).is_zero(), "D_t I^-1");
  for (const auto& [n, dim] : {std::pair{3, 1u}, std::pair{4, 3u}, std::pair{8, 5u}}) {
    const std::size_t got = find_first_integrals(kontsevich(), n).free.size();
    v.detail << " n" << n << ":dim=" << got;
    v.check(got == dim, "dimension at n=" + std::to_string(n));
  }
}

void oracle_equivalence(Verdict& v) {
  const auto t0 = Clock::now();
  for (int n = 3; n <= 5; ++n) {
    const LinearSystem s = full_system(n);
    const SolutionState state = lsss_solve(s);
    const NullspaceResult oracle = dense_nullspace_oracle(s);
    v.detail << " n" << n << ":free=" << state.free.size() << ",nullity=" << oracle.nullity();
    v.check(state.free.size() == oracle.nullity(), "nullity at n=" + std::to_string(n));
    for (const auto& b : oracle.basis) {
      v.check(admits(state, to_assignment(oracle.columns, b)), "basis vector rejected");
      for (std::size_t j = 0; j < b.size(); ++j)
        if (state.zeros.contains(oracle.columns[j]) && !is_zero(b[j])) v.check(false, "nonzero at registered zero");
    }
  }
  const double dt = seconds_since(t0);
  char buf[32];
  std::snprintf(buf, sizeof buf, " total=%.1fs", dt);
  v.detail << buf;
  v.check(dt < 60.0, "over 60 s");
}

void strategy_invariance(Verdict& v) {
  for (int n = 3; n <= 6; ++n) {
    const SolutionState base = run_strategy(kontsevich(), n, Strategy::parse("F")).state;
    std::vector<Strategy> battery;
    for (const char* text : {"NF", "NNF", "NSF", "SNF"}) battery.push_back(Strategy::parse(text));
    battery.push_back(default_strategy(kontsevich(), n));
    for (const Strategy& s : battery) {
      const SolutionState other = run_strategy(kontsevich(), n, s).state;
      v.check(same_space(base, other), "n=" + std::to_string(n) + " " + s.compact());
    }
    v.detail << " n" << n << ":free=" << base.free.size();
  }
}

void matrix_verification(Verdict& v) {
  for (int n = 3; n <= 6; ++n) {
    const SymmetryAnsatz ans = build_ansatz(n);
    RunResult r = run_strategy(kontsevich(), n, default_strategy(kontsevich(), n));
    const VerifyResult good = verify_by_matrices(kontsevich(), ans, r.state, 3, 5);
    v.check(good.passed && good.trials_run == 5, "n=" + std::to_string(n) + " " + good.detail);
    if (r.state.pivots.empty()) {
      v.check(false, "no pivot to perturb at n=" + std::to_string(n));
      continue;
    }
    r.state.pivots.begin()->second.add_constant(1);
    const VerifyResult bad = verify_by_matrices(kontsevich(), ans, r.state, 3, 5);
    v.check(!bad.passed, "perturbed solution accepted at n=" + std::to_string(n));
    v.detail << " n" << n << ":ok";
  }
}

void property_suites(Verdict& v) {
  using namespace selsolve::testing;
  Rng rng(20240601);
  const std::pair<const char*, std::function<PropertyOutcome()>> suites[] = {
      {"reduction", [&] { return word_reduction_normal_form(rng, 1000); }},
      {"associativity", [&] { return product_associativity(rng, 1000); }},
      {"leibniz", [&] { return leibniz_rule(rng, 500); }},
      {"prune", [&] { return prune_matches_zero_substitution(rng, 500); }},
      {"length_sort", [&] { return length_sort_is_stable_permutation(rng, 500); }},
      {"chunking", [&] { return stream_solve_chunking_invariance(rng, 100); }},
  };
  for (const auto& [name, run] : suites) {
    const PropertyOutcome out = run();
    v.detail << " " << name << "=" << out.cases;
    v.check(out.ok, std::string(name) + ": " + out.message);
  }
}

void peak_size(Verdict& v) {
  for (int n = 6; n <= 8; ++n) {
    const SystemStats st = system_stats(kontsevich(), n);
    const RunReport r = run_strategy(kontsevich(), n, default_strategy(kontsevich(), n)).report;
    v.detail << " n" << n << ":" << r.final_equations << "<" << st.e1 + st.e2;
    v.check(r.final_equations < st.e1 + st.e2, "n=" + std::to_string(n));
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Verdict&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  const std::vector<Criterion> criteria = {
      {1, "unknown counts k", unknown_counts},
      {2, "free parameters p via adaptive pipeline", free_parameters},
      {3, "equation/term counts e1 t1 e2 t2", split_counts},
      {4, "first integrals", first_integrals},
      {5, "oracle equivalence n=3..5", oracle_equivalence},
      {6, "strategy invariance n=3..6", strategy_invariance},
      {7, "matrix verification n=3..6", matrix_verification},
      {8, "property suites", property_suites},
      {9, "peak-size reduction n=6..8", peak_size},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Verdict v;
    const auto t0 = Clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %d %s (%.1fs):%s\n", v.ok ? "PASS" : "FAIL", c.id, c.title, seconds_since(t0),
                v.detail.str().c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
  }
  if (wanted.empty() || wanted.count(9)) {
    std::printf("[SKIP] 9 wall-clock timings of the selective strategies: hardware specific\n");
    std::printf("[SKIP] 9 table rows for degree >= 9: beyond the desk-scale guard\n");
    std::printf("[SKIP] 9 degree-16 count of non-vanishing unknowns: beyond the desk-scale guard\n");
    std::printf("[SKIP] 9 comparison timings against other systems: not reproducible here\n");
  }
  return failures == 0 ? 0 : 1;
}
