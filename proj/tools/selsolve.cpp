// Command-line driver: generate, solve, analyse and verify selection systems.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "selsolve/errors.hpp"
#include "selsolve/io.hpp"
#include "selsolve/lsss.hpp"
#include "selsolve/nullspace_oracle.hpp"
#include "selsolve/pipeline.hpp"
#include "selsolve/symmetry.hpp"

namespace {

using namespace selsolve;

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

void emit_system(const LinearSystem& system, const std::string& out) {
  if (out.empty()) {
    write_system(system, std::cout);
  } else {
    write_system(system, std::filesystem::path(out));
    std::cerr << "wrote " << out << " and " << name_map_path(out).string() << '\n';
  }
}

void emit_solution(const SolutionState& state, const std::string& out) {
  if (out.empty())
    write_solution(state, std::cout);
  else
    write_solution(state, std::filesystem::path(out));
}

std::string summary(const SolutionState& s) {
  std::ostringstream o;
  o << "zeros=" << s.zeros.size() << " pivots=" << s.pivots.size() << " free=" << s.free.size();
  return o.str();
}

int cmd_gen(int degree, bool with_nc, const std::string& out) {
  const ODESystem sys = ODESystem::kontsevich();
  const SymmetryAnsatz ans = build_ansatz(degree);
  std::vector<UnknownId> universe = ans.unknowns();
  LinearSystem system;
  if (with_nc) {
    const NecessaryCondition nc = formulate_nc(sys, ans, FirstIntegral::I);
    universe.insert(universe.end(), nc.aux.begin(), nc.aux.end());
    system = complete_split(nc.residual, universe);
  } else {
    system.add_unknowns(universe);
  }
  system.append(complete_split(formulate_symcon(sys, ans, Generator::U)));
  system.append(complete_split(formulate_symcon(sys, ans, Generator::V)));
  emit_system(system, out);
  return 0;
}

int cmd_solve(const std::string& file, bool oracle, const std::string& out) {
  const LinearSystem system = read_system(std::filesystem::path(file));
  SolutionState state;
  try {
    state = lsss_solve(system);
  } catch (const Inconsistent& e) {
    std::cerr << "inconsistent: " << e.what() << '\n';
    return kExitError;
  }
  int rc = 0;
  std::cerr << "equations=" << system.size() << " unknowns=" << system.universe().size() << ' '
            << summary(state) << '\n';
  if (oracle) {
    if (system.universe().size() > kOracleMaxUnknowns) {
      std::cerr << "oracle: skipped, " << system.universe().size() << " unknowns exceed "
                << kOracleMaxUnknowns << '\n';
    } else {
      const NullspaceResult ns = dense_nullspace_oracle(system);
      bool agree = ns.nullity() == state.free.size();
      for (const auto& v : ns.basis) agree = agree && admits(state, to_assignment(ns.columns, v));
      std::cerr << "oracle: rank=" << ns.rank << " nullity=" << ns.nullity()
                << (agree ? " [AGREE]" : " [DISAGREE]") << '\n';
      if (!agree) rc = kExitMismatch;
    }
  }
  emit_solution(state, out);
  return rc;
}

int cmd_stats(int degree) {
  const SystemStats s = system_stats(ODESystem::kontsevich(), degree);
  std::cout << "k=" << s.k << " e1=" << s.e1 << " t1=" << s.t1 << " e2=" << s.e2 << " t2=" << s.t2
            << " p=" << s.p;
  const auto ref = reference_stats(degree);
  if (!ref) {
    std::cout << " [NO REFERENCE]\n";
    return 0;
  }
  if (*ref == s) {
    std::cout << " [MATCH]\n";
    return 0;
  }
  std::cout << " [MISMATCH";
  auto diff = [&](const char* name, std::size_t got, std::size_t want) {
    if (got != want) std::cout << ' ' << name << ": expected " << want;
  };
  diff("k", s.k, ref->k);
  diff("e1", s.e1, ref->e1);
  diff("t1", s.t1, ref->t1);
  diff("e2", s.e2, ref->e2);
  diff("t2", s.t2, ref->t2);
  diff("p", s.p, ref->p);
  std::cout << "] (e counts are distinct words per condition; t counts are unknown occurrences)\n";
  return kExitMismatch;
}

int cmd_pipeline(int degree, const std::string& strategy_text, double threshold,
                 const std::string& out) {
  const ODESystem sys = ODESystem::kontsevich();
  const Strategy strategy = strategy_text.empty() ? default_strategy(sys, degree, threshold)
                                                  : Strategy::parse(strategy_text);
  const RunResult run = run_strategy(sys, degree, strategy);
  std::cout << run.report.to_text();
  if (!out.empty()) write_solution(run.state, std::filesystem::path(out));
  return 0;
}

int cmd_rank(const std::string& file) {
  const LinearSystem system = read_system(std::filesystem::path(file));
  const NullspaceResult ns = dense_nullspace_oracle(system);
  std::cout << "rank=" << ns.rank << " nullity=" << ns.nullity() << '\n';
  return 0;
}

int cmd_verify(int degree, const std::string& solution_file, int dim, int trials,
               std::uint64_t seed) {
  const SolutionState state = read_solution(std::filesystem::path(solution_file));
  const ODESystem sys = ODESystem::kontsevich();
  const SymmetryAnsatz ans = build_ansatz(degree);
  const VerifyResult r = verify_by_matrices(sys, ans, state, dim, trials, seed);
  std::cout << (r.passed ? "PASS" : "FAIL") << " seed=" << seed << " dim=" << dim
            << " trials=" << r.trials_run << ": " << r.detail << '\n';
  return r.passed ? 0 : kExitMismatch;
}

int cmd_integrals(int degree) {
  const ODESystem sys = ODESystem::kontsevich();
  const SolutionState state = find_first_integrals(sys, degree);
  std::cout << "free=" << state.free.size() << '\n';
  for (const NCPoly& p : solution_polynomials(state, general_polynomial(degree)))
    std::cout << "  " << p.to_string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for sparse selection systems and symmetry conditions"};
  app.require_subcommand(1);

  int degree = 0;
  bool with_nc = false;
  bool oracle = false;
  std::string out, file, strategy, solution;
  double threshold = selsolve::kDefaultYieldThreshold;
  int dim = 3, trials = 5;
  std::uint64_t seed = selsolve::kDefaultVerifySeed;

  auto* gen = app.add_subcommand("gen", "emit the split symmetry conditions as a sparse system");
  gen->add_option("--degree", degree, "ansatz degree")->required()->check(CLI::PositiveNumber);
  gen->add_flag("--nc", with_nc, "include the necessary condition for I");
  gen->add_option("--out", out, "output file (a .names sidecar is written next to it)");

  auto* solve = app.add_subcommand("solve", "solve a sparse system file");
  solve->add_option("file", file, "system file")->required();
  solve->add_flag("--oracle", oracle, "cross-check the nullity by dense elimination");
  solve->add_option("--out", out, "solution file (default: stdout)");

  auto* stats = app.add_subcommand("stats", "counts and free parameters for one degree");
  stats->add_option("--degree", degree, "ansatz degree")->required()->check(CLI::PositiveNumber);

  auto* pipeline = app.add_subcommand("pipeline", "staged formulate/extract/solve run");
  pipeline->add_option("--degree", degree, "ansatz degree")->required()->check(CLI::PositiveNumber);
  pipeline->add_option("--strategy", strategy, "step sequence such as N3(SNN)4(SN)4F");
  pipeline->add_option("--threshold", threshold, "yield threshold of the adaptive strategy")
      ->check(CLI::Range(0.0, 1.0));
  pipeline->add_option("--out", out, "solution file");

  auto* rank = app.add_subcommand("rank", "rank and nullity by dense elimination");
  rank->add_option("file", file, "system file")->required();

  auto* verify = app.add_subcommand("verify", "check a solved ansatz with random matrices");
  verify->add_option("--degree", degree, "ansatz degree")->required()->check(CLI::PositiveNumber);
  verify->add_option("--solution", solution, "solution file")->required();
  verify->add_option("--dim", dim, "matrix size")->check(CLI::Range(2, 64));
  verify->add_option("--trials", trials, "number of samples")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");

  auto* integrals = app.add_subcommand("integrals", "first integrals up to a degree");
  integrals->add_option("--degree", degree, "polynomial degree")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(degree, with_nc, out);
    if (*solve) return cmd_solve(file, oracle, out);
    if (*stats) return cmd_stats(degree);
    if (*pipeline) return cmd_pipeline(degree, strategy, threshold, out);
    if (*rank) return cmd_rank(file);
    if (*verify) return cmd_verify(degree, solution, dim, trials, seed);
    if (*integrals) return cmd_integrals(degree);
  } catch (const selsolve::Inconsistent& e) {
    std::cerr << "inconsistent: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
