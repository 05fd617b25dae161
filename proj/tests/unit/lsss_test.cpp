#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "selsolve/errors.hpp"
#include "selsolve/lsss.hpp"
#include "selsolve/nullspace_oracle.hpp"

using namespace selsolve;

namespace {

UnknownId c(std::uint32_t i) { return UnknownId::c(i); }
AffineForm x(std::uint32_t i) { return AffineForm::unknown(c(i)); }

LinearSystem system_of(std::initializer_list<AffineForm> forms) {
  LinearSystem sys;
  for (const auto& f : forms) sys.add_equation(f);
  return sys;
}

}  // namespace

TEST(FindZeros, Cascade) {
  const auto sys = system_of({x(1), x(1) + Rational(2) * x(2), Rational(3) * x(2) + x(3) - x(4)});
  const FindZerosResult r = find_zeros(sys);
  EXPECT_EQ(r.registry.sorted(), (std::vector<UnknownId>{c(1), c(2)}));
  ASSERT_EQ(r.remaining.size(), 1u);
  EXPECT_EQ(r.remaining.equations()[0].lhs, x(3) - x(4));
  EXPECT_EQ(r.new_per_round, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(r.productive_rounds(), 2u);
}

TEST(FindZeros, NoSingleTermEquation) {
  const auto sys = system_of({x(1) - x(2)});
  const FindZerosResult r = find_zeros(sys);
  EXPECT_TRUE(r.registry.empty());
  EXPECT_EQ(r.remaining.equations(), sys.equations());
  EXPECT_EQ(r.productive_rounds(), 0u);
}

TEST(FindZeros, ExposedConstantIsInconsistent) {
  EXPECT_THROW(find_zeros(system_of({x(1), x(1) + AffineForm(Rational(2))})), Inconsistent);
}

TEST(PruneZeros, DropsRegisteredTerms) {
  ZeroRegistry reg;
  reg.insert(c(2));
  EXPECT_EQ(prune_zeros(x(1) + Rational(2) * x(2) + x(3), reg), x(1) + x(3));
  EXPECT_EQ(prune_zeros(x(2), reg), AffineForm{});
  const AffineForm e = x(4) - x(5);
  EXPECT_EQ(prune_zeros(e, ZeroRegistry{}), e);
  EXPECT_FALSE(reg.insert(c(2)));
}

TEST(LengthSort, AscendingAndStable) {
  const auto sys = system_of({x(1) + x(2) + x(3), x(4), x(5) - x(6), x(7) + x(8)});
  const LinearSystem sorted = length_sort(sys);
  std::vector<std::size_t> ids;
  for (const auto& e : sorted.equations()) ids.push_back(e.id);
  EXPECT_EQ(ids, (std::vector<std::size_t>{1, 2, 3, 0}));
  EXPECT_TRUE(length_sort(LinearSystem{}).empty());
}

TEST(StreamSolve, SingleEquation) {
  const auto sys = system_of({x(3) - x(4)});
  const SolutionState s = stream_solve(sys.equations(), SolutionState(sys.universe()));
  ASSERT_EQ(s.pivots.size(), 1u);
  EXPECT_EQ(s.free, (std::set<UnknownId>{c(4)}));
  EXPECT_EQ(s.pivots.at(c(3)), x(4));
}

TEST(StreamSolve, RedundantEquationBecomesIdentity) {
  const auto sys = system_of({x(1) - x(2), x(2) - x(3), x(1) + x(2) - Rational(2) * x(3)});
  const SolutionState s = stream_solve(sys.equations(), SolutionState(sys.universe()));
  EXPECT_EQ(s.free, (std::set<UnknownId>{c(3)}));
  EXPECT_EQ(s.pivots.at(c(1)), x(3));
  EXPECT_EQ(s.pivots.at(c(2)), x(3));
  EXPECT_EQ(s.identities, 1u);
}

TEST(StreamSolve, ContradictionThrows) {
  const auto sys = system_of({x(1) - AffineForm(Rational(1)), x(1) - AffineForm(Rational(2))});
  EXPECT_THROW(stream_solve(sys.equations(), SolutionState(sys.universe())), Inconsistent);
  EXPECT_THROW(lsss_solve(sys), Inconsistent);
}

TEST(StreamSolve, PivotPrefersUnitCoefficient) {
  const auto sys = system_of({Rational(3) * x(1) + x(2)});
  const SolutionState s = stream_solve(sys.equations(), SolutionState(sys.universe()));
  EXPECT_EQ(s.pivots.at(c(2)), Rational(-3) * x(1));
}

TEST(LsssSolve, MatchesOracleOnRandomSystems) {
  selsolve::testing::Rng rng(2024);
  for (int round = 0; round < 60; ++round) {
    const int n = selsolve::testing::uniform(rng, 1, 40);
    const LinearSystem sys = selsolve::testing::random_selection_system(rng, n, selsolve::testing::uniform(rng, 0, 2 * n));
    LsssReport report;
    const SolutionState s = lsss_solve(sys, {}, &report);
    const NullspaceResult oracle = dense_nullspace_oracle(sys);
    ASSERT_EQ(s.free.size(), oracle.nullity());
    EXPECT_EQ(s.universe(), sys.universe());
    for (const auto& v : oracle.basis) {
      EXPECT_TRUE(admits(s, to_assignment(oracle.columns, v)));
      for (std::size_t j = 0; j < v.size(); ++j)
        if (s.zeros.contains(oracle.columns[j])) EXPECT_EQ(v[j], 0);
    }
    for (const auto& a : solution_basis(s))
      for (const auto& e : sys.equations()) EXPECT_EQ(evaluate(e.lhs, a), 0);
    ASSERT_FALSE(report.zero_rounds.empty());
    EXPECT_EQ(report.zero_rounds.back(), 0u);
  }
}

TEST(LsssSolve, KnownZerosSeedTheRegistry) {
  const auto sys = system_of({x(1) - x(2), x(2) + x(3)});
  ZeroRegistry reg;
  reg.insert(c(3));
  const SolutionState s = lsss_solve(sys, reg);
  EXPECT_EQ(s.zeros.sorted(), (std::vector<UnknownId>{c(1), c(2), c(3)}));
  EXPECT_TRUE(s.free.empty());
}

TEST(Oracle, RankAndNullity) {
  const auto sys = system_of({x(0) + x(1) + x(2), x(0) - x(1), Rational(2) * x(0) + x(2)});
  const NullspaceResult r = dense_nullspace_oracle(sys);
  EXPECT_EQ(r.rank, 2u);
  ASSERT_EQ(r.nullity(), 1u);
  EXPECT_EQ(r.basis[0], (std::vector<Rational>{Rational(-1, 2), Rational(-1, 2), 1}));
}

TEST(Oracle, GuardRejectsLargeUniverse) {
  LinearSystem sys;
  for (std::uint32_t i = 0; i < 11; ++i) sys.add_unknown(c(i));
  EXPECT_THROW(dense_nullspace_oracle(sys, 10), TooLarge);
  EXPECT_EQ(dense_nullspace_oracle(sys, 11).nullity(), 11u);
}
