#include <gtest/gtest.h>

#include "selsolve/errors.hpp"
#include "selsolve/lsss.hpp"
#include "selsolve/symmetry.hpp"

using namespace selsolve;

TEST(Ansatz, TermCounts) {
  const std::size_t expected[] = {1, 5, 17, 53, 161, 485};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(ansatz_term_count(n), expected[n]);
  const SymmetryAnsatz a = build_ansatz(3);
  EXPECT_EQ(a.unknown_count(), 106u);
  EXPECT_EQ(a.dtau.image_u().size(), 53u);
  EXPECT_EQ(a.q2_unknown(0), UnknownId::c(53));
  EXPECT_EQ(a.unknowns().size(), 106u);
}

TEST(Ansatz, UnknownCountsPerDegree) {
  const std::size_t k[] = {106, 322, 970, 2914, 8746, 26242};
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(build_ansatz(n).unknown_count(), k[n - 3]) << "n=" << n;
}

TEST(Ansatz, PruneDropsZeroTerms) {
  const SymmetryAnsatz a = build_ansatz(1);
  ZeroRegistry reg;
  reg.insert(a.q1_unknown(0));
  reg.insert(a.q2_unknown(4));
  const SymmetryAnsatz p = prune_ansatz(a, reg);
  EXPECT_EQ(p.dtau.image_u().size(), 4u);
  EXPECT_EQ(p.dtau.image_v().size(), 4u);
  EXPECT_TRUE(p.dtau.image_u().coefficient(Word{}).is_zero());
}

TEST(NecessaryCondition, RejectsNonIntegral) {
  const ODESystem sys = ODESystem::kontsevich();
  const SymmetryAnsatz a = build_ansatz(2);
  const NecessaryCondition nc = formulate_nc(sys, a, FirstIntegral::I);
  EXPECT_EQ(nc.aux.size(), 7u);
  EXPECT_EQ(nc.aux.front(), UnknownId::a(0));
  EXPECT_EQ(formulate_nc(sys, a, FirstIntegral::IInverse).aux.back(), UnknownId::b(6));

  ODESystem other{Derivation(NCPoly::monomial(parse_word("v")), NCPoly::monomial(parse_word("u")))};
  EXPECT_THROW(formulate_nc(other, a, FirstIntegral::I), NotFirstIntegral);
}

TEST(NecessaryCondition, SplitCounts) {
  // Reference counts for the residual split, with and without the a_k terms.
  const ODESystem sys = ODESystem::kontsevich();
  const struct {
    int n;
    std::size_t e_all, t_all, e_c, t_c;
  } rows[] = {{3, 147, 199, 142, 192}, {4, 435, 623, 430, 616}, {5, 1299, 1911, 1294, 1904}};
  for (const auto& r : rows) {
    const NecessaryCondition nc = formulate_nc(sys, build_ansatz(r.n), FirstIntegral::I);
    const SplitCounts all = count_split(nc.residual);
    const SplitCounts only_c = count_split(nc.residual, UnknownKind::C);
    EXPECT_EQ(all.equations, r.e_all) << "n=" << r.n;
    EXPECT_EQ(all.terms, r.t_all) << "n=" << r.n;
    EXPECT_EQ(only_c.equations, r.e_c) << "n=" << r.n;
    EXPECT_EQ(only_c.terms, r.t_c) << "n=" << r.n;
    EXPECT_EQ(complete_split(nc.residual).size(), r.e_all);
  }
}

TEST(SelectiveSplit, FirstRoundYield) {
  const ODESystem sys = ODESystem::kontsevich();
  const std::pair<int, std::size_t> rows[] = {{3, 86}, {4, 232}, {5, 669}};
  for (const auto& [n, zeros] : rows) {
    const NecessaryCondition nc = formulate_nc(sys, build_ansatz(n), FirstIntegral::I);
    ZeroRegistry reg;
    EXPECT_EQ(selective_split(nc.residual, reg), zeros) << "n=" << n;
    EXPECT_EQ(reg.size(), zeros);
    // A second pass over the pruned condition can only add zeros.
    EXPECT_GE(reg.size() + selective_split(nc.residual, reg), zeros);
  }
}

TEST(SelectiveSplit, RegistryIsLive) {
  // c0 is registered by the first word; the second word then prunes to 2*c1.
  NCPoly p;
  p.add(parse_word("u"), AffineForm::unknown(UnknownId::c(0)));
  p.add(parse_word("v"), AffineForm::unknown(UnknownId::c(0)) + AffineForm::unknown(UnknownId::c(1), 2));
  ZeroRegistry reg;
  EXPECT_EQ(selective_split(p, reg), 2u);
  EXPECT_TRUE(prune_ncpoly(p, reg).is_zero());
}

TEST(CompleteSplit, CanonicalEquationPerWord) {
  NCPoly p;
  p.add(parse_word("u"), Rational(2) * AffineForm::unknown(UnknownId::c(3)) - Rational(4) * AffineForm::unknown(UnknownId::c(1)));
  p.add(parse_word("v"), AffineForm::unknown(UnknownId::c(2), Rational(1, 3)));
  const std::vector<UnknownId> extra = {UnknownId::c(9)};
  const LinearSystem s = complete_split(p, extra);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.equations()[0].lhs.to_string(), "2*c1 - c3");
  EXPECT_EQ(s.universe().size(), 4u);
}

TEST(FirstIntegrals, Dimensions) {
  const ODESystem sys = ODESystem::kontsevich();
  EXPECT_EQ(find_first_integrals(sys, 3).free.size(), 1u);
  const SolutionState s4 = find_first_integrals(sys, 4);
  EXPECT_EQ(s4.free.size(), 3u);
  const auto basis = solution_polynomials(s4, general_polynomial(4));
  ASSERT_EQ(basis.size(), 3u);
  for (const auto& p : basis) {
    EXPECT_FALSE(p.is_zero());
    EXPECT_TRUE(apply_derivation(sys.dt, p).is_zero());
  }
}

TEST(Stats, SmallDegreesMatchReference) {
  const ODESystem sys = ODESystem::kontsevich();
  for (int n = 3; n <= 5; ++n) {
    const auto ref = reference_stats(n);
    ASSERT_TRUE(ref);
    EXPECT_EQ(system_stats(sys, n), *ref) << "n=" << n;
  }
  EXPECT_FALSE(reference_stats(2));
  EXPECT_FALSE(reference_stats(15));
}
