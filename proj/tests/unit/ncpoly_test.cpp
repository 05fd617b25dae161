#include <gtest/gtest.h>

#include "selsolve/errors.hpp"
#include "selsolve/ncpoly.hpp"
#include "selsolve/symmetry.hpp"

using namespace selsolve;

namespace {

NCPoly mono(const char* w, const Rational& c = 1) { return NCPoly::monomial(parse_word(w), c); }

}  // namespace

TEST(NCPoly, ProductReducesWords) {
  const NCPoly a = mono("u") + mono("v", 2);
  const NCPoly b = mono("u^-1") - mono("v");
  const NCPoly ab = poly_mul(a, b);
  EXPECT_EQ(ab.coefficient(Word{}).constant(), 1);
  EXPECT_EQ(ab.coefficient(parse_word("u*v")).constant(), -1);
  EXPECT_EQ(ab.coefficient(parse_word("v*u^-1")).constant(), 2);
  EXPECT_EQ(ab.coefficient(parse_word("v*v")).constant(), -2);
  EXPECT_EQ(ab.size(), 4u);
}

TEST(NCPoly, CancellingTermsVanish) {
  NCPoly p = mono("u*v") - mono("u*v");
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
}

TEST(NCPoly, SymbolicTimesSymbolicIsRejected) {
  const NCPoly c0 = NCPoly::monomial(parse_word("u"), AffineForm::unknown(UnknownId::c(0)));
  const NCPoly c1 = NCPoly::monomial(parse_word("v"), AffineForm::unknown(UnknownId::c(1)));
  EXPECT_THROW(poly_mul(c0, c1), NonlinearProduct);
  const NCPoly scaled = poly_mul(mono("u", 3), c1);
  EXPECT_EQ(scaled.coefficient(parse_word("u*v")), AffineForm::unknown(UnknownId::c(1), 3));
}

TEST(NCPoly, Powers) {
  const NCPoly i = first_integral(FirstIntegral::I);
  EXPECT_EQ(poly_pow(i, 0), NCPoly::constant(1));
  EXPECT_EQ(poly_pow(i, -1), first_integral(FirstIntegral::IInverse));
  EXPECT_EQ(poly_pow(i, 2), mono("u*v*u^-1*v^-1*u*v*u^-1*v^-1"));
  EXPECT_THROW(poly_pow(mono("u") + mono("v"), -1), NotInvertible);
  EXPECT_THROW(poly_pow(mono("u", 2), -1), NotInvertible);
}

TEST(Derivation, InverseLetterRule) {
  const Derivation dt = ODESystem::kontsevich().dt;
  // d(u^-1) = -u^-1 d(u) u^-1
  const NCPoly expected = mono("v*u^-1", -1) + mono("v^-1*u^-1") + mono("u^-1*v^-1*u^-1");
  EXPECT_EQ(apply_derivation(dt, mono("u^-1")), expected);
  EXPECT_EQ(dt.image(Generator::Uinv), expected);
}

TEST(Derivation, ConstantsAreKilled) {
  const Derivation dt = ODESystem::kontsevich().dt;
  EXPECT_TRUE(apply_derivation(dt, NCPoly::constant(5)).is_zero());
  EXPECT_EQ(apply_derivation(dt, mono("u")), dt.image_u());
}

TEST(Derivation, FirstIntegralsAreConserved) {
  const ODESystem sys = ODESystem::kontsevich();
  EXPECT_TRUE(apply_derivation(sys.dt, first_integral(FirstIntegral::I)).is_zero());
  EXPECT_TRUE(apply_derivation(sys.dt, first_integral(FirstIntegral::IInverse)).is_zero());
  EXPECT_FALSE(apply_derivation(sys.dt, mono("u*v")).is_zero());
}

TEST(Derivation, SymbolicImagesActOnConstantPolynomials) {
  const SymmetryAnsatz ans = build_ansatz(1);
  const NCPoly d = apply_derivation(ans.dtau, mono("u*v"));
  // d(uv) = Q1 v + u Q2, so the coefficient of v comes from c(1) in Q1.
  EXPECT_EQ(d.coefficient(parse_word("v")), AffineForm::unknown(ans.q1_unknown(0)));
  EXPECT_TRUE(d.has_unknowns());
}
