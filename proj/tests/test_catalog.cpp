#include "doctest.h"
#include "moduli/catalog.hpp"
#include "moduli/maps.hpp"

using namespace moduli;
using namespace moduli::catalog;

TEST_CASE("canonical class of the pointed stack and coarse space") {
  SpaceContext stack = SpaceContext::pointed(3, 2);
  DivisorClass K = canonical_class(stack);
  CHECK(K.coeff(sym::lambda()) == 13);
  CHECK(K.coeff(sym::psi(1)) == 1);
  CHECK(K.coeff(sym::delta_irr()) == -2);
  CHECK(K.coeff(sym::delta_is(1, {2})) == -2);

  SpaceContext coarse = stack;
  coarse.level = Level::Coarse;
  DivisorClass Kc = canonical_class(coarse);
  CHECK(Kc.coeff(sym::delta_is(1, {})) == -3);
  CHECK(Kc.coeff(sym::delta_is(1, {2})) == -2);
}

TEST_CASE("canonical class of the hyperelliptic spaces") {
  SpaceContext ctx = SpaceContext::hyperelliptic(3, 2);
  ctx.level = Level::Coarse;
  DivisorClass K = canonical_class(ctx);
  CHECK(K.coeff(sym::eta0()) == Rational(-9, 14));
  CHECK(K.coeff(sym::psi(1)) == 1);
  // d[0,{1,2}] is identified with d[3,{}], so the -2 marked-point term and
  // the -1 coarse correction on d[3,{}] land on the same coefficient.
  CHECK(K.coeff(sym::delta_is(0, {1, 2})) == -3);
  CHECK(K.coeff(sym::delta_is(3, {})) == -3);
  // delta_1 coefficient (2*1+1)(2*2+1)/(4*3+2) = 15/14; the coarse correction
  // subtracts 1 both at d[1,{}] and at d[2,{}] = d[1,{1,2}].
  CHECK(K.coeff(sym::delta_is(1, {1, 2})) == Rational(1, 14));
  CHECK(K.coeff(sym::delta_is(1, {})) == Rational(1, 14));
}

TEST_CASE("pencil classes") {
  DivisorClass full = logan_full(3);
  CHECK(full.coeff(sym::lambda()) == -1);
  CHECK(full.coeff(sym::psi(2)) == 1);
  CHECK(full.coeff(sym::delta_is(0, {1, 2})) == -3);   // tri(|2-0|) = 3
  CHECK(full.coeff(sym::delta_is(1, {1})) == 0);       // |1-1| -> 0
  CHECK(full.coeff(sym::delta_is(1, {1, 2, 3})) == -3);  // |3-1| -> 3

  GeneratorSpec w = logan(4, {3, 1});
  CHECK(w.mode == Mode::Reduced);
  CHECK(w.cls.coeff(sym::omega(1)) == 6);
  CHECK(w.cls.coeff(sym::omega(2)) == 1);
  CHECK(w.cls.coeff(sym::delta_is(0, {1, 2})) == -3);
}

TEST_CASE("unpointed effective classes") {
  DivisorClass bn = brill_noether(5);
  CHECK(bn.coeff(sym::lambda()) == 8);
  CHECK(bn.coeff(sym::delta_irr()) == -1);
  CHECK(bn.coeff(sym::delta_is(1, {})) == -4);
  CHECK(bn.coeff(sym::delta_is(2, {})) == -6);
  CHECK_THROWS(brill_noether(6));  // 7 is prime

  GeneratorSpec gp = gieseker_petri(6);  // d = 4
  CHECK(gp.cls.coeff(sym::lambda()) == 94);
  CHECK(gp.cls.coeff(sym::delta_irr()) == -12);
  CHECK(gp.cls.coeff(sym::delta_is(1, {})) == -50);

  CHECK(slope_min(10).slope == 7);
  CHECK(slope_min(16).slope == Rational(6) + Rational(41, 61));
  CHECK(slope_min(23).slope == Rational(6) + Rational(1, 2));
  CHECK(slope_min(12).source == "gieseker-petri");
}

TEST_CASE("symmetrized pencil coefficients in both regimes") {
  // Many points: plain binomials.
  WeierstrassCoeffs w = weierstrass_coeffs(4, 8);
  CHECK(w.lambda == 70);
  CHECK(w.psi == 35);
  CHECK(w.b02 == 2 * 35 + 15);
  // Few points: g = kn + r weighted form.
  WeierstrassCoeffs v = weierstrass_coeffs(5, 2);  // k=2, r=1
  CHECK(v.lambda == 2);
  CHECK(v.psi == 9);
  CHECK(v.b02 == 30);
  CHECK(w_a(5, 2) == Rational(2, 9));
  CHECK(w_b(5, 2) == Rational(10, 3));
  CHECK(w_a(4, 8) == 2);
  CHECK(w_b(4, 8) == Rational(2) + Rational(3, 7));
}

TEST_CASE("pair-quotient generator rows") {
  GeneratorSpec b = bn_pullback(5, 2);
  CHECK(b.mode == Mode::Full);
  CHECK(b.cls.coeff(sym::lambda()) == 8);
  CHECK(b.cls.coeff(sym::delta_irr()) == -1);
  CHECK(b.cls.coeff(sym::delta_pair(1, 0, 0)) == -4);
  CHECK(b.cls.coeff(sym::delta_pair(2, 1, 1)) == -6);
  CHECK(b.cls.coeff(sym::delta_pair(0, 1, 0)) == 0);

  GeneratorSpec d = bn_glue(5, 2);  // glued genus 7, 8 composite
  CHECK(d.cls.coeff(sym::lambda()) == 10);
  CHECK(d.cls.coeff(sym::psi_total()) == Rational(4, 3));
  CHECK(d.cls.coeff(sym::delta_irr()) == Rational(-4, 3));
  CHECK(d.cls.coeff(sym::delta_pair(0, 1, 0)) == -6);
  CHECK(d.cls.coeff(sym::delta_pair(0, 0, 2)) == Rational(-4, 3));

  GeneratorSpec w = weierstrass_nodal(5, 1);  // k=2, r=1 closed forms
  CHECK(w.cls.coeff(sym::lambda()) == -2);
  CHECK(w.cls.coeff(sym::psi_total()) == 9);
  CHECK(w.cls.coeff(sym::delta_pair(0, 1, 0)) == -30);
}

TEST_CASE("full orbit expansion of the symmetrized pencil") {
  GeneratorSpec w = weierstrass_nodal_full(4, 3);  // N = 6 labels
  CHECK(w.mode == Mode::Full);
  CHECK(w.cls.coeff(sym::lambda()) == -15);
  CHECK(w.cls.coeff(sym::psi_total()) == 10);
  // Size-2 split orbit: -(2 C(4,3) tri(1) + C(4,2) tri(2)) = -(8 + 18).
  CHECK(w.cls.coeff(sym::delta_pair(0, 0, 2)) == -26);
  CHECK(w.cls.coeff(sym::delta_pair(0, 1, 0)) == -26);
}

TEST_CASE("resolution parameters and cataloged specials") {
  auto p = mrc_params(5, 4);  // g odd: m = 8 = (2r+1)*4 - 2k
  REQUIRE(p.has_value());
  CHECK((2 * p->r + 1) * 4 - 2 * p->k == 8);
  CHECK(special_names().size() == 8);
  GeneratorSpec z = special_divisor("Z10", 10, 6);
  CHECK(z.cls.coeff(sym::lambda()) == 7);
  CHECK(z.cls.coeff(sym::delta_irr()) == -1);
  CHECK_THROWS(special_divisor("Z10", 11, 6));
  CHECK_THROWS(special_divisor("L22-4", 22, 5));
}

TEST_CASE("block classes for the partition criterion") {
  auto bd = l_block(22, 4);  // even difference: m = 9
  REQUIRE(bd.has_value());
  CHECK(bd->b02 == Rational(3) + Rational(18 * 5, 26 * 3));
  CHECK_FALSE(l_block(21, 4).has_value());  // odd genus
  CHECK_FALSE(l_block(22, 2).has_value());  // too few markers left over
}
