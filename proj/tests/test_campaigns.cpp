#include <cstdlib>

#include "doctest.h"
#include "moduli/campaigns.hpp"

using namespace moduli;
using namespace moduli::campaigns;
using certify::Verdict;

TEST_CASE("single pair-quotient cells certify with the branch generators") {
  std::string gens;
  auto cell = nodal_cell(7, 9, Family::Weierstrass, &gens);
  REQUIRE(cell.has_value());
  CHECK(cell->verdict == Verdict::GeneralType);
  CHECK(cell->epsilon > 0);
  // One step below the certified range the same generators fall short.
  auto below = nodal_cell(7, 8, Family::Weierstrass);
  REQUIRE(below.has_value());
  CHECK(below->verdict != Verdict::GeneralType);
}

TEST_CASE("named cell generators match the catalog rows") {
  auto w = cell_generator(5, 1, "weierstrass");
  CHECK(w.cls.coeff(sym::lambda()) == -2);
  CHECK(w.cls.coeff(sym::psi_total()) == 9);
  auto b = cell_generator(5, 2, "bn-pullback");
  CHECK(b.cls.coeff(sym::lambda()) == 8);
  // 7 is prime, so the pullback slot auto-selects the even-genus row.
  CHECK(cell_generator(6, 2, "bn-pullback").cls.coeff(sym::lambda()) == 94);
  CHECK_THROWS(cell_generator(6, 2, "nonsense"));
  auto s = cell_generator(10, 6, "Z10");
  CHECK(s.cls.coeff(sym::lambda()) == 7);
}

TEST_CASE("partition criterion branches") {
  // Additivity: large genus with every part small.
  FmResult add = fm_bound(30, {3, 3});
  CHECK(add.branch == "additivity");
  CHECK(add.verdict == Verdict::GeneralType);

  // Plain branch at g = 23 with two pairs.
  FmResult plain = fm_bound(23, {2, 2});
  CHECK(plain.verdict == Verdict::GeneralType);
  CHECK(plain.epsilon == Rational(5, 6));

  // Oversized parts are infeasible.
  FmResult bad = fm_bound(10, {11, 2});
  CHECK(bad.verdict == Verdict::Infeasible);
}

TEST_CASE("hyperelliptic residual coordinates are exact in eps") {
  auto coords = hyperelliptic_residual(2, 15);
  REQUIRE_FALSE(coords.empty());
  for (const auto& c : coords) {
    if (c.slope != 0) {
      REQUIRE(c.vanishing_eps.has_value());
      CHECK(c.at_zero + c.slope * *c.vanishing_eps == 0);
    }
  }
  ThresholdReport r = hyperelliptic_threshold(2);
  CHECK(r.effective_at == 14);
  CHECK(r.big_from == 15);
  for (const auto& c : r.coords_at_effective) CHECK(c.at_zero >= 0);
}

TEST_CASE("stabilization thresholds follow the linear pattern") {
  for (int g = 2; g <= 6; ++g) {
    ThresholdReport r = hyperelliptic_threshold(g);
    CHECK(r.effective_at == 4 * g + 6);
    CHECK(r.big_from == 4 * g + 7);
  }
}

TEST_CASE("reference table for the pointed spaces matches the catalog") {
  TableReport t = pointed_reference_table();
  CHECK(t.ok());
  REQUIRE(t.n_min.count(4) == 1);
  CHECK(t.n_min.at(4) == 16);
  CHECK(t.n_min.at(22) == 4);
  CHECK(t.n_min.at(23) == 1);
}

TEST_CASE("difference-variety campaign reproduces the frozen bounds") {
  TableReport t = difvar_campaign();
  CHECK(t.ok());
  CHECK(t.n_min.at(10) == 7);
  CHECK(t.n_min.at(23) == 2);
}

TEST_CASE("worker count respects the environment") {
  CHECK(job_count() >= 1);
  setenv("MODULI_JOBS", "3", 1);
  CHECK(job_count() == 3);
  unsetenv("MODULI_JOBS");
}

TEST_CASE("table reports serialize") {
  TableReport t = pointed_reference_table();
  auto j = t.to_json();
  CHECK(j.contains("cells"));
  std::string csv = t.to_csv();
  CHECK(csv.find("g,n,verdict") != std::string::npos);
}
