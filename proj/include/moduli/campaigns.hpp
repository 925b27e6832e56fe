#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "moduli/certify.hpp"

namespace moduli::campaigns {

// One certified grid cell of a campaign table.
struct CellRecord {
  int g = 0;
  int n = 0;
  std::string verdict;      // "general-type", "effective", "infeasible", "unresolved"
  std::string generators;   // "+"-joined generator names
  std::string epsilon;      // sup eps as "p/q" when the cell was solved
  bool conditional = false; // certified in reduced mode from a cataloged special row
  std::vector<std::string> assumptions;
};

struct TableReport {
  std::string id;
  std::vector<CellRecord> cells;  // sorted by (g, n)
  std::map<int, int> n_min;       // least n certified general-type, per g
  std::map<int, int> n_max;       // largest such n within the scanned range
  std::map<int, std::pair<int, int>> expected;
  std::vector<std::string> mismatches;  // empty for acceptance
  std::vector<std::string> notes;       // documented exceptions, contiguity gaps

  bool ok() const { return mismatches.empty(); }
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Third-generator family for the pair-quotient campaigns.
enum class Family { Weierstrass, MinimalResolution };

// Solves one pair-quotient cell with the branch-selected standard generators
// on the five reduced coordinates; nullopt when no admissible generator set
// exists (parity blocks the glued class, or no resolution parameters).
std::optional<certify::Certificate> nodal_cell(int g, int n, Family family,
                                               std::string* generators = nullptr);

// Standard-branch table for one family: Weierstrass over g = 7..23
// (expected n_max = 2g-4) or the union family table. Parallelized over g via
// MODULI_JOBS.
TableReport nodal_family_table(Family family);
TableReport nodal_union_table();

// Union table plus the cataloged special-row overlay on its nine cells;
// compared against the final pair-quotient classification over g = 5..23.
TableReport nodal_campaign();

// Partition-quotient positivity criterion.
struct FmResult {
  certify::Verdict verdict = certify::Verdict::Infeasible;
  Rational epsilon;
  std::optional<Rational> f_value;
  std::string branch;  // "additivity", "plain", "blocks", "threshold", "none"
};
FmResult fm_bound(int g, const std::vector<int>& partition);

// Difference-variety table: least n with fm_bound(g, (n,n)) general-type and
// n <= g-2, for g = 10..23; the g = 13 row only requires n_min >= 7.
TableReport difvar_campaign();

// Hyperelliptic stabilization threshold. Every orbit coordinate of the
// residual K - (1-eps) * (branch class) - eps * psi is an exact linear
// function at_zero + slope * eps of eps.
struct ThresholdCoord {
  std::string name;
  Rational at_zero;
  Rational slope;
  std::optional<Rational> vanishing_eps;  // -at_zero/slope when slope != 0
};
struct ThresholdReport {
  int g = 0;
  int effective_at = 0;  // least n > g with every at_zero >= 0
  int big_from = 0;      // least n > g admitting eps > 0 with all coords >= 0
  std::vector<ThresholdCoord> coords_at_effective;
  std::vector<ThresholdCoord> coords_at_big;
  nlohmann::json to_json() const;
};
ThresholdReport hyperelliptic_threshold(int g);

// Exact residual coordinates at one (g, n), n > g.
std::vector<ThresholdCoord> hyperelliptic_residual(int g, int n);

// Cataloged reference bounds for the pointed spaces themselves (g = 4..23);
// not re-derived here, used as preconditions by the quotient campaigns.
TableReport pointed_reference_table();

// Builds one named generator on NodalQuotient(g, n) in reduced coordinates:
// "bn-pullback"/"petri-pullback" (auto-selected by primality of g+1),
// "bn-glue"/"petri-glue" (primality of g+n+1), "weierstrass", "minres", or a
// cataloged special-divisor name.
catalog::GeneratorSpec cell_generator(int g, int n, const std::string& name);

// The reduced coordinates and comparison classes of one pair-quotient cell.
std::vector<BasisSymbol> cell_coords(int pairs);
DivisorClass cell_canonical(int g, int pairs);
DivisorClass cell_psi(int g, int pairs);

// Worker count: MODULI_JOBS when set and positive, else hardware concurrency.
int job_count();

}  // namespace moduli::campaigns
