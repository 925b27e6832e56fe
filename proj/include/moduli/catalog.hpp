#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moduli/divisor.hpp"

namespace moduli::catalog {

// Full: every coefficient of `cls` is exact (absent symbols are genuinely 0).
// Reduced: only the coordinates in `known` are exact; the remaining boundary
// coefficients are constrained by the recorded dominance assumption and the
// solver must not touch them.
enum class Mode { Full, Reduced };

struct GeneratorSpec {
  std::string name;
  Mode mode = Mode::Full;
  DivisorClass cls;
  std::vector<BasisSymbol> known;  // Reduced only; ignored for Full
  std::string assumption;          // Reduced only

  bool covers(const BasisSymbol& canonical_symbol) const;
};

// ---------------------------------------------------------------------------
// Canonical classes
// ---------------------------------------------------------------------------

// Canonical class of the space, expanded over its basis (or orbit basis for
// quotient contexts, where the class returned is the pullback of K to the
// cover). Coarse-level formulas require g >= 1 and g+n >= 4 (pointed spaces)
// resp. n >= 2 (pointed hyperelliptic spaces).
DivisorClass canonical_class(const SpaceContext& ctx);

// The big-and-nef comparison class used in all certifications: sum of the
// point classes (psi on orbit contexts).
DivisorClass psi_class(const SpaceContext& ctx);

// ---------------------------------------------------------------------------
// Effective classes without marked points
// ---------------------------------------------------------------------------

// (g+3) lambda - ((g+1)/6) d_irr - sum i(g-i) d[i,{}]; requires g+1 composite.
DivisorClass brill_noether(int g);

// Reduced: (6d^2+d-6) lambda - d(d-1) d_irr - (2d-3)(3d-2) d[1,{}] with
// d = g/2 + 1; requires g even. Higher separating coefficients are only known
// to dominate the d[1,{}] one.
GeneratorSpec gieseker_petri(int g);

struct SlopeDatum {
  int g = 0;
  Rational slope;
  std::string source;  // "brill-noether", "gieseker-petri" or "special"
};

// Minimal cataloged slope at genus g (g >= 2): 6 + 12/(g+1) when g+1 is
// composite, 6 + (14g+4)/(g^2+2g) when g is even, and the three cataloged
// special values at g = 10, 16, 21.
SlopeDatum slope_min(int g);

// s(g) lambda - d_irr with the remaining boundary coefficients <= -1 by the
// definition of slope (Reduced).
GeneratorSpec slope_class(int g);

// ---------------------------------------------------------------------------
// Pointed effective classes
// ---------------------------------------------------------------------------

// Pencil-through-weighted-points divisor for weights a_i >= 1, sum a_i = g:
//   -lambda + sum a_i(a_i+1)/2 omega_i - sum_{i<j} a_i a_j d[0,{i,j}] - ...
// Full when every weight is 1 (then every boundary coefficient is
// |s-i|(|s-i|+1)/2 in the psi basis); Reduced otherwise.
GeneratorSpec logan(int g, const std::vector<int>& weights);

// The all-ones case expanded over the psi/label basis (Full).
DivisorClass logan_full(int g);

// Symmetrized Weierstrass divisor on Pointed(g,n) computed literally as the
// sum of the C(n,g) pullbacks of logan_full(g); exponential in n, test-sized
// inputs only.
DivisorClass weierstrass_bruteforce(int g, int n);

// Closed forms for the symmetrized Weierstrass class on a space with N
// labeled points: raw lambda-, psi- and size-2-boundary coefficients, valid
// in both the N >= g and N < g regimes.
struct WeierstrassCoeffs {
  Rational lambda;  // magnitude; the class carries -lambda
  Rational psi;     // per point class
  Rational b02;     // magnitude of each size-2 boundary coefficient
};
WeierstrassCoeffs weierstrass_coeffs(int g, int N);

// Normalized coefficients (psi-coefficient 1): a(g,n) = n/g or
// 2n/((k+1)(g+r)), b(g,n) = 2 + (g-1)/(n-1) or the binomial ratio, g = kn+r.
Rational w_a(int g, int n);
Rational w_b(int g, int n);

// ---------------------------------------------------------------------------
// Generators on the pair quotients NodalQuotient(g, pairs)
// ---------------------------------------------------------------------------

GeneratorSpec bn_pullback(int g, int pairs);         // B: Full orbit class
GeneratorSpec bn_glue(int g, int pairs);             // D: Full orbit class
GeneratorSpec gp_pullback(int g, int pairs);         // E: Reduced
GeneratorSpec gp_glue(int g, int pairs);             // F: Reduced; g+pairs even
GeneratorSpec weierstrass_nodal(int g, int pairs);   // W: Reduced closed forms

// W with every orbit coefficient computed exactly (needs 2*pairs >= g):
// the coefficient of an orbit with representative set S is
//   -sum_t #{T : |T|=g, |T cap S|=t} * |t-i|(|t-i|+1)/2.
GeneratorSpec weierstrass_nodal_full(int g, int pairs);

// Minimal-resolution divisor parameters: r >= 1 minimal with
// (2r+1)(g-1) - 2k = m, 0 <= k <= g-2, where m = 2*pairs (g odd) or
// 2*pairs - 1 (g even).
struct MrcParams {
  int r = 0;
  int k = 0;
};
std::optional<MrcParams> mrc_params(int g, int pairs);

// U (g odd) / V (g even) row on the five reduced coordinates (Reduced).
GeneratorSpec mrc_generator(int g, int pairs);

// ---------------------------------------------------------------------------
// Anti-ramification blocks on Pointed(g, n_k)
// ---------------------------------------------------------------------------

GeneratorSpec antiram_T(int g);             // n = g-1
GeneratorSpec fgm_F(int g, int m);          // n = g-2m, 1 <= m <= g/2
GeneratorSpec fgm_Ftilde(int g, int m);     // n = g-2m+1

// Normalized block data (lambda coefficient a_k, size-2 bound b_k, b_irr)
// used by the partition-quotient criterion; F for even g - n_k, Ftilde for
// odd, admissible only when g is even and the underlying point count g - 2m
// is at least 3 (and n_k >= 3 in the Ftilde case).
struct BlockData {
  Rational a;     // lambda coefficient of the block class
  Rational b02;   // size-2 boundary magnitude (must exceed 3)
  Rational birr;  // d_irr magnitude
};
std::optional<BlockData> l_block(int g, int nk);

// ---------------------------------------------------------------------------
// Cataloged special divisors (reduced five-coordinate rows)
// ---------------------------------------------------------------------------

std::vector<std::string> special_names();

// Returns the printed row of the named special divisor on
// NodalQuotient(g, pairs); throws on unknown names or a context the divisor
// does not live on.
GeneratorSpec special_divisor(const std::string& name, int g, int pairs);

// ---------------------------------------------------------------------------
// CLI listing
// ---------------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::string context;
  std::string validity;
  std::string mode;
};
std::vector<CatalogEntry> listing();

}  // namespace moduli::catalog
