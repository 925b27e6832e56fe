#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

// ---------------------------------------------------------------------------
// Space contexts
// ---------------------------------------------------------------------------

enum class SpaceKind {
  Pointed,            // stable curves of genus g with n labeled points
  NodalQuotient,      // 2n labeled points grouped in pairs (i, n+i), modulo (Z_2)^n x S_n
  PartitionQuotient,  // n points modulo S_{n_1} x ... x S_{n_m}
  Hyperelliptic,      // stable hyperelliptic curves with n labeled points
};

enum class Level { Stack, Coarse };

struct SpaceContext {
  SpaceKind kind = SpaceKind::Pointed;
  int g = 2;
  int n = 0;                   // NodalQuotient: number of pairs (labels run 1..2n)
  std::vector<int> partition;  // PartitionQuotient only; entries >= 1, sum = n
  Level level = Level::Coarse;

  // Number of marked-point labels carried by curves in this space.
  int label_count() const { return kind == SpaceKind::NodalQuotient ? 2 * n : n; }

  bool operator==(const SpaceContext& o) const {
    return kind == o.kind && g == o.g && n == o.n && partition == o.partition &&
           level == o.level;
  }

  // Throws std::invalid_argument when the parameters violate the context
  // invariants (g >= 2, partition shape, ...).
  void validate() const;

  std::string describe() const;

  static SpaceContext pointed(int g, int n, Level level = Level::Coarse) {
    return SpaceContext{SpaceKind::Pointed, g, n, {}, level};
  }
  static SpaceContext nodal(int g, int pairs, Level level = Level::Coarse) {
    return SpaceContext{SpaceKind::NodalQuotient, g, pairs, {}, level};
  }
  static SpaceContext partitioned(int g, std::vector<int> blocks, Level level = Level::Coarse);
  static SpaceContext hyperelliptic(int g, int n, Level level = Level::Coarse) {
    return SpaceContext{SpaceKind::Hyperelliptic, g, n, {}, level};
  }
};

// ---------------------------------------------------------------------------
// Basis symbols
// ---------------------------------------------------------------------------
//
// The rational Picard group of each space is freely generated by the Hodge
// class, point bundles and boundary classes; group-invariant work uses orbit
// symbols instead of the exponentially large label-set basis.
//
// Conventions baked into canonical form:
//   * d[0,S] with |S| <= 1 is the zero class and is dropped.
//   * d[i,S] is identified with d[g-i, S^c]; the stored representative has
//     i < g-i, and at i = g-i the one whose S contains label 1 (failing that,
//     the lexicographically smaller S).
//   * eta[i,S] on hyperelliptic spaces is identified with eta[g-1-i, S^c]
//     under the same tie-break.
//   * Orbit symbols apply the mirrored rule to their size descriptors.

enum class SymKind {
  Lambda,      // Hodge class
  Psi,         // psi_i, data = {label}
  PsiTotal,    // sum of all psi_i
  Omega,       // omega_i = psi_i - sum_{S ni i} d[0,S]; data = {label}
  DeltaIrr,    // irreducible-node boundary class
  Eta0,        // hyperelliptic non-separating class with untouched marked points
  DeltaIS,     // d[i,S]; data = sorted label list S
  EtaIS,       // eta[i,S] (hyperelliptic, i >= 1); data = sorted label list S
  DeltaOrbit,  // d[i,s] summed over |S| = s; data = {s}
  EtaOrbit,    // eta[i,s] summed over |S| = s; data = {s}
  DeltaPair,   // d[i;a,b]: orbit with a full pairs and b split pairs; data = {a,b}
  DeltaBlock,  // orbit under a partition group; data = per-block cardinalities
};

struct BasisSymbol {
  SymKind kind = SymKind::Lambda;
  int i = 0;               // genus index where applicable
  std::vector<int> data;   // see per-kind documentation above

  auto operator<=>(const BasisSymbol&) const = default;

  std::string name() const;  // deterministic text form, e.g. "d[1;0,2]"
};

namespace sym {
BasisSymbol lambda();
BasisSymbol psi(int label);
BasisSymbol psi_total();
BasisSymbol omega(int label);
BasisSymbol delta_irr();
BasisSymbol eta0();
BasisSymbol delta_is(int i, std::vector<int> labels);
BasisSymbol eta_is(int i, std::vector<int> labels);
BasisSymbol delta_orbit(int i, int s);
BasisSymbol eta_orbit(int i, int s);
BasisSymbol delta_pair(int i, int full_pairs, int split_pairs);
BasisSymbol delta_block(int i, std::vector<int> counts);
}  // namespace sym

// Result of canonicalization: either the zero class or a canonical symbol.
struct Canonical {
  bool zero = false;
  BasisSymbol symbol;
};

// Rewrites `s` into canonical form for `ctx` (identifications and zero rule
// above). Throws std::invalid_argument if the symbol is not well formed for
// the context (bad labels, out-of-range genus index, wrong symbol family).
Canonical canonicalize(const BasisSymbol& s, const SpaceContext& ctx);

// Full generating list for the context in deterministic order: Hodge class
// first, then point classes, then the irreducible-node class, then boundary
// symbols sorted by (i, size descriptors). For Pointed contexts this is the
// label-set basis and is exponential in n; callers must respect
// `full_basis_cap`.
std::vector<BasisSymbol> orbit_basis(const SpaceContext& ctx);

// Label-set bases are only enumerated up to this many points (the basis has
// ~2^n * g elements); orbit bases carry all large computations.
inline constexpr int full_basis_cap = 16;

}  // namespace moduli
