#include "moduli/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "moduli/maps.hpp"

namespace moduli::catalog {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Canonical boundary symbols of the context, one kind at a time.
std::vector<BasisSymbol> boundary_symbols(const SpaceContext& ctx, SymKind kind) {
  std::vector<BasisSymbol> out;
  for (const BasisSymbol& s : orbit_basis(ctx))
    if (s.kind == kind) out.push_back(s);
  return out;
}

Rational tri(const Rational& x) { return x * (x + 1) / 2; }

}  // namespace

bool GeneratorSpec::covers(const BasisSymbol& s) const {
  if (mode == Mode::Full) return true;
  return std::find(known.begin(), known.end(), s) != known.end();
}

// ---------------------------------------------------------------------------
// Canonical classes
// ---------------------------------------------------------------------------

DivisorClass psi_class(const SpaceContext& ctx) {
  DivisorClass out(ctx);
  switch (ctx.kind) {
    case SpaceKind::Pointed:
    case SpaceKind::Hyperelliptic:
      for (int j = 1; j <= ctx.label_count(); ++j) out.add(sym::psi(j), 1);
      break;
    case SpaceKind::NodalQuotient:
      out.add(sym::psi_total(), 1);
      break;
    case SpaceKind::PartitionQuotient:
      for (int k = 1; k <= (int)ctx.partition.size(); ++k) out.add(sym::psi(k), 1);
      break;
  }
  return out;
}

namespace {

DivisorClass canonical_pointed(const SpaceContext& ctx) {
  DivisorClass out(ctx);
  out.add(sym::lambda(), 13);
  for (int j = 1; j <= ctx.n; ++j) out.add(sym::psi(j), 1);
  out.add(sym::delta_irr(), -2);
  for (const BasisSymbol& s : boundary_symbols(ctx, SymKind::DeltaIS)) out.add(s, -2);
  if (ctx.level == Level::Coarse) {
    require(ctx.g >= 1 && ctx.g + ctx.n >= 4,
            "coarse canonical class needs g >= 1 and g+n >= 4");
    out.add(sym::delta_is(1, {}), -1);
  }
  return out;
}

DivisorClass canonical_nodal(const SpaceContext& ctx) {
  DivisorClass out(ctx);
  out.add(sym::lambda(), 13);
  out.add(sym::psi_total(), 1);
  out.add(sym::delta_irr(), -2);
  for (const BasisSymbol& s : boundary_symbols(ctx, SymKind::DeltaPair)) out.add(s, -2);
  if (ctx.level == Level::Coarse) {
    out.add(sym::delta_pair(1, 0, 0), -1);   // extra automorphism locus
    out.add(sym::delta_pair(0, 1, 0), -1);   // ramification of the quotient map
  }
  return out;
}

DivisorClass canonical_partition(const SpaceContext& ctx) {
  DivisorClass out(ctx);
  out.add(sym::lambda(), 13);
  for (int k = 1; k <= (int)ctx.partition.size(); ++k) out.add(sym::psi(k), 1);
  out.add(sym::delta_irr(), -2);
  for (const BasisSymbol& s : boundary_symbols(ctx, SymKind::DeltaBlock)) out.add(s, -2);
  if (ctx.level == Level::Coarse) {
    std::vector<int> zeros(ctx.partition.size(), 0);
    out.add(sym::delta_block(1, zeros), -1);
    for (size_t k = 0; k < ctx.partition.size(); ++k) {
      if (ctx.partition[k] < 2) continue;
      std::vector<int> counts = zeros;
      counts[k] = 2;  // ramification: a swappable pair inside one block
      out.add(sym::delta_block(0, counts), -1);
    }
  }
  return out;
}

DivisorClass canonical_hyperelliptic(const SpaceContext& ctx) {
  int g = ctx.g, n = ctx.n;
  DivisorClass out(ctx);
  for (int j = 1; j <= n; ++j) out.add(sym::psi(j), 1);
  out.add(sym::eta0(), -(Rational(1, 2) + Rational(1, 2 * g + 1)));
  for (const BasisSymbol& e : boundary_symbols(ctx, SymKind::EtaIS))
    out.add(e, Rational(4 * (e.i + 1) * (g - e.i), 2 * g + 1) - 2);
  for (const BasisSymbol& d : boundary_symbols(ctx, SymKind::DeltaIS)) {
    if (d.i == 0)
      out.add(d, -2);
    else
      out.add(d, Rational((2 * d.i + 1) * (2 * (g - d.i) + 1), 4 * g + 2));
  }
  if (ctx.level == Level::Coarse) {
    require(n == 0 || n >= 2, "coarse canonical class needs n = 0 or n >= 2");
    int top = n == 0 ? g / 2 : g;
    for (int i = 1; i <= top; ++i) out.add(sym::delta_is(i, {}), -1);
  }
  return out;
}

}  // namespace

DivisorClass canonical_class(const SpaceContext& ctx) {
  ctx.validate();
  switch (ctx.kind) {
    case SpaceKind::Pointed: return canonical_pointed(ctx);
    case SpaceKind::NodalQuotient: return canonical_nodal(ctx);
    case SpaceKind::PartitionQuotient: return canonical_partition(ctx);
    case SpaceKind::Hyperelliptic: return canonical_hyperelliptic(ctx);
  }
  throw std::invalid_argument("unknown space kind");
}

// ---------------------------------------------------------------------------
// Unpointed classes and slopes
// ---------------------------------------------------------------------------

DivisorClass brill_noether(int g) {
  require(g >= 3 && !is_prime(g + 1),
          "pencil-of-special-series class needs g+1 composite, got g+1 = " +
              std::to_string(g + 1));
  DivisorClass out(SpaceContext::pointed(g, 0));
  out.add(sym::lambda(), g + 3);
  out.add(sym::delta_irr(), -Rational(g + 1, 6));
  for (int i = 1; i <= g / 2; ++i) out.add(sym::delta_is(i, {}), -i * (g - i));
  return out;
}

GeneratorSpec gieseker_petri(int g) {
  require(g >= 4 && g % 2 == 0, "Petri-type class needs even g, got g = " +
                                    std::to_string(g));
  int d = g / 2 + 1;
  GeneratorSpec spec;
  spec.name = "petri";
  spec.mode = Mode::Reduced;
  spec.cls = DivisorClass(SpaceContext::pointed(g, 0));
  spec.cls.add(sym::lambda(), 6 * d * d + d - 6);
  spec.cls.add(sym::delta_irr(), -d * (d - 1));
  spec.cls.add(sym::delta_is(1, {}), -(2 * d - 3) * (3 * d - 2));
  spec.known = {sym::lambda(), sym::delta_irr(), sym::delta_is(1, {})};
  spec.assumption = "separating boundary coefficients increase with the genus index";
  return spec;
}

SlopeDatum slope_min(int g) {
  require(g >= 2, "slope catalog needs g >= 2");
  std::optional<SlopeDatum> best;
  auto offer = [&](Rational s, const char* src) {
    if (!best || s < best->slope) best = SlopeDatum{g, s, src};
  };
  if (!is_prime(g + 1)) offer(Rational(6) + Rational(12, g + 1), "brill-noether");
  if (g % 2 == 0)
    offer(Rational(6) + Rational(14 * g + 4, g * g + 2 * g), "gieseker-petri");
  static const std::map<int, Rational> specials{
      {10, Rational(7)},
      {16, Rational(6) + Rational(41, 61)},
      {21, Rational(6) + Rational(197, 377)}};
  if (auto it = specials.find(g); it != specials.end()) offer(it->second, "special");
  require(best.has_value(), "no cataloged slope at g = " + std::to_string(g));
  return *best;
}

GeneratorSpec slope_class(int g) {
  SlopeDatum d = slope_min(g);
  GeneratorSpec spec;
  spec.name = "slope-" + d.source;
  spec.mode = Mode::Reduced;
  spec.cls = DivisorClass(SpaceContext::pointed(g, 0));
  spec.cls.add(sym::lambda(), d.slope);
  spec.cls.add(sym::delta_irr(), -1);
  spec.known = {sym::lambda(), sym::delta_irr()};
  spec.assumption = "boundary coefficients are at most -1 (slope normalization)";
  return spec;
}

// ---------------------------------------------------------------------------
// Pointed classes
// ---------------------------------------------------------------------------

DivisorClass logan_full(int g) {
  SpaceContext ctx = SpaceContext::pointed(g, g);
  DivisorClass out(ctx);
  out.add(sym::lambda(), -1);
  for (int j = 1; j <= g; ++j) out.add(sym::psi(j), 1);
  for (const BasisSymbol& s : boundary_symbols(ctx, SymKind::DeltaIS)) {
    Rational d = Rational((int)s.data.size()) - s.i;
    out.add(s, -tri(abs(d)));
  }
  return out;
}

GeneratorSpec logan(int g, const std::vector<int>& weights) {
  int n = (int)weights.size();
  int total = 0;
  for (int a : weights) {
    require(a >= 1, "weights must be positive");
    total += a;
  }
  require(total == g, "weights must sum to g");
  bool ones = std::all_of(weights.begin(), weights.end(), [](int a) { return a == 1; });
  GeneratorSpec spec;
  spec.name = "pencil";
  if (ones) {
    spec.mode = Mode::Full;
    spec.cls = logan_full(g);
    return spec;
  }
  spec.mode = Mode::Reduced;
  SpaceContext ctx = SpaceContext::pointed(g, n);
  spec.cls = DivisorClass(ctx);
  spec.cls.add(sym::lambda(), -1);
  spec.known.push_back(sym::lambda());
  spec.known.push_back(sym::delta_irr());
  for (int j = 1; j <= n; ++j) {
    spec.cls.add(sym::omega(j), tri(weights[j - 1]));
    spec.known.push_back(sym::omega(j));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      BasisSymbol s = sym::delta_is(0, {i, j});
      spec.cls.add(s, -Rational(weights[i - 1]) * weights[j - 1]);
      spec.known.push_back(canonicalize(s, ctx).symbol);
    }
  spec.assumption = "larger boundary strata carry more negative coefficients";
  return spec;
}

DivisorClass weierstrass_bruteforce(int g, int n) {
  require(n >= g, "brute-force symmetrized class needs n >= g");
  DivisorClass base = maps::omega_to_psi(logan_full(g));
  DivisorClass out(SpaceContext::pointed(g, n));
  std::vector<int> kept(g);
  for (int j = 0; j < g; ++j) kept[j] = j + 1;
  for (;;) {
    out += maps::multi_forgetful_pullback(base, kept, n);
    int j = g - 1;
    while (j >= 0 && kept[j] == n - (g - 1 - j)) --j;
    if (j < 0) break;
    ++kept[j];
    for (int t = j + 1; t < g; ++t) kept[t] = kept[t - 1] + 1;
  }
  return out;
}

WeierstrassCoeffs weierstrass_coeffs(int g, int N) {
  require(g >= 2 && N >= 1, "bad parameters");
  if (N >= g) {
    return {binomial(N, g), binomial(N - 1, g - 1),
            2 * binomial(N - 1, g - 1) + binomial(N - 2, g - 2)};
  }
  int k = g / N, r = g % N;
  Rational c = (binomial(N - 1, r - 1) * (k + 1) * (k + 2) +
                binomial(N - 1, r) * k * (k + 1)) /
               2;
  Rational b2 = 2 * c + binomial(N - 2, r - 2) * (k + 1) * (k + 1) +
                2 * binomial(N - 2, r - 1) * k * (k + 1) +
                binomial(N - 2, r) * k * k;
  return {binomial(N, r), c, b2};
}

Rational w_a(int g, int n) {
  if (n > g) return Rational(n, g);
  int k = g / n, r = g % n;
  return Rational(2 * n, (k + 1) * (g + r));
}

Rational w_b(int g, int n) {
  require(n >= 2, "size-2 coefficient needs n >= 2");
  if (n > g) return Rational(2) + Rational(g - 1, n - 1);
  int k = g / n, r = g % n;
  Rational num = Rational(r) * (r - 1) * (k + 1) * (k + 1) +
                 Rational(2) * r * (n - r) * k * (k + 1) +
                 Rational(n - r) * (n - r - 1) * k * k;
  Rational den = Rational(r) * (k + 1) * (k + 2) + Rational(n - r) * k * (k + 1);
  return Rational(2) + Rational(2, n - 1) * num / den;
}

// ---------------------------------------------------------------------------
// Pair-quotient generators
// ---------------------------------------------------------------------------

namespace {

// The five reduced coordinates of the pair quotients (four when a single
// pair leaves no room for a two-split-point stratum).
std::vector<BasisSymbol> reduced_coords(int pairs) {
  std::vector<BasisSymbol> out{sym::lambda(), sym::psi_total(), sym::delta_irr(),
                               sym::delta_pair(0, 1, 0)};
  if (pairs >= 2) out.push_back(sym::delta_pair(0, 0, 2));
  return out;
}

GeneratorSpec reduced_row(std::string name, int g, int pairs, Rational lam,
                          Rational psi, Rational dirr, Rational d010,
                          Rational d002, std::string assumption) {
  GeneratorSpec spec;
  spec.name = std::move(name);
  spec.mode = Mode::Reduced;
  spec.cls = DivisorClass(SpaceContext::nodal(g, pairs));
  spec.cls.add(sym::lambda(), lam);
  spec.cls.add(sym::psi_total(), psi);
  spec.cls.add(sym::delta_irr(), dirr);
  spec.cls.add(sym::delta_pair(0, 1, 0), d010);
  if (pairs >= 2) spec.cls.add(sym::delta_pair(0, 0, 2), d002);
  spec.known = reduced_coords(pairs);
  spec.assumption = std::move(assumption);
  return spec;
}

}  // namespace

GeneratorSpec bn_pullback(int g, int pairs) {
  DivisorClass bn = brill_noether(g);  // validates g+1 composite
  SpaceContext ctx = SpaceContext::nodal(g, pairs);
  GeneratorSpec spec;
  spec.name = "bn-pullback";
  spec.mode = Mode::Full;
  spec.cls = DivisorClass(ctx);
  spec.cls.add(sym::lambda(), bn.coeff(sym::lambda()));
  spec.cls.add(sym::delta_irr(), bn.coeff(sym::delta_irr()));
  for (const BasisSymbol& s : boundary_symbols(ctx, SymKind::DeltaPair))
    if (s.i >= 1) spec.cls.add(s, -s.i * (g - s.i));
  return spec;
}

GeneratorSpec bn_glue(int g, int pairs) {
  GeneratorSpec spec;
  spec.name = "bn-glue";
  spec.mode = Mode::Full;
  spec.cls = maps::glue_pullback(brill_noether(g + pairs), g, pairs);
  return spec;
}

GeneratorSpec gp_pullback(int g, int pairs) {
  GeneratorSpec gp = gieseker_petri(g);
  GeneratorSpec spec = reduced_row(
      "petri-pullback", g, pairs, gp.cls.coeff(sym::lambda()), 0,
      gp.cls.coeff(sym::delta_irr()), 0, 0,
      "separating boundary coefficients increase with the genus index");
  // Every genus-0 orbit vanishes exactly, so extend the known set to them.
  for (const BasisSymbol& s :
       boundary_symbols(SpaceContext::nodal(g, pairs), SymKind::DeltaPair))
    if (s.i == 0) spec.known.push_back(s);
  return spec;
}

GeneratorSpec gp_glue(int g, int pairs) {
  int G = g + pairs;
  require(G % 2 == 0, "glued Petri-type class needs g + pairs even");
  int d = G / 2 + 1;
  Rational b0 = Rational(d) * (d - 1), b1 = Rational(2 * d - 3) * (3 * d - 2);
  GeneratorSpec spec =
      reduced_row("petri-glue", g, pairs, 6 * d * d + d - 6, b0, -b0, -b1, -b0,
                  "separating boundary coefficients increase with the genus index");
  SpaceContext ctx = spec.cls.context();
  // Orbits with a split pair come from the irreducible-node class (known),
  // and d[1;0,0] from the genus-1 boundary class.
  for (const BasisSymbol& s : boundary_symbols(ctx, SymKind::DeltaPair)) {
    if (s.data[1] >= 1 && !(s.i == 0 && s.data[0] == 0 && s.data[1] == 2))
      spec.cls.add(s, -b0);
    if (s.data[1] >= 1 || (s.i == 1 && s.data[0] == 0))
      spec.known.push_back(s);
  }
  spec.cls.add(sym::delta_pair(1, 0, 0), -b1);
  return spec;
}

GeneratorSpec weierstrass_nodal(int g, int pairs) {
  WeierstrassCoeffs w = weierstrass_coeffs(g, 2 * pairs);
  return reduced_row("weierstrass", g, pairs, -w.lambda, w.psi, 0, -w.b02, -w.b02,
                     "larger and higher-genus boundary coefficients dominate the "
                     "size-2 one");
}

GeneratorSpec weierstrass_nodal_full(int g, int pairs) {
  int N = 2 * pairs;
  require(N >= g, "full orbit expansion needs 2*pairs >= g");
  SpaceContext ctx = SpaceContext::nodal(g, pairs);
  GeneratorSpec spec;
  spec.name = "weierstrass";
  spec.mode = Mode::Full;
  spec.cls = DivisorClass(ctx);
  spec.cls.add(sym::lambda(), -binomial(N, g));
  spec.cls.add(sym::psi_total(), binomial(N - 1, g - 1));
  for (const BasisSymbol& s : boundary_symbols(ctx, SymKind::DeltaPair)) {
    int size = 2 * s.data[0] + s.data[1];
    Rational coeff = 0;
    for (int t = 0; t <= std::min(size, g); ++t)
      coeff -= binomial(size, t) * binomial(N - size, g - t) * tri(abs(Rational(t - s.i)));
    spec.cls.add(s, coeff);
  }
  return spec;
}

std::optional<MrcParams> mrc_params(int g, int pairs) {
  int m = g % 2 == 1 ? 2 * pairs : 2 * pairs - 1;
  for (int r = 1; r <= 60; ++r) {
    int t = (2 * r + 1) * (g - 1) - m;
    if (t < 0) continue;
    if (t % 2) continue;
    int k = t / 2;
    if (k <= g - 2) return MrcParams{r, k};
  }
  return std::nullopt;
}

GeneratorSpec mrc_generator(int g, int pairs) {
  auto params = mrc_params(g, pairs);
  require(params.has_value(), "no resolution parameters realize g = " +
                                  std::to_string(g) + ", pairs = " +
                                  std::to_string(pairs));
  auto [r, k] = *params;
  Rational a = (Rational(g - 1) * (g - 2) * (6 * r * r + 6 * r + 1) +
                Rational(k) * (24 * r + 10 * k + 10 - 10 * g - 12 * r * g)) /
               (g - 2);
  Rational c = Rational(r) * g + g - k - r - 1;
  Rational birr = (Rational(r) * (r + 1) / 2 * (g - 1) * (g - 2) +
                   Rational(k) * (k + 1 + 2 * r - r * g - g)) /
                  (g - 2);
  Rational b02 = Rational(3) * (g - 1) + 2 * (Rational(r) * g - r - k);
  std::string assumption =
      "boundary coefficients on larger and higher-genus strata dominate the "
      "size-2 one";
  if (g % 2 == 1)
    return reduced_row("minres", g, pairs, -a, c, birr, -b02, -b02, assumption);
  int n2 = 2 * pairs;
  Rational vl = n2 * a, vp = (n2 - 1) * c, virr = n2 * birr;
  Rational v02 = 2 * c + (n2 - 2) * b02;
  return reduced_row("minres", g, pairs, -vl, vp, virr, -v02, -v02, assumption);
}

// ---------------------------------------------------------------------------
// Anti-ramification blocks
// ---------------------------------------------------------------------------

namespace {

GeneratorSpec pointed_block(std::string name, int g, int n, Rational lam,
                            Rational birr, Rational b02) {
  GeneratorSpec spec;
  spec.name = std::move(name);
  spec.mode = Mode::Reduced;
  SpaceContext ctx = SpaceContext::pointed(g, n);
  spec.cls = DivisorClass(ctx);
  spec.cls.add(sym::lambda(), lam);
  for (int j = 1; j <= n; ++j) spec.cls.add(sym::psi(j), 1);
  spec.cls.add(sym::delta_irr(), -birr);
  spec.known = {sym::lambda(), sym::delta_irr()};
  for (int j = 1; j <= n; ++j) spec.known.push_back(sym::psi(j));
  if (n >= 2) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        BasisSymbol s = sym::delta_is(0, {i, j});
        spec.cls.add(s, -b02);
        spec.known.push_back(s);
      }
  }
  spec.assumption = "all other boundary coefficients are at most -2";
  return spec;
}

}  // namespace

GeneratorSpec antiram_T(int g) {
  require(g >= 5, "anti-ramification class needs g >= 5");
  return pointed_block("antiram", g, g - 1, -Rational(g - 7, g - 2),
                       Rational(1, 2 * g - 4), Rational(3) + Rational(1, 2 * g - 4));
}

GeneratorSpec fgm_F(int g, int m) {
  int n = g - 2 * m;
  require(m >= 1 && 2 * m <= g && n >= 1, "block parameters out of range");
  Rational a = Rational(n, n - 1) * (Rational(10 * m, g - 2) + Rational(1 - g, g - m));
  Rational b02 = Rational(3) + Rational((g - n) * (n + 1), (g + n) * (n - 1));
  Rational birr = Rational(n * m, (g - 2) * (n - 1));
  return pointed_block("block-even", g, n, a, birr, b02);
}

GeneratorSpec fgm_Ftilde(int g, int m) {
  int n = g - 2 * m + 1;
  require(m >= 1 && 2 * m <= g && n >= 3, "block parameters out of range");
  Rational a = Rational(n, n - 2) * (Rational(10 * m, g - 2) + Rational(1 - g, g - m));
  Rational b02 = Rational(3) + Rational(g - n - 1, g + n - 1);
  Rational birr = Rational(n * m, (g - 2) * (n - 2));
  return pointed_block("block-odd", g, n, a, birr, b02);
}

std::optional<BlockData> l_block(int g, int nk) {
  if (g % 2 != 0) return std::nullopt;
  if ((g - nk) % 2 == 0) {
    int m = (g - nk) / 2;
    if (m < 1 || g - 2 * m < 3 || nk < 2) return std::nullopt;
    return BlockData{
        Rational(nk, nk - 1) * (Rational(10 * m, g - 2) + Rational(1 - g, g - m)),
        Rational(3) + Rational((g - nk) * (nk + 1), (g + nk) * (nk - 1)),
        Rational(nk * m, (g - 2) * (nk - 1))};
  }
  int m = (g - nk + 1) / 2;
  if (m < 1 || g - 2 * m < 3 || nk < 3) return std::nullopt;
  return BlockData{
      Rational(nk, nk - 2) * (Rational(10 * m, g - 2) + Rational(1 - g, g - m)),
      Rational(3) + Rational(g - nk - 1, g + nk - 1),
      Rational(nk * m, (g - 2) * (nk - 2))};
}

// ---------------------------------------------------------------------------
// Cataloged special rows
// ---------------------------------------------------------------------------

namespace {

struct SpecialRow {
  int g;
  int pairs;  // 0 = any pair count
  Rational lam, psi, dirr, d010, d002;
};

const std::map<std::string, SpecialRow>& special_table() {
  static const std::map<std::string, SpecialRow> table{
      {"Z10", {10, 0, 7, 0, -1, 0, 0}},
      {"Z16", {16, 0, 407, 0, -61, 0, 0}},
      {"Z21", {21, 0, 2459, 0, -377, 0, 0}},
      {"D12", {12, 0, 13245, 0, -1926, 0, 0}},
      {"L22-4", {22, 2, 13, 1, -2, {-10, 3}, {-10, 3}}},
      {"L22-6", {22, 3, 13, {2, 3}, -2, {-28, 15}, {-28, 15}}},
      {"Nfold14", {14, 5, 35, 54, -10, -173, -173}},
      {"Lin18", {18, 5, 2900, 216, -450, -704, -704}},
  };
  return table;
}

}  // namespace

std::vector<std::string> special_names() {
  std::vector<std::string> out;
  for (const auto& [name, row] : special_table()) out.push_back(name);
  return out;
}

GeneratorSpec special_divisor(const std::string& name, int g, int pairs) {
  auto it = special_table().find(name);
  require(it != special_table().end(), "unknown special divisor '" + name + "'");
  const SpecialRow& row = it->second;
  require(row.g == g && (row.pairs == 0 || row.pairs == pairs),
          "special divisor '" + name + "' does not live on this space");
  return reduced_row(name, g, pairs, row.lam, row.psi, row.dirr, row.d010,
                     row.d002,
                     "unprinted boundary coefficients dominate the printed ones");
}

// ---------------------------------------------------------------------------
// CLI listing
// ---------------------------------------------------------------------------

std::vector<CatalogEntry> listing() {
  std::vector<CatalogEntry> out{
      {"canonical", "any", "coarse needs g+n >= 4 (pointed) / n != 1 (hyperelliptic)",
       "full"},
      {"bn", "pointed(g,0)", "g+1 composite", "full"},
      {"petri", "pointed(g,0)", "g even", "reduced"},
      {"bn-pullback", "nodal(g,n)", "g+1 composite", "full"},
      {"bn-glue", "nodal(g,n)", "g+n+1 composite", "full"},
      {"petri-pullback", "nodal(g,n)", "g even", "reduced"},
      {"petri-glue", "nodal(g,n)", "g+n even", "reduced"},
      {"weierstrass", "nodal(g,n)", "always", "reduced (full for 2n >= g)"},
      {"minres", "nodal(g,n)", "(2r+1)(g-1)-2k = 2n or 2n-1, k <= g-2", "reduced"},
      {"pencil", "pointed(g,n)", "weights >= 1 summing to g", "full iff all ones"},
      {"slope", "pointed(g,0)", "g >= 2", "reduced"},
      {"antiram", "pointed(g,g-1)", "g >= 5", "reduced"},
      {"block-even", "pointed(g,g-2m)", "1 <= m <= g/2", "reduced"},
      {"block-odd", "pointed(g,g-2m+1)", "1 <= m <= g/2, n >= 3", "reduced"},
  };
  for (const std::string& name : special_names()) {
    const SpecialRow& row = special_table().at(name);
    out.push_back({name,
                   "nodal(" + std::to_string(row.g) + "," +
                       (row.pairs ? std::to_string(row.pairs) : std::string("n")) + ")",
                   "cataloged", "reduced"});
  }
  return out;
}

}  // namespace moduli::catalog
