#include "moduli/maps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace moduli::maps {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void for_each_subset(int nlab, const std::function<void(std::vector<int>)>& f) {
  require(nlab <= full_basis_cap, "label set too large for subset expansion");
  for (unsigned mask = 0; mask < (1u << nlab); ++mask) {
    std::vector<int> labels;
    for (int x = 1; x <= nlab; ++x)
      if (mask & (1u << (x - 1))) labels.push_back(x);
    f(std::move(labels));
  }
}

}  // namespace

DivisorClass forgetful_pullback(const DivisorClass& cls, int which) {
  const SpaceContext& src = cls.context();
  require(src.kind == SpaceKind::Pointed, "forgetful pullback needs a pointed source");
  int n = src.n + 1;
  require(which >= 1 && which <= n, "inserted label out of range");
  DivisorClass out(SpaceContext::pointed(src.g, n, src.level));
  auto shift = [&](int j) { return j < which ? j : j + 1; };
  for (const auto& [s, c] : cls.coefficients()) {
    switch (s.kind) {
      case SymKind::Lambda:
      case SymKind::DeltaIrr:
        out.add(s, c);
        break;
      case SymKind::Omega:
        out.add(sym::omega(shift(s.data[0])), c);
        break;
      case SymKind::Psi: {
        int j = shift(s.data[0]);
        out.add(sym::psi(j), c);
        out.add(sym::delta_is(0, {j, which}), -c);
        break;
      }
      case SymKind::DeltaIS: {
        std::vector<int> S;
        for (int x : s.data) S.push_back(shift(x));
        std::vector<int> Sx = S;
        Sx.push_back(which);
        BasisSymbol keep = sym::delta_is(s.i, std::move(S));
        BasisSymbol gain = sym::delta_is(s.i, std::move(Sx));
        out.add(keep, c);
        // The two images name the same divisor exactly when the source class
        // is its own mirror (no labels, middle genus); the preimage is then a
        // single irreducible divisor and must be counted once.
        Canonical a = canonicalize(keep, out.context());
        Canonical b = canonicalize(gain, out.context());
        if (a.zero || b.zero || a.symbol != b.symbol) out.add(gain, c);
        break;
      }
      default:
        throw std::invalid_argument("forgetful pullback undefined for " + s.name());
    }
  }
  return out;
}

DivisorClass multi_forgetful_pullback(const DivisorClass& cls,
                                      const std::vector<int>& kept, int n) {
  const SpaceContext& src = cls.context();
  require(src.kind == SpaceKind::Pointed, "forgetful pullback needs a pointed source");
  require((int)kept.size() == src.n, "kept set must match the source label count");
  std::vector<int> sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "kept labels must be distinct");
  require(sorted.empty() || (sorted.front() >= 1 && sorted.back() <= n),
          "kept labels must lie in 1..n");
  DivisorClass out = cls;
  std::vector<int> present = sorted;
  for (int x = 1; x <= n; ++x) {
    if (std::binary_search(sorted.begin(), sorted.end(), x)) continue;
    auto it = std::lower_bound(present.begin(), present.end(), x);
    int pos = int(it - present.begin()) + 1;
    out = forgetful_pullback(out, pos);
    present.insert(it, x);
  }
  return out;
}

DivisorClass glue_pullback(const DivisorClass& cls, int g, int pairs) {
  const SpaceContext& src = cls.context();
  require(src.kind == SpaceKind::Pointed && src.n == 0,
          "gluing pullback needs an unpointed source");
  require(src.g == g + pairs, "source genus must be g + pairs");
  SpaceContext tgt = SpaceContext::nodal(g, pairs, src.level);
  DivisorClass out(tgt);
  // Distinct canonical orbits with at least one split pair (for d_irr) and the
  // orbits lying over each separating class d[j,{}].
  auto orbits_with_split = [&]() {
    std::set<BasisSymbol> seen;
    for (int i = 0; i <= g; ++i)
      for (int a = 0; a <= pairs; ++a)
        for (int b = 1; a + b <= pairs; ++b) {
          Canonical c = canonicalize(sym::delta_pair(i, a, b), tgt);
          if (!c.zero) seen.insert(c.symbol);
        }
    return seen;
  };
  auto orbits_over = [&](int j) {
    std::set<BasisSymbol> seen;
    for (int i = std::max(0, j - pairs); i <= std::min(g, j); ++i) {
      Canonical c = canonicalize(sym::delta_pair(i, j - i, 0), tgt);
      if (!c.zero) seen.insert(c.symbol);
    }
    return seen;
  };
  for (const auto& [s, c] : cls.coefficients()) {
    switch (s.kind) {
      case SymKind::Lambda:
        out.add(sym::lambda(), c);
        break;
      case SymKind::DeltaIrr:
        out.add(sym::psi_total(), -c);
        out.add(sym::delta_irr(), c);
        for (const BasisSymbol& orb : orbits_with_split()) out.add(orb, c);
        break;
      case SymKind::DeltaIS: {
        require(s.data.empty(), "gluing pullback undefined for pointed boundary classes");
        for (const BasisSymbol& orb : orbits_over(s.i)) out.add(orb, c);
        break;
      }
      default:
        throw std::invalid_argument("gluing pullback undefined for " + s.name());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetrization
// ---------------------------------------------------------------------------

DivisorClass relabel(const DivisorClass& cls, const std::vector<int>& perm) {
  const SpaceContext& ctx = cls.context();
  require((int)perm.size() == ctx.label_count(), "permutation has wrong length");
  auto img = [&](int j) { return perm.at(j - 1); };
  DivisorClass out(ctx);
  for (const auto& [s, c] : cls.coefficients()) {
    BasisSymbol t = s;
    switch (s.kind) {
      case SymKind::Psi:
      case SymKind::Omega:
        t.data[0] = img(s.data[0]);
        break;
      case SymKind::DeltaIS:
      case SymKind::EtaIS:
        for (int& x : t.data) x = img(x);
        std::sort(t.data.begin(), t.data.end());
        break;
      default:
        break;  // label-free symbols are fixed
    }
    out.add(t, c);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> group_permutations(const GroupDescriptor& group, int nlab) {
  std::vector<std::vector<int>> out;
  switch (group.kind) {
    case GroupKind::FullSymmetric: {
      require(nlab <= 8, "symmetric group enumeration limited to 8 labels");
      std::vector<int> perm(nlab);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        out.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case GroupKind::Partition: {
      int total = std::accumulate(group.partition.begin(), group.partition.end(), 0);
      require(total == nlab, "partition must cover the label set");
      out.push_back(std::vector<int>(nlab));
      std::iota(out.back().begin(), out.back().end(), 1);
      int base = 0;
      for (int size : group.partition) {
        require(size <= 8, "symmetric group enumeration limited to 8 labels");
        std::vector<int> block(size);
        std::iota(block.begin(), block.end(), base + 1);
        std::vector<std::vector<int>> next;
        do {
          for (const auto& p : out) {
            std::vector<int> q = p;
            for (int k = 0; k < size; ++k) q[base + k] = block[k];
            next.push_back(std::move(q));
          }
        } while (std::next_permutation(block.begin(), block.end()));
        out = std::move(next);
        base += size;
      }
      break;
    }
    case GroupKind::NodalPair: {
      require(nlab % 2 == 0, "pair group needs an even label count");
      int pairs = nlab / 2;
      require(pairs <= 6, "pair group enumeration limited to 6 pairs");
      std::vector<int> sigma(pairs);
      std::iota(sigma.begin(), sigma.end(), 1);
      do {
        for (unsigned flips = 0; flips < (1u << pairs); ++flips) {
          std::vector<int> perm(nlab);
          for (int j = 1; j <= pairs; ++j) {
            bool flip = flips & (1u << (j - 1));
            perm[j - 1] = flip ? pairs + sigma[j - 1] : sigma[j - 1];
            perm[pairs + j - 1] = flip ? sigma[j - 1] : pairs + sigma[j - 1];
          }
          out.push_back(std::move(perm));
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      break;
    }
  }
  return out;
}

}  // namespace

DivisorClass symmetrize(const DivisorClass& cls, const GroupDescriptor& group) {
  const SpaceContext& ctx = cls.context();
  require(ctx.kind == SpaceKind::Pointed, "symmetrization acts on pointed classes");
  DivisorClass out(ctx);
  std::set<std::map<BasisSymbol, Rational>> seen;
  for (const auto& perm : group_permutations(group, ctx.label_count())) {
    DivisorClass image = relabel(cls, perm);
    if (seen.insert(image.coefficients()).second) out += image;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Base change and restrictions
// ---------------------------------------------------------------------------

DivisorClass omega_to_psi(const DivisorClass& cls) {
  const SpaceContext& ctx = cls.context();
  DivisorClass out(ctx);
  for (const auto& [s, c] : cls.coefficients()) {
    if (s.kind != SymKind::Omega) {
      out.add(s, c);
      continue;
    }
    int j = s.data[0];
    out.add(sym::psi(j), c);
    for_each_subset(ctx.label_count(), [&](std::vector<int> S) {
      if (S.size() < 2 || !std::binary_search(S.begin(), S.end(), j)) return;
      out.add(sym::delta_is(0, std::move(S)), -c);
    });
  }
  return out;
}

DivisorClass psi_to_omega(const DivisorClass& cls) {
  const SpaceContext& ctx = cls.context();
  DivisorClass out(ctx);
  for (const auto& [s, c] : cls.coefficients()) {
    if (s.kind != SymKind::Psi) {
      out.add(s, c);
      continue;
    }
    int j = s.data[0];
    out.add(sym::omega(j), c);
    for_each_subset(ctx.label_count(), [&](std::vector<int> S) {
      if (S.size() < 2 || !std::binary_search(S.begin(), S.end(), j)) return;
      out.add(sym::delta_is(0, std::move(S)), c);
    });
  }
  return out;
}

DivisorClass hyperelliptic_restrict(const DivisorClass& cls) {
  const SpaceContext& src = cls.context();
  require(src.kind == SpaceKind::Pointed, "restriction needs a pointed source");
  SpaceContext tgt = SpaceContext::hyperelliptic(src.g, src.n, src.level);
  int g = src.g;
  // Canonical representatives of the eta and positive-genus delta classes.
  std::set<BasisSymbol> etas, deltas;
  for_each_subset(src.n, [&](std::vector<int> S) {
    for (int i = 1; i <= g - 2; ++i) {
      Canonical c = canonicalize(sym::eta_is(i, S), tgt);
      if (!c.zero) etas.insert(c.symbol);
    }
    for (int i = 1; i <= g; ++i) {
      Canonical c = canonicalize(sym::delta_is(i, S), tgt);
      if (!c.zero) deltas.insert(c.symbol);
    }
  });
  DivisorClass out(tgt);
  Rational unit(1);
  for (const auto& [s, c] : cls.coefficients()) {
    switch (s.kind) {
      case SymKind::Psi:
      case SymKind::PsiTotal:
      case SymKind::DeltaIS:
        out.add(s, c);
        break;
      case SymKind::DeltaIrr:
        out.add(sym::eta0(), c);
        for (const BasisSymbol& e : etas) out.add(e, 2 * c);
        break;
      case SymKind::Lambda: {
        // (8g+4) lambda = g eta_0 + 2 sum (i+1)(g-i) eta_i + w sum i(g-i) d_i,
        // where the separating-node weight is w = 4 without marked points and
        // w = 1 per canonical class once points are present.
        Rational scale = c / (8 * g + 4);
        int w = src.n == 0 ? 4 : 1;
        out.add(sym::eta0(), g * scale);
        for (const BasisSymbol& e : etas)
          out.add(e, 2 * (e.i + 1) * (g - e.i) * scale);
        for (const BasisSymbol& d : deltas)
          out.add(d, w * d.i * (g - d.i) * scale);
        break;
      }
      default:
        throw std::invalid_argument("restriction undefined for " + s.name());
    }
  }
  return out;
}

DivisorClass rational_quotient_pullback(const DivisorClass& cls, int g) {
  const SpaceContext& src = cls.context();
  require(src.kind == SpaceKind::Pointed && src.g == 0 && src.n == 2 * g + 2,
          "source must carry 2g+2 points on genus 0");
  DivisorClass out(SpaceContext::hyperelliptic(g, 0, src.level));
  for (const auto& [s, c] : cls.coefficients()) {
    require(s.kind == SymKind::DeltaOrbit && s.i == 0,
            "pullback defined only on the boundary orbits d[0,s]");
    int size = s.data[0];
    require(size >= 2 && size <= g + 1, "orbit size out of range");
    if (size % 2 == 0) {
      int i = size / 2 - 1;
      out.add(i == 0 ? sym::eta0() : sym::eta_is(i, {}), c);
    } else {
      int i = (size - 1) / 2;
      out.add(sym::delta_is(i, {}), c / 2);
    }
  }
  return out;
}

}  // namespace moduli::maps
