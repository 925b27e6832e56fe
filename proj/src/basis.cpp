#include "moduli/basis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace moduli {

// ---------------------------------------------------------------------------
// SpaceContext
// ---------------------------------------------------------------------------

void SpaceContext::validate() const {
  if (g < 0) throw std::invalid_argument("negative genus");
  if (kind == SpaceKind::Hyperelliptic && g < 2)
    throw std::invalid_argument("hyperelliptic spaces need genus at least 2");
  if (n < 0) throw std::invalid_argument("negative number of points");
  if (kind == SpaceKind::PartitionQuotient) {
    if (partition.empty()) throw std::invalid_argument("empty partition");
    int total = 0;
    for (int b : partition) {
      if (b < 1) throw std::invalid_argument("partition blocks must be positive");
      total += b;
    }
    if (total != n) throw std::invalid_argument("partition must sum to n");
  } else if (!partition.empty()) {
    throw std::invalid_argument("partition only valid for partition quotients");
  }
}

std::string SpaceContext::describe() const {
  std::ostringstream os;
  switch (kind) {
    case SpaceKind::Pointed: os << "pointed"; break;
    case SpaceKind::NodalQuotient: os << "nodal"; break;
    case SpaceKind::PartitionQuotient: os << "partition"; break;
    case SpaceKind::Hyperelliptic: os << "hyperelliptic"; break;
  }
  os << "(g=" << g << ",n=" << n;
  if (!partition.empty()) {
    os << ",blocks=";
    for (size_t k = 0; k < partition.size(); ++k) os << (k ? "+" : "") << partition[k];
  }
  os << "," << (level == Level::Stack ? "stack" : "coarse") << ")";
  return os.str();
}

SpaceContext SpaceContext::partitioned(int g, std::vector<int> blocks, Level level) {
  int total = std::accumulate(blocks.begin(), blocks.end(), 0);
  SpaceContext ctx{SpaceKind::PartitionQuotient, g, total, std::move(blocks), level};
  ctx.validate();
  return ctx;
}

// ---------------------------------------------------------------------------
// Symbol constructors and names
// ---------------------------------------------------------------------------

namespace sym {
BasisSymbol lambda() { return {SymKind::Lambda, 0, {}}; }
BasisSymbol psi(int label) { return {SymKind::Psi, 0, {label}}; }
BasisSymbol psi_total() { return {SymKind::PsiTotal, 0, {}}; }
BasisSymbol omega(int label) { return {SymKind::Omega, 0, {label}}; }
BasisSymbol delta_irr() { return {SymKind::DeltaIrr, 0, {}}; }
BasisSymbol eta0() { return {SymKind::Eta0, 0, {}}; }
BasisSymbol delta_is(int i, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  return {SymKind::DeltaIS, i, std::move(labels)};
}
BasisSymbol eta_is(int i, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  return {SymKind::EtaIS, i, std::move(labels)};
}
BasisSymbol delta_orbit(int i, int s) { return {SymKind::DeltaOrbit, i, {s}}; }
BasisSymbol eta_orbit(int i, int s) { return {SymKind::EtaOrbit, i, {s}}; }
BasisSymbol delta_pair(int i, int full_pairs, int split_pairs) {
  return {SymKind::DeltaPair, i, {full_pairs, split_pairs}};
}
BasisSymbol delta_block(int i, std::vector<int> counts) {
  return {SymKind::DeltaBlock, i, std::move(counts)};
}
}  // namespace sym

std::string BasisSymbol::name() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& v) {
    os << "{";
    for (size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << "}";
  };
  switch (kind) {
    case SymKind::Lambda: os << "lambda"; break;
    case SymKind::Psi: os << "psi_" << data.at(0); break;
    case SymKind::PsiTotal: os << "psi"; break;
    case SymKind::Omega: os << "omega_" << data.at(0); break;
    case SymKind::DeltaIrr: os << "d_irr"; break;
    case SymKind::Eta0: os << "eta_0"; break;
    case SymKind::DeltaIS:
      os << "d[" << i << ",";
      list(data);
      os << "]";
      break;
    case SymKind::EtaIS:
      os << "eta[" << i << ",";
      list(data);
      os << "]";
      break;
    case SymKind::DeltaOrbit: os << "d[" << i << ",s=" << data.at(0) << "]"; break;
    case SymKind::EtaOrbit: os << "eta[" << i << ",s=" << data.at(0) << "]"; break;
    case SymKind::DeltaPair:
      os << "d[" << i << ";" << data.at(0) << "," << data.at(1) << "]";
      break;
    case SymKind::DeltaBlock:
      os << "d[" << i << ";";
      list(data);
      os << "]";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Canonicalization
// ---------------------------------------------------------------------------

namespace {

void check_labels(const std::vector<int>& labels, int label_count) {
  int prev = 0;
  for (int x : labels) {
    if (x <= prev || x > label_count)
      throw std::invalid_argument("bad label set for context");
    prev = x;
  }
}

std::vector<int> complement(const std::vector<int>& labels, int label_count) {
  std::vector<int> out;
  out.reserve(label_count - labels.size());
  size_t k = 0;
  for (int x = 1; x <= label_count; ++x) {
    if (k < labels.size() && labels[k] == x) {
      ++k;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool contains_one(const std::vector<int>& labels) {
  return !labels.empty() && labels.front() == 1;
}

// Prefer the side whose label set contains 1; failing that the
// lexicographically smaller set. Returns true when `a` is the representative.
bool set_preferred(const std::vector<int>& a, const std::vector<int>& b) {
  if (contains_one(a)) return true;
  if (contains_one(b)) return false;
  return a <= b;
}

Canonical zero() { return {true, {}}; }

Canonical canonical_delta_is(BasisSymbol s, const SpaceContext& ctx) {
  int nlab = ctx.label_count();
  check_labels(s.data, nlab);
  if (s.i < 0 || s.i > ctx.g) throw std::invalid_argument("genus index out of range");
  if (s.i == 0 && s.data.size() <= 1) return zero();
  int mirror_i = ctx.g - s.i;
  if (s.i > mirror_i ||
      (s.i == mirror_i && !set_preferred(s.data, complement(s.data, nlab)))) {
    s.i = mirror_i;
    s.data = complement(s.data, nlab);
    if (s.i == 0 && s.data.size() <= 1) return zero();
  }
  return {false, std::move(s)};
}

Canonical canonical_eta_is(BasisSymbol s, const SpaceContext& ctx) {
  int nlab = ctx.label_count();
  check_labels(s.data, nlab);
  if (s.i < 1 || s.i > ctx.g - 2)
    throw std::invalid_argument("eta genus index out of range");
  int mirror_i = ctx.g - 1 - s.i;
  if (s.i > mirror_i ||
      (s.i == mirror_i && !set_preferred(s.data, complement(s.data, nlab)))) {
    s.i = mirror_i;
    s.data = complement(s.data, nlab);
  }
  return {false, std::move(s)};
}

Canonical canonical_delta_orbit(BasisSymbol s, const SpaceContext& ctx) {
  int n = ctx.label_count();
  int size = s.data.at(0);
  if (s.i < 0 || s.i > ctx.g || size < 0 || size > n)
    throw std::invalid_argument("orbit symbol out of range");
  if (s.i == 0 && size <= 1) return zero();
  int mi = ctx.g - s.i, ms = n - size;
  if (s.i > mi || (s.i == mi && size > ms)) {
    s.i = mi;
    s.data[0] = ms;
    if (s.i == 0 && s.data[0] <= 1) return zero();
  }
  return {false, std::move(s)};
}

Canonical canonical_eta_orbit(BasisSymbol s, const SpaceContext& ctx) {
  int n = ctx.label_count();
  int size = s.data.at(0);
  if (s.i < 1 || s.i > ctx.g - 2 || size < 0 || size > n)
    throw std::invalid_argument("eta orbit symbol out of range");
  int mi = ctx.g - 1 - s.i, ms = n - size;
  if (s.i > mi || (s.i == mi && size > ms)) {
    s.i = mi;
    s.data[0] = ms;
  }
  return {false, std::move(s)};
}

Canonical canonical_delta_pair(BasisSymbol s, const SpaceContext& ctx) {
  int pairs = ctx.n;
  int a = s.data.at(0), b = s.data.at(1);
  if (s.i < 0 || s.i > ctx.g || a < 0 || b < 0 || a + b > pairs)
    throw std::invalid_argument("pair orbit symbol out of range");
  if (s.i == 0 && 2 * a + b <= 1) return zero();
  int mi = ctx.g - s.i, ma = pairs - a - b;
  if (s.i > mi || (s.i == mi && std::vector<int>{ma, b} < s.data)) {
    s.i = mi;
    s.data = {ma, b};
    if (s.i == 0 && 2 * s.data[0] + s.data[1] <= 1) return zero();
  }
  return {false, std::move(s)};
}

Canonical canonical_delta_block(BasisSymbol s, const SpaceContext& ctx) {
  const auto& blocks = ctx.partition;
  if (s.data.size() != blocks.size())
    throw std::invalid_argument("block count vector has wrong length");
  int size = 0;
  std::vector<int> mirror(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (s.data[k] < 0 || s.data[k] > blocks[k])
      throw std::invalid_argument("block count out of range");
    size += s.data[k];
    mirror[k] = blocks[k] - s.data[k];
  }
  if (s.i < 0 || s.i > ctx.g) throw std::invalid_argument("genus index out of range");
  if (s.i == 0 && size <= 1) return zero();
  int mi = ctx.g - s.i;
  if (s.i > mi || (s.i == mi && mirror < s.data)) {
    s.i = mi;
    s.data = std::move(mirror);
    int msize = 0;
    for (int c : s.data) msize += c;
    if (s.i == 0 && msize <= 1) return zero();
  }
  return {false, std::move(s)};
}

}  // namespace

Canonical canonicalize(const BasisSymbol& s, const SpaceContext& ctx) {
  ctx.validate();
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(what) + " not valid on " + ctx.describe());
  };
  switch (s.kind) {
    case SymKind::Lambda:
      require(ctx.kind != SpaceKind::Hyperelliptic, "lambda");
      return {false, s};
    case SymKind::Psi:
      if (ctx.kind == SpaceKind::PartitionQuotient) {
        // In partition contexts psi_k denotes the orbit sum over block k.
        require(s.data.at(0) >= 1 && s.data.at(0) <= (int)ctx.partition.size(), "psi block");
      } else {
        require(s.data.at(0) >= 1 && s.data.at(0) <= ctx.label_count(), "psi label");
      }
      return {false, s};
    case SymKind::PsiTotal:
      return {false, s};
    case SymKind::Omega:
      require(ctx.kind == SpaceKind::Pointed, "omega");
      require(s.data.at(0) >= 1 && s.data.at(0) <= ctx.label_count(), "omega label");
      return {false, s};
    case SymKind::DeltaIrr:
      require(ctx.kind != SpaceKind::Hyperelliptic, "d_irr");
      return {false, s};
    case SymKind::Eta0:
      require(ctx.kind == SpaceKind::Hyperelliptic, "eta_0");
      return {false, s};
    case SymKind::DeltaIS:
      require(ctx.kind == SpaceKind::Pointed || ctx.kind == SpaceKind::Hyperelliptic,
              "label-set boundary symbol");
      return canonical_delta_is(s, ctx);
    case SymKind::EtaIS:
      require(ctx.kind == SpaceKind::Hyperelliptic, "eta symbol");
      return canonical_eta_is(s, ctx);
    case SymKind::DeltaOrbit:
      require(ctx.kind == SpaceKind::Pointed || ctx.kind == SpaceKind::Hyperelliptic,
              "symmetric orbit symbol");
      return canonical_delta_orbit(s, ctx);
    case SymKind::EtaOrbit:
      require(ctx.kind == SpaceKind::Hyperelliptic, "eta orbit symbol");
      return canonical_eta_orbit(s, ctx);
    case SymKind::DeltaPair:
      require(ctx.kind == SpaceKind::NodalQuotient, "pair orbit symbol");
      return canonical_delta_pair(s, ctx);
    case SymKind::DeltaBlock:
      require(ctx.kind == SpaceKind::PartitionQuotient, "block orbit symbol");
      return canonical_delta_block(s, ctx);
  }
  throw std::invalid_argument("unknown symbol kind");
}

// ---------------------------------------------------------------------------
// Basis enumeration
// ---------------------------------------------------------------------------

namespace {

// Sort key: genus index first, then size descriptors, then the raw data.
bool boundary_less(const BasisSymbol& a, const BasisSymbol& b) {
  auto size_of = [](const BasisSymbol& s) -> int {
    switch (s.kind) {
      case SymKind::DeltaIS:
      case SymKind::EtaIS: return (int)s.data.size();
      case SymKind::DeltaOrbit:
      case SymKind::EtaOrbit: return s.data.at(0);
      case SymKind::DeltaPair: return 2 * s.data.at(0) + s.data.at(1);
      case SymKind::DeltaBlock: {
        int t = 0;
        for (int c : s.data) t += c;
        return t;
      }
      default: return 0;
    }
  };
  if (a.i != b.i) return a.i < b.i;
  int sa = size_of(a), sb = size_of(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

template <typename Gen>
std::vector<BasisSymbol> collect_canonical(const SpaceContext& ctx, Gen&& generate) {
  std::set<BasisSymbol> seen;
  std::vector<BasisSymbol> out;
  generate([&](const BasisSymbol& raw) {
    Canonical c = canonicalize(raw, ctx);
    if (!c.zero && seen.insert(c.symbol).second) out.push_back(c.symbol);
  });
  std::sort(out.begin(), out.end(), boundary_less);
  return out;
}

void for_each_subset(int nlab, const std::function<void(std::vector<int>)>& f) {
  for (unsigned mask = 0; mask < (1u << nlab); ++mask) {
    std::vector<int> labels;
    for (int x = 1; x <= nlab; ++x)
      if (mask & (1u << (x - 1))) labels.push_back(x);
    f(std::move(labels));
  }
}

}  // namespace

std::vector<BasisSymbol> orbit_basis(const SpaceContext& ctx) {
  ctx.validate();
  std::vector<BasisSymbol> out;
  int nlab = ctx.label_count();
  switch (ctx.kind) {
    case SpaceKind::Pointed: {
      if (nlab > full_basis_cap)
        throw std::invalid_argument("label-set basis too large; use orbit coordinates");
      out.push_back(sym::lambda());
      for (int x = 1; x <= nlab; ++x) out.push_back(sym::psi(x));
      out.push_back(sym::delta_irr());
      auto boundary = collect_canonical(ctx, [&](auto&& emit) {
        for (int i = 0; i <= ctx.g; ++i)
          for_each_subset(nlab, [&](std::vector<int> S) { emit(sym::delta_is(i, std::move(S))); });
      });
      out.insert(out.end(), boundary.begin(), boundary.end());
      return out;
    }
    case SpaceKind::NodalQuotient: {
      out.push_back(sym::lambda());
      out.push_back(sym::psi_total());
      out.push_back(sym::delta_irr());
      auto boundary = collect_canonical(ctx, [&](auto&& emit) {
        for (int i = 0; i <= ctx.g; ++i)
          for (int a = 0; a <= ctx.n; ++a)
            for (int b = 0; a + b <= ctx.n; ++b) emit(sym::delta_pair(i, a, b));
      });
      out.insert(out.end(), boundary.begin(), boundary.end());
      return out;
    }
    case SpaceKind::PartitionQuotient: {
      out.push_back(sym::lambda());
      for (int k = 1; k <= (int)ctx.partition.size(); ++k) out.push_back(sym::psi(k));
      out.push_back(sym::delta_irr());
      auto boundary = collect_canonical(ctx, [&](auto&& emit) {
        std::vector<int> counts(ctx.partition.size(), 0);
        // Odometer over per-block cardinalities.
        for (;;) {
          for (int i = 0; i <= ctx.g; ++i) emit(sym::delta_block(i, counts));
          size_t k = 0;
          while (k < counts.size() && counts[k] == ctx.partition[k]) counts[k++] = 0;
          if (k == counts.size()) break;
          ++counts[k];
        }
      });
      out.insert(out.end(), boundary.begin(), boundary.end());
      return out;
    }
    case SpaceKind::Hyperelliptic: {
      if (nlab > full_basis_cap)
        throw std::invalid_argument("label-set basis too large; use orbit coordinates");
      for (int x = 1; x <= nlab; ++x) out.push_back(sym::psi(x));
      out.push_back(sym::eta0());
      auto etas = collect_canonical(ctx, [&](auto&& emit) {
        for (int i = 1; i <= ctx.g - 2; ++i)
          for_each_subset(nlab, [&](std::vector<int> S) { emit(sym::eta_is(i, std::move(S))); });
      });
      out.insert(out.end(), etas.begin(), etas.end());
      auto deltas = collect_canonical(ctx, [&](auto&& emit) {
        for (int i = 0; i <= ctx.g; ++i)
          for_each_subset(nlab, [&](std::vector<int> S) { emit(sym::delta_is(i, std::move(S))); });
      });
      out.insert(out.end(), deltas.begin(), deltas.end());
      return out;
    }
  }
  throw std::invalid_argument("unknown space kind");
}

}  // namespace moduli
