#include "moduli/certify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace moduli::certify {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Scale so the largest absolute coefficient (or the bound) is 1; makes exact
// duplicate detection effective during elimination.
void normalize(Row& r) {
  Rational scale = abs(r.bound);
  for (const Rational& c : r.coeffs) scale = std::max(scale, Rational(abs(c)));
  if (scale == 0) return;
  for (Rational& c : r.coeffs) c /= scale;
  r.bound /= scale;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

// Eliminates variable `v` from `rows` by combining every upper-bound row with
// every lower-bound row; returns false when a contradictory constant row
// appears.
bool eliminate_var(std::vector<Row>& rows, std::size_t v) {
  std::vector<Row> zero, pos, neg;
  for (Row& r : rows) {
    if (r.coeffs[v] == 0)
      zero.push_back(std::move(r));
    else if (r.coeffs[v] > 0)
      pos.push_back(std::move(r));
    else
      neg.push_back(std::move(r));
  }
  std::vector<Row> next = std::move(zero);
  // Rows with identical normalized coefficients are ordered by bound; only the
  // tightest one can ever bind, so later duplicates are dropped or replace it.
  std::map<std::vector<Rational>, std::size_t> tightest;
  for (std::size_t t = 0; t < next.size(); ++t) {
    normalize(next[t]);
    auto [it, fresh] = tightest.insert({next[t].coeffs, t});
    if (!fresh && next[t].bound < next[it->second].bound)
      std::swap(next[it->second], next[t]);
  }
  for (const Row& p : pos)
    for (const Row& q : neg) {
      Row r;
      r.label = p.label + "&" + q.label;
      Rational wp = 1 / p.coeffs[v], wq = -1 / q.coeffs[v];
      r.coeffs.resize(p.coeffs.size());
      for (std::size_t u = 0; u < r.coeffs.size(); ++u)
        r.coeffs[u] = wp * p.coeffs[u] + wq * q.coeffs[u];
      r.coeffs[v] = 0;
      r.bound = wp * p.bound + wq * q.bound;
      normalize(r);
      if (all_zero(r.coeffs)) {
        if (r.bound < 0) return false;
        continue;
      }
      auto it = tightest.find(r.coeffs);
      if (it == tightest.end()) {
        tightest.insert({r.coeffs, next.size()});
        next.push_back(std::move(r));
      } else if (r.bound < next[it->second].bound) {
        next[it->second] = std::move(r);
      }
    }
  rows = std::move(next);
  for (const Row& r : rows)
    if (all_zero(r.coeffs) && r.bound < 0) return false;
  return true;
}

// Interval of variable `keep` implied by rows mentioning only that variable.
VariableRange read_range(const std::vector<Row>& rows, std::size_t keep) {
  VariableRange out;
  out.feasible = true;
  for (const Row& r : rows) {
    const Rational& a = r.coeffs[keep];
    if (a == 0) {
      if (r.bound < 0) out.feasible = false;
      continue;
    }
    Rational v = r.bound / a;
    if (a > 0) {
      if (!out.upper || v < *out.upper) out.upper = v;
    } else {
      if (!out.lower || v > *out.lower) out.lower = v;
    }
  }
  if (out.lower && out.upper && *out.lower > *out.upper) out.feasible = false;
  return out;
}

std::string fraction(const Rational& r) { return to_fraction(r); }

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::GeneralType: return "general-type";
    case Verdict::Effective: return "effective";
    case Verdict::Infeasible: return "infeasible";
  }
  return "infeasible";
}

namespace {

// The coordinates actually certified: explicit list, or the union of supports.
std::vector<BasisSymbol> resolve_coords(
    const DivisorClass& K, const DivisorClass& psi,
    const std::vector<catalog::GeneratorSpec>& gens,
    std::vector<BasisSymbol> coords) {
  if (coords.empty()) {
    std::set<BasisSymbol> all;
    for (const auto& [s, c] : K.coefficients()) all.insert(s);
    for (const auto& [s, c] : psi.coefficients()) all.insert(s);
    for (const auto& g : gens)
      for (const auto& [s, c] : g.cls.coefficients()) all.insert(s);
    coords.assign(all.begin(), all.end());
  } else {
    for (BasisSymbol& s : coords) {
      Canonical c = canonicalize(s, K.context());
      require(!c.zero, "coordinate '" + s.name() + "' is the zero class");
      s = c.symbol;
    }
  }
  for (const auto& g : gens)
    for (const BasisSymbol& s : coords)
      require(g.covers(s), "generator '" + g.name + "' has no exact coefficient at '" +
                               s.name() + "'; pass an explicit coordinate list");
  return coords;
}

}  // namespace

InequalitySystem build_system(const DivisorClass& K, const DivisorClass& psi,
                              const std::vector<catalog::GeneratorSpec>& gens,
                              std::vector<BasisSymbol> coords) {
  require(!gens.empty(), "empty generator list");
  coords = resolve_coords(K, psi, gens, std::move(coords));
  InequalitySystem sys;
  sys.vars.push_back("eps");
  for (const auto& g : gens) sys.vars.push_back(g.name);
  for (const BasisSymbol& s : coords) {
    Row r;
    r.label = s.name();
    r.coeffs.resize(sys.vars.size(), 0);
    r.coeffs[0] = psi.coeff(s);
    for (std::size_t j = 0; j < gens.size(); ++j)
      r.coeffs[j + 1] = gens[j].cls.coeff(s);
    r.bound = K.coeff(s);
    sys.rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Row r;
    r.label = gens[j].name + ">=0";
    r.coeffs.resize(sys.vars.size(), 0);
    r.coeffs[j + 1] = -1;
    r.bound = 0;
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

namespace {

// Greedy elimination order: the variable whose pos x neg product count is
// smallest generates the fewest combined rows.
std::size_t cheapest_variable(const std::vector<Row>& rows,
                              const std::vector<bool>& remaining) {
  std::size_t best = 0;
  long long best_score = -1;
  for (std::size_t v = 1; v < remaining.size(); ++v) {
    if (!remaining[v]) continue;
    long long pos = 0, neg = 0;
    for (const Row& r : rows) {
      if (r.coeffs[v] > 0) ++pos;
      else if (r.coeffs[v] < 0) ++neg;
    }
    long long score = pos * neg;
    if (best_score < 0 || score < best_score) {
      best = v;
      best_score = score;
    }
  }
  return best;
}

}  // namespace

VariableRange eliminate_to(const InequalitySystem& sys, std::size_t keep) {
  std::vector<Row> rows = sys.rows;
  std::vector<bool> remaining(sys.vars.size(), true);
  remaining[keep] = false;
  for (std::size_t left = sys.vars.size() - 1; left-- > 0;) {
    std::size_t v = 0;
    long long best_score = -1;
    for (std::size_t u = 0; u < sys.vars.size(); ++u) {
      if (!remaining[u]) continue;
      long long pos = 0, neg = 0;
      for (const Row& r : rows) {
        if (r.coeffs[u] > 0) ++pos;
        else if (r.coeffs[u] < 0) ++neg;
      }
      long long score = pos * neg;
      if (best_score < 0 || score < best_score) {
        v = u;
        best_score = score;
      }
    }
    remaining[v] = false;
    if (!eliminate_var(rows, v)) return {};
  }
  return read_range(rows, keep);
}

Certificate solve(const DivisorClass& K, const DivisorClass& psi,
                  const std::vector<catalog::GeneratorSpec>& gens,
                  std::vector<BasisSymbol> coords) {
  coords = resolve_coords(K, psi, gens, std::move(coords));
  InequalitySystem sys = build_system(K, psi, gens, coords);

  // Eliminate the multipliers greedily (cheapest product count first), keeping
  // the rows seen before each elimination so a witness can be rebuilt by
  // back-substitution in reverse order.
  std::vector<Row> rows = sys.rows;
  std::vector<std::pair<std::size_t, std::vector<Row>>> trail;
  std::vector<bool> remaining(sys.vars.size(), true);
  remaining[0] = false;
  bool feasible = true;
  for (std::size_t left = sys.vars.size() - 1; left-- > 0;) {
    std::size_t v = cheapest_variable(rows, remaining);
    remaining[v] = false;
    trail.push_back({v, rows});
    if (!eliminate_var(rows, v)) {
      feasible = false;
      break;
    }
  }

  Certificate cert;
  cert.mode = "full";
  for (const auto& g : gens) {
    cert.citations.push_back(g.name);
    if (g.mode == catalog::Mode::Reduced) {
      cert.mode = "reduced";
      if (!g.assumption.empty()) cert.assumptions.push_back(g.name + ": " + g.assumption);
    }
  }

  VariableRange range = feasible ? read_range(rows, 0) : VariableRange{};
  if (!range.feasible) {
    cert.verdict = Verdict::Infeasible;
    return cert;
  }
  bool zero_ok = (!range.lower || *range.lower <= 0) && (!range.upper || *range.upper >= 0);
  bool positive_ok = !range.upper || *range.upper > 0;
  if (positive_ok) {
    cert.verdict = Verdict::GeneralType;
    if (range.upper)
      cert.epsilon = *range.upper;
    else if (range.lower && *range.lower > 0)
      cert.epsilon = *range.lower + 1;
    else
      cert.epsilon = 1;
  } else if (zero_ok) {
    cert.verdict = Verdict::Effective;
    cert.epsilon = 0;
  } else {
    cert.verdict = Verdict::Infeasible;
    return cert;
  }

  // Back-substitute the multipliers in reverse elimination order, always
  // taking the largest lower bound (the nonnegativity rows guarantee one).
  // Each snapshot only mentions the kept variable, the variable eliminated at
  // that step and variables assigned in later steps, so the partial sums are
  // fully determined.
  std::vector<Rational> values(sys.vars.size(), 0);
  values[0] = cert.epsilon;
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    std::size_t v = it->first;
    std::optional<Rational> lo;
    for (const Row& r : it->second) {
      const Rational& a = r.coeffs[v];
      if (a >= 0) continue;
      Rational partial = r.bound;
      for (std::size_t u = 0; u < r.coeffs.size(); ++u)
        if (u != v) partial -= r.coeffs[u] * values[u];
      Rational bound = partial / a;  // a < 0 flips to a lower bound
      if (!lo || bound > *lo) lo = bound;
    }
    values[v] = lo ? *lo : 0;
  }
  for (std::size_t j = 0; j < gens.size(); ++j)
    cert.multipliers.push_back({gens[j].name, values[j + 1]});
  for (const BasisSymbol& s : coords) {
    Rational slack = K.coeff(s) - cert.epsilon * psi.coeff(s);
    for (std::size_t j = 0; j < gens.size(); ++j)
      slack -= values[j + 1] * gens[j].cls.coeff(s);
    cert.residual.push_back({s.name(), slack});
  }
  return cert;
}

bool verify(const Certificate& cert, const DivisorClass& K,
            const DivisorClass& psi,
            const std::vector<catalog::GeneratorSpec>& gens,
            std::vector<BasisSymbol> coords) {
  if (cert.verdict == Verdict::Infeasible) return false;
  if (cert.verdict == Verdict::GeneralType && !(cert.epsilon > 0)) return false;
  if (cert.verdict == Verdict::Effective && cert.epsilon != 0) return false;
  if (cert.multipliers.size() != gens.size()) return false;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (cert.multipliers[j].first != gens[j].name) return false;
    if (cert.multipliers[j].second < 0) return false;
  }
  std::vector<BasisSymbol> cs;
  try {
    cs = resolve_coords(K, psi, gens, std::move(coords));
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (cert.residual.size() != cs.size()) return false;
  for (std::size_t t = 0; t < cs.size(); ++t) {
    const BasisSymbol& s = cs[t];
    if (cert.residual[t].first != s.name()) return false;
    Rational slack = K.coeff(s) - cert.epsilon * psi.coeff(s);
    for (std::size_t j = 0; j < gens.size(); ++j)
      slack -= cert.multipliers[j].second * gens[j].cls.coeff(s);
    if (slack != cert.residual[t].second) return false;
    if (slack < 0) return false;
  }
  return true;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["verdict"] = verdict_name(verdict);
  j["epsilon"] = fraction(epsilon);
  nlohmann::json mult = nlohmann::json::array();
  for (const auto& [name, x] : multipliers) mult.push_back({name, fraction(x)});
  j["multipliers"] = mult;
  nlohmann::json res = nlohmann::json::array();
  for (const auto& [name, x] : residual) res.push_back({name, fraction(x)});
  j["residual"] = res;
  j["mode"] = mode;
  j["assumptions"] = assumptions;
  j["citations"] = citations;
  return j;
}

Certificate Certificate::from_json(const nlohmann::json& j) {
  Certificate cert;
  std::string v = j.at("verdict").get<std::string>();
  if (v == "general-type")
    cert.verdict = Verdict::GeneralType;
  else if (v == "effective")
    cert.verdict = Verdict::Effective;
  else if (v == "infeasible")
    cert.verdict = Verdict::Infeasible;
  else
    throw std::invalid_argument("unknown verdict '" + v + "'");
  cert.epsilon = parse_fraction(j.at("epsilon").get<std::string>());
  for (const auto& e : j.at("multipliers"))
    cert.multipliers.push_back(
        {e.at(0).get<std::string>(), parse_fraction(e.at(1).get<std::string>())});
  for (const auto& e : j.at("residual"))
    cert.residual.push_back(
        {e.at(0).get<std::string>(), parse_fraction(e.at(1).get<std::string>())});
  cert.mode = j.at("mode").get<std::string>();
  cert.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  cert.citations = j.at("citations").get<std::vector<std::string>>();
  return cert;
}

}  // namespace moduli::certify
