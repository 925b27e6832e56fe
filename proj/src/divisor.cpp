#include "moduli/divisor.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace moduli {

void DivisorClass::add(const BasisSymbol& s, const Rational& c) {
  if (c == 0) {
    canonicalize(s, ctx_);  // still validate the symbol
    return;
  }
  Canonical cs = canonicalize(s, ctx_);
  if (cs.zero) return;
  Rational& slot = coeffs_[cs.symbol];
  slot += c;
  if (slot == 0) coeffs_.erase(cs.symbol);
}

void DivisorClass::set(const BasisSymbol& s, const Rational& c) {
  Canonical cs = canonicalize(s, ctx_);
  if (cs.zero) {
    if (c != 0) throw std::invalid_argument("cannot assign to the zero class");
    return;
  }
  if (c == 0)
    coeffs_.erase(cs.symbol);
  else
    coeffs_[cs.symbol] = c;
}

Rational DivisorClass::coeff(const BasisSymbol& s) const {
  Canonical cs = canonicalize(s, ctx_);
  if (cs.zero) return 0;
  auto it = coeffs_.find(cs.symbol);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("context mismatch in divisor sum");
  for (const auto& [s, c] : o.coeffs_) {
    Rational& slot = coeffs_[s];
    slot += c;
    if (slot == 0) coeffs_.erase(s);
  }
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("context mismatch in divisor sum");
  for (const auto& [s, c] : o.coeffs_) {
    Rational& slot = coeffs_[s];
    slot -= c;
    if (slot == 0) coeffs_.erase(s);
  }
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [s, v] : coeffs_) v *= c;
  return *this;
}

DivisorClass combine(const std::vector<std::pair<Rational, DivisorClass>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty linear combination");
  DivisorClass out(terms.front().second.context());
  for (const auto& [c, d] : terms) {
    if (!(d.context() == out.context()))
      throw std::invalid_argument("context mismatch in linear combination");
    for (const auto& [s, v] : d.coefficients()) out.add(s, c * v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

const char* kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Pointed: return "pointed";
    case SpaceKind::NodalQuotient: return "nodal";
    case SpaceKind::PartitionQuotient: return "partition";
    case SpaceKind::Hyperelliptic: return "hyperelliptic";
  }
  throw std::invalid_argument("unknown space kind");
}

SpaceKind kind_from_name(const std::string& s) {
  if (s == "pointed") return SpaceKind::Pointed;
  if (s == "nodal") return SpaceKind::NodalQuotient;
  if (s == "partition") return SpaceKind::PartitionQuotient;
  if (s == "hyperelliptic") return SpaceKind::Hyperelliptic;
  throw std::invalid_argument("unknown space kind '" + s + "'");
}

json context_to_json(const SpaceContext& ctx) {
  json j{{"kind", kind_name(ctx.kind)},
         {"g", ctx.g},
         {"n", ctx.n},
         {"level", ctx.level == Level::Stack ? "stack" : "coarse"}};
  if (!ctx.partition.empty()) j["partition"] = ctx.partition;
  return j;
}

SpaceContext context_from_json(const json& j) {
  SpaceContext ctx;
  ctx.kind = kind_from_name(j.at("kind").get<std::string>());
  ctx.g = j.at("g").get<int>();
  ctx.n = j.at("n").get<int>();
  std::string level = j.at("level").get<std::string>();
  if (level != "stack" && level != "coarse")
    throw std::invalid_argument("unknown level '" + level + "'");
  ctx.level = level == "stack" ? Level::Stack : Level::Coarse;
  if (j.contains("partition")) ctx.partition = j.at("partition").get<std::vector<int>>();
  ctx.validate();
  return ctx;
}

}  // namespace

std::string DivisorClass::to_json() const {
  json coeffs = json::array();
  for (const auto& [s, c] : coeffs_)
    coeffs.push_back(json::array({s.name(), to_fraction(c)}));
  json j{{"ctx", context_to_json(ctx_)}, {"coeffs", coeffs}};
  return j.dump();
}

DivisorClass DivisorClass::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad divisor JSON: ") + e.what());
  }
  DivisorClass out(context_from_json(j.at("ctx")));
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("coefficient entries must be [symbol, value] pairs");
    out.add(parse_symbol(entry.at(0).get<std::string>()),
            parse_fraction(entry.at(1).get<std::string>()));
  }
  return out;
}

std::string DivisorClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : coeffs_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << to_fraction(a, false) << "*";
    os << s.name();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Symbol parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<int> parse_int_list(const std::string& body) {
  std::vector<int> out;
  std::istringstream in(body);
  std::string token;
  while (std::getline(in, token, ',')) {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("bad integer '" + token + "'");
    out.push_back(v);
  }
  return out;
}

BasisSymbol parse_bracketed(const std::string& text, bool eta) {
  // Forms: X[i,{a,b}]  X[i,s=2]  d[i;a,b]  d[i;{a,b,c}]
  size_t open = text.find('[');
  if (open == std::string::npos || text.back() != ']')
    throw std::invalid_argument("unrecognized symbol '" + text + "'");
  std::string body = text.substr(open + 1, text.size() - open - 2);
  size_t sep = body.find_first_of(",;");
  if (sep == std::string::npos)
    throw std::invalid_argument("unrecognized symbol '" + text + "'");
  int i = std::stoi(body.substr(0, sep));
  std::string rest = body.substr(sep + 1);
  bool pair_form = body[sep] == ';';
  if (eta && pair_form) throw std::invalid_argument("unrecognized symbol '" + text + "'");
  if (!rest.empty() && rest.front() == '{') {
    if (rest.back() != '}') throw std::invalid_argument("unrecognized symbol '" + text + "'");
    std::vector<int> items = parse_int_list(rest.substr(1, rest.size() - 2));
    if (pair_form) return sym::delta_block(i, std::move(items));
    return eta ? sym::eta_is(i, std::move(items)) : sym::delta_is(i, std::move(items));
  }
  if (rest.rfind("s=", 0) == 0) {
    int s = std::stoi(rest.substr(2));
    return eta ? sym::eta_orbit(i, s) : sym::delta_orbit(i, s);
  }
  if (pair_form) {
    std::vector<int> items = parse_int_list(rest);
    if (items.size() != 2) throw std::invalid_argument("unrecognized symbol '" + text + "'");
    return sym::delta_pair(i, items[0], items[1]);
  }
  throw std::invalid_argument("unrecognized symbol '" + text + "'");
}

}  // namespace

BasisSymbol parse_symbol(const std::string& text) {
  try {
    if (text == "lambda") return sym::lambda();
    if (text == "psi") return sym::psi_total();
    if (text == "d_irr") return sym::delta_irr();
    if (text == "eta_0") return sym::eta0();
    if (text.rfind("psi_", 0) == 0) return sym::psi(std::stoi(text.substr(4)));
    if (text.rfind("omega_", 0) == 0) return sym::omega(std::stoi(text.substr(6)));
    if (text.rfind("d[", 0) == 0) return parse_bracketed(text, false);
    if (text.rfind("eta[", 0) == 0) return parse_bracketed(text, true);
  } catch (const std::invalid_argument&) {
    // fall through to the uniform error below
  } catch (const std::out_of_range&) {
  }
  throw std::invalid_argument("unrecognized symbol '" + text + "'");
}

}  // namespace moduli
