#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moduli/basis.hpp"

namespace moduli {

// A rational divisor class on one of the supported spaces, stored as a sparse
// exact-coefficient vector over canonical basis symbols. Symbols are
// canonicalized on insertion, so two classes are equal iff their coefficient
// maps are equal.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(SpaceContext ctx) : ctx_(std::move(ctx)) { ctx_.validate(); }

  const SpaceContext& context() const { return ctx_; }

  // Adds c * s, canonicalizing the symbol; entries that cancel are erased.
  void add(const BasisSymbol& s, const Rational& c);
  void set(const BasisSymbol& s, const Rational& c);

  // Coefficient of the canonical form of `s` (0 when absent or s is the
  // zero class).
  Rational coeff(const BasisSymbol& s) const;

  const std::map<BasisSymbol, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& c);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }

  bool operator==(const DivisorClass& o) const {
    return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
  }

  // Round-trippable serialization with exact "p/q" coefficient strings and
  // deterministic key order.
  std::string to_json() const;
  static DivisorClass from_json(const std::string& text);

  // Human-readable rendering, e.g. "13*lambda + psi - 2*d_irr".
  std::string to_string() const;

 private:
  SpaceContext ctx_;
  std::map<BasisSymbol, Rational> coeffs_;
};

// Exact linear combination sum_k terms[k].first * terms[k].second; all terms
// must share one context.
DivisorClass combine(const std::vector<std::pair<Rational, DivisorClass>>& terms);

// Inverse of BasisSymbol::name(). Throws std::invalid_argument on text that
// names no symbol.
BasisSymbol parse_symbol(const std::string& text);

}  // namespace moduli
