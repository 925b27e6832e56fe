#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "moduli/catalog.hpp"
#include "moduli/divisor.hpp"

namespace moduli::certify {

// Outcome of a positivity certification of K against a generator list:
//   GeneralType: K - eps * psi is a nonnegative combination of the generators
//                for some eps > 0 (psi big and nef makes K big);
//   Effective:   the combination exists at eps = 0 but for no positive eps;
//   Infeasible:  no nonnegative combination exists even at eps = 0.
enum class Verdict { GeneralType, Effective, Infeasible };

std::string verdict_name(Verdict v);

// One linear constraint  sum_j coeffs[j] * x_j <= bound.
struct Row {
  std::string label;
  std::vector<Rational> coeffs;
  Rational bound;
};

// Variables are [eps, x_1, ..., x_m] where x_j multiplies the j-th generator.
struct InequalitySystem {
  std::vector<std::string> vars;
  std::vector<Row> rows;
};

// One row per certified coordinate c:
//   eps * psi[c] + sum_j x_j * G_j[c] <= K[c]
// plus nonnegativity rows -x_j <= 0. When `coords` is empty it defaults to
// the union of the supports of K, psi and the generators; every Reduced
// generator must cover every coordinate in the final set (throws otherwise).
InequalitySystem build_system(const DivisorClass& K, const DivisorClass& psi,
                              const std::vector<catalog::GeneratorSpec>& gens,
                              std::vector<BasisSymbol> coords = {});

// Exact interval of a single variable after eliminating all the others by
// Fourier-Motzkin. Empty optional bounds mean unbounded on that side.
struct VariableRange {
  bool feasible = false;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};
VariableRange eliminate_to(const InequalitySystem& sys, std::size_t keep);

struct Certificate {
  Verdict verdict = Verdict::Infeasible;
  Rational epsilon;
  std::vector<std::pair<std::string, Rational>> multipliers;  // generator -> x_j
  std::vector<std::pair<std::string, Rational>> residual;     // coordinate -> slack
  std::string mode;  // "full" when every generator is Full, else "reduced"
  std::vector<std::string> assumptions;
  std::vector<std::string> citations;

  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json& j);
};

// Decides the verdict for K = canonical-type class against `gens` and emits a
// self-contained certificate with an explicit witness (eps, multipliers,
// residual slack per coordinate).
Certificate solve(const DivisorClass& K, const DivisorClass& psi,
                  const std::vector<catalog::GeneratorSpec>& gens,
                  std::vector<BasisSymbol> coords = {});

// Recomputes the residual from scratch and checks every claim in the
// certificate: multiplier signs, the sign of eps demanded by the verdict, the
// stored residual values, and their nonnegativity.
bool verify(const Certificate& cert, const DivisorClass& K,
            const DivisorClass& psi,
            const std::vector<catalog::GeneratorSpec>& gens,
            std::vector<BasisSymbol> coords = {});

}  // namespace moduli::certify
