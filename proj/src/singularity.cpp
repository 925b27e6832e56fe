#include "moduli/singularity.hpp"

#include <numeric>
#include <stdexcept>

namespace moduli::singularity {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void DiagonalAction::validate() const {
  require(m >= 1, "order must be >= 1");
  for (int a : exponents)
    require(a >= 0 && a < m, "exponents must lie in [0, m)");
}

Rational age(const DiagonalAction& action, int unit) {
  action.validate();
  require(std::gcd(unit, action.m) == 1, "unit must be coprime to the order");
  long long total = 0;
  for (int a : action.exponents)
    total += (long long)(unit % action.m + action.m) * a % action.m;
  return Rational(total, action.m);
}

std::string action_class_name(ActionClass c) {
  switch (c) {
    case ActionClass::Identity: return "identity";
    case ActionClass::Quasireflection: return "quasireflection";
    case ActionClass::Junior: return "junior";
    case ActionClass::Senior: return "senior";
  }
  return "junior";
}

ActionClass classify(const DiagonalAction& action) {
  action.validate();
  int nonzero = 0;
  for (int a : action.exponents) nonzero += a != 0;
  if (nonzero == 0) return ActionClass::Identity;
  if (nonzero == 1) return ActionClass::Quasireflection;
  for (int u = 1; u < action.m; ++u) {
    if (std::gcd(u, action.m) != 1) continue;
    if (age(action, u) < 1) return ActionClass::Junior;
  }
  return ActionClass::Senior;
}

DiagonalAction hyperelliptic_tangent_action(int g, int m, bool involution) {
  require(g >= 2, "hyperelliptic curves need g >= 2");
  require(m >= 2 && m <= 2 * g + 2, "order out of range");
  DiagonalAction action;
  action.m = m;
  if (involution) {
    require(m == 2, "the hyperelliptic involution has order 2");
    action.exponents.assign(2 * g - 1, 0);
    return action;
  }
  for (int k = 2; k <= 2 * g; ++k) action.exponents.push_back(k % m);
  return action;
}

}  // namespace moduli::singularity
