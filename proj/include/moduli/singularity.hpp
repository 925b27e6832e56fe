#pragma once

#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli::singularity {

// A finite-order diagonal tangent-space action diag(z^{a_1}, ..., z^{a_d})
// for z a primitive m-th root of unity.
struct DiagonalAction {
  int m = 1;
  std::vector<int> exponents;  // each in [0, m)

  void validate() const;
};

// Sum of the normalized exponents with respect to the unit u coprime to m:
// sum_i ((u * a_i) mod m) / m, computed exactly.
Rational age(const DiagonalAction& action, int unit);

enum class ActionClass { Identity, Quasireflection, Junior, Senior };

std::string action_class_name(ActionClass c);

// Identity when every exponent vanishes; Quasireflection when exactly one is
// nonzero; Senior when the age with respect to every unit is >= 1; Junior
// otherwise. Seniority iterates over all units mod m.
ActionClass classify(const DiagonalAction& action);

// Action of an order-m automorphism of a hyperelliptic curve on the invariant
// quadratic differentials x^j (dx/y)^2, j = 0..2g-2: eigenvalue exponents
// 2, 3, ..., 2g taken mod m. Requires 2 <= m <= 2g+2. Since y only appears
// squared, both lifts of a given rotation of the line act identically; the
// hyperelliptic involution itself (`involution = true`, only valid at m = 2)
// acts as the identity.
DiagonalAction hyperelliptic_tangent_action(int g, int m, bool involution = false);

}  // namespace moduli::singularity
