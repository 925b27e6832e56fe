#include "moduli/rational.hpp"

#include <stdexcept>

namespace moduli {

std::string to_fraction(const Rational& r, bool always_slash) {
  std::string num = numerator(r).str();
  Int den = denominator(r);
  if (den == 1 && !always_slash) return num;
  return num + "/" + den.str();
}

Rational parse_fraction(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("bad rational literal '") + s + "': " + e.what());
  }
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  if (k > n - k) k = n - k;
  Int acc = 1;
  for (long j = 1; j <= k; ++j) {
    acc *= (n - k + j);
    acc /= j;  // exact at every step: product of j consecutive integers
  }
  return Rational(acc);
}

bool is_prime(long x) {
  if (x < 2) return false;
  for (long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace moduli
