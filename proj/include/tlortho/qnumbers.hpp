/**
 * @file qnumbers.hpp
 * @brief Balanced quantum integers, factorials, binomials and evaluation at
 *        a rational point.
 */

#pragma once

#include "scalar.hpp"

#include <stdexcept>

namespace tlortho {

/// Raised when a Scalar is evaluated at a zero of its denominator.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// [k] = v^{k-1} + v^{k-3} + ... + v^{-(k-1)}, with [-k] = -[k].
inline LaurentPoly quantum_int(int k) {
  if (k == 0)
    return LaurentPoly();
  if (k < 0)
    return -quantum_int(-k);
  std::map<int, Rational> t;
  for (int j = 0; j < k; ++j)
    t.emplace(-(k - 1) + 2 * j, Rational(1));
  return LaurentPoly::from_terms(t);
}

/// [k]! = [1][2]...[k]; [0]! = 1.
inline LaurentPoly quantum_factorial(int k) {
  if (k < 0)
    throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly r(1);
  for (int j = 2; j <= k; ++j)
    r *= quantum_int(j);
  return r;
}

/// [a choose k] = [a][a-1]...[a-k+1] / [k]!, defined for every integer a.
inline Scalar quantum_binom(int a, int k) {
  if (k < 0)
    throw std::invalid_argument("quantum_binom: negative lower index");
  LaurentPoly top(1);
  for (int j = 0; j < k; ++j)
    top *= quantum_int(a - j);
  Scalar r(top, quantum_factorial(k));
  if (!r.is_laurent())
    throw std::logic_error("quantum_binom: result is not a Laurent polynomial");
  return r;
}

/// Evaluation homomorphism Q(v) -> Q at v = v0.
inline Rational specialize(const Scalar &s, const Rational &v0) {
  // Negative powers of v are poles at v0 = 0.
  Rational n, d;
  try {
    n = s.num().evaluate(v0);
    d = s.den().evaluate(v0);
  } catch (const std::domain_error &) {
    throw PoleError("specialize: undefined at v0 = " + v0.get_str());
  }
  if (d == 0)
    throw PoleError("specialize: denominator vanishes at v0 = " + v0.get_str());
  return n / d;
}

/// True iff [1], ..., [n] are all nonzero at v = v0 (so [n]! != 0 there).
inline bool is_nfact_nonzero(int n, const Rational &v0) {
  if (v0 == 0)
    throw std::invalid_argument("is_nfact_nonzero: v0 must be nonzero");
  for (int k = 1; k <= n; ++k)
    if (quantum_int(k).evaluate(v0) == 0)
      return false;
  return true;
}

} // namespace tlortho
