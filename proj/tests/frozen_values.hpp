// Values derived by tests/oracle/derive_values.py (sympy, dense Kronecker
// products, nested nu, transition matrix by linear solve), frozen here.
#pragma once

#include "tlortho/tlortho.hpp"

#include <map>
#include <utility>
#include <vector>

namespace frozen {

using tlortho::LaurentPoly;
using tlortho::OneFactor;
using tlortho::Rational;
using tlortho::Scalar;

inline LaurentPoly poly(const std::map<int, std::pair<long, long>> &t) {
  std::map<int, Rational> r;
  for (const auto &[e, c] : t)
    r[e] = Rational(c.first, c.second);
  return LaurentPoly::from_terms(r);
}

inline Scalar S(const std::map<int, std::pair<long, long>> &num, const std::map<int, std::pair<long, long>> &den) {
  return Scalar(poly(num), poly(den));
}

#include "frozen_values.inc"

} // namespace frozen
