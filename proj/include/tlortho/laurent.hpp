/**
 * @file laurent.hpp
 * @brief Laurent polynomials in one variable v with arbitrary-precision
 *        rational coefficients.
 *
 * Storage is dense between the lowest and highest nonzero exponent. Both
 * end coefficients are nonzero, so two equal polynomials always have equal
 * representations and the zero polynomial is the empty coefficient vector.
 */

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tlortho {

using Rational = mpq_class;
using Integer = mpz_class;

class LaurentPoly {
public:
  LaurentPoly() = default;

  /// Constant polynomial.
  LaurentPoly(long c) { // NOLINT(google-explicit-constructor)
    if (c != 0)
      coeffs_.emplace_back(c);
  }

  explicit LaurentPoly(const Rational &c) {
    if (c != 0)
      coeffs_.push_back(c);
  }

  /// c * v^e
  static LaurentPoly monomial(const Rational &c, int e) {
    LaurentPoly p(c);
    if (!p.is_zero())
      p.low_ = e;
    return p;
  }

  static LaurentPoly v_pow(int e) { return monomial(Rational(1), e); }

  /// Build from an exponent -> coefficient map; zero entries are dropped.
  static LaurentPoly from_terms(const std::map<int, Rational> &terms) {
    LaurentPoly p;
    if (terms.empty())
      return p;
    p.low_ = terms.begin()->first;
    p.coeffs_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1), Rational(0));
    for (const auto &[e, c] : terms) {
      Rational &slot = p.coeffs_[static_cast<std::size_t>(e - p.low_)];
      slot = c;
      slot.canonicalize();
    }
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  /// Lowest exponent with a nonzero coefficient. Undefined for zero.
  int low() const { return low_; }
  /// Highest exponent with a nonzero coefficient. Undefined for zero.
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t span() const { return coeffs_.size(); }

  Rational coeff(int e) const {
    if (is_zero() || e < low_ || e > high())
      return Rational(0);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  const Rational &leading() const { return coeffs_.back(); }
  const Rational &trailing() const { return coeffs_.front(); }

  /// Nonzero terms in increasing exponent order.
  std::map<int, Rational> terms() const {
    std::map<int, Rational> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0)
        out.emplace(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
  }

  /// Multiply by v^e in place.
  LaurentPoly &shift(int e) {
    if (!is_zero())
      low_ += e;
    return *this;
  }
  LaurentPoly shifted(int e) const {
    LaurentPoly r = *this;
    return r.shift(e);
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto &c : r.coeffs_)
      c = -c;
    return r;
  }

  LaurentPoly &operator+=(const LaurentPoly &o) { return accumulate(o, 1); }
  LaurentPoly &operator-=(const LaurentPoly &o) { return accumulate(o, -1); }

  LaurentPoly &operator*=(const Rational &c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto &x : coeffs_)
      x *= c;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational &c) { return a *= c; }

  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero())
      return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.coeffs_.size() != b.coeffs_.size())
      return false;
    if (a.is_zero())
      return true;
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }

  /// Strict total order used only to place polynomials in ordered containers.
  friend bool operator<(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.coeffs_.size() != b.coeffs_.size())
      return a.coeffs_.size() < b.coeffs_.size();
    if (a.low_ != b.low_)
      return a.low_ < b.low_;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (a.coeffs_[k] != b.coeffs_[k])
        return a.coeffs_[k] < b.coeffs_[k];
    return false;
  }

  /// Evaluate at a nonzero rational point (negative exponents need v0 != 0).
  Rational evaluate(const Rational &v0) const {
    if (is_zero())
      return Rational(0);
    if (v0 == 0) {
      if (low_ < 0)
        throw std::domain_error("LaurentPoly::evaluate: negative power at v = 0");
      return coeff(0);
    }
    // Horner from the top, then scale by v0^low.
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * v0 + *it;
    return acc * rational_pow(v0, low_);
  }

  static Rational rational_pow(const Rational &x, int e) {
    Rational r(1);
    Rational base = e >= 0 ? x : Rational(1) / x;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k)
      r *= base;
    return r;
  }

  /// Human-readable form, highest power first, e.g. "v^2 + 1 + v^-2".
  std::string to_string() const {
    if (is_zero())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = high(); e >= low_; --e) {
      Rational c = coeff(e);
      if (c == 0)
        continue;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      bool unit = a == 1;
      if (!unit || e == 0)
        os << a.get_str();
      if (e != 0) {
        if (!unit)
          os << "*";
        os << "v";
        if (e != 1)
          os << "^" << e;
      }
    }
    return os.str();
  }

  // ---- ordinary-polynomial helpers (exponents shifted to start at 0) ----

  /// Quotient and remainder of ordinary polynomials. Both operands must have
  /// low() == 0 (or be zero); divisor nonzero.
  static std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly &a, const LaurentPoly &b) {
    if (b.is_zero())
      throw std::domain_error("polynomial division by zero");
    if (a.is_zero())
      return {LaurentPoly(), LaurentPoly()};
    // Work on dense arrays indexed by true degree.
    std::vector<Rational> rem = a.dense_from_zero();
    std::vector<Rational> div = b.dense_from_zero();
    int db = static_cast<int>(div.size()) - 1;
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db)
      return {LaurentPoly(), a};
    std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
    const Rational &lead = div.back();
    for (int k = da; k >= db; --k) {
      if (rem[static_cast<std::size_t>(k)] == 0)
        continue;
      Rational q = rem[static_cast<std::size_t>(k)] / lead;
      quo[static_cast<std::size_t>(k - db)] = q;
      for (int j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(k - db + j)] -= q * div[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {from_dense(std::move(quo)), from_dense(std::move(rem))};
  }

  /// Monic gcd of two ordinary polynomials (low() >= 0 assumed).
  static LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
      LaurentPoly r = poly_divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero())
      a *= Rational(1) / a.leading();
    return a;
  }

private:
  int low_ = 0;
  std::vector<Rational> coeffs_;

  LaurentPoly &accumulate(const LaurentPoly &o, int sign) {
    if (o.is_zero())
      return *this;
    if (is_zero()) {
      *this = o;
      if (sign < 0)
        for (auto &c : coeffs_)
          c = -c;
      return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    if (lo < low_)
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      auto &dst = coeffs_[static_cast<std::size_t>(o.low_ - lo) + k];
      if (sign > 0)
        dst += o.coeffs_[k];
      else
        dst -= o.coeffs_[k];
    }
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0)
      ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0)
      --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }

  std::vector<Rational> dense_from_zero() const {
    if (low_ < 0)
      throw std::domain_error("poly_divmod: negative exponent");
    std::vector<Rational> d(static_cast<std::size_t>(low_), Rational(0));
    d.insert(d.end(), coeffs_.begin(), coeffs_.end());
    return d;
  }

  static LaurentPoly from_dense(std::vector<Rational> d) {
    LaurentPoly p;
    p.coeffs_ = std::move(d);
    p.low_ = 0;
    p.trim();
    return p;
  }
};

inline std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

} // namespace tlortho
