/**
 * @file scalar.hpp
 * @brief Elements of the rational function field Q(v).
 *
 * A Scalar is num/den with num, den Laurent polynomials. The canonical form
 * has gcd(num, den) = 1, den an ordinary polynomial with nonzero constant
 * term (lowest exponent 0) and leading coefficient 1. Equality is therefore
 * structural.
 */

#pragma once

#include "laurent.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tlortho {

class Scalar {
public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
  explicit Scalar(const Rational &c) : num_(c), den_(1) {}
  Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {} // NOLINT(google-explicit-constructor)

  Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Scalar v_pow(int e) { return Scalar(LaurentPoly::v_pow(e)); }

  const LaurentPoly &num() const { return num_; }
  const LaurentPoly &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Scalar inverse() const {
    if (is_zero())
      throw std::domain_error("Scalar: division by zero");
    return Scalar(den_, num_);
  }

  Scalar &operator+=(const Scalar &o) {
    if (den_ == o.den_) {
      num_ += o.num_;
      if (!den_.is_one())
        normalize();
      else if (num_.is_zero())
        den_ = LaurentPoly(1);
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  Scalar &operator-=(const Scalar &o) { return *this += -o; }

  Scalar &operator*=(const Scalar &o) {
    if (den_.is_one() && o.den_.is_one()) {
      num_ *= o.num_;
      return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

  std::string to_string() const {
    if (den_.is_one())
      return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

private:
  LaurentPoly num_;
  LaurentPoly den_;

  void normalize() {
    if (den_.is_zero())
      throw std::domain_error("Scalar: zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    int e = den_.low();
    num_.shift(-e);
    den_.shift(-e);
    if (den_.span() == 1) {
      num_ *= Rational(1) / den_.leading();
      den_ = LaurentPoly(1);
      return;
    }
    int s = num_.low();
    LaurentPoly np = num_.shifted(-s);
    LaurentPoly g = LaurentPoly::poly_gcd(np, den_);
    if (!g.is_constant()) {
      np = LaurentPoly::poly_divmod(np, g).first;
      den_ = LaurentPoly::poly_divmod(den_, g).first;
    }
    num_ = np.shift(s);
    if (den_.leading() != 1) {
      Rational inv = Rational(1) / den_.leading();
      num_ *= inv;
      den_ *= inv;
    }
  }
};

inline std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace tlortho
