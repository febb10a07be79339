/**
 * @file field.hpp
 * @brief Coefficient fields the constructions are generic over.
 *
 * Everything downstream is a template on a coefficient type K. Two families
 * are provided:
 *
 * - Scalar: the generic field Q(v).
 * - PointField<Pt>: Q with v fixed to a rational point, either a
 *   compile-time one (AtPoint<P>, e.g. AtOne) or one set per thread at run
 *   time (AtRuntime). Every construction run over a point field is the image
 *   of the generic one under evaluation, provided [n]! does not vanish there.
 *
 * field_traits<K> supplies the two field-dependent constants every formula
 * needs: powers of v and balanced quantum integers.
 */

#pragma once

#include "qnumbers.hpp"

#include <concepts>
#include <string>

namespace tlortho {

/// A rational point v = num/den, usable as a template argument.
struct VPoint {
  long num;
  long den;
};

template <VPoint P> struct FixedPoint {
  static Rational point() { return Rational(P.num, P.den); }
};

/// The point chosen at run time, per thread; see ScopedPoint.
struct RuntimePoint {
  static Rational &current() {
    thread_local Rational v0{1};
    return v0;
  }
  static Rational point() { return current(); }
};

/// Sets RuntimePoint for the current thread until destroyed.
class ScopedPoint {
public:
  explicit ScopedPoint(Rational v0) : saved_(RuntimePoint::current()) {
    RuntimePoint::current() = std::move(v0);
  }
  ~ScopedPoint() { RuntimePoint::current() = saved_; }
  ScopedPoint(const ScopedPoint &) = delete;
  ScopedPoint &operator=(const ScopedPoint &) = delete;

private:
  Rational saved_;
};

/// Q with v fixed to Pt::point().
template <class Pt> class PointField {
public:
  PointField() = default;
  PointField(long c) : value_(c) {} // NOLINT(google-explicit-constructor)
  explicit PointField(Rational c) : value_(std::move(c)) {}

  static Rational point() { return Pt::point(); }

  const Rational &value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  PointField operator-() const { return PointField(Rational(-value_)); }
  PointField &operator+=(const PointField &o) {
    value_ += o.value_;
    return *this;
  }
  PointField &operator-=(const PointField &o) {
    value_ -= o.value_;
    return *this;
  }
  PointField &operator*=(const PointField &o) {
    value_ *= o.value_;
    return *this;
  }
  PointField &operator/=(const PointField &o) {
    if (o.value_ == 0)
      throw std::domain_error("PointField: division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend PointField operator+(PointField a, const PointField &b) { return a += b; }
  friend PointField operator-(PointField a, const PointField &b) { return a -= b; }
  friend PointField operator*(PointField a, const PointField &b) { return a *= b; }
  friend PointField operator/(PointField a, const PointField &b) { return a /= b; }
  friend bool operator==(const PointField &a, const PointField &b) { return a.value_ == b.value_; }
  friend bool operator!=(const PointField &a, const PointField &b) { return !(a == b); }

  std::string to_string() const { return value_.get_str(); }

private:
  Rational value_{0};
};

template <VPoint P> using AtPoint = PointField<FixedPoint<P>>;
using AtOne = AtPoint<VPoint{1, 1}>;
using AtTwo = AtPoint<VPoint{2, 1}>;
/// v = RuntimePoint::current().
using AtRuntime = PointField<RuntimePoint>;

template <class K> struct field_traits;

template <> struct field_traits<Scalar> {
  static constexpr bool symbolic = true;
  static Scalar v_pow(int e) { return Scalar::v_pow(e); }
  static Scalar qint(int k) { return Scalar(quantum_int(k)); }
  static Scalar from_scalar(const Scalar &s) { return s; }
};

template <class Pt> struct field_traits<PointField<Pt>> {
  using F = PointField<Pt>;
  static constexpr bool symbolic = false;
  static F v_pow(int e) { return F(LaurentPoly::rational_pow(F::point(), e)); }
  static F qint(int k) { return F(quantum_int(k).evaluate(F::point())); }
  static F from_scalar(const Scalar &s) { return F(specialize(s, F::point())); }
};

/// Coefficient types usable by the tensor-space and diagram code.
template <class K>
concept CoefficientField = requires(K a, const K &b) {
  { a += b } -> std::same_as<K &>;
  { a -= b } -> std::same_as<K &>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b == b } -> std::convertible_to<bool>;
  { b.to_string() } -> std::convertible_to<std::string>;
  { field_traits<K>::v_pow(0) } -> std::convertible_to<K>;
  { field_traits<K>::qint(0) } -> std::convertible_to<K>;
};

template <CoefficientField K> K vpow(int e) { return field_traits<K>::v_pow(e); }
template <CoefficientField K> K qint(int k) { return field_traits<K>::qint(k); }

template <CoefficientField K> K qfactorial(int k) {
  K r(1);
  for (int j = 2; j <= k; ++j)
    r *= qint<K>(j);
  return r;
}

template <CoefficientField K> K qbinom(int a, int k) {
  if constexpr (field_traits<K>::symbolic) {
    return quantum_binom(a, k);
  } else {
    return field_traits<K>::from_scalar(quantum_binom(a, k));
  }
}

} // namespace tlortho
