/**
 * @file tensor.hpp
 * @brief The tensor space V^{⊗n} over K, its sign basis, the Schur-algebra
 *        generators acting through the iterated coproduct, and the
 *        symmetric bilinear form making the sign basis orthonormal.
 *
 * A basis tensor y_{i_1,...,i_n} is packed into a bit mask: bit (n - j) is
 * set iff i_j = -1. Position 1 is therefore the most significant bit and
 * increasing masks enumerate the sign basis lexicographically with 1 < -1.
 */

#pragma once

#include "field.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlortho {

using Mask = std::uint32_t;

inline constexpr int kMaxTensorLength = 30;

/// Entry i_j (1-based) of the basis tensor with mask m in V^{⊗n}.
inline int sign_at(Mask m, int n, int j) { return (m >> (n - j)) & 1U ? -1 : 1; }

/// Weight (sum of entries) of the basis tensor with mask m.
inline int mask_weight(Mask m, int n) { return n - 2 * std::popcount(m); }

inline std::vector<int> mask_signs(Mask m, int n) {
  std::vector<int> s;
  for (int j = 1; j <= n; ++j)
    s.push_back(sign_at(m, n, j));
  return s;
}

inline Mask signs_mask(const std::vector<int> &signs) {
  if (signs.size() > static_cast<std::size_t>(kMaxTensorLength))
    throw std::invalid_argument("tensor length exceeds supported maximum");
  Mask m = 0;
  for (int s : signs) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("sign vector entries must be +1 or -1");
    m = (m << 1) | (s == -1 ? 1U : 0U);
  }
  return m;
}

/// Sparse vector in V^{⊗n}; stored coefficients are never zero.
template <CoefficientField K> class TensorVector {
public:
  using Terms = std::map<Mask, K>;

  TensorVector() = default;
  explicit TensorVector(int n) : n_(n) {
    if (n < 0 || n > kMaxTensorLength)
      throw std::invalid_argument("TensorVector: unsupported length " + std::to_string(n));
  }

  /// The scalar 1 in V^{⊗0}.
  static TensorVector unit() {
    TensorVector t(0);
    t.terms_.emplace(0U, K(1));
    return t;
  }

  static TensorVector basis(const std::vector<int> &signs, const K &c = K(1)) {
    TensorVector t(static_cast<int>(signs.size()));
    t.add_term(signs_mask(signs), c);
    return t;
  }

  static TensorVector basis_mask(int n, Mask m, const K &c = K(1)) {
    TensorVector t(n);
    t.add_term(m, c);
    return t;
  }

  int n() const { return n_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }
  K coeff(const std::vector<int> &signs) const { return coeff(signs_mask(signs)); }

  void add_term(Mask m, const K &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  /// Weight shared by all terms, or nullopt if the vector is zero or mixed.
  std::optional<int> homogeneous_weight() const {
    if (terms_.empty())
      return std::nullopt;
    int w = mask_weight(terms_.begin()->first, n_);
    for (const auto &t : terms_)
      if (mask_weight(t.first, n_) != w)
        return std::nullopt;
    return w;
  }

  TensorVector operator-() const {
    TensorVector r = *this;
    for (auto &t : r.terms_)
      t.second = K(0) - t.second;
    return r;
  }

  TensorVector &operator+=(const TensorVector &o) {
    check_length(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  TensorVector &operator-=(const TensorVector &o) {
    check_length(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, K(0) - c);
    return *this;
  }
  TensorVector &operator*=(const K &c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &t : terms_)
      t.second = t.second * c;
    return *this;
  }

  friend TensorVector operator+(TensorVector a, const TensorVector &b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector &b) { return a -= b; }
  friend TensorVector operator*(TensorVector a, const K &c) { return a *= c; }
  friend TensorVector operator*(const K &c, TensorVector a) { return a *= c; }

  friend bool operator==(const TensorVector &a, const TensorVector &b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorVector &a, const TensorVector &b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::string s;
    bool first = true;
    for (const auto &[m, c] : terms_) {
      if (!first)
        s += " + ";
      first = false;
      s += "(" + c.to_string() + ")*y[";
      for (int j = 1; j <= n_; ++j)
        s += sign_at(m, n_, j) == 1 ? (j > 1 ? ",1" : "1") : (j > 1 ? ",-1" : "-1");
      s += "]";
    }
    return s;
  }

private:
  int n_ = 0;
  Terms terms_;

  void check_length(const TensorVector &o) const {
    if (o.n_ != n_)
      throw std::invalid_argument("TensorVector: length mismatch");
  }
};

/// a ⊗ b
template <CoefficientField K> TensorVector<K> tensor(const TensorVector<K> &a, const TensorVector<K> &b) {
  TensorVector<K> r(a.n() + b.n());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms())
      r.add_term((ma << b.n()) | mb, ca * cb);
  return r;
}

/// E on V^{⊗n}: raise y_{-1} at position j to y_1 with factor v^{(sum of entries left of j)}.
template <CoefficientField K> TensorVector<K> act_E(const TensorVector<K> &x) {
  const int n = x.n();
  TensorVector<K> r(n);
  for (const auto &[m, c] : x.terms()) {
    int left = 0;
    for (int j = 1; j <= n; ++j) {
      int s = sign_at(m, n, j);
      if (s == -1)
        r.add_term(m & ~(Mask{1} << (n - j)), c * vpow<K>(left));
      left += s;
    }
  }
  return r;
}

/// F on V^{⊗n}: lower y_1 at position j to y_{-1} with factor v^{-(sum of entries right of j)}.
template <CoefficientField K> TensorVector<K> act_F(const TensorVector<K> &x) {
  const int n = x.n();
  TensorVector<K> r(n);
  for (const auto &[m, c] : x.terms()) {
    int right = 0;
    for (int j = n; j >= 1; --j) {
      int s = sign_at(m, n, j);
      if (s == 1)
        r.add_term(m | (Mask{1} << (n - j)), c * vpow<K>(-right));
      right += s;
    }
  }
  return r;
}

/// K = sum_i v^i 1_i.
template <CoefficientField K> TensorVector<K> act_K(const TensorVector<K> &x, int power = 1) {
  TensorVector<K> r(x.n());
  for (const auto &[m, c] : x.terms())
    r.add_term(m, c * vpow<K>(power * mask_weight(m, x.n())));
  return r;
}

/// 1_i: projection onto the weight-i component.
template <CoefficientField K> TensorVector<K> act_weight_idempotent(int i, const TensorVector<K> &x) {
  TensorVector<K> r(x.n());
  for (const auto &[m, c] : x.terms())
    if (mask_weight(m, x.n()) == i)
      r.add_term(m, c);
  return r;
}

template <CoefficientField K> TensorVector<K> act_E_pow(TensorVector<K> x, int a) {
  for (int k = 0; k < a; ++k)
    x = act_E(x);
  return x;
}

template <CoefficientField K> TensorVector<K> act_F_pow(TensorVector<K> x, int a) {
  for (int k = 0; k < a; ++k)
    x = act_F(x);
  return x;
}

/// The symmetric form with the sign basis orthonormal.
template <CoefficientField K> K bilinear_form(const TensorVector<K> &x, const TensorVector<K> &y) {
  if (x.n() != y.n())
    throw std::invalid_argument("bilinear_form: length mismatch");
  const auto &small = x.size() <= y.size() ? x : y;
  const auto &large = x.size() <= y.size() ? y : x;
  K r(0);
  for (const auto &[m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end())
      r += c * it->second;
  }
  return r;
}

/// True iff E kills x. Throws on the zero vector.
template <CoefficientField K> bool is_maximal(const TensorVector<K> &x) {
  if (x.is_zero())
    throw std::invalid_argument("is_maximal: zero vector");
  return act_E(x).is_zero();
}

} // namespace tlortho
