/**
 * @file transitions.hpp
 * @brief Transition matrices between the ν and ω bases of one shape.
 *
 * ν(α) = Σ_β P[α][β] ω(β) and ω(α) = Σ_β P'[α][β] ν(β), with rows and
 * columns in canonical 1-factor order. The entry at (α, β) vanishes unless
 * β ≤ α, and canonical order puts dominance-larger factors first, so both
 * matrices are upper triangular.
 */

#pragma once

#include "matrix.hpp"
#include "maximal.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlortho {

/// v^m Π [s'_j] if β is α-compatible, else 0. Equals ⟨ν(α), ω(β)⟩.
template <CoefficientField K> K pairing_value(const OneFactor &alpha, const OneFactor &beta) {
  if (alpha.length() != beta.length() || alpha.weight() != beta.weight())
    throw std::invalid_argument("pairing_value: alpha and beta must have the same shape");
  if (!is_compatible(alpha, beta))
    return K(0);
  auto pos = beta.minus_positions();
  K r = vpow<K>(static_cast<int>(pos.size()));
  for (int i : pos) {
    int s = beta.prefix_weight(i);
    r = r * qint<K>(alpha.entry(i) == 1 ? -s : s + 1);
  }
  return r;
}

enum class TransitionKind { P, Pprime };

template <CoefficientField K> struct TransitionMatrix {
  Shape shape;
  TransitionKind kind = TransitionKind::P;
  std::vector<OneFactor> index;
  Matrix<K> entries;

  const K &at(const OneFactor &a, const OneFactor &b) const { return entries(position(a), position(b)); }

  std::size_t position(const OneFactor &a) const {
    for (std::size_t k = 0; k < index.size(); ++k)
      if (index[k] == a)
        return k;
    throw std::out_of_range("TransitionMatrix: 1-factor not in this shape");
  }

  /// Entry (α, β) is zero unless β ≤ α, and every diagonal entry is nonzero.
  bool is_triangular() const {
    for (std::size_t r = 0; r < index.size(); ++r)
      for (std::size_t c = 0; c < index.size(); ++c) {
        if (r == c && entries(r, c).is_zero())
          return false;
        if (r != c && !entries(r, c).is_zero() && !dominated_by(index[c], index[r]))
          return false;
      }
    return true;
  }
};

/// P from the closed formula: pairing_value(α, β) / (v^m Π [s_j][s_j+1]).
template <CoefficientField K> TransitionMatrix<K> matrix_P(const Shape &shape) {
  TransitionMatrix<K> t{shape, TransitionKind::P, enumerate_one_factors(shape), {}};
  const std::size_t d = t.index.size();
  t.entries = Matrix<K>(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    K inv = K(1) / omega_norm<K>(t.index[c]);
    for (std::size_t r = 0; r < d; ++r) {
      K p = pairing_value<K>(t.index[r], t.index[c]);
      if (!p.is_zero())
        t.entries(r, c) = p * inv;
    }
  }
  return t;
}

/// P from tensor space: ⟨ν(α), ω(β)⟩ / ⟨ω(β), ω(β)⟩, using orthogonality of the ω.
template <CoefficientField K> TransitionMatrix<K> matrix_P_gram(const Shape &shape) {
  auto om = MaximalBasis<K>::build(shape, BasisKind::Omega);
  auto nu = MaximalBasis<K>::build(shape, BasisKind::Nu);
  TransitionMatrix<K> t{shape, TransitionKind::P, om.index, {}};
  const std::size_t d = t.index.size();
  t.entries = Matrix<K>(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    K inv = K(1) / bilinear_form(om.vectors[c], om.vectors[c]);
    for (std::size_t r = 0; r < d; ++r) {
      K p = bilinear_form(nu.vectors[r], om.vectors[c]);
      if (!p.is_zero())
        t.entries(r, c) = p * inv;
    }
  }
  return t;
}

/// Expansion of ω(α) in the ν basis, following the Φ recursion:
/// Φ1 ν(β) = ν(β⁺) and Φ2 ν(β) = Σ_{j=1}^{d} [j] ν(β^{+(j)}), d = weight of β.
template <CoefficientField K> std::map<OneFactor, K> omega_in_nu(const OneFactor &alpha) {
  std::map<OneFactor, K> cur{{OneFactor(), K(1)}};
  int weight = 0;
  for (int e : alpha.entries()) {
    std::map<OneFactor, K> next;
    auto add = [&](const OneFactor &b, const K &c) {
      auto [it, inserted] = next.try_emplace(b, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
          next.erase(it);
      }
    };
    for (const auto &[beta, c] : cur) {
      if (e == 1) {
        add(beta.plus(), c);
      } else {
        for (int j = 1; j <= weight; ++j)
          add(beta.plus_link(j), c * qint<K>(j));
      }
    }
    weight += e;
    cur = std::move(next);
  }
  return cur;
}

/// P' by the Φ recursion (not by inverting P).
template <CoefficientField K> TransitionMatrix<K> matrix_Pprime(const Shape &shape) {
  TransitionMatrix<K> t{shape, TransitionKind::Pprime, enumerate_one_factors(shape), {}};
  const std::size_t d = t.index.size();
  t.entries = Matrix<K>(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (const auto &[beta, c] : omega_in_nu<K>(t.index[r]))
      t.entries(r, t.position(beta)) = c;
  return t;
}

/**
 * Polynomial in t_1, t_2, ... with integer coefficients. A monomial is its
 * exponent vector with trailing zeros removed.
 */
class PairingPolynomial {
public:
  using Exponents = std::vector<int>;

  void add(Exponents e, const Integer &c) {
    while (!e.empty() && e.back() == 0)
      e.pop_back();
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  /// Monomial Π t_j over the listed variable indices (1-based, repeats allowed).
  static Exponents monomial_of(const std::vector<int> &vars) {
    Exponents e;
    for (int j : vars) {
      if (j < 1)
        throw std::invalid_argument("PairingPolynomial: variable index must be positive");
      if (static_cast<int>(e.size()) < j)
        e.resize(static_cast<std::size_t>(j), 0);
      ++e[static_cast<std::size_t>(j - 1)];
    }
    return e;
  }

  const std::map<Exponents, Integer> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  bool has_nonnegative_coefficients() const {
    for (const auto &t : terms_)
      if (t.second < 0)
        return false;
    return true;
  }

  /// Value at t_j = [j].
  template <CoefficientField K> K at_quantum_integers() const {
    K r(0);
    for (const auto &[e, c] : terms_) {
      K m(1);
      for (std::size_t j = 0; j < e.size(); ++j)
        for (int k = 0; k < e[j]; ++k)
          m = m * qint<K>(static_cast<int>(j) + 1);
      r += m * K(Rational(c));
    }
    return r;
  }

  friend bool operator==(const PairingPolynomial &, const PairingPolynomial &) = default;

  /// e.g. "t1^3 + 2*t1^2*t3", in decreasing lexicographic exponent order.
  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto &[e, c] = *it;
      if (!s.empty())
        s += c < 0 ? " - " : " + ";
      else if (c < 0)
        s += "-";
      Integer a = abs(c);
      std::string mono;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0)
          continue;
        if (!mono.empty())
          mono += "*";
        mono += "t" + std::to_string(j + 1);
        if (e[j] > 1)
          mono += "^" + std::to_string(e[j]);
      }
      if (mono.empty())
        s += a.get_str();
      else
        s += (a == 1 ? "" : a.get_str() + "*") + mono;
    }
    return s;
  }

private:
  std::map<Exponents, Integer> terms_;
};

/// π''(α, β): sum of the pairing monomials of all α◇β-sequences.
inline PairingPolynomial pi_double_prime(const OneFactor &alpha, const OneFactor &beta) {
  PairingPolynomial p;
  for (const auto &seq : diamond_sequences(alpha, beta))
    p.add(PairingPolynomial::monomial_of(seq.pairing_vars), Integer(1));
  return p;
}

} // namespace tlortho
