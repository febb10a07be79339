/**
 * @file maximal.hpp
 * @brief The orthogonal maximal vectors ω(α) and the cellular vectors ν(α).
 *
 * ω(α) applies Φ1 for each +1 entry and Φ2 for each -1 entry of α, left to
 * right, starting from 1 in V^{⊗0}. ν(α) is given by the sign-switch
 * formula; build_nu_nested rebuilds it from the link diagram of α by
 * juxtaposing defects y_1 and nestings Ψ.
 */

#pragma once

#include "shapes.hpp"
#include "tensor.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace tlortho {

/// Φ1(b) = b ⊗ y_1.
template <CoefficientField K> TensorVector<K> phi1(const TensorVector<K> &b) {
  TensorVector<K> r(b.n() + 1);
  for (const auto &[m, c] : b.terms())
    r.add_term(m << 1, c);
  return r;
}

/// Φ2(b) = [i_b] b ⊗ y_{-1} - v^{i_b} Fb ⊗ y_1, for b homogeneous of weight i_b.
template <CoefficientField K> TensorVector<K> phi2(const TensorVector<K> &b, int i_b) {
  for (const auto &t : b.terms())
    if (mask_weight(t.first, b.n()) != i_b)
      throw std::invalid_argument("phi2: input is not homogeneous of the declared weight");
  TensorVector<K> r(b.n() + 1);
  K q = qint<K>(i_b);
  if (!q.is_zero())
    for (const auto &[m, c] : b.terms())
      r.add_term((m << 1) | 1U, c * q);
  K vp = K(0) - vpow<K>(i_b);
  const TensorVector<K> fb = act_F(b);
  for (const auto &[m, c] : fb.terms())
    r.add_term(m << 1, c * vp);
  return r;
}

template <CoefficientField K> TensorVector<K> build_omega(const OneFactor &alpha) {
  TensorVector<K> b = TensorVector<K>::unit();
  int weight = 0;
  for (int e : alpha.entries()) {
    if (e == 1) {
      b = phi1(b);
      ++weight;
    } else {
      b = phi2(b, weight);
      --weight;
    }
  }
  return b;
}

template <CoefficientField K> TensorVector<K> build_omega(const BratteliWalk &p) {
  return build_omega<K>(to_one_factor(p));
}

/// b is an invariant: weight 0 with Eb = Fb = 0 (the unit in degree 0 counts).
template <CoefficientField K> bool is_invariant(const TensorVector<K> &b) {
  for (const auto &t : b.terms())
    if (mask_weight(t.first, b.n()) != 0)
      return false;
  return act_E(b).is_zero() && act_F(b).is_zero();
}

/// Ψ(b) = y_1 ⊗ b ⊗ y_{-1} - v y_{-1} ⊗ b ⊗ y_1, for an invariant b.
template <CoefficientField K> TensorVector<K> psi_nest(const TensorVector<K> &b) {
  if (!is_invariant(b))
    throw std::invalid_argument("psi_nest: argument is not an invariant");
  const int n = b.n();
  TensorVector<K> r(n + 2);
  const Mask top = Mask{1} << (n + 1);
  K mv = K(0) - vpow<K>(1);
  for (const auto &[m, c] : b.terms()) {
    r.add_term((m << 1) | 1U, c);
    r.add_term(top | (m << 1), c * mv);
  }
  return r;
}

/// ν(α) = Σ_S (-v)^{|S|} y(α switched on the pairings in S).
template <CoefficientField K> TensorVector<K> build_nu(const OneFactor &alpha) {
  const int n = alpha.length();
  const auto pairs = alpha.pairings();
  const std::size_t m = pairs.size();
  if (m >= 8 * sizeof(unsigned long))
    throw std::invalid_argument("build_nu: too many pairings");
  Mask base = signs_mask(alpha.entries());
  // Switching pairing (i, j) flips both bits.
  std::vector<Mask> flips;
  for (auto [i, j] : pairs)
    flips.push_back((Mask{1} << (n - i)) | (Mask{1} << (n - j)));
  std::vector<K> coeff{K(1)};
  K mv = K(0) - vpow<K>(1);
  for (std::size_t k = 1; k <= m; ++k)
    coeff.push_back(coeff.back() * mv);
  TensorVector<K> r(n);
  for (unsigned long s = 0; s < (1UL << m); ++s) {
    Mask x = base;
    for (std::size_t k = 0; k < m; ++k)
      if (s >> k & 1UL)
        x ^= flips[k];
    r.add_term(x, coeff[static_cast<std::size_t>(std::popcount(s))]);
  }
  return r;
}

/// ν(α) from the link diagram: defects are y_1, a link around a fully
/// paired block γ is Ψ(ν(γ)), and blocks are juxtaposed by ⊗.
template <CoefficientField K> TensorVector<K> build_nu_nested(const OneFactor &alpha) {
  auto rec = [&](auto &self, int from, int to) -> TensorVector<K> {
    TensorVector<K> r = TensorVector<K>::unit();
    int i = from;
    while (i <= to) {
      int p = alpha.partner(i);
      if (p == 0) {
        r = tensor(r, TensorVector<K>::basis({1}));
        ++i;
      } else {
        r = tensor(r, psi_nest(self(self, i + 1, p - 1)));
        i = p + 1;
      }
    }
    return r;
  };
  return rec(rec, 1, alpha.length());
}

/// s_j: partial sum of β before its j-th -1 entry, j = 1..m.
inline std::vector<int> minus_prefix_sums(const OneFactor &beta) {
  std::vector<int> s;
  for (int j : beta.minus_positions())
    s.push_back(beta.prefix_weight(j));
  return s;
}

/// ⟨ω(β), ω(β)⟩ = v^m Π [s_j][s_j + 1].
template <CoefficientField K> K omega_norm(const OneFactor &beta) {
  auto s = minus_prefix_sums(beta);
  K r = vpow<K>(static_cast<int>(s.size()));
  for (int x : s)
    r = r * qint<K>(x) * qint<K>(x + 1);
  return r;
}

/// ⟨ν(β), ν(β)⟩ = (1 + v^2)^m: the 2^m sign-switched tensors are orthonormal.
template <CoefficientField K> K nu_norm(const OneFactor &beta) {
  K r(1);
  K f = K(1) + vpow<K>(2);
  for (int k = 0; k < beta.num_pairings(); ++k)
    r = r * f;
  return r;
}

enum class BasisKind { Omega, Nu };

inline std::string to_string(BasisKind k) { return k == BasisKind::Omega ? "omega" : "nu"; }

/// The vectors ω(α) or ν(α) for all α of one shape, in canonical order.
template <CoefficientField K> struct MaximalBasis {
  Shape shape;
  BasisKind kind = BasisKind::Omega;
  std::vector<OneFactor> index;
  std::vector<TensorVector<K>> vectors;

  static MaximalBasis build(const Shape &shape, BasisKind kind) {
    MaximalBasis b;
    b.shape = shape;
    b.kind = kind;
    b.index = enumerate_one_factors(shape);
    for (const auto &a : b.index)
      b.vectors.push_back(kind == BasisKind::Omega ? build_omega<K>(a) : build_nu<K>(a));
    return b;
  }

  const TensorVector<K> &at(const OneFactor &a) const {
    for (std::size_t k = 0; k < index.size(); ++k)
      if (index[k] == a)
        return vectors[k];
    throw std::out_of_range("MaximalBasis: 1-factor not in this shape");
  }
};

/// Append-only cache of bases keyed by (shape, kind); safe for concurrent readers.
template <CoefficientField K> class MaximalBasisCache {
public:
  std::shared_ptr<const MaximalBasis<K>> get(const Shape &shape, BasisKind kind) {
    auto key = std::make_tuple(shape.lambda1, shape.lambda2, kind);
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end())
        return it->second;
    }
    auto built = std::make_shared<const MaximalBasis<K>>(MaximalBasis<K>::build(shape, kind));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(key, std::move(built));
    return it->second;
  }

private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, BasisKind>, std::shared_ptr<const MaximalBasis<K>>> cache_;
};

} // namespace tlortho
