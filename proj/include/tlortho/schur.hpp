/**
 * @file schur.hpp
 * @brief The simple modules V(m) of the Schur algebra S(n), generator
 *        words, the faithful representation ⊕_{m ∈ X(n)+} V(m), and the
 *        involutions ω, σ, *.
 *
 * V(m) has basis x_a = F^a 1_m, 0 <= a <= m, of weight m - 2a, with
 * F x_a = x_{a+1} and E x_a = [m-a+1][a] x_{a-1}.
 */

#pragma once

#include "matrix.hpp"
#include "shapes.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tlortho {

/// One letter of a word in the generators. E and F carry an ordinary power
/// (1 for the bare generator); EDiv/FDiv are divided powers; Idem is 1_i.
struct Token {
  enum class Kind { E, F, EDiv, FDiv, Idem };
  Kind kind = Kind::E;
  int param = 1;

  static Token E(int power = 1) { return {Kind::E, power}; }
  static Token F(int power = 1) { return {Kind::F, power}; }
  static Token Ediv(int a) { return {Kind::EDiv, a}; }
  static Token Fdiv(int a) { return {Kind::FDiv, a}; }
  static Token idem(int i) { return {Kind::Idem, i}; }

  friend bool operator==(const Token &, const Token &) = default;

  std::string to_string() const {
    switch (kind) {
    case Kind::E:
      return param == 1 ? "E" : "E^" + std::to_string(param);
    case Kind::F:
      return param == 1 ? "F" : "F^" + std::to_string(param);
    case Kind::EDiv:
      return "E^(" + std::to_string(param) + ")";
    case Kind::FDiv:
      return "F^(" + std::to_string(param) + ")";
    case Kind::Idem:
      return "1_" + std::to_string(param);
    }
    return "?";
  }
};

using GeneratorWord = std::vector<Token>;

inline std::string to_string(const GeneratorWord &w) {
  std::string s;
  for (const auto &t : w) {
    if (!s.empty())
      s += " ";
    s += t.to_string();
  }
  return s;
}

/// Parse words such as "F^(2) 1_2 E^(2)" or "E*F^3*1_{-1}".
inline GeneratorWord parse_word(const std::string &text) {
  GeneratorWord w;
  std::size_t pos = 0;
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("parse_word: " + why + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
      ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return std::stoi(text.substr(start, pos - start));
  };
  auto read_bracketed = [&](char open, char close) {
    if (pos < text.size() && text[pos] == open) {
      ++pos;
      int x = read_int();
      if (pos >= text.size() || text[pos] != close)
        fail(std::string("expected '") + close + "'");
      ++pos;
      return x;
    }
    return read_int();
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    if (c == 'E' || c == 'F') {
      ++pos;
      bool is_e = c == 'E';
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos < text.size() && text[pos] == '(') {
          int a = read_bracketed('(', ')');
          if (a < 0)
            fail("negative divided power");
          w.push_back(is_e ? Token::Ediv(a) : Token::Fdiv(a));
        } else {
          int a = read_bracketed('{', '}');
          if (a < 0)
            fail("negative power");
          w.push_back(is_e ? Token::E(a) : Token::F(a));
        }
      } else {
        w.push_back(is_e ? Token::E() : Token::F());
      }
      continue;
    }
    if (c == '1' && pos + 1 < text.size() && text[pos + 1] == '_') {
      pos += 2;
      int i = text[pos] == '(' ? read_bracketed('(', ')') : read_bracketed('{', '}');
      w.push_back(Token::idem(i));
      continue;
    }
    fail("unexpected character");
  }
  return w;
}

enum class Involution { Omega, Sigma, Star };

/// ω: E↔F, 1_i ↦ 1_{-i}, order kept. σ: E, F fixed, 1_i ↦ 1_{-i}, order
/// reversed. * = ωσ: E↔F, 1_i fixed, order reversed.
inline GeneratorWord apply_involution(const GeneratorWord &w, Involution which) {
  GeneratorWord r;
  const bool swap_ef = which != Involution::Sigma;
  const bool negate_idem = which != Involution::Star;
  for (auto t : w) {
    if (swap_ef) {
      switch (t.kind) {
      case Token::Kind::E:
        t.kind = Token::Kind::F;
        break;
      case Token::Kind::F:
        t.kind = Token::Kind::E;
        break;
      case Token::Kind::EDiv:
        t.kind = Token::Kind::FDiv;
        break;
      case Token::Kind::FDiv:
        t.kind = Token::Kind::EDiv;
        break;
      case Token::Kind::Idem:
        break;
      }
    }
    if (negate_idem && t.kind == Token::Kind::Idem)
      t.param = -t.param;
    r.push_back(t);
  }
  if (which != Involution::Omega)
    std::reverse(r.begin(), r.end());
  return r;
}

/// Vector of V(m) in the basis x_0..x_m.
template <CoefficientField K> struct VmVector {
  int m = 0;
  std::map<int, K> coords;

  static VmVector basis(int m, int a) {
    if (a < 0 || a > m)
      throw std::out_of_range("VmVector: basis index out of range");
    VmVector x{m, {}};
    x.coords.emplace(a, K(1));
    return x;
  }

  void add(int a, const K &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = coords.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        coords.erase(it);
    }
  }

  friend bool operator==(const VmVector &, const VmVector &) = default;
};

/// Action of one token on V(m).
template <CoefficientField K> VmVector<K> vm_act(const Token &t, const VmVector<K> &x) {
  const int m = x.m;
  if (t.kind != Token::Kind::Idem && t.param < 0)
    throw std::invalid_argument("vm_act: negative power");
  VmVector<K> r{m, {}};
  for (const auto &[a, c] : x.coords) {
    switch (t.kind) {
    case Token::Kind::Idem:
      if (t.param == m - 2 * a)
        r.add(a, c);
      break;
    case Token::Kind::F:
    case Token::Kind::FDiv: {
      int k = t.param;
      if (a + k > m)
        break;
      K coeff = c;
      if (t.kind == Token::Kind::FDiv)
        coeff = coeff / qfactorial<K>(k);
      r.add(a + k, coeff);
      break;
    }
    case Token::Kind::E:
    case Token::Kind::EDiv: {
      int k = t.param;
      if (a - k < 0)
        break;
      K coeff = c;
      for (int b = a; b > a - k; --b)
        coeff = coeff * qint<K>(m - b + 1) * qint<K>(b);
      if (t.kind == Token::Kind::EDiv)
        coeff = coeff / qfactorial<K>(k);
      r.add(a - k, coeff);
      break;
    }
    }
  }
  return r;
}

/// One square block per m ∈ X(n)+, in decreasing m.
template <CoefficientField K> struct BlockMatrix {
  std::vector<int> weights;
  std::vector<Matrix<K>> blocks;

  static BlockMatrix zero(const std::vector<int> &weights) {
    BlockMatrix b{weights, {}};
    for (int m : weights)
      b.blocks.emplace_back(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(m + 1));
    return b;
  }
  static BlockMatrix identity(const std::vector<int> &weights) {
    BlockMatrix b{weights, {}};
    for (int m : weights)
      b.blocks.push_back(Matrix<K>::identity(static_cast<std::size_t>(m + 1)));
    return b;
  }

  bool is_zero() const {
    for (const auto &m : blocks)
      if (!m.is_zero())
        return false;
    return true;
  }

  BlockMatrix transpose() const {
    BlockMatrix r{weights, {}};
    for (const auto &m : blocks)
      r.blocks.push_back(m.transpose());
    return r;
  }

  BlockMatrix &operator+=(const BlockMatrix &o) {
    for (std::size_t k = 0; k < blocks.size(); ++k)
      blocks[k] += o.blocks.at(k);
    return *this;
  }
  BlockMatrix &operator-=(const BlockMatrix &o) {
    for (std::size_t k = 0; k < blocks.size(); ++k)
      blocks[k] -= o.blocks.at(k);
    return *this;
  }
  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix &b) { return a += b; }
  friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix &b) { return a -= b; }
  friend BlockMatrix operator*(const K &c, BlockMatrix a) {
    for (auto &m : a.blocks)
      m *= c;
    return a;
  }
  friend BlockMatrix operator*(const BlockMatrix &a, const BlockMatrix &b) {
    BlockMatrix r{a.weights, {}};
    for (std::size_t k = 0; k < a.blocks.size(); ++k)
      r.blocks.push_back(a.blocks[k] * b.blocks.at(k));
    return r;
  }
  friend bool operator==(const BlockMatrix &a, const BlockMatrix &b) { return a.blocks == b.blocks; }
  friend bool operator!=(const BlockMatrix &a, const BlockMatrix &b) { return !(a == b); }

  /// All entries as one flat vector, block by block, row-major.
  std::vector<K> flatten() const {
    std::vector<K> out;
    for (const auto &m : blocks)
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          out.push_back(m(r, c));
    return out;
  }
};

/// ⊕_{m ∈ X(n)+} V(m), a faithful representation of S(n) when [n]! != 0.
template <CoefficientField K> class FaithfulRep {
public:
  explicit FaithfulRep(int n) : n_(n) {
    if (n < 0)
      throw std::invalid_argument("FaithfulRep: n must be nonnegative");
    for (int m = n; m >= 0; m -= 2)
      weights_.push_back(m);
  }

  int n() const { return n_; }
  const std::vector<int> &weights() const { return weights_; }

  /// X(n) = {-n, -n+2, ..., n}.
  std::vector<int> weight_set() const {
    std::vector<int> x;
    for (int i = -n_; i <= n_; i += 2)
      x.push_back(i);
    return x;
  }

  BlockMatrix<K> identity() const { return BlockMatrix<K>::identity(weights_); }
  BlockMatrix<K> zero() const { return BlockMatrix<K>::zero(weights_); }

  BlockMatrix<K> token_matrix(const Token &t) const {
    BlockMatrix<K> b = zero();
    if ((t.kind == Token::Kind::EDiv || t.kind == Token::Kind::FDiv) && t.param > n_)
      return b;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      int m = weights_[k];
      for (int a = 0; a <= m; ++a)
        for (const auto &[r, c] : vm_act(t, VmVector<K>::basis(m, a)).coords)
          b.blocks[k](static_cast<std::size_t>(r), static_cast<std::size_t>(a)) = c;
    }
    return b;
  }

  /// Product of the token matrices; the leftmost token acts last.
  BlockMatrix<K> word_matrix(const GeneratorWord &w) const {
    BlockMatrix<K> r = identity();
    for (const auto &t : w)
      r = r * token_matrix(t);
    return r;
  }

  BlockMatrix<K> word_matrix(const std::string &w) const { return word_matrix(parse_word(w)); }

  /// J: x_a ↦ c_a x_{m-a} with c_0 = 1, c_{a+1} = c_a [a+1][m-a]; J M(w) J^{-1} = M(ω(w)).
  BlockMatrix<K> omega_conjugator() const {
    BlockMatrix<K> j = zero();
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      int m = weights_[k];
      auto c = recursion_constants(m);
      for (int a = 0; a <= m; ++a)
        j.blocks[k](static_cast<std::size_t>(m - a), static_cast<std::size_t>(a)) = c[static_cast<std::size_t>(a)];
    }
    return j;
  }

  /// Diagonal G with g_a = c_a; G^{-1} M(w)^T G = M(*w).
  BlockMatrix<K> star_gram() const {
    BlockMatrix<K> g = zero();
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      int m = weights_[k];
      auto c = recursion_constants(m);
      for (int a = 0; a <= m; ++a)
        g.blocks[k](static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = c[static_cast<std::size_t>(a)];
    }
    return g;
  }

  BlockMatrix<K> omega_conjugator_inverse() const {
    BlockMatrix<K> j = zero();
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      int m = weights_[k];
      auto c = recursion_constants(m);
      for (int a = 0; a <= m; ++a)
        j.blocks[k](static_cast<std::size_t>(a), static_cast<std::size_t>(m - a)) =
            K(1) / c[static_cast<std::size_t>(a)];
    }
    return j;
  }

  BlockMatrix<K> star_gram_inverse() const {
    BlockMatrix<K> g = zero();
    for (std::size_t k = 0; k < weights_.size(); ++k) {
      int m = weights_[k];
      auto c = recursion_constants(m);
      for (int a = 0; a <= m; ++a)
        g.blocks[k](static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = K(1) / c[static_cast<std::size_t>(a)];
    }
    return g;
  }

  /// The matrix of the image of w under `which`, computed from M(w) alone.
  BlockMatrix<K> involution_image(const BlockMatrix<K> &mw, Involution which) const {
    switch (which) {
    case Involution::Omega:
      return omega_conjugator() * mw * omega_conjugator_inverse();
    case Involution::Star:
      return star_gram_inverse() * mw.transpose() * star_gram();
    case Involution::Sigma:
      return omega_conjugator() * (star_gram_inverse() * mw.transpose() * star_gram()) * omega_conjugator_inverse();
    }
    throw std::invalid_argument("involution_image: unknown involution");
  }

private:
  int n_;
  std::vector<int> weights_;

  static std::vector<K> recursion_constants(int m) {
    std::vector<K> c{K(1)};
    for (int a = 0; a < m; ++a)
      c.push_back(c.back() * qint<K>(a + 1) * qint<K>(m - a));
    return c;
  }
};

/// Both divided-power commutation identities for (a, b, i), as matrix equalities:
///   E^(a) 1_{-i} F^(b) = Σ_t [a+b-i, t] F^(b-t) 1_{-i+2(a+b-t)} E^(a-t)
///   F^(b) 1_i E^(a)   = Σ_t [a+b-i, t] E^(a-t) 1_{i-2(a+b-t)} F^(b-t)
template <CoefficientField K> std::pair<bool, bool> verify_lu_identity(const FaithfulRep<K> &rep, int a, int b, int i) {
  auto lhs1 = rep.word_matrix({Token::Ediv(a), Token::idem(-i), Token::Fdiv(b)});
  auto lhs2 = rep.word_matrix({Token::Fdiv(b), Token::idem(i), Token::Ediv(a)});
  auto rhs1 = rep.zero();
  auto rhs2 = rep.zero();
  for (int t = 0; t <= std::min(a, b); ++t) {
    K c = qbinom<K>(a + b - i, t);
    if (c.is_zero())
      continue;
    rhs1 += c * rep.word_matrix({Token::Fdiv(b - t), Token::idem(-i + 2 * (a + b - t)), Token::Ediv(a - t)});
    rhs2 += c * rep.word_matrix({Token::Ediv(a - t), Token::idem(i - 2 * (a + b - t)), Token::Fdiv(b - t)});
  }
  return {lhs1 == rhs1, lhs2 == rhs2};
}

/// dim S(n) = Σ_{m ∈ X(n)+} (m+1)^2.
inline std::uint64_t schur_dimension(int n) {
  if (n < 0)
    throw std::invalid_argument("schur_dimension: n must be nonnegative");
  std::uint64_t d = 0;
  for (int m = n; m >= 0; m -= 2)
    d += static_cast<std::uint64_t>(m + 1) * static_cast<std::uint64_t>(m + 1);
  return d;
}

} // namespace tlortho
