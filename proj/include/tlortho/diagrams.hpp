/**
 * @file diagrams.hpp
 * @brief Temperley–Lieb diagrams, their action on V^{⊗n} and on the
 *        diagrammatic cell modules, the map φ(ℓ) = ν(α^ℓ), and the closed
 *        form of e_i on the ω basis.
 *
 * A planar diagram on 2n vertices numbers the top row 1..n and the bottom
 * row n+1..2n (bottom vertex i' is n+i). D1 ∘ D2 glues the bottom of D1 to
 * the top of D2, so as operators D2 acts first.
 *
 * Sign convention: with DeltaSign::Minus (the default) e_i acts on V^{⊗n}
 * by -(v+v^{-1})ż_0 in positions i, i+1 and closed loops are worth
 * δ = -(v+v^{-1}). DeltaSign::Plus negates both.
 */

#pragma once

#include "maximal.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tlortho {

enum class DeltaSign { Plus, Minus };

inline std::string to_string(DeltaSign s) { return s == DeltaSign::Minus ? "minus" : "plus"; }

/// δ = ±(v + v^{-1}).
template <CoefficientField K> K loop_value(DeltaSign s) {
  K d = qint<K>(2);
  return s == DeltaSign::Minus ? K(0) - d : d;
}

class PlanarDiagram {
public:
  PlanarDiagram() = default;

  /// partner has 2n entries; partner[v-1] is the vertex joined to v.
  PlanarDiagram(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) { validate(); }

  static PlanarDiagram identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
      p[static_cast<std::size_t>(i - 1)] = n + i;
      p[static_cast<std::size_t>(n + i - 1)] = i;
    }
    return PlanarDiagram(n, std::move(p));
  }

  /// e_i: caps joining i, i+1 on top and bottom, all other strands vertical.
  static PlanarDiagram generator(int n, int i) {
    if (i < 1 || i >= n)
      throw std::out_of_range("PlanarDiagram::generator: index out of range");
    auto d = identity(n);
    auto set = [&](int a, int b) {
      d.partner_[static_cast<std::size_t>(a - 1)] = b;
      d.partner_[static_cast<std::size_t>(b - 1)] = a;
    };
    set(i, i + 1);
    set(n + i, n + i + 1);
    return d;
  }

  int n() const { return n_; }
  int partner(int v) const { return partner_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int> &partners() const { return partner_; }

  /// Number of strands joining the top row to the bottom row.
  int propagating() const {
    int c = 0;
    for (int i = 1; i <= n_; ++i)
      if (partner(i) > n_)
        ++c;
    return c;
  }

  friend bool operator==(const PlanarDiagram &, const PlanarDiagram &) = default;
  friend auto operator<=>(const PlanarDiagram &, const PlanarDiagram &) = default;

private:
  int n_ = 0;
  std::vector<int> partner_;

  // Boundary position walking clockwise: top 1..n, then bottom n'..1'.
  int boundary(int v) const { return v <= n_ ? v : 3 * n_ + 1 - v; }

  void validate() const {
    if (n_ < 0 || partner_.size() != static_cast<std::size_t>(2 * n_))
      throw std::invalid_argument("PlanarDiagram: need 2n partner entries");
    for (int v = 1; v <= 2 * n_; ++v) {
      int p = partner(v);
      if (p < 1 || p > 2 * n_ || p == v || partner(p) != v)
        throw std::invalid_argument("PlanarDiagram: not a perfect matching");
    }
    std::vector<int> by_pos(static_cast<std::size_t>(2 * n_ + 1));
    for (int v = 1; v <= 2 * n_; ++v)
      by_pos[static_cast<std::size_t>(boundary(v))] = v;
    std::vector<int> open;
    for (int pos = 1; pos <= 2 * n_; ++pos) {
      int v = by_pos[static_cast<std::size_t>(pos)];
      int q = boundary(partner(v));
      if (q > pos) {
        open.push_back(pos);
      } else {
        if (open.empty() || open.back() != q)
          throw std::invalid_argument("PlanarDiagram: edges cross");
        open.pop_back();
      }
    }
  }
};

/// D1 ∘ D2 and the number of closed loops removed.
inline std::pair<PlanarDiagram, int> compose_diagrams(const PlanarDiagram &d1, const PlanarDiagram &d2) {
  const int n = d1.n();
  if (d2.n() != n)
    throw std::invalid_argument("compose_diagrams: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(2 * n), 0);
  std::vector<bool> mid_seen(static_cast<std::size_t>(n + 1), false);

  // Follow a strand entering the middle row at k from diagram `from_top`
  // (true: came down out of d1) until it leaves at an outer vertex.
  auto follow = [&](int k, bool from_top) {
    for (;;) {
      mid_seen[static_cast<std::size_t>(k)] = true;
      if (from_top) {
        int q = d2.partner(k);
        if (q > n)
          return q; // bottom of d2 = bottom of result
        k = q;
        from_top = false;
      } else {
        int p = d1.partner(n + k);
        if (p <= n)
          return p;
        k = p - n;
        from_top = true;
      }
      mid_seen[static_cast<std::size_t>(k)] = true;
    }
  };
  auto join = [&](int a, int b) {
    out[static_cast<std::size_t>(a - 1)] = b;
    out[static_cast<std::size_t>(b - 1)] = a;
  };
  for (int t = 1; t <= n; ++t) {
    if (out[static_cast<std::size_t>(t - 1)] != 0)
      continue;
    int p = d1.partner(t);
    join(t, p <= n ? p : follow(p - n, true));
  }
  for (int b = n + 1; b <= 2 * n; ++b) {
    if (out[static_cast<std::size_t>(b - 1)] != 0)
      continue;
    int q = d2.partner(b);
    join(b, q > n ? q : follow(q, false));
  }
  int loops = 0;
  for (int k = 1; k <= n; ++k) {
    if (mid_seen[static_cast<std::size_t>(k)])
      continue;
    ++loops;
    int cur = k;
    do {
      mid_seen[static_cast<std::size_t>(cur)] = true;
      int q = d2.partner(cur);
      mid_seen[static_cast<std::size_t>(q)] = true;
      cur = d1.partner(n + q) - n;
    } while (cur != k);
  }
  return {PlanarDiagram(n, std::move(out)), loops};
}

/// All planar diagrams on 2n vertices (Catalan(n) of them), in container order.
inline std::vector<PlanarDiagram> enumerate_diagrams(int n) {
  if (n < 1)
    throw std::invalid_argument("enumerate_diagrams: n must be positive");
  std::vector<PlanarDiagram> out;
  // Non-crossing perfect matchings of the boundary positions 1..2n.
  auto to_vertex = [n](int pos) { return pos <= n ? pos : 3 * n + 1 - pos; };
  auto gen = [&](auto &self, int lo, int hi) -> std::vector<std::vector<std::pair<int, int>>> {
    if (lo > hi)
      return {{}};
    std::vector<std::vector<std::pair<int, int>>> res;
    for (int j = lo + 1; j <= hi; j += 2)
      for (const auto &inner : self(self, lo + 1, j - 1))
        for (const auto &outer : self(self, j + 1, hi)) {
          auto m = inner;
          m.emplace_back(lo, j);
          m.insert(m.end(), outer.begin(), outer.end());
          res.push_back(std::move(m));
        }
    return res;
  };
  for (const auto &m : gen(gen, 1, 2 * n)) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (auto [a, b] : m) {
      int va = to_vertex(a), vb = to_vertex(b);
      p[static_cast<std::size_t>(va - 1)] = vb;
      p[static_cast<std::size_t>(vb - 1)] = va;
    }
    out.emplace_back(n, std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A word i_1 ... i_k with D = e_{i_1} ∘ ... ∘ e_{i_k} and no loops formed.
/// The empty word is the identity. Results are cached per n.
inline std::vector<int> diagram_word(const PlanarDiagram &d) {
  static std::mutex mutex;
  static std::map<int, std::map<PlanarDiagram, std::vector<int>>> cache;
  std::lock_guard lock(mutex);
  auto &words = cache[d.n()];
  if (words.empty()) {
    const int n = d.n();
    std::deque<PlanarDiagram> queue{PlanarDiagram::identity(n)};
    words.emplace(queue.front(), std::vector<int>{});
    while (!queue.empty()) {
      PlanarDiagram cur = queue.front();
      queue.pop_front();
      for (int i = 1; i < n; ++i) {
        auto [next, loops] = compose_diagrams(PlanarDiagram::generator(n, i), cur);
        if (loops != 0 || words.count(next))
          continue;
        std::vector<int> w{i};
        const auto &tail = words.at(cur);
        w.insert(w.end(), tail.begin(), tail.end());
        words.emplace(next, std::move(w));
        queue.push_back(next);
      }
    }
  }
  auto it = words.find(d);
  if (it == words.end())
    throw std::logic_error("diagram_word: diagram not reached from generators");
  return it->second;
}

/// Element of TL_n(δ): a linear combination of planar diagrams.
template <CoefficientField K> class TLElement {
public:
  TLElement(int n, DeltaSign sign) : n_(n), sign_(sign) {}

  static TLElement from_diagram(const PlanarDiagram &d, DeltaSign sign, const K &c = K(1)) {
    TLElement e(d.n(), sign);
    e.add(d, c);
    return e;
  }
  static TLElement identity(int n, DeltaSign sign) { return from_diagram(PlanarDiagram::identity(n), sign); }
  static TLElement generator(int n, int i, DeltaSign sign) {
    return from_diagram(PlanarDiagram::generator(n, i), sign);
  }

  int n() const { return n_; }
  DeltaSign sign() const { return sign_; }
  const std::map<PlanarDiagram, K> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PlanarDiagram &d, const K &c) {
    if (d.n() != n_)
      throw std::invalid_argument("TLElement: size mismatch");
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  TLElement &operator+=(const TLElement &o) {
    check(o);
    for (const auto &[d, c] : o.terms_)
      add(d, c);
    return *this;
  }
  TLElement &operator-=(const TLElement &o) {
    check(o);
    for (const auto &[d, c] : o.terms_)
      add(d, K(0) - c);
    return *this;
  }
  friend TLElement operator+(TLElement a, const TLElement &b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement &b) { return a -= b; }

  friend TLElement operator*(const TLElement &a, const TLElement &b) {
    a.check(b);
    TLElement r(a.n_, a.sign_);
    const K delta = loop_value<K>(a.sign_);
    for (const auto &[d1, c1] : a.terms_)
      for (const auto &[d2, c2] : b.terms_) {
        auto [d, loops] = compose_diagrams(d1, d2);
        K c = c1 * c2;
        for (int k = 0; k < loops; ++k)
          c = c * delta;
        r.add(d, c);
      }
    return r;
  }

  friend bool operator==(const TLElement &a, const TLElement &b) {
    return a.n_ == b.n_ && a.sign_ == b.sign_ && a.terms_ == b.terms_;
  }

private:
  int n_;
  DeltaSign sign_;
  std::map<PlanarDiagram, K> terms_;

  void check(const TLElement &o) const {
    if (o.n_ != n_ || o.sign_ != sign_)
      throw std::invalid_argument("TLElement: operands differ in size or sign convention");
  }
};

// ---------------------------------------------------------------------------
// Action on tensor space
// ---------------------------------------------------------------------------

/// e_i on V^{⊗n}. In positions i, i+1 the matrix (v+v^{-1})ż_0 sends
/// y_{1,-1} ↦ v^{-1} y_{1,-1} - y_{-1,1} and y_{-1,1} ↦ -y_{1,-1} + v y_{-1,1},
/// and kills y_{1,1}, y_{-1,-1}; e_i is its negative under DeltaSign::Minus.
template <CoefficientField K>
TensorVector<K> apply_ei(int i, const TensorVector<K> &t, DeltaSign sign = DeltaSign::Minus) {
  const int n = t.n();
  if (i < 1 || i >= n)
    throw std::out_of_range("apply_ei: index out of range");
  const Mask hi = Mask{1} << (n - i);
  const Mask lo = Mask{1} << (n - i - 1);
  const K s = sign == DeltaSign::Minus ? K(-1) : K(1);
  const K vinv = s * vpow<K>(-1);
  const K vv = s * vpow<K>(1);
  const K ms = K(0) - s;
  TensorVector<K> r(n);
  for (const auto &[m, c] : t.terms()) {
    bool a = m & hi, b = m & lo;
    if (a == b)
      continue;
    Mask rest = m & ~(hi | lo);
    Mask pm = rest | lo; // y_{1,-1}
    Mask mp = rest | hi; // y_{-1,1}
    if (!a) {
      r.add_term(pm, c * vinv);
      r.add_term(mp, c * ms);
    } else {
      r.add_term(pm, c * ms);
      r.add_term(mp, c * vv);
    }
  }
  return r;
}

/// The action of one diagram, through its generator word.
template <CoefficientField K>
TensorVector<K> apply_diagram(const PlanarDiagram &d, TensorVector<K> t, DeltaSign sign = DeltaSign::Minus) {
  if (d.n() != t.n())
    throw std::invalid_argument("apply_diagram: size mismatch");
  auto w = diagram_word(d);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    t = apply_ei(*it, t, sign);
  return t;
}

template <CoefficientField K> TensorVector<K> tl_act_on_tensor(const TLElement<K> &x, const TensorVector<K> &t) {
  if (x.n() != t.n())
    throw std::invalid_argument("tl_act_on_tensor: size mismatch");
  TensorVector<K> r(t.n());
  for (const auto &[d, c] : x.terms())
    r += apply_diagram(d, t, x.sign()) * c;
  return r;
}

/// Full matrix of e_i on V^{⊗n} in sign-basis (mask) order; column j is e_i y_j.
template <CoefficientField K> Matrix<K> ei_matrix(int n, int i, DeltaSign sign = DeltaSign::Minus) {
  if (i < 1 || i >= n)
    throw std::out_of_range("ei_matrix: index out of range");
  const std::size_t dim = std::size_t{1} << n;
  Matrix<K> m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto col = apply_ei(i, TensorVector<K>::basis_mask(n, static_cast<Mask>(j)), sign);
    for (const auto &[r, c] : col.terms())
      m(r, j) = c;
  }
  return m;
}

/// Matrix of a diagram's action on V^{⊗n}.
template <CoefficientField K> Matrix<K> diagram_matrix(const PlanarDiagram &d, DeltaSign sign = DeltaSign::Minus) {
  const int n = d.n();
  const std::size_t dim = std::size_t{1} << n;
  Matrix<K> m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto col = apply_diagram(d, TensorVector<K>::basis_mask(n, static_cast<Mask>(j)), sign);
    for (const auto &[r, c] : col.terms())
      m(r, j) = c;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Cell modules
// ---------------------------------------------------------------------------

/// Element of L(d): half-diagrams with exactly d defects.
template <CoefficientField K> class CellModuleElement {
public:
  CellModuleElement(int n, int defects) : n_(n), defects_(defects) {}

  static CellModuleElement basis(const LinkDiagram &l, const K &c = K(1)) {
    CellModuleElement e(l.size(), l.num_defects());
    e.add(l, c);
    return e;
  }

  int n() const { return n_; }
  int defects() const { return defects_; }
  const std::map<LinkDiagram, K> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const LinkDiagram &l, const K &c) {
    if (l.size() != n_ || l.num_defects() != defects_)
      throw std::invalid_argument("CellModuleElement: diagram not in this cell module");
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(l, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  friend bool operator==(const CellModuleElement &, const CellModuleElement &) = default;

private:
  int n_;
  int defects_;
  std::map<LinkDiagram, K> terms_;
};

/// D stacked on ℓ: the half-diagram read off D's top row and the number of
/// closed loops, or nullopt when two defects of ℓ are joined.
inline std::optional<std::pair<LinkDiagram, int>> stack_on_half(const PlanarDiagram &d, const LinkDiagram &l) {
  const int n = d.n();
  if (l.size() != n)
    throw std::invalid_argument("cell_act: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int t = 1; t <= n; ++t) {
    if (out[static_cast<std::size_t>(t - 1)] != -1)
      continue;
    int cur = d.partner(t);
    int end = 0;
    for (;;) {
      if (cur <= n) {
        end = cur;
        break;
      }
      int k = cur - n;
      seen[static_cast<std::size_t>(k)] = true;
      int q = l.partner(k);
      if (q == 0)
        break;
      seen[static_cast<std::size_t>(q)] = true;
      cur = d.partner(n + q);
    }
    out[static_cast<std::size_t>(t - 1)] = end;
    if (end != 0)
      out[static_cast<std::size_t>(end - 1)] = t;
  }
  int result_defects = static_cast<int>(std::count(out.begin(), out.end(), 0));
  if (result_defects < l.num_defects())
    return std::nullopt;
  int loops = 0;
  for (int k = 1; k <= n; ++k) {
    if (seen[static_cast<std::size_t>(k)] || l.partner(k) == 0)
      continue;
    ++loops;
    int cur = k;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      int q = l.partner(cur);
      seen[static_cast<std::size_t>(q)] = true;
      cur = d.partner(n + q) - n;
    } while (cur != k);
  }
  return std::make_pair(LinkDiagram(std::move(out)), loops);
}

/// D ℓ = δ^N (D ∘ ℓ) in L(d), with results having fewer defects set to 0.
template <CoefficientField K>
CellModuleElement<K> cell_act(const PlanarDiagram &d, const CellModuleElement<K> &x,
                              DeltaSign sign = DeltaSign::Minus) {
  CellModuleElement<K> r(x.n(), x.defects());
  const K delta = loop_value<K>(sign);
  for (const auto &[l, c] : x.terms()) {
    auto res = stack_on_half(d, l);
    if (!res)
      continue;
    K coeff = c;
    for (int k = 0; k < res->second; ++k)
      coeff = coeff * delta;
    r.add(res->first, coeff);
  }
  return r;
}

/// φ(ℓ) = ν(α^ℓ).
template <CoefficientField K> TensorVector<K> phi_map(const LinkDiagram &l) {
  return build_nu<K>(to_one_factor(l));
}

template <CoefficientField K> TensorVector<K> phi_map(const CellModuleElement<K> &x) {
  TensorVector<K> r(x.n());
  for (const auto &[l, c] : x.terms())
    r += phi_map<K>(l) * c;
  return r;
}

/// e_i ω(α) in the ω basis, by the closed form. w is the sum of the entries
/// before position i and β is α with entries i, i+1 exchanged.
template <CoefficientField K> std::map<OneFactor, K> ei_on_omega(const OneFactor &alpha, int i) {
  if (i < 1 || i >= alpha.length())
    throw std::out_of_range("ei_on_omega: index out of range");
  std::map<OneFactor, K> r;
  const int a = alpha.entry(i), b = alpha.entry(i + 1);
  if (a == b)
    return r;
  const int w = alpha.prefix_weight(i);
  if (w == 0) {
    r.emplace(alpha, K(0) - qint<K>(2));
    return r;
  }
  auto e = alpha.entries();
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
  OneFactor beta(std::move(e));
  K c = (a == 1 ? qint<K>(w + 2) : qint<K>(w)) / qint<K>(w + 1);
  r.emplace(beta, c);
  r.emplace(alpha, K(0) - c);
  return r;
}

} // namespace tlortho
