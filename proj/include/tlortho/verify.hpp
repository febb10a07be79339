/**
 * @file verify.hpp
 * @brief Verification suites: each runs a family of exact identities up to
 *        a size bound and records every failed equality with both sides.
 *
 * Suites templated on K run unchanged over Q(v) (Scalar) or at a fixed
 * point v = v0 (AtPoint).
 */

#pragma once

#include "diagrams.hpp"
#include "schur.hpp"
#include "serialize.hpp"
#include "transitions.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tlortho {

struct Failure {
  Json inputs;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  std::optional<Shape> shape;
  std::uint64_t checks = 0;
  std::vector<Failure> failures;
  double wall_time_ms = 0;
  Json notes = Json::object();

  bool passed() const { return failures.empty(); }

  Json to_json() const {
    Json f = Json::array();
    for (const auto &x : failures)
      f.push_back(Json{{"inputs", x.inputs}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return Json{{"suite", suite},
                {"n", n},
                {"shape", shape ? tlortho::to_json(*shape) : Json()},
                {"checks", checks},
                {"failures", f},
                {"wall_time_ms", wall_time_ms},
                {"passed", passed()},
                {"notes", notes}};
  }
};

namespace detail {

template <class T> std::string show(const T &x) {
  if constexpr (std::is_same_v<T, bool>)
    return x ? "true" : "false";
  else if constexpr (std::is_arithmetic_v<T>)
    return std::to_string(x);
  else if constexpr (std::is_same_v<T, std::string>)
    return x;
  else if constexpr (requires { x.to_string(); })
    return x.to_string();
  else if constexpr (requires { x.rows(); })
    return "<" + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " matrix>";
  else if constexpr (requires { x.blocks; })
    return "<block matrix>";
  else
    return "<value>";
}

} // namespace detail

/// Accumulates checks into a report.
class Recorder {
public:
  explicit Recorder(VerificationReport &r) : report_(r) {}

  template <class L, class R> bool equal(const Json &inputs, const L &lhs, const R &rhs) {
    ++report_.checks;
    if (lhs == rhs)
      return true;
    report_.failures.push_back({inputs, detail::show(lhs), detail::show(rhs)});
    return false;
  }

  bool expect(const Json &inputs, bool ok, const std::string &what) {
    return equal(Json{{"inputs", inputs}, {"claim", what}}, ok, true);
  }

  Json &notes() { return report_.notes; }

private:
  VerificationReport &report_;
};

/// Runs body(recorder) and fills in timing.
inline VerificationReport run_timed(const std::string &suite, int n, const std::function<void(Recorder &)> &body) {
  VerificationReport r;
  r.suite = suite;
  r.n = n;
  Recorder rec(r);
  auto t0 = std::chrono::steady_clock::now();
  body(rec);
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Random coefficient c v^e with small nonzero integer c.
template <CoefficientField K> K random_coeff(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  int x = 0;
  while (x == 0)
    x = c(rng);
  return K(x) * vpow<K>(e(rng));
}

/// Random vector of V^{⊗n}, homogeneous of weight w if given.
template <CoefficientField K>
TensorVector<K> random_tensor(std::mt19937_64 &rng, int n, std::optional<int> w = std::nullopt, int terms = 4) {
  TensorVector<K> t(n);
  std::uniform_int_distribution<Mask> pick(0, (Mask{1} << n) - 1);
  int placed = 0, tries = 0;
  while (placed < terms && tries < 1000) {
    ++tries;
    Mask m = pick(rng);
    if (w && mask_weight(m, n) != *w)
      continue;
    t.add_term(m, random_coeff<K>(rng));
    ++placed;
  }
  return t;
}

// ---------------------------------------------------------------------------
// qscalars
// ---------------------------------------------------------------------------

inline void check_qscalars(Recorder &rec, int nmax, std::uint64_t seed) {
  for (int n = 1; n <= nmax; ++n)
    for (int a = 1; a <= n; ++a) {
      LaurentPoly lhs;
      for (int t = 0; t < a; ++t)
        lhs += quantum_int(n - 2 * t);
      rec.equal({{"identity", "fusion"}, {"n", n}, {"a", a}}, lhs, quantum_int(a) * quantum_int(n + 1 - a));
    }
  for (int m = 0; m <= nmax; ++m) {
    rec.equal({{"identity", "v^(m+1)"}, {"m", m}}, LaurentPoly::v_pow(m + 1),
              LaurentPoly::v_pow(1) * quantum_int(m + 1) - quantum_int(m));
    LaurentPoly q = quantum_int(m);
    rec.equal({{"identity", "orthogonality"}, {"i", m}}, q * q + LaurentPoly::v_pow(m + 1) * q,
              LaurentPoly::v_pow(1) * q * quantum_int(m + 1));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(-4, 4), e(-3, 3), len(1, 3);
  auto rpoly = [&] {
    std::map<int, Rational> t;
    for (int k = len(rng); k > 0; --k)
      t[e(rng)] += Rational(c(rng), 1 + (c(rng) + 4) % 3);
    return LaurentPoly::from_terms(t);
  };
  auto rscalar = [&] {
    LaurentPoly d;
    while (d.is_zero())
      d = rpoly();
    return Scalar(rpoly(), d);
  };
  const Rational pts[] = {Rational(2), Rational(1, 3), Rational(-3, 2)};
  for (int trial = 0; trial < 30; ++trial) {
    Scalar a = rscalar(), b = rscalar(), d = rscalar();
    Json in{{"trial", trial}};
    rec.equal(in, (a + b) + d, a + (b + d));
    rec.equal(in, (a * b) * d, a * (b * d));
    rec.equal(in, a * (b + d), a * b + a * d);
    rec.equal(in, a * b, b * a);
    rec.equal(in, a - a, Scalar(0));
    if (!a.is_zero())
      rec.equal(in, a * a.inverse(), Scalar(1));
    rec.equal(in, (a.num() * b.num()) * (b.num() + a.num()), a.num() * b.num() * b.num() + a.num() * b.num() * a.num());
    for (const auto &p : pts) {
      try {
        Rational sa = specialize(a, p), sb = specialize(b, p);
        rec.equal(in, specialize(a * b, p), Rational(sa * sb));
        rec.equal(in, specialize(a + b, p), Rational(sa + sb));
      } catch (const PoleError &) {
      }
    }
  }
}

// ---------------------------------------------------------------------------
// shapes
// ---------------------------------------------------------------------------

inline void check_dimensions(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    std::uint64_t dim = 0, sq = 0;
    for (const auto &s : shapes_of(n)) {
      std::uint64_t c = count_paths(s);
      dim += c * static_cast<std::uint64_t>(s.weight() + 1);
      sq += c * c;
      rec.equal({{"n", n}, {"shape", to_json(s)}, {"claim", "count_paths = walk count"}}, c, count_walks_brute_force(s));
      rec.equal({{"n", n}, {"shape", to_json(s)}, {"claim", "count_paths = #1-factors"}}, c,
                static_cast<std::uint64_t>(enumerate_one_factors(s).size()));
    }
    rec.equal({{"n", n}, {"claim", "sum c*dim V = 2^n"}}, dim, std::uint64_t{1} << n);
    rec.equal({{"n", n}, {"claim", "sum c^2 = Catalan(n)"}}, sq, catalan(n));
    rec.equal({{"n", n}, {"claim", "dim S(n) = C(n+3,3)"}}, schur_dimension(n), binomial(n + 3, 3));
  }
}

inline void check_bijections(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n))
      for (const auto &a : enumerate_one_factors(s)) {
        Json in{{"alpha", to_json(a)}};
        for (auto k : {IndexKind::Walk, IndexKind::Link, IndexKind::Tableau}) {
          auto img = convert(a, k);
          rec.equal(in, as_one_factor(convert(img, IndexKind::Factor)), a);
        }
        rec.equal(in, to_walk(a).end_shape(), s);
        rec.equal(in, to_tableau(a).shape(), s);
        rec.equal(in, to_link_diagram(a).num_defects(), s.weight());
      }
  StandardTableau t({1, 2, 3, 5, 8}, {4, 6, 7});
  rec.equal({{"tableau", to_json(t)}}, to_one_factor(t), OneFactor{1, 1, 1, -1, 1, -1, -1, 1});
}

// ---------------------------------------------------------------------------
// tensor space
// ---------------------------------------------------------------------------

template <CoefficientField K> void check_tensor(Recorder &rec, int nmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= nmax; ++n) {
    for (int w = -n; w + 2 <= n; w += 2)
      for (int trial = 0; trial < 3; ++trial) {
        auto b = random_tensor<K>(rng, n, w);
        auto b2 = random_tensor<K>(rng, n, w + 2);
        rec.equal({{"n", n}, {"weight", w}, {"claim", "adjointness"}}, bilinear_form(act_E(b), b2),
                  vpow<K>(w + 1) * bilinear_form(b, act_F(b2)));
      }
    for (int trial = 0; trial < 3; ++trial) {
      auto x = random_tensor<K>(rng, n, std::nullopt, 6);
      Json in{{"n", n}, {"x", x.to_string()}};
      TensorVector<K> rhs(n), sum(n);
      for (int i = -n; i <= n; i += 2) {
        rhs += act_weight_idempotent(i, x) * qint<K>(i);
        sum += act_weight_idempotent(i, x);
      }
      rec.equal(in, act_E(act_F(x)) - act_F(act_E(x)), rhs);
      rec.equal(in, sum, x);
      rec.expect(in, act_E_pow(x, n + 1).is_zero() && act_F_pow(x, n + 1).is_zero(), "E^(n+1) = F^(n+1) = 0");
      for (int i = -n - 2; i <= n + 2; i += 2) {
        rec.equal(in, act_E(act_weight_idempotent(i, x)), act_weight_idempotent(i + 2, act_E(x)));
        rec.equal(in, act_F(act_weight_idempotent(i, x)), act_weight_idempotent(i - 2, act_F(x)));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// maximal vectors
// ---------------------------------------------------------------------------

template <CoefficientField K> void check_orthogonality(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n)) {
      auto b = MaximalBasis<K>::build(s, BasisKind::Omega);
      const std::size_t d = b.index.size();
      Matrix<K> gram(d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c)
          gram(r, c) = gram(c, r) = bilinear_form(b.vectors[r], b.vectors[c]);
      rec.expect({{"shape", to_json(s)}}, is_nonsingular_diagonal(gram), "Gram matrix of omega is nonsingular diagonal");
      for (std::size_t r = 0; r < d; ++r) {
        Json in{{"alpha", to_json(b.index[r])}};
        rec.expect(in, is_maximal(b.vectors[r]), "omega is maximal");
        rec.equal(in, b.vectors[r].homogeneous_weight(), std::optional<int>(s.weight()));
        rec.equal(in, gram(r, r), omega_norm<K>(b.index[r]));
      }
    }
}

template <CoefficientField K> void check_maximal(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const auto &a : enumerate_one_factors(n)) {
      Json in{{"alpha", to_json(a)}};
      auto nu = build_nu<K>(a);
      auto om = build_omega<K>(a);
      rec.equal(in, nu, build_nu_nested<K>(a));
      rec.expect(in, is_maximal(nu), "nu is maximal");
      rec.equal(in, nu.homogeneous_weight(), std::optional<int>(a.weight()));
      rec.equal(in, bilinear_form(nu, nu), nu_norm<K>(a));
      rec.equal(in, bilinear_form(om, om), omega_norm<K>(a));
      // Φ on ν.
      const int d = a.weight();
      rec.equal(in, phi1(nu), build_nu<K>(a.plus()));
      TensorVector<K> rhs(n + 1);
      for (int j = 1; j <= d; ++j)
        rhs += build_nu<K>(a.plus_link(j)) * qint<K>(j);
      auto p2 = phi2(nu, d);
      rec.equal(in, p2, rhs);
      if (d == 0)
        rec.expect(in, p2.is_zero(), "Phi2 kills invariants");
      if (d == 1)
        rec.equal(in, p2, build_nu<K>(a.minus()));
      if (d >= 1) {
        TensorVector<K> rec_minus = p2 * (K(1) / qint<K>(d));
        for (int j = 1; j < d; ++j)
          rec_minus -= phi1(build_nu<K>(a.link_defects(j))) * (qint<K>(j) / qint<K>(d));
        rec.equal(in, rec_minus, build_nu<K>(a.minus()));
      }
      // Orthogonality relations against every same-weight ω.
      for (const auto &b : enumerate_one_factors(Shape::from_weight(n, d))) {
        auto ob = build_omega<K>(b);
        Json in2{{"alpha", to_json(a)}, {"beta", to_json(b)}};
        rec.equal(in2, bilinear_form(phi1(om), phi1(ob)), bilinear_form(om, ob));
        if (d > 0) {
          rec.equal(in2, bilinear_form(phi1(om), phi2(ob, d)), K(0));
          rec.equal(in2, bilinear_form(phi2(om, d), phi2(ob, d)),
                    vpow<K>(1) * qint<K>(d) * qint<K>(d + 1) * bilinear_form(om, ob));
        }
      }
      // e_i commutes with Φ1 and Φ2 for i <= n - 1 (positions within the first n).
      for (int i = 1; i < n; ++i) {
        auto eo = apply_ei(i, om);
        Json in3{{"alpha", to_json(a)}, {"i", i}};
        rec.equal(in3, apply_ei(i, phi1(om)), phi1(eo));
        if (d > 0)
          rec.equal(in3, apply_ei(i, phi2(om, d)), phi2(eo, d));
      }
    }
}

/// {F^a ω(p)} is a pairwise orthogonal basis of V^{⊗n}. Records, without
/// asserting, the power e with ⟨F^a ω, F^a ω⟩ = v^e [a]! [k]...[k-a+1] ⟨ω, ω⟩.
template <CoefficientField K> void check_fa_basis(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    std::vector<TensorVector<K>> vecs;
    Json powers = Json::array();
    for (const auto &p : enumerate_one_factors(n)) {
      auto x = build_omega<K>(p);
      const int k = p.weight();
      K base = bilinear_form(x, x);
      for (int a = 0; a <= k; ++a) {
        if constexpr (field_traits<K>::symbolic) {
          K ratio = bilinear_form(x, x) / base;
          K expected(1);
          for (int j = 1; j <= a; ++j)
            expected = expected * qint<K>(j) * qint<K>(k - j + 1);
          K q = ratio / expected;
          if (q.is_laurent() && q.num().is_monomial() && q.num().leading() == 1)
            powers.push_back(Json{{"p", to_json(p)}, {"a", a}, {"v_power", q.num().low()}, {"minus_a_k_minus_a", -a * (k - a)}});
          else
            powers.push_back(Json{{"p", to_json(p)}, {"a", a}, {"ratio", q.to_string()}});
        }
        vecs.push_back(x);
        x = act_F(x);
      }
    }
    rec.equal({{"n", n}, {"claim", "count"}}, vecs.size(), std::size_t{1} << n);
    for (std::size_t r = 0; r < vecs.size(); ++r) {
      rec.expect({{"n", n}, {"index", r}}, !bilinear_form(vecs[r], vecs[r]).is_zero(), "non-isotropic");
      for (std::size_t c = r + 1; c < vecs.size(); ++c)
        rec.equal({{"n", n}, {"pair", Json::array({r, c})}}, bilinear_form(vecs[r], vecs[c]), K(0));
    }
    if constexpr (field_traits<K>::symbolic)
      rec.notes()["F_power_norms_n" + std::to_string(n)] = powers;
  }
}

// ---------------------------------------------------------------------------
// transitions
// ---------------------------------------------------------------------------

template <CoefficientField K> void check_closed_formula(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n)) {
      auto om = MaximalBasis<K>::build(s, BasisKind::Omega);
      auto nu = MaximalBasis<K>::build(s, BasisKind::Nu);
      for (std::size_t r = 0; r < om.index.size(); ++r)
        for (std::size_t c = 0; c < om.index.size(); ++c)
          rec.equal({{"alpha", to_json(om.index[r])}, {"beta", to_json(om.index[c])}},
                    pairing_value<K>(om.index[r], om.index[c]), bilinear_form(nu.vectors[r], om.vectors[c]));
      rec.equal({{"shape", to_json(s)}, {"claim", "closed P = Gram P"}}, matrix_P<K>(s).entries,
                matrix_P_gram<K>(s).entries);
    }
}

template <CoefficientField K> void check_transition_inverse(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n)) {
      auto p = matrix_P<K>(s);
      auto pp = matrix_Pprime<K>(s);
      auto id = Matrix<K>::identity(p.index.size());
      Json in{{"shape", to_json(s)}};
      rec.equal(in, p.entries * pp.entries, id);
      rec.equal(in, pp.entries * p.entries, id);
      rec.expect(in, p.is_triangular(), "P triangular");
      rec.expect(in, pp.is_triangular(), "P' triangular");
    }
}

/// Every nonzero π is ± a reciprocal of a product of quantum integers.
inline void check_pi_reciprocals(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n)) {
      auto p = matrix_P<Scalar>(s);
      for (std::size_t r = 0; r < p.index.size(); ++r)
        for (std::size_t c = 0; c < p.index.size(); ++c) {
          const Scalar &x = p.entries(r, c);
          if (x.is_zero())
            continue;
          // Numerator ±1 and denominator a product of [k]'s, up to v-powers.
          bool ok = x.num().is_monomial() && (x.num().leading() == 1 || x.num().leading() == -1);
          LaurentPoly den = x.den();
          for (int k = 2 * n + 2; k >= 2 && ok; --k) {
            LaurentPoly q = quantum_int(k).shifted(k - 1);
            while (den.span() > 1) {
              auto [quo, rem] = LaurentPoly::poly_divmod(den, q);
              if (!rem.is_zero())
                break;
              den = quo;
            }
          }
          ok = ok && den.span() == 1;
          rec.expect({{"alpha", to_json(p.index[r])}, {"beta", to_json(p.index[c])}, {"pi", x.to_string()}}, ok,
                     "pi is a signed reciprocal of a product of quantum integers");
        }
    }
}

template <CoefficientField K> void check_recursion(Recorder &rec, int nmax) {
  // The four pairing recursions for factors of length < nmax, so results reach length nmax.
  for (int n = 1; n < nmax; ++n)
    for (const auto &a : enumerate_one_factors(n))
      for (const auto &b : enumerate_one_factors(n)) {
        Json in{{"alpha", to_json(a)}, {"beta", to_json(b)}};
        const int ia = a.weight(), ib = b.weight();
        auto pv = [](const OneFactor &x, const OneFactor &y) {
          return x.weight() == y.weight() ? pairing_value<K>(x, y) : K(0);
        };
        rec.equal(in, pv(a.plus(), b.plus()), pv(a, b));
        if (ib > 0)
          rec.equal(in, pv(a.plus(), b.minus()), K(0));
        if (ia > 0 && ib > 0)
          rec.equal(in, pv(a.minus(), b.minus()), vpow<K>(1) * qint<K>(ib + 1) * pv(a, b));
        if (ia > 1 && ib == ia - 2) {
          K rhs(0);
          for (int j = 1; j < ia; ++j)
            rhs -= qint<K>(j) / qint<K>(ia) * pv(a.link_defects(j), b);
          rec.equal(in, pv(a.minus(), b.plus()), rhs);
        }
      }
  // A defect of α opposite a -1 of β forces incompatibility.
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n))
      for (const auto &a : enumerate_one_factors(s))
        for (const auto &b : enumerate_one_factors(s))
          for (int pos : a.defects())
            if (b.entry(pos) == -1)
              rec.expect({{"alpha", to_json(a)}, {"beta", to_json(b)}}, !is_compatible(a, b), "defect vanishing");
}

template <CoefficientField K> void check_pipp(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n)) {
      auto pp = matrix_Pprime<K>(s);
      for (const auto &a : pp.index)
        for (const auto &b : pp.index) {
          Json in{{"alpha", to_json(a)}, {"beta", to_json(b)}};
          auto poly = pi_double_prime(a, b);
          rec.equal(in, poly.template at_quantum_integers<K>(), pp.at(a, b));
          rec.expect(in, poly.has_nonnegative_coefficients(), "nonnegative coefficients");
          rec.equal(in, !poly.is_zero(), dominated_by(b, a));
          for (const auto &seq : diamond_sequences(a, b))
            rec.equal(in, seq.chain.back(), b);
          // Nested pairings give a monomial.
          auto pairs = b.pairings();
          bool nested = true;
          for (std::size_t k = 1; k < pairs.size(); ++k)
            nested = nested && pairs[k].first < pairs[k - 1].first && pairs[k - 1].second < pairs[k].second;
          if (nested && !poly.is_zero())
            rec.expect(in, poly.is_monomial(), "nested pairings give a monomial");
        }
    }
}

/// The worked α = (1^5,-1^3), β = (1,-1,1,-1,1,-1,1,1) example.
template <CoefficientField K> void check_pipp_example(Recorder &rec) {
  OneFactor a{1, 1, 1, 1, 1, -1, -1, -1}, b{1, -1, 1, -1, 1, -1, 1, 1};
  PairingPolynomial expected;
  expected.add(PairingPolynomial::monomial_of({1, 1, 1}), 1);
  expected.add(PairingPolynomial::monomial_of({1, 1, 3}), 2);
  expected.add(PairingPolynomial::monomial_of({1, 3, 3}), 1);
  expected.add(PairingPolynomial::monomial_of({1, 1, 5}), 1);
  expected.add(PairingPolynomial::monomial_of({1, 3, 5}), 1);
  auto got = pi_double_prime(a, b);
  Json in{{"alpha", to_json(a)}, {"beta", to_json(b)}};
  rec.equal(in, got, expected);
  rec.equal(in, got.template at_quantum_integers<K>(), matrix_Pprime<K>(a.shape()).at(a, b));
  rec.notes()["pipp_example_sequences"] = diamond_sequences(a, b).size();
}

/// ω(1^3,-1^3) = [3][2]ν(1^3,-1^3) + [2][2]ν(1^2,-1,1,-1^2) + [2]ν(1^2,-1^2,1,-1)
///             + [2]ν(1,-1,1^2,-1^2) + ([3]+1)ν(1,-1,1,-1,1,-1).
template <CoefficientField K> void check_omega_example(Recorder &rec) {
  OneFactor a{1, 1, 1, -1, -1, -1};
  const K q2 = qint<K>(2), q3 = qint<K>(3);
  std::map<OneFactor, K> expected{{a, q3 * q2},
                                  {OneFactor{1, 1, -1, 1, -1, -1}, q2 * q2},
                                  {OneFactor{1, 1, -1, -1, 1, -1}, q2},
                                  {OneFactor{1, -1, 1, 1, -1, -1}, q2},
                                  {OneFactor{1, -1, 1, -1, 1, -1}, q3 + K(1)}};
  auto pp = matrix_Pprime<K>(a.shape());
  for (const auto &b : pp.index)
    rec.equal({{"beta", to_json(b)}}, pp.at(a, b), expected.count(b) ? expected.at(b) : K(0));
  TensorVector<K> sum(6);
  for (const auto &[b, c] : expected)
    sum += build_nu<K>(b) * c;
  rec.equal({{"claim", "tensor expansion"}}, build_omega<K>(a), sum);
}

/// ν(α) = Σ π ω(β) and ω(α) = Σ π' ν(β) in tensor space, plus the
/// two-term example α = (1^m,-1).
template <CoefficientField K> void check_omega_expansion(Recorder &rec, int nmax) {
  check_omega_example<K>(rec);
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n)) {
      auto p = matrix_P<K>(s);
      auto pp = matrix_Pprime<K>(s);
      auto om = MaximalBasis<K>::build(s, BasisKind::Omega);
      auto nu = MaximalBasis<K>::build(s, BasisKind::Nu);
      for (std::size_t r = 0; r < p.index.size(); ++r) {
        TensorVector<K> x(n), y(n);
        for (std::size_t c = 0; c < p.index.size(); ++c) {
          x += om.vectors[c] * p.entries(r, c);
          y += nu.vectors[c] * pp.entries(r, c);
        }
        Json in{{"alpha", to_json(p.index[r])}};
        rec.equal(in, nu.vectors[r], x);
        rec.equal(in, om.vectors[r], y);
      }
    }
  for (int m = 2; m < nmax; ++m) {
    std::vector<int> ea(static_cast<std::size_t>(m), 1), eb(static_cast<std::size_t>(m - 1), 1);
    ea.push_back(-1);
    eb.push_back(-1);
    eb.push_back(1);
    OneFactor a(ea), b(eb);
    K c = K(1) / qint<K>(m);
    rec.equal({{"alpha", to_json(a)}}, build_nu<K>(a), build_omega<K>(a) * c - build_omega<K>(b) * c);
  }
}

// ---------------------------------------------------------------------------
// Temperley–Lieb
// ---------------------------------------------------------------------------

template <CoefficientField K> void check_tl_relations(Recorder &rec, int nmax) {
  const K delta = loop_value<K>(DeltaSign::Minus);
  for (int n = 2; n <= nmax; ++n) {
    const Mask dim = Mask{1} << n;
    for (Mask m = 0; m < dim; ++m) {
      auto y = TensorVector<K>::basis_mask(n, m);
      for (int i = 1; i < n; ++i) {
        Json in{{"n", n}, {"i", i}, {"basis", mask_signs(m, n)}};
        auto ey = apply_ei(i, y);
        rec.equal(in, apply_ei(i, ey), ey * delta);
        for (int j = 1; j < n; ++j) {
          if (j == i + 1 || j + 1 == i)
            rec.equal(Json{{"n", n}, {"i", i}, {"j", j}, {"basis", mask_signs(m, n)}},
                      apply_ei(i, apply_ei(j, ey)), ey);
          else if (j > i + 1)
            rec.equal(Json{{"n", n}, {"i", i}, {"j", j}, {"basis", mask_signs(m, n)}}, apply_ei(j, ey),
                      apply_ei(i, apply_ei(j, y)));
        }
        rec.equal(in, apply_ei(i, act_E(y)), act_E(ey));
        rec.equal(in, apply_ei(i, act_F(y)), act_F(ey));
        for (int w = -n; w <= n; w += 2)
          rec.equal(in, apply_ei(i, act_weight_idempotent(w, y)), act_weight_idempotent(w, ey));
      }
    }
    // The abstract diagram algebra satisfies the same relations.
    for (int i = 1; i < n; ++i) {
      auto ei = TLElement<K>::generator(n, i, DeltaSign::Minus);
      rec.equal({{"n", n}, {"i", i}, {"claim", "diagram e_i^2"}}, ei * ei, ei * TLElement<K>(n, DeltaSign::Minus) + [&] {
        TLElement<K> x(n, DeltaSign::Minus);
        x.add(PlanarDiagram::generator(n, i), delta);
        return x;
      }());
      if (i + 1 < n) {
        auto ej = TLElement<K>::generator(n, i + 1, DeltaSign::Minus);
        rec.equal({{"n", n}, {"i", i}, {"claim", "diagram e_i e_i+1 e_i"}}, ei * ej * ei, ei);
        rec.equal({{"n", n}, {"i", i}, {"claim", "diagram e_i+1 e_i e_i+1"}}, ej * ei * ej, ej);
      }
      for (int j = i + 2; j < n; ++j) {
        auto ej = TLElement<K>::generator(n, j, DeltaSign::Minus);
        rec.equal({{"n", n}, {"i", i}, {"j", j}, {"claim", "diagram commute"}}, ei * ej, ej * ei);
      }
    }
  }
}

template <CoefficientField K> void check_cellular(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n)
    for (const auto &s : shapes_of(n)) {
      std::vector<TensorVector<K>> images;
      for (const auto &a : enumerate_one_factors(s)) {
        auto l = to_link_diagram(a);
        auto img = phi_map<K>(l);
        images.push_back(img);
        rec.equal({{"link", to_json(l)}}, img, build_nu_nested<K>(a));
        for (int i = 1; i < n; ++i) {
          auto rhs = phi_map<K>(cell_act(PlanarDiagram::generator(n, i), CellModuleElement<K>::basis(l)));
          rec.equal({{"link", to_json(l)}, {"i", i}}, apply_ei(i, img), rhs);
        }
      }
      bool distinct = true;
      for (std::size_t x = 0; x < images.size(); ++x)
        for (std::size_t y = x + 1; y < images.size(); ++y)
          distinct = distinct && images[x] != images[y];
      rec.expect({{"shape", to_json(s)}}, distinct, "phi is injective on half-diagrams");
      rec.equal({{"shape", to_json(s)}}, static_cast<std::uint64_t>(images.size()), count_paths(s));
    }
}

template <CoefficientField K> void check_ei_omega(Recorder &rec, int nmax) {
  for (int n = 2; n <= nmax; ++n)
    for (const auto &a : enumerate_one_factors(n)) {
      auto om = build_omega<K>(a);
      for (int i = 1; i < n; ++i) {
        TensorVector<K> rhs(n);
        for (const auto &[b, c] : ei_on_omega<K>(a, i)) {
          rec.equal({{"alpha", to_json(a)}, {"i", i}, {"term", to_json(b)}}, b.shape(), a.shape());
          rhs += build_omega<K>(b) * c;
        }
        rec.equal({{"alpha", to_json(a)}, {"i", i}}, apply_ei(i, om), rhs);
      }
    }
}

/// The Catalan(n) diagram operators on V^{⊗n} are linearly independent.
template <CoefficientField K> void check_schur_weyl(Recorder &rec, int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    auto ds = enumerate_diagrams(n);
    const std::size_t dim = std::size_t{1} << n;
    Matrix<K> rows(ds.size(), dim * dim);
    for (std::size_t k = 0; k < ds.size(); ++k) {
      auto m = diagram_matrix<K>(ds[k]);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          rows(k, r * dim + c) = m(r, c);
    }
    rec.equal({{"n", n}, {"claim", "rank of diagram operators"}}, static_cast<std::uint64_t>(rank(rows)), catalan(n));
    rec.equal({{"n", n}, {"claim", "diagram count"}}, static_cast<std::uint64_t>(ds.size()), catalan(n));
  }
}

// ---------------------------------------------------------------------------
// Schur algebra
// ---------------------------------------------------------------------------

template <CoefficientField K> void check_schur_algebra(Recorder &rec, int nmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= nmax; ++n) {
    FaithfulRep<K> rep(n);
    const auto id = rep.identity();
    const auto E = rep.token_matrix(Token::E());
    const auto F = rep.token_matrix(Token::F());
    auto one = [&](int i) { return rep.token_matrix(Token::idem(i)); };
    Json base{{"n", n}};
    // R1'
    auto sum = rep.zero();
    auto h = rep.zero();
    for (int i = -n - 4; i <= n + 4; ++i) {
      sum += one(i);
      h += qint<K>(i) * one(i);
      for (int j = -n - 4; j <= n + 4; ++j)
        rec.equal({{"n", n}, {"R1", Json::array({i, j})}}, one(i) * one(j), i == j ? one(i) : rep.zero());
    }
    rec.equal({{"n", n}, {"R1", "sum"}}, sum, id);
    // R2'
    rec.equal({{"n", n}, {"R2", "EF-FE"}}, E * F - F * E, h);
    rec.equal({{"n", n}, {"word", "EF-FE"}}, rep.word_matrix("E F") - rep.word_matrix("F E"), h);
    // R3' and R4
    for (int i = -n - 4; i <= n + 4; ++i) {
      rec.equal({{"n", n}, {"R3", i}}, E * one(i), one(i + 2) * E);
      rec.equal({{"n", n}, {"R3", i}}, F * one(i), one(i - 2) * F);
      rec.equal({{"n", n}, {"R4", i}}, one(i) * E, E * one(i - 2));
      rec.equal({{"n", n}, {"R4", i}}, one(i) * F, F * one(i + 2));
    }
    // S-props (a)-(d)
    for (int a = 0; a <= n + 1; ++a) {
      const auto Ea = rep.token_matrix(Token::E(a));
      const auto Fa = rep.token_matrix(Token::F(a));
      for (int i = -n; i <= n; i += 2) {
        rec.equal({{"n", n}, {"Sa", Json::array({a, i})}}, Ea * one(i), one(i + 2 * a) * Ea);
        rec.equal({{"n", n}, {"Sa", Json::array({a, i})}}, Fa * one(i), one(i - 2 * a) * Fa);
      }
      auto c_rhs = Fa * E;
      auto d_rhs = Ea * F;
      for (int i = -n; i <= n; ++i)
        for (int t = 0; t < a; ++t) {
          c_rhs += qint<K>(i) * (rep.token_matrix(Token::F(a - 1 - t)) * one(i) * rep.token_matrix(Token::F(t)));
          d_rhs -= qint<K>(i) * (rep.token_matrix(Token::E(a - 1 - t)) * one(i) * rep.token_matrix(Token::E(t)));
        }
      rec.equal({{"n", n}, {"Sc", a}}, E * Fa, c_rhs);
      rec.equal({{"n", n}, {"Sd", a}}, F * Ea, d_rhs);
    }
    rec.expect(base, rep.token_matrix(Token::E(n + 1)).is_zero() && rep.token_matrix(Token::F(n + 1)).is_zero(),
               "E^(n+1) = F^(n+1) = 0");
    // Divided-power identities.
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int i = -n; i <= n; i += 2) {
          auto [first, second] = verify_lu_identity(rep, a, b, i);
          rec.expect({{"n", n}, {"a", a}, {"b", b}, {"i", i}}, first, "first divided-power identity");
          rec.expect({{"n", n}, {"a", a}, {"b", b}, {"i", i}}, second, "second divided-power identity");
        }
    rec.equal({{"n", n}, {"claim", "1_-n = F^(n) 1_n E^(n)"}},
              rep.word_matrix({Token::Fdiv(n), Token::idem(n), Token::Ediv(n)}), one(-n));
    rec.equal({{"n", n}, {"claim", "1_n = E^(n) 1_-n F^(n)"}},
              rep.word_matrix({Token::Ediv(n), Token::idem(-n), Token::Fdiv(n)}), one(n));
    // Involutions on random words.
    std::uniform_int_distribution<int> len(0, 5), kind(0, 4), par(0, n), idx(0, n);
    auto random_word = [&] {
      GeneratorWord w;
      for (int k = len(rng); k > 0; --k) {
        switch (kind(rng)) {
        case 0:
          w.push_back(Token::E());
          break;
        case 1:
          w.push_back(Token::F());
          break;
        case 2:
          w.push_back(Token::Ediv(par(rng)));
          break;
        case 3:
          w.push_back(Token::Fdiv(par(rng)));
          break;
        default:
          w.push_back(Token::idem(2 * idx(rng) - n));
        }
      }
      return w;
    };
    for (int trial = 0; trial < 10; ++trial) {
      auto w1 = random_word(), w2 = random_word();
      Json in{{"n", n}, {"w1", to_string(w1)}, {"w2", to_string(w2)}};
      auto m1 = rep.word_matrix(w1), m2 = rep.word_matrix(w2);
      for (auto inv : {Involution::Omega, Involution::Sigma, Involution::Star}) {
        rec.equal(in, rep.word_matrix(apply_involution(w1, inv)), rep.involution_image(m1, inv));
        rec.equal(in, apply_involution(apply_involution(w1, inv), inv), w1);
      }
      GeneratorWord w12 = w1;
      w12.insert(w12.end(), w2.begin(), w2.end());
      rec.equal(in, rep.word_matrix(apply_involution(w12, Involution::Star)),
                rep.word_matrix(apply_involution(w2, Involution::Star)) *
                    rep.word_matrix(apply_involution(w1, Involution::Star)));
    }
  }
}

/// Spanning sets and the divided-power basis of S(n), by rank at v = 2.
inline void check_schur_basis(Recorder &rec, int nmax) {
  using K = AtTwo;
  for (int n = 1; n <= nmax; ++n) {
    FaithfulRep<K> rep(n);
    const std::size_t dim = schur_dimension(n);
    std::vector<std::vector<K>> basis, span;
    for (int m = n; m >= 0; m -= 2)
      for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= m; ++b)
          basis.push_back(rep.word_matrix({Token::Fdiv(a), Token::idem(m), Token::Ediv(b)}).flatten());
    for (int i = -n; i <= n; i += 2)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
          span.push_back(rep.word_matrix({Token::F(a), Token::idem(i), Token::E(b)}).flatten());
    auto to_matrix = [](const std::vector<std::vector<K>> &rows) {
      Matrix<K> m(rows.size(), rows.front().size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
          m(r, c) = rows[r][c];
      return m;
    };
    rec.equal({{"n", n}, {"claim", "basis size"}}, basis.size(), dim);
    rec.equal({{"n", n}, {"claim", "basis rank at v=2"}}, rank(to_matrix(basis)), dim);
    rec.equal({{"n", n}, {"claim", "spanning set rank at v=2"}}, rank(to_matrix(span)), dim);
  }
}

// ---------------------------------------------------------------------------
// Suite registry
// ---------------------------------------------------------------------------

struct SuiteInfo {
  std::string name;
  int default_n;
  std::string description;
};

inline const std::vector<SuiteInfo> &suite_list() {
  static const std::vector<SuiteInfo> suites{
      {"qscalars", 12, "quantum-integer identities and field axioms"},
      {"dimensions", 12, "path counts, 2^n and Catalan sums, dim S(n)"},
      {"bijections", 10, "round trips between index kinds"},
      {"tensor", 8, "adjointness, commutator, nilpotence, weight shifts on V^n"},
      {"orthogonality", 8, "Gram matrix of the omega basis is nonsingular diagonal"},
      {"maximal", 8, "Phi recursions, norms, nesting oracle, e_i commuting with Phi"},
      {"fa-basis", 8, "F^a omega(p) form an orthogonal basis of V^n"},
      {"closed-formula", 8, "pairing_value equals <nu(a), omega(b)>"},
      {"transition-inverse", 8, "P P' = I = P' P, both triangular"},
      {"pi-reciprocal", 8, "nonzero pi are signed reciprocals of quantum-integer products"},
      {"recursion", 8, "the four pairing recursions and defect vanishing"},
      {"pipp", 8, "pi'' substitution, positivity, support, monomiality"},
      {"omega-expansion", 8, "basis changes in tensor space and worked examples"},
      {"tl-relations", 6, "e_i relations and commuting with E, F, 1_i"},
      {"cellular", 6, "e_i phi(l) = phi(e_i l) for every half-diagram"},
      {"ei-omega", 8, "closed-form e_i on omega against the operator"},
      {"schur-weyl", 5, "rank of diagram operators is Catalan(n), at v = 2"},
      {"schur-algebra", 5, "R1'-R4, commutation rules, divided-power identities, involutions"},
      {"schur-basis", 5, "divided-power basis and spanning set of S(n), at v = 2"},
      {"specialization", 5, "the v-dependent suites rerun at v = 1"},
  };
  return suites;
}

inline int suite_default_n(const std::string &name) {
  for (const auto &s : suite_list())
    if (s.name == name)
      return s.default_n;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

template <CoefficientField K>
bool run_field_suite(const std::string &name, Recorder &rec, int n, std::uint64_t seed) {
  if (name == "tensor")
    check_tensor<K>(rec, n, seed);
  else if (name == "orthogonality")
    check_orthogonality<K>(rec, n);
  else if (name == "maximal")
    check_maximal<K>(rec, n);
  else if (name == "fa-basis")
    check_fa_basis<K>(rec, n);
  else if (name == "closed-formula")
    check_closed_formula<K>(rec, n);
  else if (name == "transition-inverse")
    check_transition_inverse<K>(rec, n);
  else if (name == "recursion")
    check_recursion<K>(rec, n);
  else if (name == "pipp") {
    check_pipp<K>(rec, n);
    check_pipp_example<K>(rec);
  } else if (name == "omega-expansion")
    check_omega_expansion<K>(rec, n);
  else if (name == "tl-relations")
    check_tl_relations<K>(rec, n);
  else if (name == "cellular")
    check_cellular<K>(rec, n);
  else if (name == "ei-omega")
    check_ei_omega<K>(rec, n);
  else if (name == "schur-algebra")
    check_schur_algebra<K>(rec, n, seed);
  else
    return false;
  return true;
}

/// The suites rerun at v = 1.
inline const std::vector<std::string> &specialization_suites() {
  static const std::vector<std::string> s{"orthogonality", "closed-formula", "transition-inverse",
                                          "tl-relations",  "cellular",       "ei-omega"};
  return s;
}

/// Runs a named suite, over Q(v) or, if v0 is given, at v = v0. Throws
/// std::invalid_argument for unknown names, v0 = 0, or a v0 the suite
/// cannot use.
inline VerificationReport run_suite(const std::string &name, std::optional<int> n_opt, std::uint64_t seed,
                                    const std::optional<Rational> &v0 = std::nullopt) {
  const int n = n_opt ? *n_opt : suite_default_n(name);
  if (n < 0)
    throw std::invalid_argument("n must be nonnegative");
  if (v0 && *v0 == 0)
    throw std::invalid_argument("v0 must be nonzero");
  return run_timed(name, n, [&](Recorder &rec) {
    rec.notes()["seed"] = seed;
    if (v0)
      rec.notes()["v0"] = v0->get_str();
    if (name == "specialization") {
      if (v0 && *v0 != 1)
        throw std::invalid_argument("the specialization suite fixes v = 1 itself");
      for (const auto &s : specialization_suites())
        run_field_suite<AtOne>(s, rec, n, seed);
      rec.notes()["v0"] = "1";
      rec.notes()["suites"] = specialization_suites();
      return;
    }
    if (name == "schur-weyl") {
      if (!v0 || *v0 == 2)
        check_schur_weyl<AtTwo>(rec, n);
      else {
        ScopedPoint at(*v0);
        check_schur_weyl<AtRuntime>(rec, n);
      }
      rec.notes()["v0"] = v0 ? v0->get_str() : "2";
      return;
    }
    bool field_suite = false;
    if (!v0)
      field_suite = run_field_suite<Scalar>(name, rec, n, seed);
    else if (*v0 == 1)
      field_suite = run_field_suite<AtOne>(name, rec, n, seed);
    else if (*v0 == 2)
      field_suite = run_field_suite<AtTwo>(name, rec, n, seed);
    else {
      ScopedPoint at(*v0);
      field_suite = run_field_suite<AtRuntime>(name, rec, n, seed);
    }
    if (field_suite)
      return;
    if (v0 && name != "schur-basis")
      throw std::invalid_argument("suite '" + name + "' does not depend on v; drop --specialize");
    if (name == "qscalars")
      check_qscalars(rec, n, seed);
    else if (name == "dimensions")
      check_dimensions(rec, n);
    else if (name == "bijections")
      check_bijections(rec, n);
    else if (name == "pi-reciprocal")
      check_pi_reciprocals(rec, n);
    else if (name == "schur-basis") {
      if (v0 && *v0 != 2)
        throw std::invalid_argument("the schur-basis suite fixes v = 2 itself");
      check_schur_basis(rec, n);
      rec.notes()["v0"] = "2";
    } else
      throw std::invalid_argument("unknown suite '" + name + "'");
  });
}

} // namespace tlortho
