#include "frozen_values.hpp"
#include "tlortho/tlortho.hpp"

#include <gtest/gtest.h>

using namespace tlortho;

namespace {

Scalar v(int e) { return Scalar::v_pow(e); }
Scalar q(int k) { return qint<Scalar>(k); }
using T = TensorVector<Scalar>;

T y(std::vector<int> signs, Scalar c = Scalar(1)) { return T::basis(signs, c); }
T y1() { return y({1}); }
T z0() { return y({1, -1}) - y({-1, 1}, v(1)); }

T from_frozen(const std::vector<std::pair<std::vector<int>, Scalar>> &terms) {
  T t(static_cast<int>(terms.front().first.size()));
  for (const auto &[signs, c] : terms)
    t += y(signs, c);
  return t;
}

} // namespace

TEST(Phi, Examples) {
  EXPECT_EQ(phi1(T::unit()), y1());
  EXPECT_EQ(phi1(y1()), y({1, 1}));
  EXPECT_EQ(phi2(y1(), 1), z0());
  EXPECT_TRUE(phi2(z0(), 0).is_zero());
  EXPECT_THROW(phi2(y({1, 1}) + y({1, -1}), 2), std::invalid_argument);
}

TEST(Omega, MatchesOracle) {
  EXPECT_EQ(build_omega<Scalar>(OneFactor{1, -1}), from_frozen(frozen::kOmega_p_m));
  EXPECT_EQ(build_omega<Scalar>(OneFactor{1, 1, -1}), from_frozen(frozen::kOmega_p_p_m));
  EXPECT_EQ(build_omega<Scalar>(OneFactor{1, -1, 1}), from_frozen(frozen::kOmega_p_m_p));
  EXPECT_EQ(build_omega<Scalar>(OneFactor{1, 1, -1, -1}), from_frozen(frozen::kOmega_p_p_m_m));
  EXPECT_EQ(build_omega<Scalar>(OneFactor{1, -1, 1, -1}), from_frozen(frozen::kOmega_p_m_p_m));
  EXPECT_EQ(build_omega<Scalar>(OneFactor{1, 1, 1, -1, -1}), from_frozen(frozen::kOmega_p_p_p_m_m));
}

TEST(Omega, FromWalks) {
  EXPECT_EQ(build_omega<Scalar>(BratteliWalk::parse("VVV")), y({1, 1, 1}));
  EXPECT_EQ(build_omega<Scalar>(BratteliWalk::parse("VD")), z0());
}

TEST(Omega, ExpansionInNu) {
  OneFactor a{1, 1, 1, -1, -1, -1};
  T rhs = build_nu<Scalar>(a) * (q(3) * q(2)) + build_nu<Scalar>(OneFactor{1, 1, -1, 1, -1, -1}) * (q(2) * q(2)) +
          build_nu<Scalar>(OneFactor{1, 1, -1, -1, 1, -1}) * q(2) +
          build_nu<Scalar>(OneFactor{1, -1, 1, 1, -1, -1}) * q(2) +
          build_nu<Scalar>(OneFactor{1, -1, 1, -1, 1, -1}) * (q(3) + Scalar(1));
  EXPECT_EQ(build_omega<Scalar>(a), rhs);
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi_nest(T::unit()), z0());
  T p = psi_nest(z0());
  EXPECT_EQ(p, tensor(tensor(y1(), z0()), y({-1})) - tensor(tensor(y({-1}), z0()), y1()) * v(1));
  EXPECT_TRUE(is_invariant(p));
  EXPECT_THROW(psi_nest(y1()), std::invalid_argument);
}

TEST(Nu, Examples) {
  EXPECT_EQ(build_nu<Scalar>(OneFactor{1}), y1());
  OneFactor link{1, 1, 1, -1, 1, -1, -1, 1};
  EXPECT_EQ(build_nu<Scalar>(link), tensor(tensor(y1(), psi_nest(tensor(z0(), z0()))), y1()));
  T expected = y({1, 1, 1, -1, -1}) - y({1, 1, -1, 1, -1}, v(1)) - y({1, -1, 1, -1, 1}, v(1)) +
               y({1, -1, -1, 1, 1}, v(2));
  EXPECT_EQ(build_nu<Scalar>(OneFactor{1, 1, 1, -1, -1}), expected);
}

TEST(Nu, SignSwitchEqualsNesting) {
  for (int n = 1; n <= 10; ++n)
    for (const auto &a : enumerate_one_factors(n))
      EXPECT_EQ(build_nu<Scalar>(a), build_nu_nested<Scalar>(a)) << a.to_string();
}

TEST(Norms, Examples) {
  EXPECT_EQ(omega_norm<Scalar>(OneFactor{1, -1}), Scalar(1) + v(2));
  EXPECT_EQ(omega_norm<Scalar>(OneFactor{1, 1, 1}), Scalar(1));
  EXPECT_EQ(omega_norm<Scalar>(OneFactor{1, -1, 1, -1}), v(2) * q(2) * q(2));
  EXPECT_EQ(nu_norm<Scalar>(OneFactor{1, -1, 1, -1}), (Scalar(1) + v(2)) * (Scalar(1) + v(2)));
}

TEST(Norms, MatchBilinearForm) {
  for (int n = 1; n <= 8; ++n)
    for (const auto &a : enumerate_one_factors(n)) {
      auto om = build_omega<Scalar>(a);
      auto nu = build_nu<Scalar>(a);
      EXPECT_EQ(bilinear_form(om, om), omega_norm<Scalar>(a)) << a.to_string();
      EXPECT_EQ(bilinear_form(nu, nu), nu_norm<Scalar>(a)) << a.to_string();
    }
}

TEST(MaximalBasis, OrthogonalAndMaximal) {
  for (int n = 1; n <= 7; ++n)
    for (const auto &s : shapes_of(n)) {
      auto b = MaximalBasis<Scalar>::build(s, BasisKind::Omega);
      EXPECT_EQ(b.index.size(), count_paths(s));
      for (std::size_t r = 0; r < b.index.size(); ++r) {
        EXPECT_TRUE(is_maximal(b.vectors[r]));
        EXPECT_EQ(b.vectors[r].homogeneous_weight(), std::optional<int>(s.weight()));
        for (std::size_t c = r + 1; c < b.index.size(); ++c)
          EXPECT_TRUE(bilinear_form(b.vectors[r], b.vectors[c]).is_zero());
      }
    }
}

TEST(MaximalBasis, Cache) {
  MaximalBasisCache<Scalar> cache;
  auto a = cache.get(Shape(3, 2), BasisKind::Nu);
  auto b = cache.get(Shape(3, 2), BasisKind::Nu);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(a->at(OneFactor{1, -1, 1, -1, 1}), build_nu<Scalar>(OneFactor{1, -1, 1, -1, 1}));
  EXPECT_THROW(a->at(OneFactor{1, 1, 1, 1, -1}), std::out_of_range);
}
