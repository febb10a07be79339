#include "frozen_values.hpp"
#include "tlortho/tlortho.hpp"

#include <gtest/gtest.h>

using namespace tlortho;

namespace {

Scalar v(int e) { return Scalar::v_pow(e); }
Scalar q(int k) { return qint<Scalar>(k); }

void expect_matches(const TransitionMatrix<Scalar> &t, const std::vector<OneFactor> &index,
                    const std::vector<std::vector<Scalar>> &frozen) {
  ASSERT_EQ(t.index, index);
  for (std::size_t r = 0; r < index.size(); ++r)
    for (std::size_t c = 0; c < index.size(); ++c)
      EXPECT_EQ(t.entries(r, c), frozen[r][c]) << index[r].to_string() << " / " << index[c].to_string();
}

} // namespace

TEST(PairingValue, Examples) {
  EXPECT_EQ(pairing_value<Scalar>(OneFactor{1, -1}, OneFactor{1, -1}), v(1) * q(2));
  EXPECT_EQ(pairing_value<Scalar>(OneFactor{1, 1, 1}, OneFactor{1, 1, 1}), Scalar(1));
  EXPECT_TRUE(pairing_value<Scalar>(OneFactor{1, 1, 1, -1, -1}, OneFactor{1, 1, -1, -1, 1}).is_zero());
  EXPECT_THROW(pairing_value<Scalar>(OneFactor{1, -1}, OneFactor{1, 1}), std::invalid_argument);
}

TEST(PairingValue, MatchesBilinearForm) {
  for (int n = 1; n <= 7; ++n)
    for (const auto &s : shapes_of(n))
      for (const auto &a : enumerate_one_factors(s))
        for (const auto &b : enumerate_one_factors(s))
          EXPECT_EQ(pairing_value<Scalar>(a, b), bilinear_form(build_nu<Scalar>(a), build_omega<Scalar>(b)))
              << a.to_string() << " / " << b.to_string();
}

TEST(MatrixP, MatchesOracle) {
  expect_matches(matrix_P<Scalar>(Shape(2, 1)), frozen::kIndex_2_1, frozen::kP_2_1);
  expect_matches(matrix_P<Scalar>(Shape(2, 2)), frozen::kIndex_2_2, frozen::kP_2_2);
  expect_matches(matrix_P<Scalar>(Shape(3, 1)), frozen::kIndex_3_1, frozen::kP_3_1);
  expect_matches(matrix_P<Scalar>(Shape(3, 2)), frozen::kIndex_3_2, frozen::kP_3_2);
  expect_matches(matrix_P<Scalar>(Shape(4, 2)), frozen::kIndex_4_2, frozen::kP_4_2);
  expect_matches(matrix_P<Scalar>(Shape(3, 3)), frozen::kIndex_3_3, frozen::kP_3_3);
}

TEST(MatrixPprime, MatchesOracle) {
  expect_matches(matrix_Pprime<Scalar>(Shape(2, 1)), frozen::kIndex_2_1, frozen::kPprime_2_1);
  expect_matches(matrix_Pprime<Scalar>(Shape(2, 2)), frozen::kIndex_2_2, frozen::kPprime_2_2);
  expect_matches(matrix_Pprime<Scalar>(Shape(3, 1)), frozen::kIndex_3_1, frozen::kPprime_3_1);
  expect_matches(matrix_Pprime<Scalar>(Shape(3, 2)), frozen::kIndex_3_2, frozen::kPprime_3_2);
  expect_matches(matrix_Pprime<Scalar>(Shape(4, 2)), frozen::kIndex_4_2, frozen::kPprime_4_2);
  expect_matches(matrix_Pprime<Scalar>(Shape(3, 3)), frozen::kIndex_3_3, frozen::kPprime_3_3);
}

TEST(MatrixP, ClosedRouteEqualsGramRoute) {
  for (int n = 1; n <= 7; ++n)
    for (const auto &s : shapes_of(n))
      EXPECT_EQ(matrix_P<Scalar>(s).entries, matrix_P_gram<Scalar>(s).entries) << s.to_string();
}

TEST(MatrixP, TwoTermExample) {
  for (int m = 2; m <= 6; ++m) {
    auto a = make_factor({repeat(1, m), {-1}});
    auto b = make_factor({repeat(1, m - 1), {-1, 1}});
    auto p = matrix_P<Scalar>(a.shape());
    EXPECT_EQ(p.at(a, a), Scalar(1) / q(m));
    EXPECT_EQ(p.at(a, b), Scalar(-1) / q(m));
    for (const auto &g : p.index)
      if (g != a && g != b) {
        EXPECT_TRUE(p.at(a, g).is_zero());
      }
  }
  auto one = matrix_P<Scalar>(Shape(1, 1));
  EXPECT_EQ(one.at(OneFactor{1, -1}, OneFactor{1, -1}), Scalar(1));
}

TEST(MatrixPprime, Examples) {
  auto t = matrix_Pprime<Scalar>(Shape(3, 3));
  OneFactor a{1, 1, 1, -1, -1, -1};
  EXPECT_EQ(t.at(a, a), q(3) * q(2));
  EXPECT_EQ(t.at(a, OneFactor{1, 1, -1, 1, -1, -1}), q(2) * q(2));
  EXPECT_EQ(t.at(a, OneFactor{1, 1, -1, -1, 1, -1}), q(2));
  EXPECT_EQ(t.at(a, OneFactor{1, -1, 1, 1, -1, -1}), q(2));
  EXPECT_EQ(t.at(a, OneFactor{1, -1, 1, -1, 1, -1}), q(3) + Scalar(1));
  EXPECT_EQ(matrix_Pprime<Scalar>(Shape(5, 0)).entries(0, 0), Scalar(1));
}

TEST(Transitions, InverseAndTriangular) {
  for (int n = 1; n <= 7; ++n)
    for (const auto &s : shapes_of(n)) {
      auto p = matrix_P<Scalar>(s);
      auto pp = matrix_Pprime<Scalar>(s);
      auto id = Matrix<Scalar>::identity(p.index.size());
      EXPECT_EQ(p.entries * pp.entries, id);
      EXPECT_EQ(pp.entries * p.entries, id);
      EXPECT_TRUE(p.is_triangular());
      EXPECT_TRUE(pp.is_triangular());
      for (std::size_t k = 0; k < p.index.size(); ++k)
        EXPECT_FALSE(p.entries(k, k).is_zero());
    }
}

TEST(PiDoublePrime, Examples) {
  OneFactor a{1, 1, 1, 1, 1, -1, -1, -1}, b{1, -1, 1, -1, 1, -1, 1, 1};
  auto p = pi_double_prime(a, b);
  EXPECT_EQ(p.to_string(), "t1^3 + 2*t1^2*t3 + t1^2*t5 + t1*t3^2 + t1*t3*t5");
  EXPECT_EQ(p.at_quantum_integers<Scalar>(), matrix_Pprime<Scalar>(a.shape()).at(a, b));
  OneFactor ones{1, 1, 1, 1};
  auto d = pi_double_prime(ones, ones);
  EXPECT_TRUE(d.is_monomial());
  EXPECT_EQ(d.at_quantum_integers<Scalar>(), Scalar(1));
  EXPECT_TRUE(pi_double_prime(OneFactor{1, -1, 1, -1}, OneFactor{1, 1, -1, -1}).is_zero());
}

TEST(PiDoublePrime, SubstitutionGivesPprime) {
  for (int n = 1; n <= 8; ++n)
    for (const auto &s : shapes_of(n)) {
      auto pp = matrix_Pprime<Scalar>(s);
      for (const auto &a : pp.index)
        for (const auto &b : pp.index) {
          auto poly = pi_double_prime(a, b);
          EXPECT_EQ(poly.at_quantum_integers<Scalar>(), pp.at(a, b));
          EXPECT_TRUE(poly.has_nonnegative_coefficients());
          EXPECT_EQ(!poly.is_zero(), dominated_by(b, a));
        }
    }
}

TEST(Serialize, TransitionMatrix) {
  auto j = to_json(matrix_P<Scalar>(Shape(2, 1)));
  EXPECT_EQ(j["kind"], "P");
  EXPECT_EQ(j["index"][1], Json::array({1, -1, 1}));
  EXPECT_EQ(scalar_from_json(j["entries"][0][1]), Scalar(-1) / q(2));
}
