#include "tlortho/tlortho.hpp"

#include <gtest/gtest.h>

using namespace tlortho;

namespace {

Scalar q(int k) { return qint<Scalar>(k); }
using X = VmVector<Scalar>;

} // namespace

TEST(SimpleModule, Action) {
  EXPECT_TRUE(vm_act(Token::E(), X::basis(4, 0)).coords.empty());
  X e = vm_act(Token::E(), X::basis(3, 1));
  ASSERT_EQ(e.coords.size(), 1u);
  EXPECT_EQ(e.coords.at(0), q(3));
  EXPECT_TRUE(vm_act(Token::F(), X::basis(3, 3)).coords.empty());
  EXPECT_EQ(vm_act(Token::F(), X::basis(3, 1)), X::basis(3, 2));
  EXPECT_EQ(vm_act(Token::idem(1), X::basis(3, 1)), X::basis(3, 1));
  EXPECT_TRUE(vm_act(Token::idem(3), X::basis(3, 1)).coords.empty());
  EXPECT_THROW(X::basis(2, 3), std::out_of_range);
}

TEST(Words, Parse) {
  auto w = parse_word("F^(2) 1_2 E^(2)");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], Token::Fdiv(2));
  EXPECT_EQ(w[1], Token::idem(2));
  EXPECT_EQ(w[2], Token::Ediv(2));
  EXPECT_EQ(parse_word("E*F^3*1_{-1}"), (GeneratorWord{Token::E(), Token::F(3), Token::idem(-1)}));
  EXPECT_EQ(parse_word("1_(-2)"), GeneratorWord{Token::idem(-2)});
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_THROW(parse_word("G"), std::invalid_argument);
  EXPECT_EQ(to_string(w), "F^(2) 1_2 E^(2)");
}

TEST(Words, Involutions) {
  GeneratorWord w{Token::E(), Token::idem(2)};
  EXPECT_EQ(apply_involution(w, Involution::Omega), (GeneratorWord{Token::F(), Token::idem(-2)}));
  EXPECT_EQ(apply_involution(apply_involution(w, Involution::Omega), Involution::Omega), w);
  GeneratorWord fa{Token::F(3), Token::idem(1)};
  EXPECT_EQ(apply_involution(fa, Involution::Star), (GeneratorWord{Token::idem(1), Token::E(3)}));
}

TEST(FaithfulRep, WordMatrices) {
  for (int n = 1; n <= 4; ++n) {
    FaithfulRep<Scalar> rep(n);
    EXPECT_EQ(rep.word_matrix(""), rep.identity());
    auto h = rep.zero();
    for (int i = -n; i <= n; ++i)
      h += q(i) * rep.token_matrix(Token::idem(i));
    EXPECT_EQ(rep.word_matrix("E F") - rep.word_matrix("F E"), h);
    EXPECT_EQ(rep.word_matrix({Token::Fdiv(n), Token::idem(n), Token::Ediv(n)}), rep.token_matrix(Token::idem(-n)));
  }
}

TEST(FaithfulRep, InvolutionsAgreeWithTokenMaps) {
  FaithfulRep<Scalar> rep(3);
  for (const char *w : {"E", "F^(2) 1_1", "E^(2) F 1_-3", "1_3 E^(3)"})
    for (auto inv : {Involution::Omega, Involution::Sigma, Involution::Star})
      EXPECT_EQ(rep.word_matrix(apply_involution(parse_word(w), inv)), rep.involution_image(rep.word_matrix(w), inv))
          << w;
}

TEST(FaithfulRep, LuIdentities) {
  for (int n = 1; n <= 3; ++n) {
    FaithfulRep<Scalar> rep(n);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int i = -n; i <= n; i += 2) {
          auto [first, second] = verify_lu_identity(rep, a, b, i);
          EXPECT_TRUE(first) << a << " " << b << " " << i;
          EXPECT_TRUE(second) << a << " " << b << " " << i;
        }
  }
}

TEST(SchurDimension, Values) {
  EXPECT_EQ(schur_dimension(1), 4u);
  EXPECT_EQ(schur_dimension(2), 10u);
  EXPECT_EQ(schur_dimension(4), 35u);
  for (int n = 1; n <= 20; ++n)
    EXPECT_EQ(schur_dimension(n), binomial(n + 3, 3));
}
