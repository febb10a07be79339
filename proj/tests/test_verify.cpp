#include "tlortho/verify.hpp"

#include <gtest/gtest.h>

using namespace tlortho;

TEST(Verify, EverySuitePassesAtSmallN) {
  for (const auto &s : suite_list()) {
    auto r = run_suite(s.name, std::min(s.default_n, 4), 11);
    EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
    EXPECT_GT(r.checks, 0u) << s.name;
    EXPECT_EQ(r.suite, s.name);
  }
}

TEST(Verify, ReportShape) {
  auto r = run_suite("dimensions", 5, 1);
  Json j = r.to_json();
  EXPECT_EQ(j["suite"], "dimensions");
  EXPECT_EQ(j["n"], 5);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Verify, RecorderKeepsBothSides) {
  VerificationReport r;
  Recorder rec(r);
  rec.equal(Json{{"x", 1}}, Scalar(2), Scalar(3));
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].lhs, "2");
  EXPECT_EQ(r.failures[0].rhs, "3");
  EXPECT_FALSE(r.passed());
}

TEST(Verify, SpecializedRuns) {
  for (const char *name : {"orthogonality", "closed-formula", "transition-inverse", "cellular", "ei-omega"})
    for (const char *v0 : {"1", "2", "-3/5"}) {
      auto r = run_suite(name, 4, 1, Rational(v0));
      EXPECT_TRUE(r.passed()) << name << " at " << v0;
    }
  EXPECT_TRUE(run_suite("schur-weyl", 3, 1, Rational(1, 3)).passed());
}

TEST(Verify, Deterministic) {
  auto a = run_suite("tensor", 4, 99), b = run_suite("tensor", 4, 99);
  EXPECT_EQ(a.checks, b.checks);
}

TEST(Verify, Errors) {
  EXPECT_THROW(run_suite("nope", 3, 1), std::invalid_argument);
  EXPECT_THROW(run_suite("orthogonality", 3, 1, Rational(0)), std::invalid_argument);
  EXPECT_THROW(run_suite("dimensions", 3, 1, Rational(2)), std::invalid_argument);
  EXPECT_THROW(run_suite("orthogonality", -1, 1), std::invalid_argument);
}
