#include <gtest/gtest.h>

#include "oddcycle/error.hpp"
#include "oddcycle/invariants.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace oddcycle;
using oddcycle::testing::to_ll;

TEST(HClosedForm, SingleCycleIsOne) {
  for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(h_closed_form(OddCycleComposition::from_k({k})), IntPolynomial{1});
}

TEST(HClosedForm, Examples) {
  EXPECT_EQ(h_closed_form(OddCycleComposition::from_r({3})), (IntPolynomial{1, 2, 3, 1}));
  EXPECT_EQ(h_closed_form(OddCycleComposition::from_r({1, 1, 1})), (IntPolynomial{1, 2, 3, 4, 4, 3, 1}));
  EXPECT_EQ(h_closed_form(OddCycleComposition::from_k({1, 1})), (IntPolynomial{1, 1, 1}));
}

TEST(HRecursive, Examples) {
  EXPECT_EQ(h_recursive(OddCycleComposition::from_k({2})), IntPolynomial{1});
  EXPECT_EQ(h_recursive(OddCycleComposition::from_k({1, 1, 1})), (IntPolynomial{1, 2, 3, 1}));
  EXPECT_EQ(h_recursive(OddCycleComposition::from_k({3, 2, 1})), (IntPolynomial{1, 2, 3, 4, 4, 3, 1}));
  EXPECT_EQ(h_recursive(OddCycleComposition::from_k({1, 2, 3})), (IntPolynomial{1, 2, 3, 4, 4, 3, 1}));
}

TEST(HRecursive, MemoSharesSubproblems) {
  HRecursion rec;
  rec(OddCycleComposition::from_k({3, 3, 3}));
  const auto after_first = rec.memo_size();
  rec(OddCycleComposition::from_k({3, 3, 2}));
  EXPECT_EQ(rec.memo_size(), after_first);
}

TEST(CmType, Values) {
  EXPECT_EQ(cm_type(OddCycleComposition::from_k({3, 2, 1})), 2u);
  EXPECT_EQ(cm_type(OddCycleComposition::from_k({1, 1, 1})), 2u);
  EXPECT_EQ(cm_type(OddCycleComposition::from_k({2, 1})), 1u);
  EXPECT_EQ(cm_type(OddCycleComposition::from_k({4})), 1u);
}

TEST(ETildeFromH, Examples) {
  const auto a = e_tilde_from_h(IntPolynomial{1, 2, 3, 1});
  EXPECT_EQ(a.value, 1);
  EXPECT_EQ(a.h_prime, (std::vector<BigInt>{0, 1, 0, 0}));

  const auto b = e_tilde_from_h(IntPolynomial{1, 2, 3, 4, 4, 3, 1});
  EXPECT_EQ(b.value, 6);
  EXPECT_EQ(b.h_prime, (std::vector<BigInt>{0, 1, 2, 2, 1, 0, 0}));

  EXPECT_EQ(e_tilde_from_h(IntPolynomial{1, 4, 6, 4, 1}).value, 0);
  EXPECT_EQ(e_tilde_from_h(IntPolynomial{1}).value, 0);
}

TEST(ETildeFromH, RejectsInvalidH) {
  EXPECT_THROW(e_tilde_from_h(IntPolynomial{2, 1}), InvalidInput);
  EXPECT_THROW(e_tilde_from_h(IntPolynomial{1, -1}), InvalidInput);
}

TEST(ETildeClosed, Examples) {
  EXPECT_EQ(e_tilde_closed(OddCycleComposition::from_r({3})), 1);
  EXPECT_EQ(e_tilde_closed(OddCycleComposition::from_r({1, 1, 1})), 6);
  EXPECT_EQ(e_tilde_closed(OddCycleComposition::from_r({0, 4})), 32);
  EXPECT_EQ(e_tilde_from_h(h_closed_form(OddCycleComposition::from_r({0, 4}))).value, 32);
  EXPECT_THROW(e_tilde_closed(OddCycleComposition::from_k({2, 2})), InvalidInput);
}

TEST(Classify, AllTriangles) {
  const auto r = classify(OddCycleComposition::from_r({3}));
  EXPECT_EQ(r.type, 2u);
  EXPECT_EQ(r.e_tilde, 1);
  EXPECT_TRUE(r.is_almost_gorenstein);
  EXPECT_FALSE(r.is_gorenstein);
  EXPECT_TRUE(r.prediction_agrees);
}

TEST(Classify, WorkedExample) {
  const auto r = classify(OddCycleComposition::from_r({1, 1, 1}));
  EXPECT_EQ(r.type, 2u);
  EXPECT_EQ(r.e_tilde, 6);
  EXPECT_EQ(r.s, 6u);
  EXPECT_FALSE(r.is_almost_gorenstein);
  EXPECT_FALSE(r.is_gorenstein);
  EXPECT_TRUE(r.prediction_agrees);
}

TEST(Classify, Hypersurface) {
  const auto r = classify(OddCycleComposition::from_k({1, 1}));
  EXPECT_EQ(r.h, (IntPolynomial{1, 1, 1}));
  EXPECT_TRUE(r.is_gorenstein);
  EXPECT_TRUE(r.is_almost_gorenstein);
  EXPECT_EQ(r.e_tilde, 0);
}

TEST(Classify, SingleCycle) {
  const auto r = classify(OddCycleComposition::from_k({5}));
  EXPECT_EQ(r.h, IntPolynomial{1});
  EXPECT_EQ(r.s, 0u);
  EXPECT_TRUE(r.is_gorenstein);
  EXPECT_TRUE(r.is_almost_gorenstein);
}

TEST(InvariantsProperty, SweepAgainstOracles) {
  HRecursion rec;
  for (const auto& k : oracle::k_multisets(5, 9)) {
    SCOPED_TRACE(::testing::PrintToString(k));
    const auto c = OddCycleComposition::from_k(k);
    const IntPolynomial closed = h_closed_form(c);
    EXPECT_EQ(to_ll(closed), oracle::closed_form_h(c.r()));
    EXPECT_EQ(rec(c), closed);

    const unsigned n = c.num_cycles();
    if (n >= 2) {
      EXPECT_EQ(closed[0], 1);
      EXPECT_EQ(closed[1], n - 1);
      EXPECT_EQ(*closed.degree(), c.k_sum());
    } else {
      EXPECT_EQ(closed, IntPolynomial{1});
    }
    EXPECT_EQ(closed.evaluate(1), facet_count_formula(c));

    const auto et = e_tilde_from_h(closed);
    const auto expected_prime = oracle::h_prime_partial_sums(to_ll(closed));
    ASSERT_EQ(et.h_prime.size(), expected_prime.size());
    for (std::size_t i = 0; i < expected_prime.size(); ++i) {
      EXPECT_EQ(et.h_prime[i], expected_prime[i]);
      EXPECT_GE(et.h_prime[i], 0);
    }

    const auto report = classify(c);
    EXPECT_TRUE(report.prediction_agrees);
    EXPECT_EQ(report.is_almost_gorenstein, n <= 2 || c.k_sum() == n);
    EXPECT_EQ(report.is_gorenstein, n <= 2);
    if (n >= 3) EXPECT_EQ(et.value, e_tilde_closed(c));
  }
}
