#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kaczmarz/errors.hpp"
#include "kaczmarz/numerics.hpp"
#include "kaczmarz/window.hpp"
#include "test_support.hpp"

namespace kaczmarz {
namespace {

SignalSample sample(Step k, Vector phi, double y = 0.0) { return {k, std::move(phi), y}; }

TEST(SampleWindow, PushAndEvict) {
  SampleWindow w(2);
  EXPECT_FALSE(w.push(sample(1, {1, 0})));
  EXPECT_FALSE(w.push(sample(2, {0, 1})));
  EXPECT_TRUE(w.full());
  auto evicted = w.push(sample(3, {1, 1}));
  ASSERT_TRUE(evicted);
  EXPECT_EQ(evicted->k, 1);
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(w.oldest().k, 2);
  EXPECT_EQ(w.newest().k, 3);
}

TEST(SampleWindow, NonConsecutiveStepRejected) {
  SampleWindow w(2);
  w.push(sample(1, {1, 0}));
  w.push(sample(2, {1, 0}));
  EXPECT_THROW(w.push(sample(5, {1, 0})), NonConsecutiveStep);
  EXPECT_THROW(w.push(sample(2, {1, 0})), NonConsecutiveStep);
  EXPECT_EQ(w.newest().k, 2);
}

TEST(SampleWindow, CapacityAtLeastTwo) {
  EXPECT_THROW(SampleWindow(1), ValidationError);
  EXPECT_THROW(SampleWindow(0), ValidationError);
}

TEST(SampleWindow, KeepsConsecutiveStepsAndCapacity) {
  std::mt19937_64 rng(1);
  SampleWindow w(7);
  for (Step k = 10; k < 60; ++k) {
    w.push(sample(k, testing::random_vector(3, rng)));
    ASSERT_LE(w.size(), 7u);
    Step expected = w.oldest().k;
    for (const auto& s : w.samples()) ASSERT_EQ(s.k, expected++);
    ASSERT_EQ(w.newest().k, k);
  }
}

TEST(MakeUpdatePair, NoForgetting) {
  const auto pair = make_update_pair(sample(10, {0, 1}, 5.0), sample(7, {1, 0}, -2.0), 1.0, 3);
  EXPECT_EQ(pair.q_new, (Vector{0, 1}));
  EXPECT_EQ(pair.q_old, (Vector{1, 0}));
  EXPECT_EQ(pair.y_tilde.x0, 5.0);
  EXPECT_EQ(pair.y_tilde.x1, -2.0);
}

TEST(MakeUpdatePair, HalfForgettingTwoStepWindow) {
  const auto pair = make_update_pair(sample(5, {0, 1}, 1.0), sample(3, {1, 0}, 4.0), 0.5, 2);
  EXPECT_EQ(pair.q_old, (Vector{0.5, 0.0}));
  EXPECT_EQ(pair.y_tilde.x1, 2.0);
}

TEST(MakeUpdatePair, LongWindowWeightIsNegligible) {
  const Vector phi{0.6, 0.8};
  const auto pair = make_update_pair(sample(41, {1, 0}), sample(1, phi), 0.5, 40);
  // sqrt(0.5^40) = 2^-20
  EXPECT_LE(norm2(pair.q_old), 1e-6 * norm2(phi));
  EXPECT_NEAR(norm2(pair.q_old), std::ldexp(1.0, -20), 1e-20);
}

TEST(MakeUpdatePair, SameScaleOnColumnAndOutput) {
  std::mt19937_64 rng(4);
  for (double lambda : {0.3, 0.77, 1.0}) {
    const Vector phi = testing::random_vector(4, rng);
    const auto pair = make_update_pair(sample(12, phi, 1.0), sample(2, phi, 3.0), lambda, 10);
    const double scale = pair.y_tilde.x1 / 3.0;
    for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(pair.q_old[i], scale * phi[i]);
  }
}

TEST(MakeUpdatePair, Misaligned) {
  EXPECT_THROW(make_update_pair(sample(10, {1, 0}), sample(8, {1, 0}), 0.9, 3), WindowMisaligned);
  EXPECT_THROW(make_update_pair(sample(10, {1, 0}), sample(7, {1, 0}), 1.5, 3), ValidationError);
}

TEST(DirectInformationMatrix, SingleSample) {
  SampleWindow w(3);
  w.push(sample(4, {1, 0}));
  EXPECT_EQ(direct_information_matrix(w, 0.3), SymMatrix(2, {1, 0, 0, 0}));
}

TEST(DirectInformationMatrix, TwoSamplesWeighted) {
  SampleWindow w(3);
  w.push(sample(1, {1, 0}));
  w.push(sample(2, {0, 1}));
  EXPECT_EQ(direct_information_matrix(w, 0.5), SymMatrix(2, {0.5, 0, 0, 1}));
}

TEST(DirectInformationMatrix, EmptyWindowRejected) {
  SampleWindow w(3);
  EXPECT_THROW(direct_information_matrix(w, 0.5), std::invalid_argument);
}

// Sliding identity: A_k == lambda A_{k-1} + Q D Q^T for every k >= w + 1.
TEST(DirectInformationMatrix, MatchesRankTwoRecursion) {
  std::mt19937_64 rng(10);
  for (double lambda : {0.5, 0.9, 1.0}) {
    const std::size_t w = 10;
    SampleWindow window(w);
    SymMatrix recursed(4);
    for (Step k = 1; k <= 60; ++k) {
      SignalSample s = sample(k, testing::random_vector(4, rng));
      auto evicted = window.push(s);
      if (!evicted) {
        recursed = direct_information_matrix(window, lambda);
        continue;
      }
      const UpdatePair pair = make_update_pair(s, *evicted, lambda, w);
      recursed = rank_two_downdate_apply(recursed, pair.q_new, pair.q_old, lambda);
      ASSERT_LE(relative_frobenius_error(recursed, direct_information_matrix(window, lambda)), 1e-10) << k;
    }
  }
}

TEST(DirectInformationMatrix, PositiveDefiniteWhenExciting) {
  std::mt19937_64 rng(12);
  for (std::size_t freqs = 1; freqs <= 4; ++freqs) {
    const FrequencyGrid grid = testing::random_grid(freqs, rng);
    SampleWindow window(2 * freqs);
    for (Step k = 1; k <= static_cast<Step>(2 * freqs); ++k) window.push(sample(k, eval_regressor(grid, k)));
    const SymMatrix a = direct_information_matrix(window, 0.9);
    EXPECT_TRUE(invert_sym(a)) << freqs;
    // Symmetric PSD: x^T A x >= 0 for random x.
    for (int t = 0; t < 20; ++t) {
      const Vector x = testing::random_vector(a.dim(), rng);
      EXPECT_GE(dot(x, a.apply(x)), -1e-12);
    }
    EXPECT_EQ(a, symmetrize(a));
  }
}

}  // namespace
}  // namespace kaczmarz
