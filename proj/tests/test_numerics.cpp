#include <gtest/gtest.h>

#include <random>

#include "kaczmarz/numerics.hpp"
#include "kaczmarz/window.hpp"
#include "test_support.hpp"

namespace kaczmarz {
namespace {

TEST(Solve2, DiagonalSystem) {
  auto x = solve2({2, 0, 0, 4}, {1, 1}, 1e-12);
  ASSERT_TRUE(x);
  EXPECT_DOUBLE_EQ(x->x0, 0.5);
  EXPECT_DOUBLE_EQ(x->x1, 0.25);
}

TEST(Solve2, IdentityReturnsRhs) {
  auto x = solve2({1, 0, 0, 1}, {3, -7}, 1e-12);
  ASSERT_TRUE(x);
  EXPECT_EQ(x->x0, 3.0);
  EXPECT_EQ(x->x1, -7.0);
}

TEST(Solve2, ZeroDeterminantIsSingular) {
  EXPECT_FALSE(solve2({1, 1, 1, 1}, {1, 2}, 1e-12));
  EXPECT_FALSE(solve2({1, 1, 1, 1}, {0, 0}, 1e-12));
  EXPECT_FALSE(solve2({0, 0, 0, 0}, {0, 0}, 1e-12));
  EXPECT_FALSE(invert2({1, 1, 1, 1}, 1e-12));
}

TEST(Solve2, GuardIsRelativeToEntryScale) {
  // det = 1e-14 * s^2 relative; the guard sits at 1e-12 regardless of s.
  for (double s : {1e-6, 1.0, 1e6}) {
    EXPECT_FALSE(solve2({s, s, s, s * (1 + 1e-14)}, {1, 1}, 1e-12)) << s;
    EXPECT_TRUE(solve2({s, 0, 0, s}, {1, 1}, 1e-12)) << s;
  }
}

TEST(Solve2, MultiplyBackProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  int solved = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Mat2 m{u(rng), u(rng), u(rng), u(rng)};
    const Vec2 rhs{u(rng), u(rng)};
    auto x = solve2(m, rhs, 1e-12);
    if (!x) continue;
    ++solved;
    const Vec2 back = m.apply(*x);
    const double scale = std::max(std::abs(rhs.x0), std::abs(rhs.x1));
    EXPECT_LE(std::max(std::abs(back.x0 - rhs.x0), std::abs(back.x1 - rhs.x1)), 1e-10 * scale);
  }
  EXPECT_GT(solved, 1900);
}

TEST(Invert2, MatchesSolveOnUnitVectors) {
  const Mat2 m{3, 1, 2, 5};
  auto inv = invert2(m, 1e-12);
  ASSERT_TRUE(inv);
  auto c0 = solve2(m, {1, 0}, 1e-12);
  auto c1 = solve2(m, {0, 1}, 1e-12);
  EXPECT_NEAR(inv->a, c0->x0, 1e-15);
  EXPECT_NEAR(inv->c, c0->x1, 1e-15);
  EXPECT_NEAR(inv->b, c1->x0, 1e-15);
  EXPECT_NEAR(inv->d, c1->x1, 1e-15);
}

TEST(InvertSym, Identity) {
  auto inv = invert_sym(SymMatrix::identity(4));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, SymMatrix::identity(4));
}

TEST(InvertSym, Diagonal) {
  auto inv = invert_sym(SymMatrix(2, {2, 0, 0, 0.5}));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, SymMatrix(2, {0.5, 0, 0, 2}));
}

TEST(InvertSym, RandomSpdResidual) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 20; ++trial) {
    const SymMatrix m = testing::random_spd(6, rng);
    auto inv = invert_sym(m);
    ASSERT_TRUE(inv);
    EXPECT_LE(testing::max_identity_residual(m, *inv), 1e-9);
    EXPECT_EQ(*inv, symmetrize(*inv));
  }
}

TEST(InvertSym, IllConditionedStillAccurate) {
  // Condition number 1e8 via a scaled diagonal rotated by a Householder reflector.
  const std::size_t n = 5;
  std::mt19937_64 rng(3);
  Vector v = testing::random_vector(n, rng);
  const double vv = dot(v, v);
  SymMatrix h = SymMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) -= 2 * v[i] * v[j] / vv;
  SymMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = std::pow(10.0, -2.0 * static_cast<double>(i));
  const SymMatrix m = symmetrize(h * d * h);
  auto inv = invert_sym(m);
  ASSERT_TRUE(inv);
  EXPECT_LE(testing::max_identity_residual(m, *inv), 1e-9);
}

TEST(InvertSym, SingularRejected) {
  EXPECT_FALSE(invert_sym(SymMatrix(2, {1, 1, 1, 1})));
  EXPECT_FALSE(invert_sym(SymMatrix(3)));
  EXPECT_FALSE(invert_sym(SymMatrix(2, {1, 0, 0, 1e-13})));
}

TEST(Symmetrize, Examples) {
  EXPECT_EQ(symmetrize(SymMatrix(2, {1, 2, 4, 1})), SymMatrix(2, {1, 3, 3, 1}));
  const SymMatrix s(2, {5, -1, -1, 2});
  EXPECT_EQ(symmetrize(s), s);
  EXPECT_EQ(symmetrize(SymMatrix(3)), SymMatrix(3));
}

TEST(RankTwoDowndateApply, PureUpdating) {
  const Vector q1{1, 0};
  const Vector q2{0, 0};
  EXPECT_EQ(rank_two_downdate_apply(SymMatrix(2), q1, q2, 1.0), SymMatrix(2, {1, 0, 0, 0}));
}

TEST(RankTwoDowndateApply, PureDowndating) {
  const Vector q1{0, 0};
  const Vector q2{1, 0};
  EXPECT_EQ(rank_two_downdate_apply(SymMatrix::identity(2), q1, q2, 1.0), SymMatrix(2, {0, 0, 0, 1}));
}

TEST(RankTwoDowndateApply, ShiftedThreeSampleWindow) {
  std::mt19937_64 rng(11);
  const double lambda = 0.5;
  const std::size_t w = 3;
  SampleWindow window(w);
  for (Step k = 1; k <= 3; ++k) window.push({k, testing::random_vector(4, rng), 0.0});
  const SymMatrix before = direct_information_matrix(window, lambda);
  const SignalSample next{4, testing::random_vector(4, rng), 0.0};
  auto evicted = window.push(next);
  ASSERT_TRUE(evicted);
  const UpdatePair pair = make_update_pair(next, *evicted, lambda, w);
  const SymMatrix recursed = rank_two_downdate_apply(before, pair.q_new, pair.q_old, lambda);
  EXPECT_LE(relative_frobenius_error(recursed, direct_information_matrix(window, lambda)), 1e-14);
  EXPECT_EQ(recursed, symmetrize(recursed));
}

TEST(SymMatrix, BasicOps) {
  const SymMatrix m(2, {1, 2, 3, 4});
  EXPECT_EQ(m.trace(), 5.0);
  EXPECT_EQ(m.max_abs_entry(), 4.0);
  const Vector x{1, -1};
  EXPECT_EQ(m.apply(x), (Vector{-1, -1}));
  EXPECT_THROW(SymMatrix(2, {1, 2, 3}), std::logic_error);
  EXPECT_THROW(dot(Vector{1}, Vector{1, 2}), std::logic_error);
}

}  // namespace
}  // namespace kaczmarz
