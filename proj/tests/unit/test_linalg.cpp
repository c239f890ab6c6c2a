#include <gtest/gtest.h>

#include <algorithm>

#include "scrollsec/error.hpp"
#include "scrollsec/linalg.hpp"

using namespace scrollsec;

namespace {

Mat random_mat(const Field& f, std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = uniform_below(rng, 10) < static_cast<std::uint64_t>(zero_bias) ? f.zero() : f.random(rng);
  return m;
}

}  // namespace

TEST(RowReduce, Identity) {
  const Field f = Field::make(7, 1);
  const auto rr = row_reduce(f, Mat::identity(f, 3));
  EXPECT_EQ(rr.rank, 3u);
  EXPECT_EQ(rr.kernel.rows(), 0u);
}

TEST(RowReduce, Zero) {
  const Field f = Field::make(7, 1);
  const auto rr = row_reduce(f, Mat(2, 4));
  EXPECT_EQ(rr.rank, 0u);
  EXPECT_EQ(rr.kernel.rows(), 4u);
}

TEST(RowReduce, RankOneKernel) {
  const Field f = Field::make(7, 1);
  const Mat m = Mat::from_rows({{f.from_int(1), f.from_int(2)}, {f.from_int(2), f.from_int(4)}}, 2);
  const auto rr = row_reduce(f, m);
  EXPECT_EQ(rr.rank, 1u);
  ASSERT_EQ(rr.kernel.rows(), 1u);
  const Vec k = normalized(f, rr.kernel.row(0));
  EXPECT_EQ(k, (Vec{f.one(), f.mul(f.from_int(-1), f.inv(f.from_int(2)))}));
  EXPECT_TRUE(is_zero_vec(mat_vec(f, m, rr.kernel.row(0))));
}

TEST(RowReduce, RankNullityProperty) {
  std::mt19937_64 rng(11);
  for (int d = 1; d <= 2; ++d) {
    const Field f = Field::make(5, d);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + uniform_below(rng, 5), c = 1 + uniform_below(rng, 6);
      const Mat m = random_mat(f, rng, r, c, 5);
      const auto rr = row_reduce(f, m);
      EXPECT_EQ(rr.rank + rr.kernel.rows(), c);
      for (std::size_t i = 0; i < rr.kernel.rows(); ++i)
        EXPECT_TRUE(is_zero_vec(mat_vec(f, m, rr.kernel.row(i))));
      // Echelon rows lie in the row space and span it.
      Mat stacked = m;
      for (std::size_t i = 0; i < rr.echelon.rows(); ++i) stacked.append_row(rr.echelon.row(i));
      EXPECT_EQ(rank(f, stacked), rr.rank);
      EXPECT_EQ(rank(f, rr.echelon), rr.rank);
    }
  }
}

TEST(Determinant, MatchesRank) {
  std::mt19937_64 rng(3);
  const Field f = Field::make(7, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 4);
    const Mat m = random_mat(f, rng, n, n, 6);
    EXPECT_EQ(Field::is_zero(determinant(f, m)), rank(f, m) < n);
  }
}

TEST(Subspace, SpanExamples) {
  const Field f = Field::make(7, 1);
  const Vec e0{f.one(), f.zero(), f.zero()}, e1{f.zero(), f.one(), f.zero()};
  EXPECT_EQ(LinearSubspace::span(f, {e0}, 2).dim(), 0);
  const Vec sum{f.one(), f.one(), f.zero()};
  EXPECT_EQ(LinearSubspace::span(f, {e0, e1, sum}, 2).dim(), 1);
  EXPECT_EQ(LinearSubspace::span(f, {}, 2).dim(), -1);
  EXPECT_THROW(LinearSubspace::span(f, {Vec{f.one()}}, 2), Error);
}

TEST(Subspace, ConicSpansPlane) {
  // Five points of x0 x2 = x1^2 over F_7: (1, t, t^2).
  const Field f = Field::make(7, 1);
  std::vector<Vec> pts;
  for (int t = 0; t < 5; ++t) {
    const Vec p{f.one(), f.from_int(t), f.from_int(t * t)};
    EXPECT_EQ(f.mul(p[0], p[2]), f.mul(p[1], p[1]));
    pts.push_back(p);
  }
  EXPECT_EQ(LinearSubspace::span(f, pts, 2), LinearSubspace::full(f, 2));
}

TEST(Subspace, Contains) {
  const Field f = Field::make(7, 1);
  const auto line = LinearSubspace::coordinate(f, 2, {0, 1});
  EXPECT_TRUE(line.contains(f, Vec{f.one(), f.from_int(3), f.zero()}));
  const auto pt = LinearSubspace::coordinate(f, 2, {0});
  EXPECT_FALSE(pt.contains(f, Vec{f.zero(), f.one(), f.zero()}));
  EXPECT_FALSE(LinearSubspace(2).contains(f, Vec{f.one(), f.zero(), f.zero()}));
}

TEST(Subspace, OrderIndependentAndIdempotent) {
  std::mt19937_64 rng(5);
  const Field f = Field::make(11, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vec> pts;
    const std::size_t cnt = 1 + uniform_below(rng, 4);
    for (std::size_t i = 0; i < cnt; ++i) {
      Vec v(5);
      for (auto& x : v) x = f.random(rng);
      pts.push_back(v);
    }
    const auto s = LinearSubspace::span(f, pts, 4);
    auto shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(LinearSubspace::span(f, shuffled, 4), s);
    std::vector<Vec> again;
    for (std::size_t i = 0; i < s.basis().rows(); ++i) again.push_back(s.basis().row_vec(i));
    EXPECT_EQ(LinearSubspace::span(f, again, 4), s);
  }
}

TEST(Subspace, IntersectAndJoinDimensions) {
  std::mt19937_64 rng(9);
  const Field f = Field::make(13, 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto rand_space = [&](std::size_t cnt) {
      std::vector<Vec> pts;
      for (std::size_t i = 0; i < cnt; ++i) {
        Vec v(6);
        for (auto& x : v) x = f.random(rng);
        pts.push_back(v);
      }
      return LinearSubspace::span(f, pts, 5);
    };
    const auto a = rand_space(1 + uniform_below(rng, 5));
    const auto b = rand_space(1 + uniform_below(rng, 5));
    const auto meet = a.intersect(f, b);
    const auto joined = a.join(f, b);
    EXPECT_EQ(meet.dim() + joined.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(f, meet));
    EXPECT_TRUE(b.contains(f, meet));
    EXPECT_TRUE(joined.contains(f, a));
  }
}

TEST(Subspace, EnumeratePointCounts) {
  const Field f = Field::make(5, 1);
  EXPECT_EQ(enumerate_points(f, LinearSubspace::full(f, 2)).size(), 31u);
  const Field f2 = Field::make(3, 2);
  EXPECT_EQ(enumerate_points(f2, LinearSubspace::full(f2, 1)).size(), 10u);
}
