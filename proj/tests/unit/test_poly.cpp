#include <gtest/gtest.h>

#include <set>

#include "scrollsec/poly.hpp"

using namespace scrollsec;
using namespace scrollsec::poly;

TEST(Poly, DivmodReconstructs) {
  std::mt19937_64 rng(2);
  const Field f = Field::make(11, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a(uniform_below(rng, 8)), b(1 + uniform_below(rng, 5));
    for (auto& c : a) c = f.random(rng);
    for (auto& c : b) c = f.random(rng);
    trim(b);
    if (b.empty()) continue;
    const auto [q, r] = divmod(f, a, b);
    EXPECT_LT(degree(r), degree(b));
    Poly back = add(f, mul(f, q, b), r);
    trim(a);
    EXPECT_EQ(back, a);
  }
}

TEST(Poly, GcdOfProducts) {
  const Field f = Field::make(7, 1);
  const Poly x1{f.from_int(-1), f.one()}, x2{f.from_int(-2), f.one()}, x3{f.from_int(-3), f.one()};
  const Poly a = mul(f, x1, x2), b = mul(f, x2, x3);
  EXPECT_EQ(gcd(f, a, b), x2);
}

TEST(Poly, InterpolateRoundTrip) {
  std::mt19937_64 rng(4);
  const Field f = Field::make(13, 2);
  for (int trial = 0; trial < 50; ++trial) {
    Poly p(1 + uniform_below(rng, 7));
    for (auto& c : p) c = f.random(rng);
    trim(p);
    std::vector<Fe> xs, ys;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    while (xs.size() < 8) {
      const Fe x = f.random(rng);
      if (!seen.insert({x.re, x.im}).second) continue;
      xs.push_back(x);
      ys.push_back(eval(f, p, x));
    }
    EXPECT_EQ(interpolate(f, xs, ys), p);
  }
}

TEST(Poly, RootsMatchExhaustiveScan) {
  std::mt19937_64 rng(8);
  for (int d = 1; d <= 2; ++d) {
    const Field f = Field::make(7, d);
    for (int trial = 0; trial < 100; ++trial) {
      Poly p(2 + uniform_below(rng, 6));
      for (auto& c : p) c = f.random(rng);
      trim(p);
      if (degree(p) < 1) continue;
      std::vector<Fe> expect;
      for (std::uint32_t im = 0; im < (d == 2 ? 7u : 1u); ++im)
        for (std::uint32_t re = 0; re < 7; ++re)
          if (Field::is_zero(eval(f, p, f.element(re, im)))) expect.push_back(f.element(re, im));
      EXPECT_EQ(roots(f, p, rng), expect);
    }
  }
}

TEST(Poly, RootsLargeField) {
  std::mt19937_64 rng(1);
  const Field f = Field::make(10007, 2);
  // Every quadratic over F_q splits over F_{q^2}.
  const Poly p = mul(f, mul(f, Poly{f.from_int(-5), f.one()}, Poly{f.neg(f.element(2, 3)), f.one()}),
                     Poly{f.from_int(-3), f.zero(), f.one()});
  const auto r = roots(f, p, rng);
  EXPECT_EQ(r.size(), 4u);
  for (const auto& x : r) EXPECT_TRUE(Field::is_zero(eval(f, p, x)));
}
