#include <gtest/gtest.h>

#include "scrollsec/secant.hpp"

using namespace scrollsec;

namespace {

Vec vec(const Field& f, std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

TEST(PairTest, TwistedCubicExamples) {
  const Field f = Field::make(7, 1);
  const Scroll s3(f, ScrollSpec::make({3}));
  const Vec chord = vec(f, {1, 0, 0, 1});
  EXPECT_EQ(secant_pair_test(s3, chord, vec(f, {1, 0, 0, 0})), PairResult::Secant);
  EXPECT_EQ(secant_pair_test(s3, chord, vec(f, {0, 0, 0, 1})), PairResult::Secant);
  EXPECT_EQ(secant_pair_test(s3, chord, vec(f, {1, 1, 1, 1})), PairResult::NotSecant);
  EXPECT_EQ(secant_pair_test(s3, chord, vec(f, {0, 1, 0, 0})), PairResult::NotOnX);
  EXPECT_EQ(secant_pair_test(s3, vec(f, {0, 1, 0, 0}), vec(f, {1, 0, 0, 0})),
            PairResult::TangentContact);
  try {
    secant_pair_test(s3, vec(f, {1, 0, 0, 0}), chord);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::POnVariety);
  }
}

TEST(FiberSpace, Examples) {
  const Field f = Field::make(7, 1);
  const Scroll s3(f, ScrollSpec::make({3}));
  const Vec chord = vec(f, {1, 0, 0, 1});
  EXPECT_EQ(fiber_secant_space(s3, chord, {f.one(), f.zero()}),
            LinearSubspace::coordinate(f, 3, {0}));
  EXPECT_TRUE(fiber_secant_space(s3, chord, {f.one(), f.one()}).empty());
}

TEST(Classify, TwistedCubic) {
  const Field f = Field::make(7, 1);
  const Scroll s3(f, ScrollSpec::make({3}));
  const auto cone = secant_cone_and_quadric(s3, vec(f, {1, 0, 0, 1}));
  EXPECT_EQ(cone.sec, LinearSubspace::coordinate(f, 3, {0, 3}));
  auto sig = signature_of(s3, cone);
  EXPECT_EQ(sig.label, StratumLabel::TwoPoints);
  EXPECT_EQ(sig.depth_pred, 2);
  sig = classify_signature(s3, vec(f, {0, 1, 0, 0}));
  EXPECT_EQ(sig.label, StratumLabel::DoublePoint);
  EXPECT_EQ(sig.sec_dim, 1);
}

TEST(Classify, SpecExamples) {
  const Field f = Field::make(7, 1);
  const Scroll s12(f, ScrollSpec::make({1, 2}));
  const auto sig = classify_signature(s12, vec(f, {0, 0, 1, 0, -1}));
  EXPECT_EQ(sig.s, 2);
  EXPECT_EQ(sig.rank, 3);
  EXPECT_EQ(sig.label, StratumLabel::Conic);
  EXPECT_EQ(sig.depth_pred, 3);

  const Scroll cone(f, ScrollSpec::make({3}, 0));
  const auto csig = classify_signature(cone, vec(f, {0, 1, 0, 0, 1}));
  EXPECT_EQ(csig.s, 1);
  EXPECT_EQ(csig.rank, 2);
  EXPECT_EQ(csig.locus_dim, 1);
  EXPECT_EQ(csig.depth_pred, 3);
  EXPECT_EQ(classify_signature(cone, vec(f, {0, 1, 0, 0, 1}), 2, true), csig);

  // 2x3 matrix [[1,0,0],[0,1,0]] on S(1,1,1): rank 2.
  const Scroll s111(f, ScrollSpec::make({1, 1, 1}));
  const auto q = secant_cone_and_quadric(s111, vec(f, {1, 0, 0, 1, 0, 0}));
  EXPECT_EQ(q.sec.dim(), 3);
  EXPECT_EQ(signature_of(s111, q).label, StratumLabel::QuadricSurface);
}
