#include <gtest/gtest.h>

#include <cmath>

#include "roegen/contact_core.hpp"
#include "roegen/subriemannian.hpp"
#include "support/generators.hpp"

using namespace roegen;

namespace {

void expect_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(PfaffEval, DirectEvaluation) {
  EXPECT_DOUBLE_EQ(pfaff_eval({0, 2, 0, 3, 0}, {1, 0, 1, 0, 0}), -1.0);
  testkit::Rng rng(1);
  const auto p = rng.state();
  EXPECT_EQ(pfaff_eval(p, {}), 0.0);
  EXPECT_NEAR(pfaff_eval(p, frame_vector(2, p)), 0.0, 1e-15);
}

TEST(PfaffEval, LinearInTangent) {
  testkit::Rng rng(2);
  for (int n = 0; n < 1000; ++n) {
    const auto p = rng.state();
    const auto u = rng.tangent(), v = rng.tangent();
    const double s = rng.uniform(-3, 3);
    EXPECT_NEAR(pfaff_eval(p, u + s * v), pfaff_eval(p, u) + s * pfaff_eval(p, v), 1e-11);
  }
}

TEST(IsHorizontal, ThresholdsResidual) {
  EXPECT_TRUE(is_horizontal({0, 2, 0, 3, 0}, {2, 0, 1, 0, 0}, 1e-12));
  EXPECT_FALSE(is_horizontal({0, 2, 0, 3, 0}, {1, 0, 1, 0, 0}, 1e-12));
  EXPECT_TRUE(is_horizontal({7, -1, 3, 2, 5}, {}, 1e-300));
  expect_kind(ErrorKind::InvalidArgument, [] { is_horizontal({}, {}, 0.0); });
}

TEST(FrameVector, Components) {
  EXPECT_EQ(frame_vector(4, {0, 0, 0, 3, 0}), (TangentVector{-3, 0, 0, 0, 1}));
  EXPECT_EQ(frame_vector(1, {9, 8, 7, 6, 5}), (TangentVector{0, 1, 0, 0, 0}));
  EXPECT_EQ(frame_vector(2, {1, 0, 2, 3, 4}), (TangentVector{0, 0, 1, 0, 0}));
  EXPECT_EQ(frame_vector(3, {1, 1, 1, 1, 1}), (TangentVector{0, 0, 0, 1, 0}));
  expect_kind(ErrorKind::IndexOutOfRange, [] { frame_vector(0, {}); });
  expect_kind(ErrorKind::IndexOutOfRange, [] { frame_vector(5, {}); });
}

TEST(FrameVector, HorizontalAndNormal) {
  testkit::Rng rng(3);
  for (int n = 0; n < 1000; ++n) {
    const auto p = rng.state();
    for (int a = 1; a <= 4; ++a) {
      EXPECT_EQ(pfaff_eval(p, frame_vector(a, p)), 0.0);
      EXPECT_EQ(euclidean_dot(normal_vector(p), frame_vector(a, p)), 0.0);
    }
  }
}

TEST(FrameFlow, TangentToFrame) {
  testkit::Rng rng(4);
  const double h = 1e-6;
  for (int n = 0; n < 100; ++n) {
    const auto p = rng.state();
    for (int a = 1; a <= 4; ++a) {
      const auto fwd = frame_flow(a, p, h).as_array(), back = frame_flow(a, p, -h).as_array();
      const auto X = frame_vector(a, p).as_array();
      for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR((fwd[i] - back[i]) / (2 * h), X[i], 1e-8);
    }
  }
}

TEST(DualForm, Examples) {
  const StatePoint p{0, 1, 0, 2, 0};
  EXPECT_DOUBLE_EQ(dual_form_eval(4, p, {-2, 0, 0, 0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(dual_form_eval(4, p, {1, 0, 1, 0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(dual_form_eval(2, {3, 4, 5, 6, 7}, {0, 0, 1, 0, 0}), 1.0);
  expect_kind(ErrorKind::SingularLocus, [] { dual_form_eval(4, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}); });
  EXPECT_DOUBLE_EQ(dual_form_eval(1, {0, 1, 0, 0, 0}, {0, 3, 0, 0, 0}), 3.0);
}

TEST(DualForm, DualToFrameAtRandomPoints) {
  testkit::Rng rng(5);
  for (int n = 0; n < 10000; ++n) {
    const auto p = rng.state_off_locus();
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        ASSERT_NEAR(dual_form_eval(a, p, frame_vector(b, p)), a == b ? 1.0 : 0.0, 1e-12);
  }
}

TEST(NormalVector, Substitution) {
  EXPECT_EQ(normal_vector({5, 0, 1, 0, 2}), (TangentVector{1, 0, 0, 0, 0}));
  EXPECT_EQ(normal_vector({0, 2, 0, 3, 0}), (TangentVector{1, 0, -2, 0, 3}));
}

TEST(Curve, RejectsNonIncreasingTimes) {
  expect_kind(ErrorKind::InvalidArgument, [] { Curve(std::vector<CurveSample>{{0.0, {}}, {0.0, {}}}); });
  expect_kind(ErrorKind::InvalidArgument, [] { Curve(std::vector<CurveSample>{{1.0, {}}, {0.5, {}}}); });
}

TEST(GrowthIntegral, FlowOfX2) {
  const StatePoint p0{0, 2, 0, 1, 0};
  const auto c = Curve::sample([&](double t) { return frame_flow(2, p0, t); }, 0.0, 1.0, 10);
  EXPECT_NEAR(growth_line_integral(c), 2.0, 1e-14);
  EXPECT_NEAR(growth_line_integral(c), c.back().point.G - c.front().point.G, 1e-14);
}

TEST(GrowthIntegral, ConstantEAndQ) {
  const auto c = Curve::sample([](double t) { return StatePoint{t * t, std::sin(t), 3.0, 1 + t, -2.0}; }, 0, 2, 50);
  EXPECT_EQ(growth_line_integral(c), 0.0);
}

TEST(GrowthIntegral, UnitStability) {
  const auto c = Curve::sample([](double t) { return StatePoint{0, 1, t, 5, 1}; }, 0, 1, 1000);
  EXPECT_NEAR(growth_line_integral(c), 1.0, 1e-6);
}

TEST(GrowthIntegral, SecondOrderOnCurvedPath) {
  // I = cos t, E = sin t on [0, pi/2]: exact value is pi/4.
  auto gamma = [](double t) { return StatePoint{0, std::cos(t), std::sin(t), 1, 0}; };
  const double exact = M_PI / 4;
  const double e1 = std::abs(growth_line_integral(Curve::sample(gamma, 0, M_PI / 2, 100)) - exact);
  const double e2 = std::abs(growth_line_integral(Curve::sample(gamma, 0, M_PI / 2, 200)) - exact);
  EXPECT_NEAR(e1 / e2, 4.0, 0.1);
}

TEST(GrowthIntegral, DegenerateCurve) {
  expect_kind(ErrorKind::DegenerateCurve, [] { growth_line_integral(Curve(std::vector<CurveSample>{{0.0, {}}})); });
  expect_kind(ErrorKind::DegenerateCurve, [] { wealth_line_integral(Curve{}); });
}

TEST(WealthIntegral, Examples) {
  EXPECT_EQ(wealth_line_integral(Curve::sample([](double t) { return StatePoint{t, t, t, t, 4}; }, 0, 1, 20)), 0.0);
  EXPECT_NEAR(wealth_line_integral(Curve::sample([](double t) { return StatePoint{0, 0, 0, 2, t}; }, 0, 1, 7)), 2.0,
              1e-15);
  EXPECT_NEAR(wealth_line_integral(Curve::sample([](double t) { return StatePoint{0, 0, 0, t, t}; }, 0, 1, 1000)),
              0.5, 1e-6);
}

TEST(GrowthIntegral, EqualsGrowthChangeOnLiftedGeodesics) {
  testkit::Rng rng(6);
  for (int n = 0; n < 20; ++n) {
    const auto init = testkit::regular_geodesic_initial(rng, 1.0, 0.1);
    const auto c = horizontal_lift_Q(integrate_geodesic(init, 1.0, 1e-3), rng.uniform(-1, 1));
    EXPECT_LE(std::abs(growth_line_integral(c) - (c.back().point.G - c.front().point.G)), 1e-6);
    for (double r : pfaff_segment_residuals(c)) ASSERT_LE(std::abs(r), 1e-6);
  }
}
