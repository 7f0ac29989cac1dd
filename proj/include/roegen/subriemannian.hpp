#pragma once

// Metric of the contact distribution extended to the coordinates (G, I, E, P):
//
//   ds^2 = dG^2/P^2 + dI^2 + (1 + I^2/P^2) dE^2 - (2I/P^2) dG dE + dP^2,
//
// i.e. the sum of squares of the coframe w1..w4. Index convention for all
// 4x4 objects in this header: 0 = G, 1 = I, 2 = E, 3 = P. (In one-based
// notation this puts Gamma^4_11 = 1/P^3 = -g^44 d_P g_11 / 2.)

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "roegen/contact_core.hpp"
#include "roegen/error.hpp"

namespace roegen {

enum Coord : int { kG = 0, kI = 1, kE = 2, kP = 3 };

using Vec4 = Eigen::Vector4d;
using MetricTensor = Eigen::Matrix4d;

struct ReducedPoint {
  double G = 0.0;
  double I = 0.0;
  double E = 0.0;
  double P = 1.0;

  Vec4 vec() const { return {G, I, E, P}; }
  static ReducedPoint from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  static ReducedPoint from_state(const StatePoint& s) { return {s.G, s.I, s.E, s.P}; }
};

/// Gamma^k_ij, symmetric in (i, j).
class ChristoffelTable {
 public:
  double operator()(int k, int i, int j) const { return data_[index(k, i, j)]; }
  void set_symmetric(int k, int i, int j, double v) {
    data_[index(k, i, j)] = v;
    data_[index(k, j, i)] = v;
  }
  double& at(int k, int i, int j) { return data_[index(k, i, j)]; }

 private:
  static std::size_t index(int k, int i, int j) {
    return static_cast<std::size_t>(16 * k + 4 * i + j);
  }
  std::array<double, 64> data_{};
};

struct GeodesicState {
  ReducedPoint position;
  Vec4 velocity = Vec4::Zero();
};

struct TrajectorySample {
  double t = 0.0;
  GeodesicState state;
};

using Trajectory = std::vector<TrajectorySample>;

inline void require_off_singular_locus(double P) {
  if (P == 0.0) throw Error(ErrorKind::SingularLocus, "metric is undefined at P = 0");
}

inline MetricTensor metric_at(const ReducedPoint& p) {
  require_off_singular_locus(p.P);
  const double p2 = p.P * p.P;
  MetricTensor g = MetricTensor::Zero();
  g(kG, kG) = 1.0 / p2;
  g(kI, kI) = 1.0;
  g(kE, kE) = 1.0 + p.I * p.I / p2;
  g(kP, kP) = 1.0;
  g(kG, kE) = g(kE, kG) = -p.I / p2;
  return g;
}

/// Inverse metric. The (G, E) block has determinant 1/P^2.
inline MetricTensor cometric_at(const ReducedPoint& p) {
  require_off_singular_locus(p.P);
  MetricTensor h = MetricTensor::Zero();
  h(kG, kG) = p.P * p.P + p.I * p.I;
  h(kG, kE) = h(kE, kG) = p.I;
  h(kE, kE) = 1.0;
  h(kI, kI) = 1.0;
  h(kP, kP) = 1.0;
  return h;
}

/// Closed-form connection coefficients of the metric.
inline ChristoffelTable christoffel_closed(const ReducedPoint& p) {
  require_off_singular_locus(p.P);
  const double I = p.I, P = p.P, P2 = P * P, P3 = P2 * P;
  ChristoffelTable c;
  c.set_symmetric(kG, kG, kI, -I / (2.0 * P2));
  c.set_symmetric(kG, kG, kP, -1.0 / P);
  c.set_symmetric(kG, kI, kE, -(P2 - I * I) / (2.0 * P2));
  c.set_symmetric(kG, kE, kP, I / P);
  c.set_symmetric(kI, kG, kE, 1.0 / (2.0 * P2));
  c.set_symmetric(kI, kE, kE, -I / P2);
  c.set_symmetric(kE, kG, kI, -1.0 / (2.0 * P2));
  c.set_symmetric(kE, kI, kE, I / (2.0 * P2));
  c.set_symmetric(kP, kG, kG, 1.0 / P3);
  c.set_symmetric(kP, kG, kE, -I / P3);
  c.set_symmetric(kP, kE, kE, I * I / P3);
  return c;
}

/// Finite-difference connection, Gamma^k_ij = g^kl (d_i g_lj + d_j g_li - d_l g_ij) / 2,
/// with central differences of metric_at at step h.
inline ChristoffelTable christoffel_fd(const ReducedPoint& p, double h) {
  require_off_singular_locus(p.P);
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be positive");
  if (!(h < std::abs(p.P) / 10.0))
    throw Error(ErrorKind::StepTooLarge, "step must stay below |P|/10");

  std::array<MetricTensor, 4> dg;  // dg[m](i, j) = d_m g_ij
  for (int m = 0; m < 4; ++m) {
    Vec4 plus = p.vec(), minus = p.vec();
    plus[m] += h;
    minus[m] -= h;
    dg[static_cast<std::size_t>(m)] =
        (metric_at(ReducedPoint::from_vec(plus)) - metric_at(ReducedPoint::from_vec(minus))) / (2.0 * h);
  }
  const MetricTensor ginv = cometric_at(p);
  auto d = [&](int m, int i, int j) { return dg[static_cast<std::size_t>(m)](i, j); };

  ChristoffelTable c;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int l = 0; l < 4; ++l) s += ginv(k, l) * (d(i, l, j) + d(j, l, i) - d(l, i, j));
        c.at(k, i, j) = 0.5 * s;
      }
  return c;
}

/// Geodesic acceleration -Gamma^k_ij v^i v^j from the closed-form connection.
inline Vec4 geodesic_accel(const GeodesicState& s) {
  const auto c = christoffel_closed(s.position);
  const Vec4& v = s.velocity;
  Vec4 a = Vec4::Zero();
  for (int k = 0; k < 4; ++k) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sum += c(k, i, j) * v[i] * v[j];
    a[k] = -sum;
  }
  return a;
}

/// Accelerations solved from the transcribed form of the four geodesic
/// equations. Agrees with geodesic_accel in the G, I and P components;
/// the E component carries the opposite sign on the (I/P^2) dI dE term.
inline Vec4 transcribed_geodesic_accel(const GeodesicState& s) {
  const double I = s.position.I, P = s.position.P;
  require_off_singular_locus(P);
  const double P2 = P * P, P3 = P2 * P;
  const double dG = s.velocity[kG], dI = s.velocity[kI], dE = s.velocity[kE], dP = s.velocity[kP];
  Vec4 a;
  a[kI] = -(1.0 / P2) * dG * dE + (I / P2) * dE * dE;
  a[kE] = (1.0 / P2) * dG * dI + (I / P2) * dE * dI;
  a[kP] = -(1.0 / P3) * dG * dG + (2.0 * I / P3) * dG * dE - (I * I / P3) * dE * dE;
  a[kG] = (I / P2) * dG * dI + (2.0 / P) * dG * dP + ((P2 - I * I) / P2) * dI * dE -
          (2.0 * I / P) * dE * dP;
  return a;
}

inline double speed_squared(const GeodesicState& s) {
  return s.velocity.dot(metric_at(s.position) * s.velocity);
}

inline constexpr double kSingularApproachThreshold = 1e-6;

/// Fixed-step classical RK4 integration of the geodesic equations over [0, T].
/// A final shortened step lands exactly on T when T is not a multiple of dt.
inline Trajectory integrate_geodesic(const GeodesicState& init, double T, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorKind::StepRejected, "dt must be positive");
  if (!(T >= dt) || !std::isfinite(T)) throw Error(ErrorKind::InvalidArgument, "need T >= dt");

  using State8 = Eigen::Matrix<double, 8, 1>;
  // A step can jump across P = 0 without landing inside the threshold, so a
  // sign change relative to the start of the step also counts.
  double side = init.position.P;
  auto guard = [&side](double P, double t) {
    if (!(std::abs(P) >= kSingularApproachThreshold) || P * side < 0.0)
      throw Error(ErrorKind::SingularApproach, "|P| fell below 1e-6 near t = " + std::to_string(t));
  };
  auto rhs = [&](const State8& y, double t) {
    guard(y[kP], t);
    GeodesicState s{ReducedPoint::from_vec(y.head<4>()), y.tail<4>()};
    State8 dy;
    dy << y.tail<4>(), geodesic_accel(s);
    return dy;
  };

  guard(init.position.P, 0.0);
  State8 y;
  y << init.position.vec(), init.velocity;

  const auto full_steps = static_cast<std::size_t>(std::floor(T / dt * (1.0 + 1e-12)));
  Trajectory out;
  out.reserve(full_steps + 2);
  out.push_back({0.0, init});

  double t = 0.0;
  std::size_t k = 0;
  while (true) {
    double h = dt;
    double t_next = static_cast<double>(k + 1) * dt;
    if (k >= full_steps) {
      h = T - t;
      t_next = T;
      if (h <= 1e-12 * T) break;
    }
    const State8 k1 = rhs(y, t);
    const State8 k2 = rhs(y + 0.5 * h * k1, t + 0.5 * h);
    const State8 k3 = rhs(y + 0.5 * h * k2, t + 0.5 * h);
    const State8 k4 = rhs(y + h * k3, t + h);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = t_next;
    guard(y[kP], t);
    out.push_back({t, {ReducedPoint::from_vec(y.head<4>()), y.tail<4>()}});
    ++k;
    if (t >= T) break;
  }
  return out;
}

/// Rebuilds Q along a (G, I, E, P) trajectory so that the lifted curve is
/// horizontal: dQ = (I dE - dG) / P, discretized with midpoint coefficients
/// on every segment.
inline Curve horizontal_lift_Q(const Trajectory& traj, double Q0) {
  if (traj.size() < 2) throw Error(ErrorKind::DegenerateCurve, "trajectory needs two samples");
  std::vector<CurveSample> samples;
  samples.reserve(traj.size());
  double Q = Q0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& p = traj[k].state.position;
    require_off_singular_locus(p.P);
    if (k > 0) {
      const auto& a = traj[k - 1].state.position;
      const double I_mid = 0.5 * (a.I + p.I);
      const double P_mid = 0.5 * (a.P + p.P);
      require_off_singular_locus(P_mid);
      Q += (I_mid * (p.E - a.E) - (p.G - a.G)) / P_mid;
    }
    samples.push_back({traj[k].t, {p.G, p.I, p.E, p.P, Q}});
  }
  return Curve(std::move(samples));
}

}  // namespace roegen
