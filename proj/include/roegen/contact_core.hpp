#pragma once

// State space of the economy, the Gibbs-Pfaff contact form
//
//   omega = dG - I dE + P dQ,
//
// the frame of its kernel distribution, the dual coframe and line integrals
// of growth and wealth along sampled curves.
//
// Coordinates are always ordered (G, I, E, P, Q).

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "roegen/error.hpp"

namespace roegen {

struct StatePoint {
  double G = 0.0;  // growth potential
  double I = 0.0;  // internal politics stability
  double E = 0.0;  // entropy
  double P = 0.0;  // price level
  double Q = 0.0;  // volume / structure / quality

  constexpr std::array<double, 5> as_array() const { return {G, I, E, P, Q}; }
  static constexpr StatePoint from_array(const std::array<double, 5>& a) {
    return {a[0], a[1], a[2], a[3], a[4]};
  }
  bool is_finite() const {
    return std::isfinite(G) && std::isfinite(I) && std::isfinite(E) && std::isfinite(P) &&
           std::isfinite(Q);
  }
  friend constexpr bool operator==(const StatePoint&, const StatePoint&) = default;
};

struct TangentVector {
  double vG = 0.0;
  double vI = 0.0;
  double vE = 0.0;
  double vP = 0.0;
  double vQ = 0.0;

  constexpr std::array<double, 5> as_array() const { return {vG, vI, vE, vP, vQ}; }
  static constexpr TangentVector from_array(const std::array<double, 5>& a) {
    return {a[0], a[1], a[2], a[3], a[4]};
  }
  bool is_finite() const {
    return std::isfinite(vG) && std::isfinite(vI) && std::isfinite(vE) && std::isfinite(vP) &&
           std::isfinite(vQ);
  }
  friend constexpr bool operator==(const TangentVector&, const TangentVector&) = default;

  friend constexpr TangentVector operator+(const TangentVector& a, const TangentVector& b) {
    return {a.vG + b.vG, a.vI + b.vI, a.vE + b.vE, a.vP + b.vP, a.vQ + b.vQ};
  }
  friend constexpr TangentVector operator-(const TangentVector& a, const TangentVector& b) {
    return {a.vG - b.vG, a.vI - b.vI, a.vE - b.vE, a.vP - b.vP, a.vQ - b.vQ};
  }
  friend constexpr TangentVector operator*(double s, const TangentVector& v) {
    return {s * v.vG, s * v.vI, s * v.vE, s * v.vP, s * v.vQ};
  }
};

constexpr double euclidean_dot(const TangentVector& a, const TangentVector& b) {
  return a.vG * b.vG + a.vI * b.vI + a.vE * b.vE + a.vP * b.vP + a.vQ * b.vQ;
}

constexpr StatePoint displace(const StatePoint& p, const TangentVector& v) {
  return {p.G + v.vG, p.I + v.vI, p.E + v.vE, p.P + v.vP, p.Q + v.vQ};
}

struct CurveSample {
  double t = 0.0;
  StatePoint point;
};

// Ordered samples of a curve t -> gamma(t) with strictly increasing times.
class Curve {
 public:
  Curve() = default;
  explicit Curve(std::vector<CurveSample> samples) : samples_(std::move(samples)) {
    for (std::size_t k = 0; k < samples_.size(); ++k) {
      if (!std::isfinite(samples_[k].t) || !samples_[k].point.is_finite())
        throw Error(ErrorKind::InvalidArgument, "curve sample " + std::to_string(k) + " is not finite");
      if (k > 0 && !(samples_[k].t > samples_[k - 1].t))
        throw Error(ErrorKind::InvalidArgument, "curve times must be strictly increasing");
    }
  }

  const std::vector<CurveSample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const CurveSample& front() const { return samples_.front(); }
  const CurveSample& back() const { return samples_.back(); }

  // Samples a curve on n+1 equally spaced times in [t0, t1].
  template <class F>
  static Curve sample(F&& gamma, double t0, double t1, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::DegenerateCurve, "need at least one segment");
    std::vector<CurveSample> s;
    s.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const double t = (k == n) ? t1 : t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(n);
      s.push_back({t, gamma(t)});
    }
    return Curve(std::move(s));
  }

 private:
  std::vector<CurveSample> samples_;
};

/// Value of the Gibbs-Pfaff form dG - I dE + P dQ at p on v.
constexpr double pfaff_eval(const StatePoint& p, const TangentVector& v) {
  return v.vG - p.I * v.vE + p.P * v.vQ;
}

inline bool is_horizontal(const StatePoint& p, const TangentVector& v, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  return std::abs(pfaff_eval(p, v)) <= tol;
}

namespace detail {
inline void check_frame_index(int a) {
  if (a < 1 || a > 4)
    throw Error(ErrorKind::IndexOutOfRange, "frame index " + std::to_string(a) + " not in 1..4");
}
}  // namespace detail

/// Frame of the contact distribution:
///   X1 = d/dI, X2 = I d/dG + d/dE, X3 = d/dP, X4 = d/dQ - P d/dG.
inline TangentVector frame_vector(int a, const StatePoint& p) {
  detail::check_frame_index(a);
  switch (a) {
    case 1: return {0.0, 1.0, 0.0, 0.0, 0.0};
    case 2: return {p.I, 0.0, 1.0, 0.0, 0.0};
    case 3: return {0.0, 0.0, 0.0, 1.0, 0.0};
    default: return {-p.P, 0.0, 0.0, 0.0, 1.0};
  }
}

/// Time-t flow of frame field X_a starting at p. All four flows are exact.
inline StatePoint frame_flow(int a, const StatePoint& p, double t) {
  detail::check_frame_index(a);
  StatePoint q = p;
  switch (a) {
    case 1: q.I += t; break;
    case 2: q.G += p.I * t; q.E += t; break;
    case 3: q.P += t; break;
    default: q.G -= p.P * t; q.Q += t; break;
  }
  return q;
}

/// Dual coframe: w1 = dI, w2 = dE, w3 = dP, w4 = -(1/P) dG + (I/P) dE.
/// w4 only exists off the locus P = 0.
inline double dual_form_eval(int a, const StatePoint& p, const TangentVector& v) {
  detail::check_frame_index(a);
  switch (a) {
    case 1: return v.vI;
    case 2: return v.vE;
    case 3: return v.vP;
    default:
      if (p.P == 0.0) throw Error(ErrorKind::SingularLocus, "w4 is undefined at P = 0");
      return (-v.vG + p.I * v.vE) / p.P;
  }
}

/// Euclidean normal to the distribution, N = (1, 0, -I, 0, P).
constexpr TangentVector normal_vector(const StatePoint& p) { return {1.0, 0.0, -p.I, 0.0, p.P}; }

namespace detail {
inline void check_integrable(const Curve& c) {
  if (c.size() < 2) throw Error(ErrorKind::DegenerateCurve, "line integral needs at least two samples");
}
}  // namespace detail

/// Midpoint-rule approximation of the integral of I dE - P dQ along c.
/// For horizontal curves this approximates G(t_n) - G(t_0).
inline double growth_line_integral(const Curve& c) {
  detail::check_integrable(c);
  const auto& s = c.samples();
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const auto& a = s[k].point;
    const auto& b = s[k + 1].point;
    sum += 0.5 * (a.I + b.I) * (b.E - a.E) - 0.5 * (a.P + b.P) * (b.Q - a.Q);
  }
  return sum;
}

/// Midpoint-rule approximation of the wealth integral of P dQ along c.
inline double wealth_line_integral(const Curve& c) {
  detail::check_integrable(c);
  const auto& s = c.samples();
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    sum += 0.5 * (s[k].point.P + s[k + 1].point.P) * (s[k + 1].point.Q - s[k].point.Q);
  return sum;
}

/// Form residual on every segment: pfaff_eval at the segment midpoint applied
/// to the secant velocity.
inline std::vector<double> pfaff_segment_residuals(const Curve& c) {
  detail::check_integrable(c);
  const auto& s = c.samples();
  std::vector<double> out;
  out.reserve(s.size() - 1);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const auto a = s[k].point.as_array();
    const auto b = s[k + 1].point.as_array();
    const double dt = s[k + 1].t - s[k].t;
    std::array<double, 5> mid{}, vel{};
    for (std::size_t i = 0; i < 5; ++i) {
      mid[i] = 0.5 * (a[i] + b[i]);
      vel[i] = (b[i] - a[i]) / dt;
    }
    out.push_back(pfaff_eval(StatePoint::from_array(mid), TangentVector::from_array(vel)));
  }
  return out;
}

}  // namespace roegen
