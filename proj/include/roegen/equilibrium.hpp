#pragma once

// Phase and union equilibria of Gibbs-Pfaff economies.
//
// Two-phase model: one value component split into two phases with m1, m2
// economic moles. Each phase has a molar potential g(e, q) whose partials give
// the internal politics stability I = dg/de and the price P = -dg/dq. An
// isolated system keeps G = m1 g1 + m2 g2, Q = m1 q1 + m2 q2 and m = m1 + m2
// fixed; at maximum entropy E = m1 e1 + m2 e2 the phases share I, P and the
// Gibbs-type potential mu = g + P q - I e.
//
// Union model: N economies, each with its own Pfaff constraint. Critical
// points of a weighted objective satisfy (alpha_i / beta_i) I_i = const and
// (alpha_i / gamma_i) P_i = const.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "roegen/contact_core.hpp"
#include "roegen/error.hpp"

namespace roegen {

// ---------------------------------------------------------------------------
// Molar potentials

template <class M>
concept MolarPotential = requires(const M& m, double e, double q) {
  { m.g(e, q) } -> std::convertible_to<double>;
  { m.stability(e, q) } -> std::convertible_to<double>;  // dg/de
  { m.price(e, q) } -> std::convertible_to<double>;      // -dg/dq
  { m.g_ee(e, q) } -> std::convertible_to<double>;
  { m.g_eq(e, q) } -> std::convertible_to<double>;
  { m.g_qq(e, q) } -> std::convertible_to<double>;
};

/// g = a (e - e0)^2 / 2 + b (q - q0)^2 / 2 + g0 with a, b > 0.
struct QuadraticPotential {
  double a = 1.0;
  double b = 1.0;
  double e0 = 0.0;
  double q0 = 0.0;
  double g0 = 0.0;

  void validate() const {
    if (!(a > 0.0) || !(b > 0.0))
      throw Error(ErrorKind::InvalidArgument, "quadratic potential needs a > 0 and b > 0");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(e0) || !std::isfinite(q0) ||
        !std::isfinite(g0))
      throw Error(ErrorKind::InvalidArgument, "quadratic potential parameters must be finite");
  }

  double g(double e, double q) const {
    return 0.5 * a * (e - e0) * (e - e0) + 0.5 * b * (q - q0) * (q - q0) + g0;
  }
  double stability(double e, double) const { return a * (e - e0); }
  double price(double, double q) const { return -b * (q - q0); }
  double g_ee(double, double) const { return a; }
  double g_eq(double, double) const { return 0.0; }
  double g_qq(double, double) const { return b; }

  friend bool operator==(const QuadraticPotential&, const QuadraticPotential&) = default;
};

static_assert(MolarPotential<QuadraticPotential>);

/// Gibbs-type economic potential mu = g + P q - I e.
template <MolarPotential M>
double gibbs_mu(const M& model, double e, double q) {
  return model.g(e, q) + model.price(e, q) * q - model.stability(e, q) * e;
}

// ---------------------------------------------------------------------------
// Two-phase equilibrium

struct PhaseSplit {
  double m1 = 0.0, e1 = 0.0, q1 = 0.0;
  double m2 = 0.0, e2 = 0.0, q2 = 0.0;

  Eigen::Matrix<double, 6, 1> vec() const { return (Eigen::Matrix<double, 6, 1>() << m1, e1, q1, m2, e2, q2).finished(); }
  static PhaseSplit from_vec(const Eigen::Matrix<double, 6, 1>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  }
  double entropy() const { return m1 * e1 + m2 * e2; }
};

struct Totals {
  double G = 0.0;
  double Q = 0.0;
  double m = 1.0;
};

template <MolarPotential M>
using PhaseModels = std::pair<M, M>;

using Residual6 = std::array<double, 6>;

inline double max_abs(const Residual6& r) {
  double m = 0.0;
  for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

/// (m-balance, G-balance, Q-balance, I1 - I2, P1 - P2, mu1 - mu2).
template <MolarPotential M>
Residual6 two_phase_residual(const PhaseModels<M>& models, const PhaseSplit& s, const Totals& t) {
  const auto& [a, b] = models;
  return {s.m1 + s.m2 - t.m,
          s.m1 * a.g(s.e1, s.q1) + s.m2 * b.g(s.e2, s.q2) - t.G,
          s.m1 * s.q1 + s.m2 * s.q2 - t.Q,
          a.stability(s.e1, s.q1) - b.stability(s.e2, s.q2),
          a.price(s.e1, s.q1) - b.price(s.e2, s.q2),
          gibbs_mu(a, s.e1, s.q1) - gibbs_mu(b, s.e2, s.q2)};
}

struct TwoPhaseOptions {
  double tolerance = 1e-10;
  int max_iterations = 100;
  int max_halvings = 20;
};

struct TwoPhaseResult {
  PhaseSplit split;
  Residual6 residuals{};
  int iterations = 0;
  // Identical phases: every m-split is an equilibrium and m1 was pinned to m/2.
  bool degenerate = false;
  double entropy = 0.0;
};

namespace detail {

template <MolarPotential M>
Eigen::Matrix<double, 6, 6> two_phase_jacobian(const PhaseModels<M>& models, const PhaseSplit& s,
                                               bool pinned) {
  const auto& [a, b] = models;
  Eigen::Matrix<double, 6, 6> J = Eigen::Matrix<double, 6, 6>::Zero();
  const double g1 = a.g(s.e1, s.q1), g2 = b.g(s.e2, s.q2);
  const double g1e = a.stability(s.e1, s.q1), g2e = b.stability(s.e2, s.q2);
  const double g1q = -a.price(s.e1, s.q1), g2q = -b.price(s.e2, s.q2);
  const double a_ee = a.g_ee(s.e1, s.q1), a_eq = a.g_eq(s.e1, s.q1), a_qq = a.g_qq(s.e1, s.q1);
  const double b_ee = b.g_ee(s.e2, s.q2), b_eq = b.g_eq(s.e2, s.q2), b_qq = b.g_qq(s.e2, s.q2);

  J.row(0) << 1, 0, 0, 1, 0, 0;
  J.row(1) << g1, s.m1 * g1e, s.m1 * g1q, g2, s.m2 * g2e, s.m2 * g2q;
  J.row(2) << s.q1, 0, s.m1, s.q2, 0, s.m2;
  J.row(3) << 0, a_ee, a_eq, 0, -b_ee, -b_eq;
  J.row(4) << 0, -a_eq, -a_qq, 0, b_eq, b_qq;
  if (pinned) {
    J.row(5) << 1, 0, 0, 0, 0, 0;
  } else {
    // d mu / de = -(g_eq q + g_ee e), d mu / dq = -(g_qq q + g_eq e)
    J.row(5) << 0, -(a_eq * s.q1 + a_ee * s.e1), -(a_qq * s.q1 + a_eq * s.e1), 0,
        (b_eq * s.q2 + b_ee * s.e2), (b_qq * s.q2 + b_eq * s.e2);
  }
  return J;
}

template <class M>
bool identical_models(const PhaseModels<M>& models) {
  if constexpr (std::equality_comparable<M>)
    return models.first == models.second;
  else
    return false;
}

}  // namespace detail

/// Damped Newton iteration on the six equilibrium conditions.
template <MolarPotential M>
TwoPhaseResult two_phase_solve(const PhaseModels<M>& models, const Totals& totals,
                               const PhaseSplit& guess, const TwoPhaseOptions& opt = {}) {
  if (!(totals.m > 0.0)) throw Error(ErrorKind::InvalidArgument, "total moles must be positive");
  if (!(guess.m1 > 0.0) || !(guess.m2 > 0.0))
    throw Error(ErrorKind::InvalidArgument, "guess needs m1 > 0 and m2 > 0");

  const bool pinned = detail::identical_models(models);
  auto residual = [&](const PhaseSplit& s) {
    Residual6 r = two_phase_residual(models, s, totals);
    if (pinned) r[5] = s.m1 - 0.5 * totals.m;
    return r;
  };
  auto to_vec = [](const Residual6& r) { return Eigen::Map<const Eigen::Matrix<double, 6, 1>>(r.data()); };

  PhaseSplit s = guess;
  if (pinned) {
    s.m1 = s.m2 = 0.5 * totals.m;
  }
  Residual6 r = residual(s);
  double norm = max_abs(r);
  int iter = 0;
  while (!(norm <= opt.tolerance)) {
    if (iter >= opt.max_iterations || !std::isfinite(norm))
      throw Error(ErrorKind::NoConvergence,
                  "two-phase Newton stalled after " + std::to_string(iter) + " iterations (residual " +
                      std::to_string(norm) + ")");
    const auto J = detail::two_phase_jacobian(models, s, pinned);
    Eigen::FullPivLU<Eigen::Matrix<double, 6, 6>> lu(J);
    if (lu.rank() < 6) throw Error(ErrorKind::DegenerateJacobian, "equilibrium Jacobian is singular");
    const Eigen::Matrix<double, 6, 1> step = lu.solve(-to_vec(r));

    double lambda = 1.0;
    PhaseSplit trial = PhaseSplit::from_vec(s.vec() + step);
    Residual6 rt = residual(trial);
    for (int h = 0; h < opt.max_halvings && !(max_abs(rt) < norm); ++h) {
      lambda *= 0.5;
      trial = PhaseSplit::from_vec(s.vec() + lambda * step);
      rt = residual(trial);
    }
    s = trial;
    r = rt;
    norm = max_abs(r);
    ++iter;
  }
  if (!(s.m1 > 0.0) || !(s.m2 > 0.0))
    throw Error(ErrorKind::NoConvergence, "Newton converged to a split with a non-positive mole count");

  TwoPhaseResult out;
  out.split = s;
  out.residuals = two_phase_residual(models, s, totals);
  out.iterations = iter;
  out.degenerate = pinned;
  out.entropy = s.entropy();
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force entropy maximization (oracle for two_phase_solve)

struct SearchBox {
  double e_lo = -10.0, e_hi = 10.0;
  double q_lo = -10.0, q_hi = 10.0;
  double g_lo = -10.0, g_hi = 10.0;
  double m_fraction_lo = 1e-3;  // m1 / m kept in [lo, 1 - lo]
  int grid = 16;                // coarse points per axis
  double final_step = 1e-3;
};

struct OracleResult {
  PhaseSplit split;
  double entropy = -std::numeric_limits<double>::infinity();  // of the returned split
  double best_feasible_entropy = -std::numeric_limits<double>::infinity();
  bool at_boundary = false;
  std::size_t evaluations = 0;
};

namespace detail {

struct EntropyRoot {
  double e = 0.0;
  double violation = 0.0;
  bool at_box_edge = false;
};

// Largest e in the box with g(e, q) = target, on the branch where g increases
// with e (I >= 0). Assumes g(., q) is unimodal on [e_lo, e_hi].
template <MolarPotential M>
std::pair<double, double> g_floor(const M& model, double q, const SearchBox& box) {
  double lo = box.e_lo, hi = box.e_hi;
  constexpr double kInvPhi = 0.6180339887498949;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * (1.0 + std::abs(lo) + std::abs(hi)); ++i) {
    const double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
    if (model.g(x1, q) < model.g(x2, q)) hi = x2; else lo = x1;
  }
  const double e_min = 0.5 * (lo + hi);
  return {e_min, model.g(e_min, q)};
}

template <MolarPotential M>
EntropyRoot max_entropy_root(const M& model, double q, double target, const SearchBox& box) {
  const auto [e_min, g_min] = g_floor(model, q, box);
  if (g_min > target) return {e_min, g_min - target, false};
  const double g_top = model.g(box.e_hi, q);
  if (g_top < target) return {box.e_hi, target - g_top, true};
  double lo = e_min, hi = box.e_hi;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (model.g(mid, q) < target) lo = mid; else hi = mid;
  }
  return {0.5 * (lo + hi), 0.0, std::abs(box.e_hi - hi) < 1e-12};
}

inline double box_excess(double v, double lo, double hi) {
  return v < lo ? lo - v : (v > hi ? v - hi : 0.0);
}

}  // namespace detail

/// Maximizes m1 e1 + m2 e2 over splits obeying the three conservation laws.
/// Search variables are (m1, q1, s); q2 follows from conservation, the slack
/// G - m1 min g1 - m2 min g2 is shared as s : (1 - s) between the phases, and
/// each e_i is recovered by root finding on the rising branch of g. A compass
/// search first drives the constraint violation to zero, then climbs the
/// entropy while rejecting every infeasible trial point.
template <MolarPotential M>
OracleResult brute_force_entropy_max(const PhaseModels<M>& models, const Totals& t, const SearchBox& box = {}) {
  if (!(t.m > 0.0)) throw Error(ErrorKind::InvalidArgument, "total moles must be positive");
  if (box.grid < 2 || !(box.e_hi > box.e_lo) || !(box.q_hi > box.q_lo) || !(box.g_hi > box.g_lo) ||
      !(box.m_fraction_lo > 0.0 && box.m_fraction_lo < 0.5) || !(box.final_step > 0.0))
    throw Error(ErrorKind::InvalidArgument, "malformed search box");

  const double m_lo = box.m_fraction_lo * t.m, m_hi = t.m - m_lo;
  using Point = std::array<double, 3>;
  const Point lo{m_lo, box.q_lo, 0.0}, hi{m_hi, box.q_hi, 1.0};

  struct Eval {
    double violation = std::numeric_limits<double>::infinity();
    double entropy = -std::numeric_limits<double>::infinity();
    bool edge = false;
    PhaseSplit split;
    bool feasible() const { return violation == 0.0; }
  };
  OracleResult out;
  auto evaluate = [&](const Point& x) {
    ++out.evaluations;
    const double m1 = x[0], q1 = x[1], share = x[2];
    const double m2 = t.m - m1;
    const double q2 = (t.Q - m1 * q1) / m2;
    const double floor1 = detail::g_floor(models.first, q1, box).second;
    const double floor2 = detail::g_floor(models.second, q2, box).second;
    const double slack = t.G - m1 * floor1 - m2 * floor2;
    const double spare = std::max(slack, 0.0);
    const double g1 = floor1 + share * spare / m1;
    const double g2 = floor2 + (1.0 - share) * spare / m2;
    const auto r1 = detail::max_entropy_root(models.first, q1, g1, box);
    const auto r2 = detail::max_entropy_root(models.second, q2, g2, box);
    const double outside = detail::box_excess(g1, box.g_lo, box.g_hi) + detail::box_excess(g2, box.g_lo, box.g_hi) +
                           detail::box_excess(q2, box.q_lo, box.q_hi);
    Eval ev;
    ev.violation = std::max(-slack, 0.0) + outside + r1.violation + r2.violation;
    ev.entropy = m1 * r1.e + m2 * r2.e;
    ev.edge = r1.at_box_edge || r2.at_box_edge;
    ev.split = PhaseSplit{m1, r1.e, q1, m2, r2.e, q2};
    if (ev.feasible()) out.best_feasible_entropy = std::max(out.best_feasible_entropy, ev.entropy);
    return ev;
  };

  Point grid_step{};
  for (std::size_t d = 0; d < 3; ++d) grid_step[d] = (hi[d] - lo[d]) / (box.grid - 1);

  // Coarse grid: keep the best feasible point and the least violating one.
  Point best_x{}, closest_x{};
  Eval best, closest;
  for (int i = 0; i < box.grid; ++i)
    for (int j = 0; j < box.grid; ++j)
      for (int k = 0; k < box.grid; ++k) {
        const Point x{lo[0] + i * grid_step[0], lo[1] + j * grid_step[1], lo[2] + k * grid_step[2]};
        const auto ev = evaluate(x);
        if (ev.feasible() && ev.entropy > best.entropy) { best = ev; best_x = x; }
        if (ev.violation < closest.violation) { closest = ev; closest_x = x; }
      }

  // Compass search: moves to the first trial accepted by `better`, halving the
  // pattern whenever no trial is accepted. Stops below final_step or on `done`.
  auto compass = [&](Point& x, Eval& at, auto better, auto done) {
    Point step = grid_step;
    while (!done(at) && std::max({step[0], step[1], step[2]}) > box.final_step) {
      bool moved = false;
      for (std::size_t d = 0; d < 3; ++d)
        for (double sign : {1.0, -1.0}) {
          Point trial = x;
          trial[d] = std::clamp(trial[d] + sign * step[d], lo[d], hi[d]);
          if (trial == x) continue;
          const auto ev = evaluate(trial);
          if (better(ev, at)) { at = ev; x = trial; moved = true; }
        }
      if (!moved)
        for (auto& s : step) s *= 0.5;
    }
  };

  if (!best.feasible()) {
    compass(closest_x, closest, [](const Eval& a, const Eval& b) { return a.violation < b.violation; },
            [](const Eval& a) { return a.feasible(); });
    if (!closest.feasible())
      throw Error(ErrorKind::EmptyFeasibleSet, "no feasible split found inside the search box");
    best = closest;
    best_x = closest_x;
  }
  compass(best_x, best, [](const Eval& a, const Eval& b) { return a.feasible() && a.entropy > b.entropy; },
          [](const Eval&) { return false; });

  bool on_face = false;
  for (std::size_t d = 0; d < 3; ++d)
    on_face = on_face || best_x[d] - lo[d] <= box.final_step || hi[d] - best_x[d] <= box.final_step;
  out.split = best.split;
  out.entropy = best.entropy;
  out.at_boundary = on_face || best.edge;
  return out;
}

// ---------------------------------------------------------------------------
// Union balance

struct UnionConfig {
  std::vector<double> I;  // internal politics stability of each economy
  std::vector<double> P;  // price level of each economy
  std::vector<StatePoint> states;  // optional full states, carried through reports
  std::vector<double> alpha, beta, gamma;

  std::size_t size() const { return I.size(); }

  static UnionConfig uniform(std::vector<double> I, std::vector<double> P) {
    UnionConfig c;
    const std::size_t n = I.size();
    c.I = std::move(I);
    c.P = std::move(P);
    c.alpha = c.beta = c.gamma = std::vector<double>(n, 1.0 / static_cast<double>(n));
    return c;
  }
};

inline constexpr std::size_t kEuropeanUnionSize = 27;

inline void validate_union(const UnionConfig& c, std::size_t min_states) {
  const std::size_t n = c.I.size();
  if (n < min_states)
    throw Error(ErrorKind::InvalidArgument, "union needs at least " + std::to_string(min_states) + " states");
  if (c.P.size() != n || c.alpha.size() != n || c.beta.size() != n || c.gamma.size() != n)
    throw Error(ErrorKind::InvalidArgument, "union vectors must all have N entries");
  if (!c.states.empty() && c.states.size() != n)
    throw Error(ErrorKind::InvalidArgument, "states must have N entries when given");
  for (const auto* w : {&c.alpha, &c.beta, &c.gamma}) {
    double sum = 0.0;
    for (double v : *w) {
      if (!(v > 0.0) || !std::isfinite(v))
        throw Error(ErrorKind::InvalidArgument, "weights must be positive and finite");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw Error(ErrorKind::InvalidArgument, "weights must sum to 1");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(c.I[i]) || !std::isfinite(c.P[i]))
      throw Error(ErrorKind::InvalidArgument, "I and P must be finite");
}

namespace detail {
// Mean written as x0 + mean(x - x0); returns x0 bit-exactly when all entries match.
inline double shifted_mean(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v - x.front();
  return x.front() + acc / static_cast<double>(x.size());
}
inline double spread(const std::vector<double>& x) {
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}
inline double max_magnitude(const std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}
}  // namespace detail

struct UnionReport {
  std::vector<double> weighted_I;  // u_i = (alpha_i / beta_i) I_i
  std::vector<double> weighted_P;  // v_i = (alpha_i / gamma_i) P_i
  double deviation_I = 0.0;        // max_i u_i - min_i u_i
  double deviation_P = 0.0;
  bool balanced_I = false;
  bool balanced_P = false;
  // Common ratios (lambda_i / beta_i) I_i and (lambda_i / gamma_i) P_i with
  // lambda_i = -alpha_i, i.e. with the sign they carry as multipliers.
  std::optional<double> common_I, common_P;
  std::optional<double> common_I_abs, common_P_abs;

  bool balanced() const { return balanced_I && balanced_P; }
};

/// Balance report for a union. `tolerance` is relative to the family's magnitude.
inline UnionReport union_residual(const UnionConfig& c, double tolerance = 1e-12) {
  validate_union(c, 2);
  UnionReport r;
  const std::size_t n = c.size();
  r.weighted_I.resize(n);
  r.weighted_P.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.weighted_I[i] = (c.alpha[i] / c.beta[i]) * c.I[i];
    r.weighted_P[i] = (c.alpha[i] / c.gamma[i]) * c.P[i];
  }
  r.deviation_I = detail::spread(r.weighted_I);
  r.deviation_P = detail::spread(r.weighted_P);
  r.balanced_I = r.deviation_I <= tolerance * std::max(1.0, detail::max_magnitude(r.weighted_I));
  r.balanced_P = r.deviation_P <= tolerance * std::max(1.0, detail::max_magnitude(r.weighted_P));
  if (r.balanced_I) {
    r.common_I = -detail::shifted_mean(r.weighted_I);
    r.common_I_abs = std::abs(*r.common_I);
  }
  if (r.balanced_P) {
    r.common_P = -detail::shifted_mean(r.weighted_P);
    r.common_P_abs = std::abs(*r.common_P);
  }
  return r;
}

struct LagrangeCertificate {
  std::vector<double> lambda;  // lambda^i = -alpha_i
  double lambda_E = 0.0;       // multiplier of the entropy constraint
  double lambda_Q = 0.0;       // multiplier of the production constraint
  // Per economy: (lambda^i + alpha_i, -lambda^i I_i + lambda_E beta_i, lambda^i P_i + lambda_Q gamma_i)
  std::vector<std::array<double, 3>> stationarity;
  double max_residual = 0.0;
};

/// Multipliers of the weighted Lagrange 1-form and the residual of its
/// stationarity equations. Uniform weights recover lambda^i = -1/N.
inline LagrangeCertificate lagrange_certificate(const UnionConfig& c) {
  validate_union(c, 1);
  const std::size_t n = c.size();
  LagrangeCertificate cert;
  cert.lambda.resize(n);
  std::vector<double> ratio_I(n), ratio_P(n);
  for (std::size_t i = 0; i < n; ++i) {
    cert.lambda[i] = -c.alpha[i];
    ratio_I[i] = (cert.lambda[i] / c.beta[i]) * c.I[i];
    ratio_P[i] = (cert.lambda[i] / c.gamma[i]) * c.P[i];
  }
  cert.lambda_E = detail::shifted_mean(ratio_I);
  cert.lambda_Q = -detail::shifted_mean(ratio_P);
  cert.stationarity.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double l = cert.lambda[i];
    cert.stationarity[i] = {l + c.alpha[i], -l * c.I[i] + cert.lambda_E * c.beta[i],
                            l * c.P[i] + cert.lambda_Q * c.gamma[i]};
    for (double v : cert.stationarity[i]) cert.max_residual = std::max(cert.max_residual, std::abs(v));
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Law audits

struct LawAudit {
  std::vector<std::size_t> entropy_decreases;  // k with E_k < E_{k-1} - 1e-12
  std::vector<std::size_t> third_law;          // k with I_k <= 1e-9 and E_k > 1e-6
  bool clean() const { return entropy_decreases.empty() && third_law.empty(); }
};

inline constexpr double kEntropyDecreaseTolerance = 1e-12;
inline constexpr double kThirdLawStabilityThreshold = 1e-9;
inline constexpr double kThirdLawEntropyThreshold = 1e-6;

/// Checks an isolated system's entropy series for decreases and, when the
/// paired stability series is given, flags blocked states (I ~ 0) that still
/// carry entropy.
inline LawAudit entropy_law_audit(const std::vector<double>& E, const std::vector<double>& I = {}) {
  if (E.size() < 2) throw Error(ErrorKind::InvalidArgument, "audit needs at least two samples");
  if (!I.empty() && I.size() != E.size())
    throw Error(ErrorKind::InvalidArgument, "I series must pair with the E series");
  LawAudit audit;
  for (std::size_t k = 1; k < E.size(); ++k)
    if (E[k] < E[k - 1] - kEntropyDecreaseTolerance) audit.entropy_decreases.push_back(k);
  for (std::size_t k = 0; k < I.size(); ++k)
    if (I[k] <= kThirdLawStabilityThreshold && E[k] > kThirdLawEntropyThreshold)
      audit.third_law.push_back(k);
  return audit;
}

}  // namespace roegen
