#pragma once

// Composition laws on R^5 and the five-dimensional Roegen Lie algebra.
//
// Exponential coordinates: (I, E, P, Q) are horizontal and pair with the
// basis X1..X4, G is central and pairs with X5 = d/dG. The bracket table is
//
//   [X1, X2] = X5,  [X3, X4] = -X5,  all other brackets of basis vectors 0.
//
// Three laws live here:
//  * commutative_compose   - abelian law with a symmetric bilinear cocycle
//  * carnot_compose_bch    - step-2 BCH product x + y + [x, y]/2 of the algebra
//  * carnot_compose_paper  - the "algebraic variant" law taken term by
//                            term; its (E, G) cross term breaks associativity
//
// carnot_compose_bch is the one to use downstream. The transcribed law is kept
// so that its defect can be measured.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "roegen/contact_core.hpp"
#include "roegen/error.hpp"

namespace roegen {

using GroupElement = StatePoint;

/// Coefficients over the basis X1..X5 (stored zero-based: c[0] is X1).
struct AlgebraVector {
  std::array<double, 5> c{};

  double operator[](int a) const { return c[static_cast<std::size_t>(a - 1)]; }
  friend constexpr bool operator==(const AlgebraVector&, const AlgebraVector&) = default;
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; });
  }
};

// ---------------------------------------------------------------------------
// Commutative law

inline GroupElement commutative_compose(const GroupElement& x, const GroupElement& y) {
  return {x.G + y.G - x.I * y.E + x.P * y.Q - y.I * x.E + y.P * x.Q,
          x.I + y.I, x.E + y.E, x.P + y.P, x.Q + y.Q};
}

inline GroupElement commutative_inverse(const GroupElement& x) {
  return {-x.G - 2.0 * x.I * x.E + 2.0 * x.P * x.Q, -x.I, -x.E, -x.P, -x.Q};
}

// ---------------------------------------------------------------------------
// Carnot laws

/// Antisymmetric term of the variant law: (I1E2 - I2E1) + (P1Q2 - P2Q1) + (E1G2 - E2G1).
inline double carnot_cocycle_paper(const GroupElement& x, const GroupElement& y) {
  return (x.I * y.E - y.I * x.E) + (x.P * y.Q - y.P * x.Q) + (x.E * y.G - y.E * x.G);
}

inline GroupElement carnot_compose_paper(const GroupElement& x, const GroupElement& y) {
  return {x.G + y.G + 0.5 * carnot_cocycle_paper(x, y),
          x.I + y.I, x.E + y.E, x.P + y.P, x.Q + y.Q};
}

/// Cocycle of the BCH product: coefficient of X5 in [x, y].
inline double carnot_cocycle_bch(const GroupElement& x, const GroupElement& y) {
  return (x.I * y.E - y.I * x.E) - (x.P * y.Q - y.P * x.Q);
}

inline GroupElement carnot_compose_bch(const GroupElement& x, const GroupElement& y) {
  return {x.G + y.G + 0.5 * carnot_cocycle_bch(x, y),
          x.I + y.I, x.E + y.E, x.P + y.P, x.Q + y.Q};
}

inline GroupElement carnot_inverse_bch(const GroupElement& x) {
  return {-x.G, -x.I, -x.E, -x.P, -x.Q};
}

/// G-component of (x*y)*w minus that of x*(y*w) for any law on GroupElement.
template <class Law>
double associativity_defect(Law&& law, const GroupElement& x, const GroupElement& y,
                            const GroupElement& w) {
  return law(law(x, y), w).G - law(x, law(y, w)).G;
}

/// Associativity defect of the transcribed Carnot law by direct composition.
inline double associativity_defect_paper(const GroupElement& x, const GroupElement& y,
                                         const GroupElement& w) {
  return associativity_defect(carnot_compose_paper, x, y, w);
}

/// Closed form of the same defect: -(E_w AC(x,y) + E_x AC(y,w)) / 4.
inline double associativity_defect_paper_closed(const GroupElement& x, const GroupElement& y,
                                                const GroupElement& w) {
  return -0.25 * (w.E * carnot_cocycle_paper(x, y) + x.E * carnot_cocycle_paper(y, w));
}

// ---------------------------------------------------------------------------
// Lie algebra

inline void check_algebra_index(int a) {
  if (a < 1 || a > 5)
    throw Error(ErrorKind::IndexOutOfRange, "algebra index " + std::to_string(a) + " not in 1..5");
}

inline AlgebraVector basis_vector(int a) {
  check_algebra_index(a);
  AlgebraVector v;
  v.c[static_cast<std::size_t>(a - 1)] = 1.0;
  return v;
}

/// [X_a, X_b] expanded over X1..X5.
inline AlgebraVector lie_bracket_structure(int a, int b) {
  check_algebra_index(a);
  check_algebra_index(b);
  AlgebraVector out;
  if (a == 1 && b == 2) out.c[4] = 1.0;
  if (a == 2 && b == 1) out.c[4] = -1.0;
  if (a == 3 && b == 4) out.c[4] = -1.0;
  if (a == 4 && b == 3) out.c[4] = 1.0;
  return out;
}

inline AlgebraVector lie_bracket(const AlgebraVector& u, const AlgebraVector& v) {
  AlgebraVector out;
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      const double w = u[a] * v[b];
      if (w == 0.0) continue;
      const auto s = lie_bracket_structure(a, b);
      for (std::size_t k = 0; k < 5; ++k) out.c[k] += w * s.c[k];
    }
  return out;
}

struct IndexTriple {
  int a, b, c;
  friend constexpr bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

/// Scans [X_a, [X_b, X_c]] over all triples and returns the nonzero ones.
inline std::vector<IndexTriple> nilpotency_check() {
  std::vector<IndexTriple> violations;
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c)
        if (!lie_bracket(basis_vector(a), lie_bracket_structure(b, c)).is_zero())
          violations.push_back({a, b, c});
  return violations;
}

/// Exponential coordinates of a group element: (I, E, P, Q, G) over X1..X5.
inline AlgebraVector to_algebra(const GroupElement& x) { return {{x.I, x.E, x.P, x.Q, x.G}}; }

inline GroupElement from_algebra(const AlgebraVector& v) {
  return {v.c[4], v.c[0], v.c[1], v.c[2], v.c[3]};
}

/// The left-invariant field sum_a c_a X_a evaluated at p (X5 = d/dG).
inline TangentVector algebra_field(const AlgebraVector& v, const StatePoint& p) {
  TangentVector out{v.c[4], 0.0, 0.0, 0.0, 0.0};
  for (int a = 1; a <= 4; ++a) out = out + v[a] * frame_vector(a, p);
  return out;
}

namespace detail {
inline TangentVector field(int a, const StatePoint& p) {
  return a == 5 ? TangentVector{1.0, 0.0, 0.0, 0.0, 0.0} : frame_vector(a, p);
}
inline StatePoint flow(int a, const StatePoint& p, double t) {
  if (a == 5) {
    StatePoint q = p;
    q.G += t;
    return q;
  }
  return frame_flow(a, p, t);
}
}  // namespace detail

/// Commutator of the vector fields X_a and X_b at p from central differences
/// along their flows: [X, Y] = d/dt Y(phi^X_t p) - d/dt X(phi^Y_t p) at t = 0.
inline TangentVector numerical_bracket(int a, int b, const StatePoint& p, double h) {
  check_algebra_index(a);
  check_algebra_index(b);
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be positive");
  const auto dY = (1.0 / (2.0 * h)) * (detail::field(b, detail::flow(a, p, h)) -
                                       detail::field(b, detail::flow(a, p, -h)));
  const auto dX = (1.0 / (2.0 * h)) * (detail::field(a, detail::flow(b, p, h)) -
                                       detail::field(a, detail::flow(b, p, -h)));
  return dY - dX;
}

// ---------------------------------------------------------------------------
// Randomized property checks shared by the CLI and the acceptance suite.

struct LawCheck {
  double max_error = 0.0;  // worst relative error seen
  bool passed = true;
};

struct GroupCheckReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;

  LawCheck commutative_commutativity, commutative_associativity, commutative_identity,
      commutative_inverse;
  LawCheck bch_associativity, bch_identity, bch_inverse;
  double bch_noncommuting_fraction = 0.0;   // fraction with x*y != y*x where cocycle != 0
  LawCheck paper_defect_formula;            // closed form vs direct composition
  double paper_nonassociative_fraction = 0.0;
  double paper_witness_defect = 0.0;        // x=(1,0,0,0,0), y=w=(0,0,1,0,0)
  std::size_t nilpotency_violations = 0;

  bool all_passed() const {
    return commutative_commutativity.passed && commutative_associativity.passed &&
           commutative_identity.passed && commutative_inverse.passed && bch_associativity.passed &&
           bch_identity.passed && bch_inverse.passed && paper_defect_formula.passed &&
           bch_noncommuting_fraction == 1.0 && nilpotency_violations == 0 &&
           std::abs(paper_witness_defect - 0.25) <= tolerance;
  }
};

namespace detail {
inline double magnitude(const GroupElement& x) {
  const auto a = x.as_array();
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

// Products grow quadratically with the inputs, so errors are scaled by the
// squared magnitude (floored at 1).
inline double scaled_gap(const GroupElement& u, const GroupElement& v, double scale) {
  const auto a = u.as_array();
  const auto b = v.as_array();
  double gap = 0.0;
  for (std::size_t i = 0; i < 5; ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap / std::max(1.0, scale * scale);
}

inline void record(LawCheck& check, double err, double tol) {
  check.max_error = std::max(check.max_error, err);
  if (!(err <= tol)) check.passed = false;
}
}  // namespace detail

inline GroupCheckReport run_group_checks(std::size_t samples, std::uint64_t seed,
                                         double tolerance = 1e-12, double range = 5.0) {
  GroupCheckReport r;
  r.samples = samples;
  r.seed = seed;
  r.tolerance = tolerance;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-range, range);
  auto draw = [&] { return GroupElement{U(rng), U(rng), U(rng), U(rng), U(rng)}; };
  const GroupElement zero{};

  std::size_t noncommuting = 0, cocycle_nonzero = 0, nonassociative = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const auto x = draw(), y = draw(), w = draw();
    const double s = std::max({detail::magnitude(x), detail::magnitude(y), detail::magnitude(w)});

    detail::record(r.commutative_commutativity,
                   detail::scaled_gap(commutative_compose(x, y), commutative_compose(y, x), s), tolerance);
    detail::record(r.commutative_associativity,
                   detail::scaled_gap(commutative_compose(commutative_compose(x, y), w),
                                      commutative_compose(x, commutative_compose(y, w)), s),
                   tolerance);
    detail::record(r.commutative_identity,
                   std::max(detail::scaled_gap(commutative_compose(x, zero), x, s),
                            detail::scaled_gap(commutative_compose(zero, x), x, s)),
                   tolerance);
    detail::record(r.commutative_inverse,
                   std::max(detail::scaled_gap(commutative_compose(x, commutative_inverse(x)), zero, s),
                            detail::scaled_gap(commutative_compose(commutative_inverse(x), x), zero, s)),
                   tolerance);

    detail::record(r.bch_associativity,
                   detail::scaled_gap(carnot_compose_bch(carnot_compose_bch(x, y), w),
                                      carnot_compose_bch(x, carnot_compose_bch(y, w)), s),
                   tolerance);
    detail::record(r.bch_identity,
                   std::max(detail::scaled_gap(carnot_compose_bch(x, zero), x, s),
                            detail::scaled_gap(carnot_compose_bch(zero, x), x, s)),
                   tolerance);
    detail::record(r.bch_inverse,
                   std::max(detail::scaled_gap(carnot_compose_bch(x, carnot_inverse_bch(x)), zero, s),
                            detail::scaled_gap(carnot_compose_bch(carnot_inverse_bch(x), x), zero, s)),
                   tolerance);
    if (carnot_cocycle_bch(x, y) != 0.0) {
      ++cocycle_nonzero;
      if (!(carnot_compose_bch(x, y) == carnot_compose_bch(y, x))) ++noncommuting;
    }

    const double direct = associativity_defect_paper(x, y, w);
    const double closed = associativity_defect_paper_closed(x, y, w);
    detail::record(r.paper_defect_formula,
                   std::abs(direct - closed) / std::max(1.0, s * s * s), tolerance);
    if (std::abs(direct) > tolerance * std::max(1.0, s * s * s)) ++nonassociative;
  }
  r.bch_noncommuting_fraction =
      cocycle_nonzero ? static_cast<double>(noncommuting) / static_cast<double>(cocycle_nonzero) : 1.0;
  r.paper_nonassociative_fraction =
      samples ? static_cast<double>(nonassociative) / static_cast<double>(samples) : 0.0;
  r.paper_witness_defect =
      associativity_defect_paper({1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 1, 0, 0});
  r.nilpotency_violations = nilpotency_check().size();
  return r;
}

}  // namespace roegen
