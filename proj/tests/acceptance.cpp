// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <boost/math/tools/minima.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "roegen/cli.hpp"
#include "roegen/roegen.hpp"
#include "support/generators.hpp"

using namespace roegen;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Gate {
 public:
  void check(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failures_ += o.pass ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

double gap5(const GroupElement& a, const GroupElement& b) {
  const auto u = a.as_array(), v = b.as_array();
  double g = 0.0;
  for (std::size_t i = 0; i < 5; ++i) g = std::max(g, std::abs(u[i] - v[i]));
  return g;
}

double mag(const GroupElement& x) {
  double m = 0.0;
  for (double v : x.as_array()) m = std::max(m, std::abs(v));
  return m;
}

// 1. Group axioms.
Outcome group_axioms() {
  testkit::Rng rng(101);
  const GroupElement e{};
  double worst_comm = 0.0, worst_bch = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const auto x = rng.state(), y = rng.state(), w = rng.state();
    const double s2 = std::pow(std::max({1.0, mag(x), mag(y), mag(w)}), 2);
    worst_comm = std::max({worst_comm, gap5(commutative_compose(x, y), commutative_compose(y, x)) / s2,
                           gap5(commutative_compose(commutative_compose(x, y), w),
                                commutative_compose(x, commutative_compose(y, w))) / s2,
                           gap5(commutative_compose(x, e), x) / s2, gap5(commutative_compose(e, x), x) / s2,
                           gap5(commutative_compose(x, commutative_inverse(x)), e) / s2,
                           gap5(commutative_compose(commutative_inverse(x), x), e) / s2});
    worst_bch = std::max({worst_bch,
                          gap5(carnot_compose_bch(carnot_compose_bch(x, y), w),
                               carnot_compose_bch(x, carnot_compose_bch(y, w))) / s2,
                          gap5(carnot_compose_bch(x, e), x) / s2, gap5(carnot_compose_bch(e, x), x) / s2,
                          gap5(carnot_compose_bch(x, carnot_inverse_bch(x)), e) / s2,
                          gap5(carnot_compose_bch(carnot_inverse_bch(x), x), e) / s2});
  }
  return {worst_comm <= 1e-12 && worst_bch <= 1e-12,
          "commutative max rel err " + fmt(worst_comm) + ", BCH max rel err " + fmt(worst_bch)};
}

// 2. Variant Carnot law is not associative.
Outcome paper_law_defect() {
  const GroupElement x{1, 0, 0, 0, 0}, y{0, 0, 1, 0, 0};
  const double witness = carnot_compose_paper(carnot_compose_paper(x, y), y).G -
                         carnot_compose_paper(x, carnot_compose_paper(y, y)).G;
  testkit::Rng rng(102);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const auto a = rng.state(), b = rng.state(), c = rng.state();
    const double s3 = std::pow(std::max({1.0, mag(a), mag(b), mag(c)}), 3);
    worst = std::max(worst, std::abs(associativity_defect_paper(a, b, c) - associativity_defect_paper_closed(a, b, c)) / s3);
  }
  return {std::abs(witness - 0.25) <= 1e-12 && worst <= 1e-12,
          "witness G-gap " + fmt(witness) + ", closed-form max rel err " + fmt(worst)};
}

// 3. Bracket table against flow commutators; nilpotency.
Outcome lie_structure() {
  testkit::Rng rng(103);
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const auto p = rng.state();
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) {
        const auto num = numerical_bracket(a, b, p, 1e-5).as_array();
        const auto exact = algebra_field(lie_bracket_structure(a, b), p).as_array();
        for (std::size_t k = 0; k < 5; ++k) worst = std::max(worst, std::abs(num[k] - exact[k]));
      }
  }
  const auto violations = nilpotency_check().size();
  return {worst <= 1e-6 && violations == 0,
          "max commutator err " + fmt(worst) + ", nilpotency violations " + std::to_string(violations)};
}

// 4. Christoffel table against the finite-difference oracle.
Outcome christoffel_oracle() {
  testkit::Rng rng(104);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const auto p = rng.reduced(2.0, 0.5, 3.0);
    const auto a = christoffel_closed(p), b = christoffel_fd(p, 1e-5);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a(k, i, j) - b(k, i, j)));
  }
  return {worst <= 1e-6, "max |closed - fd| " + fmt(worst)};
}

// 5. Sign of the I'E' term in the E-geodesic equation.
Outcome e_equation_sign() {
  testkit::Rng rng(105);
  double worst_corrected = 0.0, worst_flip = 0.0, worst_other = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const auto p = rng.reduced(2.0, 0.5, 3.0);
    const GeodesicState s{p, Vec4(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1))};
    const Vec4 a = geodesic_accel(s), t = transcribed_geodesic_accel(s);
    const double dG = s.velocity[kG], dI = s.velocity[kI], dE = s.velocity[kE], P2 = p.P * p.P;
    worst_corrected = std::max(worst_corrected, std::abs(a[kE] - dG * dI / P2 + (p.I / P2) * dI * dE));
    worst_flip = std::max(worst_flip, std::abs((t[kE] - a[kE]) - 2.0 * (p.I / P2) * dI * dE));
    for (int k : {kG, kI, kP}) worst_other = std::max(worst_other, std::abs(a[k] - t[k]));
  }
  return {worst_corrected <= 1e-12 && worst_flip <= 1e-12 && worst_other <= 1e-12,
          "corrected E-eq residual " + fmt(worst_corrected) + ", transcribed-vs-derived sign flip err " + fmt(worst_flip) +
              ", G/I/P eq err " + fmt(worst_other)};
}

// 6. Energy conservation and straight-line geodesics. Every draw counts: an
// initial condition whose geodesic reaches P = 0 before T = 1 fails the gate.
Outcome geodesic_conservation() {
  testkit::Rng rng(106);
  double drift = 0.0, clear_drift = 0.0;
  int singular = 0, clear = 0;
  for (int n = 0; n < 100; ++n) {
    const auto init = rng.geodesic_initial();
    const double e0 = speed_squared(init);
    const bool stays_clear = testkit::exact_min_abs_P(init, 1.0) >= 0.1;
    clear += stays_clear ? 1 : 0;
    try {
      for (const auto& s : integrate_geodesic(init, 1.0, 1e-3)) {
        const double d = std::abs(speed_squared(s.state) - e0);
        drift = std::max(drift, d);
        if (stays_clear) clear_drift = std::max(clear_drift, d);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularApproach) throw;
      ++singular;
    }
  }
  double line = 0.0;
  for (const auto& s : integrate_geodesic({{0, 0, 0, 1}, Vec4(0, 1, 0, 0)}, 1.0, 1e-3))
    line = std::max(line, (s.state.position.vec() - Vec4(0, s.t, 0, 1)).cwiseAbs().maxCoeff());
  for (const auto& s : integrate_geodesic({{0, 0, 0, 1}, Vec4(0, 0, 0, 1)}, 1.0, 1e-3))
    line = std::max(line, (s.state.position.vec() - Vec4(0, 0, 0, 1 + s.t)).cwiseAbs().maxCoeff());
  return {singular == 0 && drift <= 1e-8 && line <= 1e-10,
          std::to_string(singular) + " of 100 draws hit SingularApproach before T=1, max energy drift over the other " +
              std::to_string(100 - singular) + " " + fmt(drift) + " (over the " + std::to_string(clear) +
              " with |P| >= 0.1 throughout " + fmt(clear_drift) + "), straight-line err " + fmt(line)};
}

// 7. Horizontal lift, on geodesics whose P stays clear of the singular locus.
Outcome horizontal_lift() {
  testkit::Rng rng(107);
  double pointwise = 0.0, fundamental = 0.0;
  int discarded = 0;
  for (int n = 0; n < 100;) {
    const auto init = rng.geodesic_initial();
    if (testkit::exact_min_abs_P(init, 1.0) < 0.1) {
      ++discarded;
      continue;
    }
    ++n;
    const auto traj = integrate_geodesic(init, 1.0, 1e-3);
    const auto c = horizontal_lift_Q(traj, rng.uniform(-1, 1));
    for (double r : pfaff_segment_residuals(c)) pointwise = std::max(pointwise, std::abs(r));
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const auto& v = traj[k].state.velocity;
      const auto& q = c.samples()[k].point;
      const TangentVector tv{v[kG], v[kI], v[kE], v[kP], (q.I * v[kE] - v[kG]) / q.P};
      pointwise = std::max(pointwise, std::abs(pfaff_eval(q, tv)));
    }
    fundamental = std::max(fundamental, std::abs(growth_line_integral(c) - (c.back().point.G - c.front().point.G)));
  }
  return {pointwise <= 1e-6 && fundamental <= 1e-6,
          "100 lifted geodesics (" + std::to_string(discarded) + " draws skipped with |P| dipping below 0.1), max |pfaff| " +
              fmt(pointwise) + ", |integral - dG| " + fmt(fundamental)};
}

// 8. Two-phase equilibrium.
Outcome two_phase() {
  testkit::Rng rng(108);
  double worst_res = 0.0, worst_gap = -1e300;
  for (int n = 0; n < 20; ++n) {
    const auto inst = testkit::make_two_phase_instance(rng);
    const auto solved = two_phase_solve(inst.models, inst.totals, inst.guess);
    const auto oracle = brute_force_entropy_max(inst.models, inst.totals, testkit::oracle_box());
    worst_res = std::max(worst_res, max_abs(solved.residuals));
    worst_gap = std::max(worst_gap, oracle.best_feasible_entropy - solved.entropy);
  }
  const QuadraticPotential unit{};
  const auto pinned = two_phase_solve(PhaseModels<QuadraticPotential>{unit, unit}, {1.0, 0.0, 2.0},
                                      {0.7, 0.8, 0.1, 1.3, 1.2, -0.1});
  const bool sym = pinned.degenerate && pinned.split.m1 == 1.0 && std::abs(pinned.split.m2 - 1.0) <= 1e-10 &&
                   std::abs(pinned.split.e1 - pinned.split.e2) <= 1e-10 && std::abs(pinned.split.q1) <= 1e-10 &&
                   std::abs(pinned.split.q2) <= 1e-10 && max_abs(pinned.residuals) <= 1e-10;
  return {worst_res <= 1e-10 && worst_gap <= 1e-4 && sym,
          "max residual " + fmt(worst_res) + ", max (oracle - solver) entropy " + fmt(worst_gap) +
              ", pinned split " + (sym ? "ok" : "wrong")};
}

// 9. Union balance and Lagrange certificate.
Outcome union_balance() {
  testkit::Rng rng(109);
  const std::size_t n = kEuropeanUnionSize;
  bool iff = true, cert = true;
  for (int trial = 0; trial < 200; ++trial) {
    const double I0 = rng.uniform(-3, 3), P0 = rng.uniform(-3, 3);
    std::vector<double> I(n, I0), P(n, P0);
    auto eq = UnionConfig::uniform(I, P);
    const auto r = union_residual(eq);
    iff = iff && r.deviation_I == 0.0 && r.deviation_P == 0.0;
    cert = cert && lagrange_certificate(eq).max_residual == 0.0;
    const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 1));
    (rng.coin() ? I : P)[k] += (rng.coin() ? 1 : -1) * rng.uniform(1e-6, 1.0);
    const auto off = UnionConfig::uniform(I, P);
    const auto r2 = union_residual(off);
    iff = iff && (r2.deviation_I > 0.0 || r2.deviation_P > 0.0);
    cert = cert && lagrange_certificate(off).max_residual > 0.0;
  }
  UnionConfig w;
  w.I = {1.0, 3.0};
  w.P = {1.0, 1.0};
  w.alpha = {0.5, 0.5};
  w.beta = {0.25, 0.75};
  w.gamma = {0.5, 0.5};
  const auto wr = union_residual(w);
  const bool weighted = wr.weighted_I == std::vector<double>{2.0, 2.0} && wr.balanced() &&
                        lagrange_certificate(w).max_residual == 0.0;
  w.I = {1.0, 2.9};
  const bool weighted_off = !union_residual(w).balanced_I && lagrange_certificate(w).max_residual > 0.0;
  return {iff && cert && weighted && weighted_off,
          std::string("uniform iff ") + (iff ? "ok" : "broken") + ", certificate " + (cert ? "ok" : "broken") +
              ", N=2 weighted example " + (weighted && weighted_off ? "ok" : "broken")};
}

// 10. Horizon surfaces.
Outcome horizon_surfaces() {
  const std::array<HorizonKind, 3> kinds{HorizonKind{HorizonFamily::RN}, HorizonKind{HorizonFamily::Kerr},
                                         HorizonKind{HorizonFamily::BTZ}};
  testkit::Rng rng(110);
  double worst_rt = 0.0, worst_min = 0.0;
  for (const auto& kind : kinds) {
    for (int n = 0; n < 10000; ++n) worst_rt = std::max(worst_rt, roundtrip_gap(kind, testkit::in_domain_charges(rng, kind.family)));
    for (double X : {0.1, 0.5, 1.0, 2.0, 3.5}) {
      const auto [S, M] = boost::math::tools::brent_find_minima(
          [&](double s) { return mass_from_entropy(kind, s, X); }, 1e-6, 50.0, 52);
      const double bound = kind.family == HorizonFamily::Kerr ? std::sqrt(X) : X;
      worst_min = std::max(worst_min, std::abs(M - bound));
    }
  }
  const double kerr = std::abs(entropy_from_state(kinds[1], {1, 1}) - 2.0);
  const double rn = std::abs(entropy_from_state(kinds[0], {1, 0}) - 4.0);
  return {worst_rt <= 1e-12 && worst_min <= 1e-8 && kerr <= 1e-12 && rn <= 1e-12,
          "max round-trip gap " + fmt(worst_rt) + ", max |min M - bound| " + fmt(worst_min) + ", Kerr S err " +
              fmt(kerr) + ", RN S err " + fmt(rn)};
}

// 11. The two BTZ forms disagree off J = 0.
Outcome btz_forms() {
  const double d = btz_discrepancy(1, 1);
  bool zero = true;
  for (double M : {0.5, 1.0, 4.0}) zero = zero && btz_discrepancy(M, 0) == 0.0;
  return {std::abs(d - 0.187320) <= 1e-5 && zero,
          "btz_discrepancy(1,1) = " + fmt(d) + ", zero at J=0 " + (zero ? "yes" : "no")};
}

// 12. Marginal inclinations.
Outcome marginals() {
  const std::array<HorizonFamily, 3> families{HorizonFamily::RN, HorizonFamily::Kerr, HorizonFamily::BTZ};
  testkit::Rng rng(112);
  const double h = 1e-6;
  double worst = 0.0;
  for (auto f : families) {
    const HorizonKind kind{f};
    for (int n = 0; n < 1000; ++n) {
      const auto c = testkit::in_domain_charges(rng, f);
      const double S = entropy_from_state(kind, c), X = c.secondary;
      const auto m = marginal_inclinations(kind, S, X);
      const double fS = (mass_from_entropy(kind, S + h, X) - mass_from_entropy(kind, S - h, X)) / (2 * h);
      const double fX = (mass_from_entropy(kind, S, X + h) - mass_from_entropy(kind, S, X - h)) / (2 * h);
      worst = std::max({worst, std::abs(m.dM_dS - fS) / std::max(1.0, std::abs(fS)),
                        std::abs(m.dM_dsecondary - fX) / std::max(1.0, std::abs(fX))});
    }
  }
  double extremal = 0.0;
  for (double Q : {0.25, 0.5, 1.0, 2.0, 3.0})
    extremal = std::max(extremal, std::abs(marginal_inclinations(HorizonKind{HorizonFamily::RN}, Q * Q, Q).dM_dS));
  return {worst <= 1e-6 && extremal <= 1e-10,
          "max rel err vs central differences " + fmt(worst) + ", RN extremal dM/dS " + fmt(extremal)};
}

// 13. CLI examples and scenario round trips.
Outcome cli_examples() {
  const fs::path scen{ROEGEN_SCENARIO_DIR};
  const fs::path tmp = fs::temp_directory_path() / "roegen_acceptance_traj.csv";
  fs::remove(tmp);
  std::ostringstream out, err;
  std::string notes;
  bool ok = true;

  const int geo = cli::run({"geodesic", "--scenario", (scen / "geodesic_pure_I.json").string(), "--out", tmp.string()},
                           out, err);
  double lin = 0.0;
  std::size_t rows = 0;
  {
    std::ifstream in(tmp);
    std::string line;
    std::getline(in, line);
    ok = ok && line == cli::kTrajectoryCsvHeader;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string t, G, I;
      std::getline(ls, t, ',');
      std::getline(ls, G, ',');
      std::getline(ls, I, ',');
      lin = std::max(lin, std::abs(std::stod(I) - std::stod(t)));
      ++rows;
    }
  }
  fs::remove(tmp);
  ok = ok && geo == 0 && rows == 1001 && lin <= 1e-10;
  notes += "geodesic exit " + std::to_string(geo) + " (|I-t| " + fmt(lin) + ")";

  std::ostringstream dict_out;
  const int dict = cli::run({"dict", "--term", "entropy"}, dict_out, err);
  ok = ok && dict == 0 && dict_out.str() == "entropy \xE2\x86\x94 entropy (S \xE2\x86\x94 E)\n";
  notes += ", dict exit " + std::to_string(dict);

  std::ostringstream bh_err;
  const int bh = cli::run({"blackhole", "--kind", "RN", "--M", "1", "--Q", "1.5"}, out, bh_err);
  ok = ok && bh == 4 && bh_err.str().find("DomainViolation") != std::string::npos;
  notes += ", blackhole exit " + std::to_string(bh);

  std::size_t n = 0, same = 0;
  for (const auto& e : fs::directory_iterator(scen)) {
    if (e.path().extension() != ".json") continue;
    ++n;
    const auto a = load_scenario(e.path().string());
    const auto b = parse_scenario(nlohmann::json::parse(to_json(a).dump()));
    same += (a == b && to_json(a) == to_json(b)) ? 1 : 0;
  }
  ok = ok && n > 0 && same == n;
  notes += ", round-trip " + std::to_string(same) + "/" + std::to_string(n) + " scenarios";
  return {ok, notes};
}

}  // namespace

int main() {
  Gate gate;
  gate.check(1, "group axioms", group_axioms);
  gate.check(2, "variant Carnot law associativity defect", paper_law_defect);
  gate.check(3, "Lie bracket table and nilpotency", lie_structure);
  gate.check(4, "Christoffel finite-difference oracle", christoffel_oracle);
  gate.check(5, "E-geodesic equation sign", e_equation_sign);
  gate.check(6, "geodesic energy conservation", geodesic_conservation);
  gate.check(7, "horizontal lift", horizontal_lift);
  gate.check(8, "two-phase equilibrium", two_phase);
  gate.check(9, "union balance", union_balance);
  gate.check(10, "horizon surfaces", horizon_surfaces);
  gate.check(11, "BTZ form discrepancy", btz_forms);
  gate.check(12, "marginal inclinations", marginals);
  gate.check(13, "CLI examples and scenario round trip", cli_examples);
  std::printf("%d of 13 criteria failed\n", gate.failures());
  return gate.failures() == 0 ? 0 : 1;
}
