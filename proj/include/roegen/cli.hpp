#pragma once

// Command-line front end. Subcommands:
//
//   geodesic     --scenario FILE [--out FILE]        trajectory CSV
//   equilibrium  --scenario FILE [--out FILE]        two-phase JSON report
//   union        --scenario FILE [--out FILE]        union balance JSON report
//   blackhole    --kind K [--labeling L] --M m (--Q q | --J j)   point JSON report
//   blackhole    --kind K --M-range a b --secondary-range c d --resolution n m   grid CSV
//   group-check  [--samples N] [--seed S]            group law JSON report
//   dict         [--term T] [--direction D]          dictionary rows
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure, 4 domain violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "roegen/contact_core.hpp"
#include "roegen/dictionary.hpp"
#include "roegen/equilibrium.hpp"
#include "roegen/error.hpp"
#include "roegen/group_laws.hpp"
#include "roegen/horizon_models.hpp"
#include "roegen/scenario.hpp"
#include "roegen/subriemannian.hpp"

namespace roegen::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kNumerical = 3, kDomain = 4 };

inline int exit_code_for(ErrorKind kind) {
  switch (classify(kind)) {
    case ErrorClass::Numerical: return kNumerical;
    case ErrorClass::Domain: return kDomain;
    default: return kValidation;
  }
}

enum class LogLevel { Quiet, Info, Debug };

inline LogLevel log_level_from_env() {
  const char* v = std::getenv("ROEGEN_LOG");
  if (!v) return LogLevel::Info;
  const std::string s(v);
  if (s == "quiet") return LogLevel::Quiet;
  if (s == "debug") return LogLevel::Debug;
  return LogLevel::Info;
}

class Logger {
 public:
  Logger(std::ostream& sink, LogLevel level) : sink_(sink), level_(level) {}
  void info(const std::string& msg) const {
    if (level_ != LogLevel::Quiet) sink_ << "roegen: " << msg << '\n';
  }
  void debug(const std::string& msg) const {
    if (level_ == LogLevel::Debug) sink_ << "roegen[debug]: " << msg << '\n';
  }
  void error(const std::string& msg) const { sink_ << "roegen: error: " << msg << '\n'; }

 private:
  std::ostream& sink_;
  LogLevel level_;
};

/// Shortest text that reads back as the same double (17 significant digits).
inline std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

/// Writes through a sibling temp file and renames it over the target.
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) throw Error(ErrorKind::InvalidArgument, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::InvalidArgument, "cannot rename onto '" + path + "': " + ec.message());
  }
}

inline const char* kTrajectoryCsvHeader = "t,G,I,E,P,Q,speed2";
inline const char* kHorizonCsvHeader = "kind,labeling,M,secondary,S,in_domain";

inline std::string trajectory_csv(const Trajectory& traj, const Curve& lifted) {
  std::ostringstream os;
  os << kTrajectoryCsvHeader << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& s = traj[k].state;
    const auto& p = lifted.samples()[k].point;
    os << format_number(traj[k].t) << ',' << format_number(p.G) << ',' << format_number(p.I) << ','
       << format_number(p.E) << ',' << format_number(p.P) << ',' << format_number(p.Q) << ','
       << format_number(speed_squared(s)) << '\n';
  }
  return os.str();
}

inline std::string horizon_csv(const HorizonKind& kind, const std::vector<HorizonRow>& rows) {
  std::ostringstream os;
  os << kHorizonCsvHeader << '\n';
  for (const auto& r : rows)
    os << to_string(kind.family) << ',' << to_string(kind.labeling) << ',' << format_number(r.M) << ','
       << format_number(r.secondary) << ',' << (r.in_domain ? format_number(r.S) : std::string{}) << ','
       << (r.in_domain ? 1 : 0) << '\n';
  return os.str();
}

inline nlohmann::json two_phase_report(const TwoPhaseScenario& sc) {
  const PhaseModels<QuadraticPotential> models{sc.phase1, sc.phase2};
  const Totals totals{sc.G_total, sc.Q_total, sc.m_total};
  const auto& g = sc.guess;
  const auto res = two_phase_solve(models, totals, PhaseSplit{g[0], g[1], g[2], g[3], g[4], g[5]});
  const auto& s = res.split;
  nlohmann::json j = {
      {"split", {{"m1", s.m1}, {"e1", s.e1}, {"q1", s.q1}, {"m2", s.m2}, {"e2", s.e2}, {"q2", s.q2}}},
      {"residuals", res.residuals},
      {"max_residual", max_abs(res.residuals)},
      {"iterations", res.iterations},
      {"degenerate", res.degenerate},
      {"entropy", res.entropy},
      {"I", sc.phase1.stability(s.e1, s.q1)},
      {"P", sc.phase1.price(s.e1, s.q1)},
      {"mu", gibbs_mu(sc.phase1, s.e1, s.q1)},
  };
  if (sc.oracle) {
    const auto o = brute_force_entropy_max(models, totals);
    j["oracle"] = {{"entropy", o.entropy},
                   {"best_feasible_entropy", o.best_feasible_entropy},
                   {"at_boundary", o.at_boundary},
                   {"evaluations", o.evaluations},
                   {"solver_dominates", res.entropy >= o.best_feasible_entropy - 1e-4}};
  }
  return j;
}

inline nlohmann::json union_report(const UnionScenario& sc) {
  const auto cfg = sc.config();
  const auto r = union_residual(cfg, sc.tolerance);
  const auto cert = lagrange_certificate(cfg);
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"N", cfg.size()},
          {"weighted_I", r.weighted_I},
          {"weighted_P", r.weighted_P},
          {"deviation_I", r.deviation_I},
          {"deviation_P", r.deviation_P},
          {"balanced", r.balanced()},
          {"common_I", opt(r.common_I)},
          {"common_I_abs", opt(r.common_I_abs)},
          {"common_P", opt(r.common_P)},
          {"common_P_abs", opt(r.common_P_abs)},
          {"multipliers", {{"lambda", cert.lambda}, {"lambda_E", cert.lambda_E}, {"lambda_Q", cert.lambda_Q}}},
          {"residuals", cert.stationarity},
          {"max_residual", cert.max_residual},
          {"degenerate", false}};
}

inline nlohmann::json horizon_point_report(const HorizonKind& kind, const ChargeSet& c) {
  const auto names = variable_names(kind);
  const double S = entropy_from_state(kind, c);
  const auto mi = marginal_inclinations(kind, S, c.secondary);
  nlohmann::json j = {{"kind", to_string(kind.family)},
                      {"labeling", to_string(kind.labeling)},
                      {"names", {{"primary", names.primary}, {"secondary", names.secondary}, {"entropy", names.entropy}}},
                      {"M", c.M},
                      {"secondary", c.secondary},
                      {"S", S},
                      {"domain_margin", domain_margin(kind, c)},
                      {"roundtrip_gap", roundtrip_gap(kind, c)},
                      {"dM_dS", mi.dM_dS},
                      {"dM_dsecondary", mi.dM_dsecondary}};
  if (kind.family == HorizonFamily::Kerr) j["kerr_extremality"] = kerr_extremality(c);
  if (kind.family == HorizonFamily::BTZ) j["btz_discrepancy"] = btz_discrepancy(c.M, c.secondary);
  return j;
}

inline nlohmann::json group_check_report(const GroupCheckScenario& sc) {
  const auto r = run_group_checks(sc.samples, sc.seed);
  auto law = [](const LawCheck& c) { return nlohmann::json{{"max_error", c.max_error}, {"passed", c.passed}}; };
  return {{"samples", r.samples},
          {"seed", r.seed},
          {"tolerance", r.tolerance},
          {"commutative",
           {{"commutativity", law(r.commutative_commutativity)},
            {"associativity", law(r.commutative_associativity)},
            {"identity", law(r.commutative_identity)},
            {"inverse", law(r.commutative_inverse)}}},
          {"carnot_bch",
           {{"associativity", law(r.bch_associativity)},
            {"identity", law(r.bch_identity)},
            {"inverse", law(r.bch_inverse)},
            {"noncommuting_fraction", r.bch_noncommuting_fraction}}},
          {"carnot_paper",
           {{"defect_formula", law(r.paper_defect_formula)},
            {"nonassociative_fraction", r.paper_nonassociative_fraction},
            {"witness_defect", r.paper_witness_defect}}},
          {"nilpotency_violations", r.nilpotency_violations},
          {"passed", r.all_passed()}};
}

/// Runs the command line; argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  const Logger log(err, log_level_from_env());

  CLI::App app{"Gibbs-Pfaff economy toolkit: geometry, equilibria and horizon surfaces", "roegen"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  auto emit = [&](const std::string& content, const std::string& what) {
    if (out_path.empty()) {
      out << content;
    } else {
      write_atomically(out_path, content);
      log.info("wrote " + what + " to " + out_path);
    }
  };
  auto scenario_as = [&]<class T>(const char* command) {
    const auto sc = load_scenario(scenario_path);
    if (const auto* p = std::get_if<T>(&sc.payload)) return *p;
    throw Error(ErrorKind::InvalidArgument, "scenario is for '" + sc.command() + "', expected '" + command + "'");
  };

  auto* geo = app.add_subcommand("geodesic", "Integrate a geodesic and emit the lifted trajectory as CSV");
  geo->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  geo->add_option("--out", out_path, "Output file (default: stdout)");

  auto* eq = app.add_subcommand("equilibrium", "Solve a two-phase equilibrium");
  eq->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  eq->add_option("--out", out_path, "Output file (default: stdout)");

  auto* un = app.add_subcommand("union", "Certify union balance");
  un->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  un->add_option("--out", out_path, "Output file (default: stdout)");

  std::string kind_name, labeling_name = "thermodynamic";
  std::optional<double> mass, charge, spin;
  std::vector<double> m_range, s_range;
  std::vector<std::size_t> resolution;
  auto* bh = app.add_subcommand("blackhole", "Evaluate or sample a horizon surface");
  bh->add_option("--scenario", scenario_path, "Scenario JSON");
  bh->add_option("--kind", kind_name, "RN, Kerr or BTZ");
  bh->add_option("--labeling", labeling_name, "thermodynamic or economic");
  bh->add_option("--M,--Y", mass, "Mass / national income");
  bh->add_option("--Q,--investment", charge, "Charge / total investment (RN)");
  bh->add_option("--J", spin, "Spin (Kerr, BTZ)");
  bh->add_option("--M-range", m_range, "Grid range for M")->expected(2);
  bh->add_option("--secondary-range", s_range, "Grid range for the secondary charge")->expected(2);
  bh->add_option("--resolution", resolution, "Grid points per axis")->expected(2);
  bh->add_option("--out", out_path, "Output file (default: stdout)");

  GroupCheckScenario gc;
  auto* grp = app.add_subcommand("group-check", "Randomized checks of the composition laws");
  grp->add_option("--samples", gc.samples, "Samples per law")->capture_default_str();
  grp->add_option("--seed", gc.seed, "RNG seed")->capture_default_str();
  grp->add_option("--scenario", scenario_path, "Scenario JSON");
  grp->add_option("--out", out_path, "Output file (default: stdout)");

  std::string term, direction = "auto";
  auto* dict = app.add_subcommand("dict", "Thermodynamics/economics dictionary");
  dict->add_option("--term", term, "Term to translate");
  dict->add_option("--direction", direction, "thermo-to-econ, econ-to-thermo or auto")
      ->check(CLI::IsMember({"auto", "thermo-to-econ", "econ-to-thermo"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    log.error(e.what());
    return kValidation;
  }

  try {
    if (*geo) {
      const auto sc = scenario_as.template operator()<GeodesicScenario>("geodesic");
      GeodesicState init{{sc.position[0], sc.position[1], sc.position[2], sc.position[3]},
                         Vec4(sc.velocity[0], sc.velocity[1], sc.velocity[2], sc.velocity[3])};
      const auto traj = integrate_geodesic(init, sc.T, sc.dt);
      log.debug("integrated " + std::to_string(traj.size()) + " samples");
      emit(trajectory_csv(traj, horizontal_lift_Q(traj, sc.Q0)), "trajectory");
    } else if (*eq) {
      const auto sc = scenario_as.template operator()<TwoPhaseScenario>("equilibrium");
      emit(two_phase_report(sc).dump(2) + "\n", "equilibrium report");
    } else if (*un) {
      const auto sc = scenario_as.template operator()<UnionScenario>("union");
      emit(union_report(sc).dump(2) + "\n", "union report");
    } else if (*bh) {
      BlackholeScenario sc;
      if (!scenario_path.empty()) {
        sc = scenario_as.template operator()<BlackholeScenario>("blackhole");
      } else {
        if (kind_name.empty()) throw Error(ErrorKind::InvalidArgument, "--kind is required");
        sc.family = kind_name;
        sc.labeling = labeling_name;
        const auto fam = parse_family(kind_name);
        if (fam == HorizonFamily::RN && spin) throw Error(ErrorKind::InvalidArgument, "RN takes --Q, not --J");
        if (fam != HorizonFamily::RN && charge)
          throw Error(ErrorKind::InvalidArgument, "Kerr and BTZ take --J, not --Q");
        if (!m_range.empty() || !s_range.empty() || !resolution.empty()) {
          if (m_range.size() != 2 || s_range.size() != 2 || resolution.size() != 2)
            throw Error(ErrorKind::InvalidArgument, "grid needs --M-range, --secondary-range and --resolution");
          sc.grid = BlackholeGrid{{m_range[0], m_range[1]}, {s_range[0], s_range[1]}, {resolution[0], resolution[1]}};
        } else {
          if (!mass) throw Error(ErrorKind::InvalidArgument, "--M is required");
          sc.charges = std::array<double, 2>{*mass, charge.value_or(spin.value_or(0.0))};
        }
      }
      const auto kind = sc.kind();
      if (sc.grid) {
        const auto& g = *sc.grid;
        const auto rows = horizon_grid(kind, {g.M_range[0], g.M_range[1], g.secondary_range[0], g.secondary_range[1]},
                                       {g.resolution[0], g.resolution[1]});
        emit(horizon_csv(kind, rows), "horizon grid");
      } else {
        emit(horizon_point_report(kind, {(*sc.charges)[0], (*sc.charges)[1]}).dump(2) + "\n", "horizon report");
      }
    } else if (*grp) {
      if (!scenario_path.empty()) gc = scenario_as.template operator()<GroupCheckScenario>("group-check");
      const auto report = group_check_report(gc);
      emit(report.dump(2) + "\n", "group check report");
      if (!report.at("passed").get<bool>()) {
        log.error("group law checks failed");
        return kNumerical;
      }
    } else if (*dict) {
      if (term.empty()) {
        for (const auto& e : kDictionary) out << e.row() << '\n';
      } else {
        const DictionaryEntry* entry = nullptr;
        if (direction == "econ-to-thermo") {
          entry = &translate(term, Direction::EconToThermo);
        } else if (direction == "thermo-to-econ") {
          entry = &translate(term, Direction::ThermoToEcon);
        } else {
          try {
            entry = &translate(term, Direction::ThermoToEcon);
          } catch (const Error&) {
            entry = &translate(term, Direction::EconToThermo);
          }
        }
        out << entry->row() << '\n';
      }
    }
  } catch (const Error& e) {
    log.error(e.what());
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    log.error(e.what());
    return kValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    log.error(e.what());
    return kValidation;
  }
  return kOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("roegen");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace roegen::cli
