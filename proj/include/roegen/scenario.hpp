#pragma once

// JSON scenario documents for the command-line front end.
//
//   { "command": "<geodesic|equilibrium|union|blackhole|group-check>",
//     "params": { ... } }
//
// The schema lives in docs/scenario.schema.json.

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "roegen/equilibrium.hpp"
#include "roegen/error.hpp"
#include "roegen/horizon_models.hpp"

namespace roegen {

struct GeodesicScenario {
  std::array<double, 4> position{0.0, 0.0, 0.0, 1.0};  // G, I, E, P
  std::array<double, 4> velocity{};
  double T = 1.0;
  double dt = 1e-3;
  double Q0 = 0.0;
  friend bool operator==(const GeodesicScenario&, const GeodesicScenario&) = default;
};

struct TwoPhaseScenario {
  QuadraticPotential phase1, phase2;
  double G_total = 0.0, Q_total = 0.0, m_total = 1.0;
  std::array<double, 6> guess{0.5, 0.0, 0.0, 0.5, 0.0, 0.0};  // m1, e1, q1, m2, e2, q2
  bool oracle = false;
  friend bool operator==(const TwoPhaseScenario&, const TwoPhaseScenario&) = default;
};

struct UnionScenario {
  std::vector<double> I, P;
  std::vector<double> alpha, beta, gamma;  // empty means uniform
  double tolerance = 1e-12;
  friend bool operator==(const UnionScenario&, const UnionScenario&) = default;

  UnionConfig config() const {
    UnionConfig c;
    c.I = I;
    c.P = P;
    const std::size_t n = I.size();
    auto fill = [n](const std::vector<double>& w) {
      return w.empty() ? std::vector<double>(n, 1.0 / static_cast<double>(n)) : w;
    };
    c.alpha = fill(alpha);
    c.beta = fill(beta);
    c.gamma = fill(gamma);
    return c;
  }
};

struct BlackholeGrid {
  std::array<double, 2> M_range{0.0, 1.0};
  std::array<double, 2> secondary_range{0.0, 1.0};
  std::array<std::size_t, 2> resolution{2, 2};
  friend bool operator==(const BlackholeGrid&, const BlackholeGrid&) = default;
};

struct BlackholeScenario {
  std::string family = "RN";
  std::string labeling = "thermodynamic";
  std::optional<std::array<double, 2>> charges;  // M, secondary
  std::optional<BlackholeGrid> grid;
  friend bool operator==(const BlackholeScenario&, const BlackholeScenario&) = default;

  HorizonKind kind() const { return {parse_family(family), parse_labeling(labeling)}; }
};

struct GroupCheckScenario {
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  friend bool operator==(const GroupCheckScenario&, const GroupCheckScenario&) = default;
};

using ScenarioPayload =
    std::variant<GeodesicScenario, TwoPhaseScenario, UnionScenario, BlackholeScenario, GroupCheckScenario>;

struct Scenario {
  ScenarioPayload payload;
  std::string command() const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

namespace detail {

using nlohmann::json;

inline double finite_number(const json& j, const char* key) {
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, std::string(key) + " must be finite");
  return v;
}

template <std::size_t N>
std::array<double, N> finite_array(const json& j, const char* key) {
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != N)
    throw Error(ErrorKind::InvalidArgument, std::string(key) + " must have " + std::to_string(N) + " entries");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = a[i].get<double>();
    if (!std::isfinite(out[i])) throw Error(ErrorKind::InvalidArgument, std::string(key) + " must be finite");
  }
  return out;
}

inline std::vector<double> finite_vector(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  auto v = j.at(key).get<std::vector<double>>();
  for (double x : v)
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, std::string(key) + " must be finite");
  return v;
}

inline json potential_to_json(const QuadraticPotential& p) {
  return {{"a", p.a}, {"b", p.b}, {"e0", p.e0}, {"q0", p.q0}, {"g0", p.g0}};
}

inline QuadraticPotential potential_from_json(const json& j) {
  QuadraticPotential p{finite_number(j, "a"), finite_number(j, "b"), finite_number(j, "e0"),
                       finite_number(j, "q0"), finite_number(j, "g0")};
  p.validate();
  return p;
}

struct ScenarioToJson {
  json operator()(const GeodesicScenario& s) const {
    return {{"position", s.position}, {"velocity", s.velocity}, {"T", s.T}, {"dt", s.dt}, {"Q0", s.Q0}};
  }
  json operator()(const TwoPhaseScenario& s) const {
    return {{"phase1", potential_to_json(s.phase1)},
            {"phase2", potential_to_json(s.phase2)},
            {"totals", {{"G", s.G_total}, {"Q", s.Q_total}, {"m", s.m_total}}},
            {"guess", s.guess},
            {"oracle", s.oracle}};
  }
  json operator()(const UnionScenario& s) const {
    json j = {{"I", s.I}, {"P", s.P}, {"tolerance", s.tolerance}};
    if (!s.alpha.empty()) j["alpha"] = s.alpha;
    if (!s.beta.empty()) j["beta"] = s.beta;
    if (!s.gamma.empty()) j["gamma"] = s.gamma;
    return j;
  }
  json operator()(const BlackholeScenario& s) const {
    json j = {{"family", s.family}, {"labeling", s.labeling}};
    if (s.charges) j["charges"] = {{"M", (*s.charges)[0]}, {"secondary", (*s.charges)[1]}};
    if (s.grid)
      j["grid"] = {{"M_range", s.grid->M_range},
                   {"secondary_range", s.grid->secondary_range},
                   {"resolution", s.grid->resolution}};
    return j;
  }
  json operator()(const GroupCheckScenario& s) const { return {{"samples", s.samples}, {"seed", s.seed}}; }
};

inline ScenarioPayload payload_from_json(const std::string& command, const json& p) {
  if (command == "geodesic") {
    GeodesicScenario s;
    s.position = finite_array<4>(p, "position");
    s.velocity = finite_array<4>(p, "velocity");
    if (p.contains("T")) s.T = finite_number(p, "T");
    if (p.contains("dt")) s.dt = finite_number(p, "dt");
    if (p.contains("Q0")) s.Q0 = finite_number(p, "Q0");
    return s;
  }
  if (command == "equilibrium") {
    TwoPhaseScenario s;
    s.phase1 = potential_from_json(p.at("phase1"));
    s.phase2 = potential_from_json(p.at("phase2"));
    const auto& t = p.at("totals");
    s.G_total = finite_number(t, "G");
    s.Q_total = finite_number(t, "Q");
    s.m_total = finite_number(t, "m");
    if (p.contains("guess")) s.guess = finite_array<6>(p, "guess");
    if (p.contains("oracle")) s.oracle = p.at("oracle").get<bool>();
    return s;
  }
  if (command == "union") {
    UnionScenario s;
    s.I = finite_vector(p, "I");
    s.P = finite_vector(p, "P");
    s.alpha = finite_vector(p, "alpha");
    s.beta = finite_vector(p, "beta");
    s.gamma = finite_vector(p, "gamma");
    if (p.contains("tolerance")) s.tolerance = finite_number(p, "tolerance");
    validate_union(s.config(), 2);
    return s;
  }
  if (command == "blackhole") {
    BlackholeScenario s;
    s.family = p.at("family").get<std::string>();
    if (p.contains("labeling")) s.labeling = p.at("labeling").get<std::string>();
    (void)s.kind();  // validates both names
    if (p.contains("charges")) {
      const auto& c = p.at("charges");
      s.charges = std::array<double, 2>{finite_number(c, "M"), finite_number(c, "secondary")};
    }
    if (p.contains("grid")) {
      const auto& g = p.at("grid");
      BlackholeGrid grid;
      grid.M_range = finite_array<2>(g, "M_range");
      grid.secondary_range = finite_array<2>(g, "secondary_range");
      grid.resolution = g.at("resolution").get<std::array<std::size_t, 2>>();
      s.grid = grid;
    }
    if (!s.charges && !s.grid)
      throw Error(ErrorKind::InvalidArgument, "blackhole scenario needs charges or grid");
    return s;
  }
  if (command == "group-check") {
    GroupCheckScenario s;
    if (p.contains("samples")) s.samples = p.at("samples").get<std::size_t>();
    if (p.contains("seed")) s.seed = p.at("seed").get<std::uint64_t>();
    return s;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown scenario command '" + command + "'");
}

}  // namespace detail

inline std::string Scenario::command() const {
  switch (payload.index()) {
    case 0: return "geodesic";
    case 1: return "equilibrium";
    case 2: return "union";
    case 3: return "blackhole";
    default: return "group-check";
  }
}

inline nlohmann::json to_json(const Scenario& s) {
  return {{"command", s.command()}, {"params", std::visit(detail::ScenarioToJson{}, s.payload)}};
}

/// Parses and validates a scenario document. Malformed or non-finite input
/// raises Error(InvalidArgument).
inline Scenario parse_scenario(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "scenario must be a JSON object");
    const auto command = j.at("command").get<std::string>();
    return Scenario{detail::payload_from_json(command, j.at("params"))};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("scenario: ") + e.what());
  }
}

inline Scenario parse_scenario_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("scenario: ") + e.what());
  }
  return parse_scenario(j);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open scenario '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace roegen
