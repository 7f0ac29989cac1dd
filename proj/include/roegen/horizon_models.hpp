#pragma once

// Horizon surfaces of Reissner-Nordstrom, Kerr and BTZ black holes in
// geometrized units (G = c = 1), and their economic mirrors where mass M reads
// as national income Y, charge Q as total investment, entropy S as economic
// entropy E. The labeling only renames variables; every formula is shared.
//
//   RN    S = 2M^2 - Q^2 + 2M^2 sqrt(1 - Q^2/M^2)   M = sqrt(S)/2 + Q^2/(2 sqrt(S))
//   Kerr  S = 2M^2 + 2M^2 sqrt(1 - J^2/M^4)         M = sqrt((4J^2 + S^2)/S)/2
//   BTZ   S = sqrt((M + sqrt(M^2 - J^2))/2)         M = S^2 + J^2/(4S^2)
//
// The BTZ entropy is the outer root of the posynomial mass law. The other
// closed BTZ form S = 2 sqrt(M/(4 + J^2)) only agrees with it at J = 0;
// btz_discrepancy measures the gap.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roegen/error.hpp"

namespace roegen {

enum class HorizonFamily { RN, Kerr, BTZ };
enum class Labeling { Thermodynamic, Economic };

struct HorizonKind {
  HorizonFamily family = HorizonFamily::RN;
  Labeling labeling = Labeling::Thermodynamic;
  friend constexpr bool operator==(const HorizonKind&, const HorizonKind&) = default;
};

/// M (or Y) plus the secondary charge: Q (or total investment) for RN, J for Kerr and BTZ.
struct ChargeSet {
  double M = 1.0;
  double secondary = 0.0;
};

struct VariableNames {
  std::string_view primary, secondary, entropy;
};

constexpr std::string_view to_string(HorizonFamily f) {
  switch (f) {
    case HorizonFamily::RN: return "RN";
    case HorizonFamily::Kerr: return "Kerr";
    case HorizonFamily::BTZ: return "BTZ";
  }
  return "?";
}

constexpr std::string_view to_string(Labeling l) {
  return l == Labeling::Thermodynamic ? "thermodynamic" : "economic";
}

constexpr VariableNames variable_names(const HorizonKind& k) {
  const bool econ = k.labeling == Labeling::Economic;
  const std::string_view secondary =
      k.family == HorizonFamily::RN ? (econ ? "\xF0\x9D\x93\x98" /* script I */ : "Q") : "J";
  return {econ ? "Y" : "M", secondary, econ ? "E" : "S"};
}

namespace detail {
inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}
}  // namespace detail

inline HorizonFamily parse_family(std::string_view s) {
  const auto l = detail::lower(s);
  if (l == "rn" || l == "reissner-nordstrom") return HorizonFamily::RN;
  if (l == "kerr") return HorizonFamily::Kerr;
  if (l == "btz") return HorizonFamily::BTZ;
  throw Error(ErrorKind::InvalidArgument, "unknown horizon family '" + std::string(s) + "'");
}

inline Labeling parse_labeling(std::string_view s) {
  const auto l = detail::lower(s);
  if (l == "thermodynamic" || l == "thermo" || l == "astrophysical") return Labeling::Thermodynamic;
  if (l == "economic" || l == "econ") return Labeling::Economic;
  throw Error(ErrorKind::InvalidArgument, "unknown labeling '" + std::string(s) + "'");
}

/// M - |Q| (RN), M - sqrt|J| (Kerr), M - |J| (BTZ). Negative outside the model domain.
inline double domain_margin(const HorizonKind& kind, const ChargeSet& c) {
  switch (kind.family) {
    case HorizonFamily::RN: return c.M - std::abs(c.secondary);
    case HorizonFamily::Kerr: return c.M - std::sqrt(std::abs(c.secondary));
    case HorizonFamily::BTZ: return c.M - std::abs(c.secondary);
  }
  return -std::numeric_limits<double>::infinity();
}

inline bool in_domain(const HorizonKind& kind, const ChargeSet& c) {
  return c.M > 0.0 && std::isfinite(c.M) && std::isfinite(c.secondary) && domain_margin(kind, c) >= 0.0;
}

namespace detail {
inline void require_domain(const HorizonKind& kind, const ChargeSet& c) {
  const auto names = variable_names(kind);
  if (!(c.M > 0.0) || !std::isfinite(c.M))
    throw Error(ErrorKind::DomainViolation, std::string(names.primary) + " must be positive");
  if (!(domain_margin(kind, c) >= 0.0))
    throw Error(ErrorKind::DomainViolation,
                std::string(to_string(kind.family)) + " needs " + std::string(names.primary) +
                    (kind.family == HorizonFamily::Kerr ? " >= sqrt|" : " >= |") +
                    std::string(names.secondary) + "|");
}
inline void require_positive_entropy(double S) {
  if (!(S > 0.0) || !std::isfinite(S))
    throw Error(ErrorKind::NonpositiveEntropy, "entropy must be positive");
}
}  // namespace detail

/// Outer-root entropy of the horizon.
inline double entropy_from_state(const HorizonKind& kind, const ChargeSet& c) {
  detail::require_domain(kind, c);
  const double M = c.M, X = c.secondary, M2 = M * M;
  switch (kind.family) {
    case HorizonFamily::RN:
      return 2.0 * M2 - X * X + 2.0 * M2 * std::sqrt(std::max(0.0, 1.0 - X * X / M2));
    case HorizonFamily::Kerr:
      return 2.0 * M2 + 2.0 * M2 * std::sqrt(std::max(0.0, 1.0 - X * X / (M2 * M2)));
    case HorizonFamily::BTZ:
      return std::sqrt(0.5 * (M + std::sqrt(std::max(0.0, M2 - X * X))));
  }
  return 0.0;
}

inline double mass_from_entropy(const HorizonKind& kind, double S, double secondary) {
  detail::require_positive_entropy(S);
  const double X = secondary;
  switch (kind.family) {
    case HorizonFamily::RN: {
      const double r = std::sqrt(S);
      return 0.5 * r + X * X / (2.0 * r);
    }
    case HorizonFamily::Kerr:
      return 0.5 * std::sqrt((4.0 * X * X + S * S) / S);
    case HorizonFamily::BTZ:
      return S * S + X * X / (4.0 * S * S);
  }
  return 0.0;
}

inline double roundtrip_gap(const HorizonKind& kind, const ChargeSet& c) {
  return std::abs(mass_from_entropy(kind, entropy_from_state(kind, c), c.secondary) - c.M);
}

/// J / M^2; magnitude 1 at the extremal Kerr horizon.
inline double kerr_extremality(const ChargeSet& c) {
  if (!(c.M > 0.0)) throw Error(ErrorKind::DomainViolation, "mass must be positive");
  return c.secondary / (c.M * c.M);
}

struct MarginalInclinations {
  double dM_dS = 0.0;          // Hawking temperature / marginal inclination to entropy
  double dM_dsecondary = 0.0;  // electric potential or angular speed / inclination to invest or rotate
};

/// Analytic partials of mass_from_entropy.
inline MarginalInclinations marginal_inclinations(const HorizonKind& kind, double S, double secondary) {
  detail::require_positive_entropy(S);
  const double X = secondary;
  switch (kind.family) {
    case HorizonFamily::RN: {
      const double r = std::sqrt(S);
      return {0.25 / r - X * X / (4.0 * S * r), X / r};
    }
    case HorizonFamily::Kerr: {
      const double f = 4.0 * X * X / S + S;
      const double rf = std::sqrt(f);
      return {0.25 * (1.0 - 4.0 * X * X / (S * S)) / rf, 2.0 * X / (S * rf)};
    }
    case HorizonFamily::BTZ:
      return {2.0 * S - X * X / (2.0 * S * S * S), X / (2.0 * S * S)};
  }
  return {};
}

/// |2 sqrt(M/(4 + J^2)) - S_btz(M, J)|: zero at J = 0, positive otherwise.
inline double btz_discrepancy(double M, double J) {
  const HorizonKind btz{HorizonFamily::BTZ, Labeling::Thermodynamic};
  detail::require_domain(btz, {M, J});
  const double form_a = 2.0 * std::sqrt(M / (4.0 + J * J));
  return std::abs(form_a - entropy_from_state(btz, {M, J}));
}

struct GridRanges {
  double M_lo = 0.0, M_hi = 1.0;
  double secondary_lo = 0.0, secondary_hi = 1.0;
};

struct GridResolution {
  std::size_t M = 2;
  std::size_t secondary = 2;
};

struct HorizonRow {
  double M = 0.0;
  double secondary = 0.0;
  double S = std::numeric_limits<double>::quiet_NaN();  // NaN outside the domain
  bool in_domain = false;
};

/// Rectangular sampling of a horizon surface; rows ordered with M outermost.
inline std::vector<HorizonRow> horizon_grid(const HorizonKind& kind, const GridRanges& r,
                                            const GridResolution& res) {
  if (res.M < 2 || res.secondary < 2)
    throw Error(ErrorKind::InvalidArgument, "grid needs at least two points per axis");
  if (!(r.M_hi > r.M_lo) || !(r.secondary_hi > r.secondary_lo))
    throw Error(ErrorKind::InvalidArgument, "grid ranges must have positive width");
  auto node = [](double lo, double hi, std::size_t i, std::size_t n) {
    return i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  std::vector<HorizonRow> rows;
  rows.reserve(res.M * res.secondary);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < res.M; ++i)
    for (std::size_t j = 0; j < res.secondary; ++j) {
      HorizonRow row;
      row.M = node(r.M_lo, r.M_hi, i, res.M);
      row.secondary = node(r.secondary_lo, r.secondary_hi, j, res.secondary);
      row.in_domain = in_domain(kind, {row.M, row.secondary});
      if (row.in_domain) {
        row.S = entropy_from_state(kind, {row.M, row.secondary});
        ++inside;
      }
      rows.push_back(row);
    }
  if (inside == 0) throw Error(ErrorKind::EmptyDomainIntersection, "no grid cell lies inside the model domain");
  return rows;
}

}  // namespace roegen
