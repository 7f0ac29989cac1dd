#pragma once

// Thermodynamics <-> economics dictionary.

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "roegen/error.hpp"

namespace roegen {

struct DictionaryEntry {
  std::string_view thermo_term;
  std::string_view econ_term;
  std::string_view thermo_symbol;
  std::string_view econ_symbol;
  std::string_view note;

  std::string row() const {
    return std::string(thermo_term) + " \xE2\x86\x94 " + std::string(econ_term) + " (" +
           std::string(thermo_symbol) + " \xE2\x86\x94 " + std::string(econ_symbol) + ")";
  }
};

enum class Direction { ThermoToEcon, EconToThermo };

// The last three rows come from the elementary work/heat relations and the
// Gibbs-Pfaff potentials rather than the state-variable table.
inline constexpr std::array<DictionaryEntry, 18> kDictionary{{
    {"internal energy", "growth potential", "U", "G", ""},
    {"temperature", "internal politics stability", "T", "I", ""},
    {"entropy", "entropy", "S", "E", ""},
    {"pressure", "price level (inflation)", "P", "P", ""},
    {"volume", "volume, structure, quality", "V", "Q", ""},
    {"total energy (mass)", "national income (income)", "M", "Y", ""},
    {"electric charge", "total investment", "Q", "\xF0\x9D\x93\x98", ""},
    {"angular momentum (spin)", "economic angular momentum (economic spin)", "J", "J", ""},
    {"mass function", "national income function", "M=M(S,Q,J)", "Y=Y(E,\xF0\x9D\x93\x98,J)", ""},
    {"angular speed", "marginal inclination to rotate", "\xCE\xA9=\xE2\x88\x82M/\xE2\x88\x82J",
     "\xE2\x88\x82Y/\xE2\x88\x82J", ""},
    {"electric potential", "marginal inclination to investment", "\xCE\xA6=\xE2\x88\x82M/\xE2\x88\x82Q",
     "\xE2\x88\x82Y/\xE2\x88\x82\xF0\x9D\x93\x98", ""},
    {"Hawking temperature", "marginal inclination to entropy", "T_H=\xE2\x88\x82M/\xE2\x88\x82S",
     "\xE2\x88\x82Y/\xE2\x88\x82" "E", ""},
    {"Newton constant", "universal economic constant", "G", "\xF0\x9D\x92\xA2", "no numeric value"},
    {"light velocity", "maximum universal exchange speed", "c", "c", "no numeric value"},
    {"normalized Planck constant", "normalized economic quantum", "\xC4\xA7", "\xC4\xA7", "no numeric value"},
    {"mechanical work", "wealth of the system", "dW=PdV", "dW=Pdq", ""},
    {"heat", "production of goods", "dQ=TdS", "dq=IdE", "inequality for irreversible processes"},
    {"chemical potential", "economic potential of Gibbs type", "\xCE\xBC", "\xCE\xBD", "per mole"},
}};

namespace detail {
inline std::string normalize_term(std::string_view s) {
  std::string out;
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  const auto b = out.find_first_not_of(" \t");
  const auto e = out.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : out.substr(b, e - b + 1);
}

// Matches the full term or the term without its trailing parenthetical.
inline bool term_matches(std::string_view entry, const std::string& key) {
  const std::string full = normalize_term(entry);
  if (full == key) return true;
  const auto paren = full.find(" (");
  return paren != std::string::npos && full.substr(0, paren) == key;
}
}  // namespace detail

/// Looks a term up on the source side of `direction` (case-insensitive).
inline const DictionaryEntry& translate(std::string_view term, Direction direction) {
  const std::string key = detail::normalize_term(term);
  for (const auto& e : kDictionary) {
    const auto side = direction == Direction::ThermoToEcon ? e.thermo_term : e.econ_term;
    if (!key.empty() && detail::term_matches(side, key)) return e;
  }
  throw Error(ErrorKind::UnknownTerm, "'" + std::string(term) + "' is not in the dictionary");
}

/// Target-side term of a translation.
inline std::string_view translated_term(const DictionaryEntry& e, Direction direction) {
  return direction == Direction::ThermoToEcon ? e.econ_term : e.thermo_term;
}

inline Direction reverse(Direction d) {
  return d == Direction::ThermoToEcon ? Direction::EconToThermo : Direction::ThermoToEcon;
}

}  // namespace roegen
