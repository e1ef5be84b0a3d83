#pragma once

// Persistent formats.
//
// ConfigFile (JSON, format_version 1):
//   {
//     "format_version": 1,
//     "n": 3,
//     "dimension": 1,
//     "sqdist": [["0/1","1/1","4/1"], ["1/1","0/1","1/1"], ["4/1","1/1","0/1"]],
//     "lattice_points": [[0,0],[1,0],[2,0]],            (optional)
//     "coords_float": [[0.0],[1.0],[2.0]],              (optional)
//     "trace": {"base": ["1/1","4/1"], "apexes": [], "retries": 0}   (optional)
//   }
// Rationals are always decimal "p/q" strings. Search results are JSON lines
// {"points": [[a,b],...], "spectrum": [["p/q", count], ...]}.

#include "crescent/constructor.hpp"
#include "crescent/exact_geometry.hpp"
#include "crescent/lattice.hpp"
#include "crescent/search.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crescent {

inline constexpr int kFormatVersion = 1;

struct ConfigFile {
  SqDistConfig config;
  std::optional<std::vector<LatticePoint>> lattice_points;
  std::optional<std::vector<std::vector<double>>> coords_float;
  std::optional<ConstructionTrace> trace;
};

nlohmann::json to_json(const ConfigFile& file);
nlohmann::json to_json(const SearchResult& result);

// Throws Error{Parse} on any schema or value problem, including a
// lattice_points list inconsistent with sqdist.
ConfigFile config_from_json(const nlohmann::json& j);

std::string serialize(const ConfigFile& file);
ConfigFile parse_config(std::string_view text);

ConfigFile read_config_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// One JSON object per line, newline-terminated.
std::string serialize_results(const std::vector<SearchResult>& results);

// "hex:<r>" or "hex:<r>@<a>,<b>" for a hexagon, otherwise a JSON file holding
// an array of [a, b] pairs or an object with "lattice_points".
// Throws Error{Parse}.
std::variant<HexRegion, std::vector<LatticePoint>> parse_region(std::string_view text);

// Floating coordinates realising the configuration in R^dim, from the exact
// Gram factorisation anchored at point 0.
struct Realization {
  std::vector<std::vector<double>> coords;
  double max_relative_residual = 0.0;
};

// nullopt if the configuration is not embeddable in R^dim.
std::optional<Realization> realize(const SqDistConfig& config);

}  // namespace crescent
