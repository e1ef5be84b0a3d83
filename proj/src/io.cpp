#include "crescent/io.hpp"

#include "crescent/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace crescent {

using nlohmann::json;

namespace {

json rational_array(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

Rational parse_rational_field(const json& j) {
  if (!j.is_string()) throw Error(ErrorKind::Parse, "rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t require_size(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw Error(ErrorKind::Parse, std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

LatticePoint parse_point(const json& p) {
  if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
    throw Error(ErrorKind::Parse, "lattice point must be [a, b] with integers");
  return {p[0].get<std::int64_t>(), p[1].get<std::int64_t>()};
}

json point_array(std::span<const LatticePoint> pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({p.a, p.b});
  return arr;
}

}  // namespace

json to_json(const ConfigFile& file) {
  const SqDistConfig& c = file.config;
  json j;
  j["format_version"] = kFormatVersion;
  j["n"] = c.size();
  j["dimension"] = c.dim();
  json rows = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < c.size(); ++k) row.push_back(c(i, k).to_string());
    rows.push_back(std::move(row));
  }
  j["sqdist"] = std::move(rows);
  if (file.lattice_points) j["lattice_points"] = point_array(*file.lattice_points);
  if (file.coords_float) j["coords_float"] = *file.coords_float;
  if (file.trace) {
    std::vector<Rational> deltas;
    for (const auto& a : file.trace->apexes) deltas.push_back(a.delta);
    const Rational base[] = {file.trace->base_s, file.trace->base_t};
    j["trace"] = {{"base", rational_array(base)}, {"apexes", rational_array(deltas)}, {"retries", file.trace->retries}};
  }
  return j;
}

json to_json(const SearchResult& result) {
  json spec = json::array();
  for (const auto& e : result.spectrum) spec.push_back({e.value.to_string(), e.count});
  return {{"points", point_array(result.points)}, {"spectrum", std::move(spec)}};
}

ConfigFile config_from_json(const json& j) {
  const json& version = require(j, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw Error(ErrorKind::Parse, "unsupported format_version");
  const std::size_t n = require_size(j, "n");
  const std::size_t dim = require_size(j, "dimension");
  const json& rows = require(j, "sqdist");
  if (!rows.is_array() || rows.size() != n) throw Error(ErrorKind::Parse, "sqdist must have n rows");
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw Error(ErrorKind::Parse, "sqdist must be n x n");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = parse_rational_field(rows[i][k]);
  }
  ConfigFile out;
  try {
    out.config = SqDistConfig(std::move(m), dim);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }

  if (j.contains("lattice_points")) {
    const json& lp = j.at("lattice_points");
    if (!lp.is_array() || lp.size() != n) throw Error(ErrorKind::Parse, "lattice_points must have n entries");
    std::vector<LatticePoint> pts;
    for (const auto& p : lp) pts.push_back(parse_point(p));
    SqDistConfig from_points;
    try {
      from_points = to_exact_config(pts);
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    if (from_points.matrix() != out.config.matrix())
      throw Error(ErrorKind::Parse, "lattice_points disagree with sqdist");
    out.lattice_points = std::move(pts);
  }
  if (j.contains("coords_float")) {
    try {
      out.coords_float = j.at("coords_float").get<std::vector<std::vector<double>>>();
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("coords_float: ") + e.what());
    }
  }
  if (j.contains("trace")) {
    const json& t = j.at("trace");
    const json& base = require(t, "base");
    const json& apexes = require(t, "apexes");
    if (!base.is_array() || base.size() != 2 || !apexes.is_array())
      throw Error(ErrorKind::Parse, "malformed trace");
    ConstructionTrace trace;
    trace.base_s = parse_rational_field(base[0]);
    trace.base_t = parse_rational_field(base[1]);
    for (const auto& a : apexes) trace.apexes.push_back({parse_rational_field(a)});
    trace.retries = require_size(t, "retries");
    out.trace = std::move(trace);
  }
  return out;
}

std::string serialize(const ConfigFile& file) { return to_json(file).dump(2) + "\n"; }

ConfigFile parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return config_from_json(j);
}

ConfigFile read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + path.string());
}

std::string serialize_results(const std::vector<SearchResult>& results) {
  std::string out;
  for (const auto& r : results) out += to_json(r).dump() + "\n";
  return out;
}

std::variant<HexRegion, std::vector<LatticePoint>> parse_region(std::string_view text) {
  if (text.starts_with("hex:")) {
    std::string body(text.substr(4));
    HexRegion region;
    const auto at = body.find('@');
    auto parse_int = [&](const std::string& s) -> std::int64_t {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (s.empty() || used != s.size()) throw Error(ErrorKind::Parse, "bad region spec '" + std::string(text) + "'");
      return v;
    };
    region.radius = parse_int(body.substr(0, at));
    if (region.radius < 0) throw Error(ErrorKind::Parse, "negative hex radius");
    if (at != std::string::npos) {
      const std::string center = body.substr(at + 1);
      const auto comma = center.find(',');
      if (comma == std::string::npos) throw Error(ErrorKind::Parse, "hex center must be <a>,<b>");
      region.center = {parse_int(center.substr(0, comma)), parse_int(center.substr(comma + 1))};
    }
    return region;
  }
  std::ifstream in{std::string(text)};
  if (!in) throw Error(ErrorKind::Parse, "cannot open region file '" + std::string(text) + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  const json& arr = j.is_object() ? require(j, "lattice_points") : j;
  if (!arr.is_array()) throw Error(ErrorKind::Parse, "region file must list lattice points");
  std::vector<LatticePoint> pts;
  for (const auto& p : arr) pts.push_back(parse_point(p));
  return pts;
}

std::optional<Realization> realize(const SqDistConfig& config) {
  const GramFactor f = gram_factor(config);
  if (!f.positive_semidefinite || f.rank > config.dim()) return std::nullopt;
  const std::size_t n = config.size();
  Realization out;
  out.coords.assign(n, std::vector<double>(config.dim(), 0.0));
  std::vector<double> scale(f.rank);
  for (std::size_t k = 0; k < f.rank; ++k) scale[k] = std::sqrt(f.pivot[k].to_double());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < f.rank; ++k) out.coords[i][k] = f.coeff[i][k].to_double() * scale[k];

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < config.dim(); ++k) {
        const double diff = out.coords[i][k] - out.coords[j][k];
        d2 += diff * diff;
      }
      const double exact = config(i, j).to_double();
      const double err = exact == 0.0 ? std::abs(d2) : std::abs(d2 - exact) / exact;
      out.max_relative_residual = std::max(out.max_relative_residual, err);
    }
  return out;
}

}  // namespace crescent
