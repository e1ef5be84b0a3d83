#include "crescent/commands.hpp"

#include "crescent/error.hpp"
#include "crescent/io.hpp"

#include <iostream>

namespace crescent {

namespace {

std::pair<Rational, Rational> parse_seed_base(const std::string& text) {
  const auto comma = text.find(',');
  if (comma != std::string::npos)
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
  const auto slash = text.find('/');
  if (slash == std::string::npos || text.find('/', slash + 1) != std::string::npos)
    throw Error(ErrorKind::Parse, "seed base must be s/t or s,t");
  return {Rational::parse(text.substr(0, slash)), Rational::parse(text.substr(slash + 1))};
}

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (path)
    write_text_file(*path, text);
  else
    out << text;
}

std::string format_witness(const std::vector<Index>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

}  // namespace

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n < 3) {
    err << "construct: n must be at least 3 (got " << args.n << ")\n";
    return kExitUsage;
  }
  ConstructionParams params;
  try {
    if (args.seed_base) params.base = parse_seed_base(*args.seed_base);
  } catch (const Error& e) {
    err << "construct: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    Construction c = construct_crescent(static_cast<std::size_t>(args.n), params);
    ConfigFile file{std::move(c.config), std::nullopt, std::nullopt, std::move(c.trace)};
    emit(args.out_path, serialize(file), out);
    err << "construct: n=" << file.config.size() << " dimension=" << file.config.dim()
        << " retries=" << file.trace->retries << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "construct: " << e.what() << "\n";
    if (e.kind() == ErrorKind::RetryBudgetExhausted) return kExitFailure;
    return kExitUsage;
  }
}

int cmd_verify(const std::string& input_path, std::ostream& out, std::ostream& err) {
  ConfigFile file;
  try {
    file = read_config_file(input_path);
  } catch (const Error& e) {
    err << "verify: " << e.what() << "\n";
    return kExitUsage;
  }
  const SqDistConfig& c = file.config;
  if (auto v = verify_crescent(c)) {
    out << "fail: " << to_string(v->kind) << " " << format_witness(v->witness) << "\n";
    return kExitFailure;
  }
  out << "pass: n=" << c.size() << " dimension=" << c.dim() << " distinct=" << spectrum(c).size() << "\n";
  return kExitOk;
}

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchSpec spec;
  try {
    if (args.n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
    spec.region = parse_region(args.region);
    spec.n = static_cast<std::size_t>(args.n);
    spec.symmetry_reduce = args.symmetry_reduce;
    spec.prefix_depth = args.prefix_depth;
  } catch (const Error& e) {
    err << "search: " << e.what() << "\n";
    return kExitUsage;
  }
  SearchOptions options;
  options.threads = args.threads;
  if (args.progress_interval) {
    options.progress = &err;
    options.progress_interval = *args.progress_interval;
  }
  try {
    const SearchOutcome result = search(spec, options);
    emit(args.out_path, serialize_results(result.results), out);
    const SearchStats& s = result.stats;
    err << "search: results=" << result.results.size() << " nodes=" << s.nodes_visited
        << " pruned_collinear=" << s.pruned_by_collinear << " pruned_concyclic=" << s.pruned_by_concyclic
        << " pruned_spectrum=" << s.pruned_by_spectrum << " tasks=" << s.tasks << " elapsed=" << s.elapsed_seconds
        << "s\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "search: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_realize(const std::string& input_path, const std::optional<std::string>& out_path, std::ostream& out,
                std::ostream& err) {
  ConfigFile file;
  try {
    file = read_config_file(input_path);
  } catch (const Error& e) {
    err << "realize: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto r = realize(file.config);
  if (!r) {
    err << "realize: NotEmbeddable in dimension " << file.config.dim() << "\n";
    return kExitFailure;
  }
  err << "realize: max relative residual " << r->max_relative_residual << "\n";
  if (!(r->max_relative_residual < 1e-9)) {
    err << "realize: round-trip residual exceeds 1e-9\n";
    return kExitFailure;
  }
  file.coords_float = r->coords;
  try {
    emit(out_path, serialize(file), out);
  } catch (const Error& e) {
    err << "realize: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace crescent
