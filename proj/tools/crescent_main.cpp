#include "crescent/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and search for crescent configurations"};
  app.require_subcommand(1);

  crescent::ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build an n-point crescent configuration in R^(n-2)");
  c->add_option("--n", construct.n, "Number of points (>= 3)")->required();
  c->add_option("--seed-base", construct.seed_base, "Base triangle squared sides, s/t or s,t");
  c->add_option("--out", construct.out_path, "Output ConfigFile (stdout if omitted)");

  std::string verify_input;
  auto* v = app.add_subcommand("verify", "Check a ConfigFile for the crescent property");
  v->add_option("input", verify_input, "ConfigFile to check")->required();

  crescent::SearchArgs search;
  long long progress_ms = 0;
  auto* s = app.add_subcommand("search", "Exhaustive search on a triangular-lattice region");
  s->add_option("--region", search.region, "hex:<r>, hex:<r>@<a>,<b>, or a JSON points file")->required();
  s->add_option("--n", search.n, "Number of points (>= 3)")->required();
  s->add_option("--threads", search.threads, "Worker threads")->capture_default_str();
  s->add_flag("--symmetry-reduce", search.symmetry_reduce, "Emit one canonical form per lattice-isometry class");
  s->add_option("--prefix-depth", search.prefix_depth, "Depth at which the tree is split into tasks")
      ->capture_default_str();
  s->add_option("--out", search.out_path, "Output JSON-lines file (stdout if omitted)");
  s->add_option("--progress-interval", progress_ms, "Progress report period in ms on stderr (0 = off)");

  std::string realize_input;
  std::optional<std::string> realize_out;
  auto* r = app.add_subcommand("realize", "Add floating coordinates to a ConfigFile");
  r->add_option("input", realize_input, "ConfigFile to realise")->required();
  r->add_option("--out", realize_out, "Output ConfigFile (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return crescent::kExitUsage;
  }

  if (*c) return crescent::cmd_construct(construct, std::cout, std::cerr);
  if (*v) return crescent::cmd_verify(verify_input, std::cout, std::cerr);
  if (*s) {
    if (progress_ms > 0) search.progress_interval = std::chrono::milliseconds(progress_ms);
    return crescent::cmd_search(search, std::cout, std::cerr);
  }
  return crescent::cmd_realize(realize_input, realize_out, std::cout, std::cerr);
}
