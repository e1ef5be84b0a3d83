#pragma once

// Subcommand bodies behind the `crescent` CLI, callable in-process.
// Exit codes: 0 success, 1 semantic failure, 2 usage or parse error.
// Data goes to `out` (or the --out file); diagnostics go to `err`.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace crescent {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct ConstructArgs {
  std::int64_t n = 0;
  // Base squared sides: "s/t" with integers (e.g. "1/2"), or "s,t" with
  // rationals (e.g. "3/2,5/4").
  std::optional<std::string> seed_base;
  std::optional<std::string> out_path;
};

struct SearchArgs {
  std::string region;  // hex:<r>[@a,b] or a points file
  std::int64_t n = 0;
  std::size_t threads = 1;
  bool symmetry_reduce = false;
  std::size_t prefix_depth = 2;
  std::optional<std::string> out_path;
  std::optional<std::chrono::milliseconds> progress_interval;
};

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& input_path, std::ostream& out, std::ostream& err);
int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err);
int cmd_realize(const std::string& input_path, const std::optional<std::string>& out_path, std::ostream& out,
                std::ostream& err);

}  // namespace crescent
