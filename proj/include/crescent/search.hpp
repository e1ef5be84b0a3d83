#pragma once

// Exhaustive search for planar crescent configurations among the subsets of
// a finite lattice region.
//
// Subsets are walked depth-first in increasing index order over the
// lexicographically sorted region. A candidate point is rejected as soon as
// it is collinear with a chosen pair, concyclic with a chosen triple, or the
// distance counts so far can no longer complete to {1, ..., n-1}. Complete
// subsets are re-checked by the exact verifier before they are reported.
//
// The tree is cut at `prefix_depth` into independent tasks for a worker
// pool. Per-task results and statistics are merged in task order, so the
// output does not depend on the thread count.

#include "crescent/exact_geometry.hpp"
#include "crescent/lattice.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <span>
#include <stop_token>
#include <variant>
#include <vector>

namespace crescent {

struct SearchSpec {
  std::variant<HexRegion, std::vector<LatticePoint>> region;
  std::size_t n = 3;
  bool symmetry_reduce = false;
  std::size_t prefix_depth = 2;
};

struct SearchResult {
  std::vector<LatticePoint> points;  // sorted
  Spectrum spectrum;
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned_by_collinear = 0;
  std::uint64_t pruned_by_concyclic = 0;
  std::uint64_t pruned_by_spectrum = 0;
  std::uint64_t results_found = 0;
  std::uint64_t tasks = 0;
  double elapsed_seconds = 0.0;

  SearchStats& operator+=(const SearchStats& o);
};

struct SearchOptions {
  std::size_t threads = 1;
  std::stop_token stop;                      // checked before each task
  std::ostream* progress = nullptr;          // progress lines go here when set
  std::chrono::milliseconds progress_interval{1000};
};

struct SearchOutcome {
  std::vector<SearchResult> results;  // sorted by point list
  SearchStats stats;
  bool cancelled = false;
};

// Region points sorted lexicographically. Throws Error{InvalidArgument} on
// duplicate explicit points.
std::vector<LatticePoint> region_points(const SearchSpec& spec);

// Necessary condition for the current distance counts (of k chosen points)
// to grow into exactly {1, ..., n-1} once n points are chosen.
bool spectrum_feasible(std::span<const std::size_t> counts, std::size_t k, std::size_t n);

// Throws Error{RegionTooSmall} if the region has fewer than n points and
// Error{InvalidArgument} if n < 3.
SearchOutcome search(const SearchSpec& spec, const SearchOptions& options = {});

// Least representative over the 12 point-group images, each translated so
// its minimum point is the origin, points sorted.
std::vector<LatticePoint> canonicalize(std::span<const LatticePoint> points);

}  // namespace crescent
