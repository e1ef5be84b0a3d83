#include "crescent/search.hpp"

#include "crescent/error.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>

namespace crescent {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes_visited += o.nodes_visited;
  pruned_by_collinear += o.pruned_by_collinear;
  pruned_by_concyclic += o.pruned_by_concyclic;
  pruned_by_spectrum += o.pruned_by_spectrum;
  results_found += o.results_found;
  tasks += o.tasks;
  return *this;
}

std::vector<LatticePoint> region_points(const SearchSpec& spec) {
  if (const auto* hex = std::get_if<HexRegion>(&spec.region)) return enumerate_region(*hex);
  auto pts = std::get<std::vector<LatticePoint>>(spec.region);
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw Error(ErrorKind::InvalidArgument, "region point list contains duplicates");
  return pts;
}

bool spectrum_feasible(std::span<const std::size_t> counts, std::size_t k, std::size_t n) {
  if (k > n) return false;
  std::vector<std::size_t> c;
  c.reserve(counts.size());
  for (std::size_t x : counts)
    if (x > 0) c.push_back(x);
  // (a) too many distinct values
  if (c.size() > n - 1) return false;
  std::sort(c.begin(), c.end(), std::greater<>());
  // (b), (c): the i-th largest count must fit under target n-1-i
  std::size_t used = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > n - 1 - i) return false;
    used += c[i];
  }
  // (d) pairs still to come must cover the gap to the full target set
  const std::size_t target_total = n * (n - 1) / 2;
  const std::size_t remaining = target_total - k * (k - 1) / 2;
  std::size_t needed = 0;
  for (std::size_t i = 0; i < n - 1; ++i) needed += (n - 1 - i) - (i < c.size() ? c[i] : 0);
  return used <= target_total && needed <= remaining;
}

std::vector<LatticePoint> canonicalize(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> best;
  std::vector<LatticePoint> img(points.size());
  for (std::size_t g = 0; g < kPointGroupOrder; ++g) {
    for (std::size_t i = 0; i < points.size(); ++i) img[i] = apply_point_group(g, points[i]);
    std::sort(img.begin(), img.end());
    if (!img.empty()) {
      const LatticePoint origin = img.front();
      for (auto& p : img) p = p - origin;
    }
    if (g == 0 || img < best) best = img;
  }
  return best;
}

namespace {

// Shared read-only tables for one search.
struct Problem {
  std::vector<LatticePoint> pts;
  std::size_t n = 0;
  std::size_t distinct_values = 0;
  std::vector<std::uint32_t> value_id;  // pts.size()^2, compact id of sq_norm

  std::uint32_t id(std::size_t i, std::size_t j) const { return value_id[i * pts.size() + j]; }
};

Problem make_problem(std::vector<LatticePoint> pts, std::size_t n) {
  Problem pr;
  pr.n = n;
  pr.pts = std::move(pts);
  const std::size_t m = pr.pts.size();
  std::map<std::int64_t, std::uint32_t> ids;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ids.emplace(sq_norm(pr.pts[i], pr.pts[j]), 0);
  std::uint32_t next = 0;
  for (auto& [v, id] : ids) id = next++;
  pr.distinct_values = ids.size();
  pr.value_id.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) pr.value_id[i * m + j] = ids.at(sq_norm(pr.pts[i], pr.pts[j]));
  return pr;
}

class Walker {
 public:
  explicit Walker(const Problem& pr)
      : pr_(pr), counts_(pr.distinct_values, 0), stamps_(pr.distinct_values, 0) { chosen_.reserve(pr.n); }

  SearchStats stats;
  std::vector<SearchResult> results;

  // Pushes point j if it passes every pruning rule; returns false (state
  // unchanged) otherwise.
  bool push(std::size_t j) {
    ++stats.nodes_visited;
    const LatticePoint p = pr_.pts[j];
    const std::size_t k = chosen_.size();
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = x + 1; y < k; ++y)
        if (collinear(pr_.pts[chosen_[x]], pr_.pts[chosen_[y]], p)) {
          ++stats.pruned_by_collinear;
          return false;
        }
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = x + 1; y < k; ++y)
        for (std::size_t z = y + 1; z < k; ++z)
          if (concyclic(pr_.pts[chosen_[x]], pr_.pts[chosen_[y]], pr_.pts[chosen_[z]], p)) {
            ++stats.pruned_by_concyclic;
            return false;
          }
    for (std::size_t c : chosen_) ++counts_[pr_.id(c, j)];
    chosen_.push_back(j);
    if (!feasible()) {
      pop();
      ++stats.pruned_by_spectrum;
      return false;
    }
    return true;
  }

  void pop() {
    const std::size_t j = chosen_.back();
    chosen_.pop_back();
    for (std::size_t c : chosen_) --counts_[pr_.id(c, j)];
  }

  std::size_t depth() const { return chosen_.size(); }
  const std::vector<std::size_t>& chosen() const { return chosen_; }

  // Full subtree below the current prefix.
  void run() {
    if (chosen_.size() == pr_.n) {
      emit();
      return;
    }
    const std::size_t m = pr_.pts.size();
    const std::size_t start = chosen_.empty() ? 0 : chosen_.back() + 1;
    const std::size_t still = pr_.n - chosen_.size();
    for (std::size_t j = start; j + still <= m; ++j) {
      if (!push(j)) continue;
      run();
      pop();
    }
  }

 private:
  bool feasible() {
    ++stamp_;
    active_.clear();
    for (std::size_t x = 0; x < chosen_.size(); ++x)
      for (std::size_t y = x + 1; y < chosen_.size(); ++y) {
        const std::uint32_t id = pr_.id(chosen_[x], chosen_[y]);
        if (stamps_[id] == stamp_) continue;
        stamps_[id] = stamp_;
        active_.push_back(counts_[id]);
      }
    return spectrum_feasible(active_, chosen_.size(), pr_.n);
  }

  void emit() {
    std::vector<LatticePoint> pts;
    pts.reserve(chosen_.size());
    for (std::size_t c : chosen_) pts.push_back(pr_.pts[c]);
    const SqDistConfig config = to_exact_config(pts);
    if (verify_crescent(config)) return;
    ++stats.results_found;
    results.push_back({std::move(pts), spectrum(config)});
  }

  const Problem& pr_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> active_;
  std::vector<std::uint64_t> stamps_;
  std::uint64_t stamp_ = 0;
};

// All prefixes of the given depth that survive pruning, in DFS order.
void collect_prefixes(Walker& w, const Problem& pr, std::size_t depth,
                      std::vector<std::vector<std::size_t>>& out) {
  if (w.depth() == depth) {
    out.push_back(w.chosen());
    return;
  }
  const std::size_t m = pr.pts.size();
  const std::size_t start = w.chosen().empty() ? 0 : w.chosen().back() + 1;
  const std::size_t still = pr.n - w.depth();
  for (std::size_t j = start; j + still <= m; ++j) {
    if (!w.push(j)) continue;
    collect_prefixes(w, pr, depth, out);
    w.pop();
  }
}

std::string format_prefix(const Problem& pr, const std::vector<std::size_t>& prefix) {
  std::string s = "[";
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const auto& p = pr.pts[prefix[i]];
    if (i) s += ",";
    s += "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  }
  return s + "]";
}

}  // namespace

SearchOutcome search(const SearchSpec& spec, const SearchOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  if (spec.n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  auto pts = region_points(spec);
  if (pts.size() < spec.n)
    throw Error(ErrorKind::RegionTooSmall, "region has " + std::to_string(pts.size()) + " points, need " +
                                               std::to_string(spec.n));
  const Problem pr = make_problem(std::move(pts), spec.n);

  SearchOutcome out;
  const std::size_t depth = std::min(spec.prefix_depth, spec.n - 1);
  std::vector<std::vector<std::size_t>> prefixes;
  Walker generator(pr);
  collect_prefixes(generator, pr, depth, prefixes);
  out.stats += generator.stats;

  const std::size_t task_count = prefixes.size();
  std::vector<SearchStats> task_stats(task_count);
  std::vector<std::vector<SearchResult>> task_results(task_count);
  std::vector<char> task_done(task_count, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> finished{0};
  std::atomic<std::uint64_t> nodes{out.stats.nodes_visited};
  std::atomic<bool> cancelled{false};
  std::mutex current_mu;
  std::string current;

  auto worker = [&] {
    while (true) {
      if (options.stop.stop_requested()) {
        cancelled = true;
        return;
      }
      const std::size_t t = next.fetch_add(1);
      if (t >= task_count) return;
      if (options.progress) {
        std::lock_guard lock(current_mu);
        current = format_prefix(pr, prefixes[t]);
      }
      Walker w(pr);
      for (std::size_t j : prefixes[t]) w.push(j);  // replays a surviving prefix
      w.stats = {};
      w.run();
      w.stats.tasks = 1;
      nodes += w.stats.nodes_visited;
      task_stats[t] = w.stats;
      task_results[t] = std::move(w.results);
      task_done[t] = 1;
      ++finished;
    }
  };

  std::mutex report_mu;
  std::condition_variable report_cv;
  bool all_done = false;
  std::thread reporter;
  if (options.progress) {
    reporter = std::thread([&] {
      std::unique_lock lock(report_mu);
      while (!report_cv.wait_for(lock, options.progress_interval, [&] { return all_done; })) {
        std::string prefix;
        {
          std::lock_guard g(current_mu);
          prefix = current;
        }
        *options.progress << "progress: tasks " << finished.load() << "/" << task_count << ", nodes "
                          << nodes.load() << ", prefix " << prefix << "\n";
        options.progress->flush();
      }
    });
  }

  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (reporter.joinable()) {
    {
      std::lock_guard lock(report_mu);
      all_done = true;
    }
    report_cv.notify_all();
    reporter.join();
  }

  for (std::size_t t = 0; t < task_count; ++t) {
    if (!task_done[t]) continue;
    out.stats += task_stats[t];
    for (auto& r : task_results[t]) out.results.push_back(std::move(r));
  }
  out.cancelled = cancelled.load();

  if (spec.symmetry_reduce) {
    for (auto& r : out.results) r.points = canonicalize(r.points);
    std::sort(out.results.begin(), out.results.end(),
              [](const SearchResult& x, const SearchResult& y) { return x.points < y.points; });
    out.results.erase(std::unique(out.results.begin(), out.results.end(),
                                  [](const SearchResult& x, const SearchResult& y) { return x.points == y.points; }),
                      out.results.end());
  } else {
    std::sort(out.results.begin(), out.results.end(),
              [](const SearchResult& x, const SearchResult& y) { return x.points < y.points; });
  }
  out.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace crescent
