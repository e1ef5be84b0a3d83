#include "crescent/exact_geometry.hpp"

#include "crescent/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace crescent {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const Rational p = m(col, col);
    det *= p;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m(row, col).is_zero()) continue;
      const Rational factor = m(row, col) / p;
      for (std::size_t j = col + 1; j < n; ++j) m(row, j) -= factor * m(col, j);
    }
  }
  return det;
}

SqDistConfig::SqDistConfig(RationalMatrix sqdist, std::size_t dim) : m_(std::move(sqdist)), dim_(dim) {
  const std::size_t n = m_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!m_(i, i).is_zero())
      throw Error(ErrorKind::InvalidArgument, "nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m_(i, j) != m_(j, i))
        throw Error(ErrorKind::InvalidArgument,
                    "asymmetric entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (m_(i, j).sign() < 0)
        throw Error(ErrorKind::InvalidArgument,
                    "negative squared distance (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

SqDistConfig SqDistConfig::from_upper(std::size_t n, std::span<const Rational> upper, std::size_t dim) {
  if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2)
    throw Error(ErrorKind::InvalidArgument, "upper triangle has wrong length");
  RationalMatrix m(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = upper[k];
      m(j, i) = upper[k];
      ++k;
    }
  return SqDistConfig(std::move(m), dim);
}

SqDistConfig SqDistConfig::subconfig(std::span<const Index> points) const {
  RationalMatrix m(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) m(i, j) = m_(points[i], points[j]);
  return SqDistConfig(std::move(m), dim_);
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::HyperplaneDegeneracy: return "HyperplaneDegeneracy";
    case ViolationKind::Cosphericity: return "Cosphericity";
    case ViolationKind::CoincidentPoints: return "CoincidentPoints";
    case ViolationKind::NotEmbeddable: return "NotEmbeddable";
    case ViolationKind::BadSpectrum: return "BadSpectrum";
  }
  return "Unknown";
}

namespace {

void check_indices(std::span<const Index> points, std::size_t n) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= n)
      throw Error(ErrorKind::IndexOutOfRange, "point index " + std::to_string(points[i]));
    for (std::size_t j = 0; j < i; ++j)
      if (points[j] == points[i])
        throw Error(ErrorKind::DuplicateIndex, "point index " + std::to_string(points[i]));
  }
}

Rational cm_det_unchecked(std::span<const Index> points, const SqDistConfig& config) {
  const std::size_t k = points.size();
  RationalMatrix b(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    b(0, i) = Rational(1);
    b(i, 0) = Rational(1);
    for (std::size_t j = 1; j <= k; ++j) b(i, j) = config(points[i - 1], points[j - 1]);
  }
  return determinant(std::move(b));
}

Rational sqdist_det_unchecked(std::span<const Index> points, const SqDistConfig& config) {
  return determinant(config.subconfig(points).matrix());
}

std::vector<Index> all_points(std::size_t n) {
  std::vector<Index> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

}  // namespace

Rational cm_det(std::span<const Index> points, const SqDistConfig& config) {
  if (points.size() < 2) throw Error(ErrorKind::InvalidArgument, "cm_det needs at least 2 points");
  check_indices(points, config.size());
  return cm_det_unchecked(points, config);
}

Rational sqdist_det(std::span<const Index> points, const SqDistConfig& config) {
  check_indices(points, config.size());
  return sqdist_det_unchecked(points, config);
}

Rational circumradius_sq(const SqDistConfig& config) {
  const auto idx = all_points(config.size());
  if (idx.size() < 2) throw Error(ErrorKind::DegenerateSimplex, "fewer than 2 points");
  const Rational cm = cm_det_unchecked(idx, config);
  if (cm.is_zero()) throw Error(ErrorKind::DegenerateSimplex, "points are affinely dependent");
  return -sqdist_det_unchecked(idx, config) / (Rational(2) * cm);
}

bool cospherical(std::span<const Index> points, const SqDistConfig& config) {
  if (points.size() != config.dim() + 2)
    throw Error(ErrorKind::InvalidArgument, "cospherical needs exactly dim+2 points");
  check_indices(points, config.size());
  std::vector<Index> facet;
  for (std::size_t skip = 0; skip < points.size(); ++skip) {
    facet.clear();
    for (std::size_t i = 0; i < points.size(); ++i)
      if (i != skip) facet.push_back(points[i]);
    if (facet.size() >= 2 && cm_det_unchecked(facet, config).is_zero())
      throw Error(ErrorKind::PrerequisiteViolated, "a (dim+1)-subset is affinely degenerate");
  }
  return sqdist_det_unchecked(points, config).is_zero();
}

GramFactor gram_factor(const SqDistConfig& config) {
  GramFactor out;
  const std::size_t n = config.size();
  out.coeff.assign(n, {});
  if (n <= 1) {
    out.positive_semidefinite = true;
    return out;
  }
  // Schur complement on points 1..n-1, shrinking as pivots are taken.
  const std::size_t g = n - 1;
  RationalMatrix s(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      s(i, j) = (config(0, i + 1) + config(0, j + 1) - config(i + 1, j + 1)) / Rational(2);

  std::vector<bool> done(g, false);
  std::vector<std::vector<Rational>> cols;  // cols[k][i] = coefficient of point i+1 on pivot k
  while (true) {
    std::optional<std::size_t> pivot;
    bool all_zero_diag = true;
    for (std::size_t i = 0; i < g; ++i) {
      if (done[i]) continue;
      const int sg = s(i, i).sign();
      if (sg < 0) return out;
      if (sg > 0) {
        all_zero_diag = false;
        if (!pivot) pivot = i;
      }
    }
    if (all_zero_diag) {
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
          if (!done[i] && !done[j] && !s(i, j).is_zero()) return out;
      break;
    }
    const std::size_t p = *pivot;
    const Rational d = s(p, p);
    std::vector<Rational> col(g);
    for (std::size_t i = 0; i < g; ++i)
      if (!done[i]) col[i] = s(i, p) / d;
    for (std::size_t i = 0; i < g; ++i) {
      if (done[i] || i == p || col[i].is_zero()) continue;
      for (std::size_t j = 0; j < g; ++j)
        if (!done[j] && j != p) s(i, j) -= col[i] * s(p, j);
    }
    done[p] = true;
    out.pivot.push_back(d);
    cols.push_back(std::move(col));
  }

  out.positive_semidefinite = true;
  out.rank = out.pivot.size();
  out.coeff[0].assign(out.rank, Rational(0));
  for (std::size_t i = 0; i < g; ++i) {
    out.coeff[i + 1].resize(out.rank);
    for (std::size_t k = 0; k < out.rank; ++k) out.coeff[i + 1][k] = cols[k][i];
  }
  return out;
}

bool embeddable_in(const SqDistConfig& config, std::size_t d) {
  const GramFactor f = gram_factor(config);
  return f.positive_semidefinite && f.rank <= d;
}

Spectrum spectrum(const SqDistConfig& config) {
  std::map<Rational, std::size_t> counts;
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = i + 1; j < config.size(); ++j) ++counts[config(i, j)];
  Spectrum out;
  out.reserve(counts.size());
  for (auto& [value, count] : counts) out.push_back({value, count});
  return out;
}

bool is_crescent_spectrum(const Spectrum& s, std::size_t n) {
  if (n < 2 || s.size() != n - 1) return false;
  std::vector<std::size_t> counts;
  counts.reserve(s.size());
  for (const auto& e : s) counts.push_back(e.count);
  std::sort(counts.begin(), counts.end());
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != i + 1) return false;
  return true;
}

std::vector<Violation> general_position_violations(const SqDistConfig& config, bool exhaustive) {
  std::vector<Violation> out;
  const std::size_t n = config.size();
  const std::size_t d = config.dim();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (config(i, j).is_zero()) {
        out.push_back({ViolationKind::CoincidentPoints, {i, j}});
        if (!exhaustive) return out;
      }
  if (!out.empty()) return out;

  if (!embeddable_in(config, d)) {
    out.push_back({ViolationKind::NotEmbeddable, {}});
    return out;
  }

  // Degenerate (d+1)-subsets, kept so exhaustive mode can skip sphere
  // checks whose prerequisite fails.
  std::vector<std::vector<Index>> flat;
  if (d + 1 >= 2) {
    for_each_subset(n, d + 1, [&](std::span<const Index> sub) {
      if (cm_det_unchecked(sub, config).is_zero()) {
        out.push_back({ViolationKind::HyperplaneDegeneracy, {sub.begin(), sub.end()}});
        flat.emplace_back(sub.begin(), sub.end());
        return exhaustive;
      }
      return true;
    });
    if (!exhaustive && !out.empty()) return out;
  }

  for_each_subset(n, d + 2, [&](std::span<const Index> sub) {
    for (const auto& f : flat)
      if (std::includes(sub.begin(), sub.end(), f.begin(), f.end())) return true;
    if (sqdist_det_unchecked(sub, config).is_zero()) {
      out.push_back({ViolationKind::Cosphericity, {sub.begin(), sub.end()}});
      return exhaustive;
    }
    return true;
  });
  return out;
}

std::optional<Violation> general_position(const SqDistConfig& config) {
  auto v = general_position_violations(config, false);
  if (v.empty()) return std::nullopt;
  return v.front();
}

std::optional<Violation> verify_crescent(const SqDistConfig& config) {
  if (auto v = general_position(config)) return v;
  if (!is_crescent_spectrum(spectrum(config), config.size()))
    return Violation{ViolationKind::BadSpectrum, {}};
  return std::nullopt;
}

}  // namespace crescent
