#pragma once

// Coordinate-free exact geometry on matrices of squared distances.
//
// A configuration is stored only through its pairwise squared distances,
// which stay rational through every construction step even when explicit
// coordinates would need nested square roots. All predicates below are
// determinants of (bordered) squared-distance matrices evaluated exactly.
//
// Sign convention for the Cayley-Menger determinant of k points: for an
// affinely independent set (-1)^k * cm_det > 0; it is 0 exactly when the
// points are affinely dependent.

#include "crescent/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace crescent {

using Index = std::size_t;

// Dense square matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t size) : size_(size), data_(size * size) {}

  std::size_t size() const { return size_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Rational> data_;
};

// Exact determinant by fraction elimination; the pivot is the first nonzero
// entry in column order.
Rational determinant(RationalMatrix m);

// n points given by their symmetric matrix of squared distances, plus the
// ambient dimension the configuration claims to live in.
class SqDistConfig {
 public:
  SqDistConfig() = default;

  // Validates shape, symmetry, zero diagonal and non-negative entries.
  // Zero off-diagonal entries (coincident points) are allowed here and
  // reported by verify_crescent.
  SqDistConfig(RationalMatrix sqdist, std::size_t dim);

  // Builds from the strict upper triangle listed row by row:
  // (0,1), (0,2), ..., (0,n-1), (1,2), ...
  static SqDistConfig from_upper(std::size_t n, std::span<const Rational> upper, std::size_t dim);

  std::size_t size() const { return m_.size(); }
  std::size_t dim() const { return dim_; }
  const Rational& operator()(Index i, Index j) const { return m_(i, j); }
  const RationalMatrix& matrix() const { return m_; }

  SqDistConfig with_dim(std::size_t dim) const { return SqDistConfig(m_, dim); }

  // Restriction to a subset of points, in the given order.
  SqDistConfig subconfig(std::span<const Index> points) const;

  friend bool operator==(const SqDistConfig&, const SqDistConfig&) = default;

 private:
  RationalMatrix m_;
  std::size_t dim_ = 0;
};

struct SpectrumEntry {
  Rational value;
  std::size_t count = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Distinct squared distances with multiplicities over unordered pairs,
// ascending by value.
using Spectrum = std::vector<SpectrumEntry>;

enum class ViolationKind {
  HyperplaneDegeneracy,
  Cosphericity,
  CoincidentPoints,
  NotEmbeddable,
  BadSpectrum,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Index> witness;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Cayley-Menger determinant of the chosen points (k >= 2).
// Throws Error{IndexOutOfRange | DuplicateIndex | InvalidArgument}.
Rational cm_det(std::span<const Index> points, const SqDistConfig& config);

// Plain determinant of the squared-distance submatrix of the chosen points.
Rational sqdist_det(std::span<const Index> points, const SqDistConfig& config);

// Squared circumradius of an affinely independent configuration:
// R^2 = -det(D) / (2 cm_det). Throws Error{DegenerateSimplex}.
Rational circumradius_sq(const SqDistConfig& config);

// Whether dim+2 points lie on a common hypersphere of R^dim. Requires every
// (dim+1)-subset of them to be affinely independent, else throws
// Error{PrerequisiteViolated}.
bool cospherical(std::span<const Index> points, const SqDistConfig& config);

// Exact symmetric factorisation G = X X^T of the Gram matrix anchored at
// point 0, G[i][j] = (d0i + d0j - dij) / 2 for i, j >= 1. Coordinates are
// kept as exact scale factors: coordinate k of point i is
// coeff[i][k] * sqrt(pivot[k]).
struct GramFactor {
  bool positive_semidefinite = false;
  std::size_t rank = 0;
  std::vector<Rational> pivot;                   // rank entries, all > 0
  std::vector<std::vector<Rational>> coeff;      // n rows of rank entries; row 0 is zero
};

GramFactor gram_factor(const SqDistConfig& config);

// Whether some point set in R^d realises the matrix exactly.
bool embeddable_in(const SqDistConfig& config, std::size_t d);

Spectrum spectrum(const SqDistConfig& config);

// True iff the multiset of counts is exactly {1, ..., n-1}.
bool is_crescent_spectrum(const Spectrum& s, std::size_t n);

// Lists general-position violations in lexicographic subset order: first
// every (dim+1)-subset with vanishing cm_det, then every cospherical
// (dim+2)-subset. Coincident points and non-embeddability are reported
// (alone) before either. Stops after the first unless `exhaustive`.
std::vector<Violation> general_position_violations(const SqDistConfig& config, bool exhaustive);

// nullopt means the configuration is in general position in R^dim.
std::optional<Violation> general_position(const SqDistConfig& config);

// nullopt means the configuration is a crescent configuration in R^dim.
std::optional<Violation> verify_crescent(const SqDistConfig& config);

// Calls f(span of indices) for every k-subset of {0..n-1} in lexicographic
// order; stops early when f returns false.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<Index> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(std::span<const Index>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace crescent
