#pragma once

// Independent reference computations for tests. Nothing here calls the
// elimination code under test.

#include "crescent/exact_geometry.hpp"
#include "crescent/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using crescent::Index;
using crescent::LatticePoint;
using crescent::Rational;
using crescent::RationalMatrix;
using crescent::SqDistConfig;

// Determinant by Leibniz expansion over all permutations.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  return rows;
}

// Bordered Cayley-Menger matrix evaluated by Leibniz.
inline Rational cm_det_leibniz(const std::vector<Index>& pts, const SqDistConfig& c) {
  const std::size_t k = pts.size();
  std::vector<std::vector<Rational>> b(k + 1, std::vector<Rational>(k + 1));
  for (std::size_t i = 1; i <= k; ++i) {
    b[0][i] = b[i][0] = Rational(1);
    for (std::size_t j = 1; j <= k; ++j) b[i][j] = c(pts[i - 1], pts[j - 1]);
  }
  return leibniz_det(b);
}

using Coords = std::vector<std::vector<Rational>>;  // points x dimension

inline SqDistConfig config_from_coords(const Coords& pts, std::size_t dim) {
  const std::size_t n = pts.size();
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        const Rational d = pts[i][k] - pts[j][k];
        s += d * d;
      }
      m(i, j) = s;
    }
  return SqDistConfig(std::move(m), dim);
}

// det of the Gram matrix of p_i - p_0 (i >= 1); zero iff affinely dependent.
// For k points, cm_det = (-1)^k 2^(k-1) * this value.
inline Rational difference_gram_det(const Coords& pts) {
  const std::size_t k = pts.size();
  std::vector<std::vector<Rational>> g(k - 1, std::vector<Rational>(k - 1));
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 1; j < k; ++j) {
      Rational s(0);
      for (std::size_t a = 0; a < pts[0].size(); ++a) s += (pts[i][a] - pts[0][a]) * (pts[j][a] - pts[0][a]);
      g[i - 1][j - 1] = s;
    }
  return leibniz_det(g);
}

// Least-squares-free circumcenter fit: solves for the center through the
// first d+1 points and tests the last one. Points with a degenerate facet
// are reported as not cospherical.
inline bool float_cospherical(const std::vector<std::vector<double>>& pts, double tol = 1e-9) {
  const std::size_t d = pts[0].size();
  // 2 (p_i - p_0) . c = |p_i|^2 - |p_0|^2, i = 1..d
  std::vector<std::vector<double>> a(d, std::vector<double>(d + 1));
  auto norm2 = [](const std::vector<double>& p) {
    double s = 0;
    for (double x : p) s += x * x;
    return s;
  };
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t k = 0; k < d; ++k) a[i - 1][k] = 2 * (pts[i][k] - pts[0][k]);
    a[i - 1][d] = norm2(pts[i]) - norm2(pts[0]);
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < d; ++r)
      if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
    if (std::abs(a[best][col]) < 1e-12) return false;
    std::swap(a[best], a[col]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k <= d; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<double> c(d);
  for (std::size_t k = 0; k < d; ++k) c[k] = a[k][d] / a[k][k];
  auto dist2 = [&](const std::vector<double>& p) {
    double s = 0;
    for (std::size_t k = 0; k < d; ++k) s += (p[k] - c[k]) * (p[k] - c[k]);
    return s;
  };
  const double r2 = dist2(pts[0]);
  return std::abs(dist2(pts[d + 1]) - r2) <= tol * std::max(1.0, r2);
}

inline std::vector<double> cartesian(LatticePoint p) {
  return {static_cast<double>(p.a) + 0.5 * static_cast<double>(p.b), std::sqrt(3.0) / 2 * static_cast<double>(p.b)};
}

// Four lattice points: concyclic by the floating fit, false if three are collinear.
inline bool float_concyclic(LatticePoint p, LatticePoint q, LatticePoint r, LatticePoint s) {
  const std::vector<std::vector<double>> pts{cartesian(p), cartesian(q), cartesian(r), cartesian(s)};
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<std::vector<double>> tri;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) tri.push_back(pts[i]);
    const double cross =
        (tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1]) - (tri[1][1] - tri[0][1]) * (tri[2][0] - tri[0][0]);
    if (std::abs(cross) < 1e-9) return false;
  }
  return float_cospherical(pts);
}

// Embeddability in R^d by Cayley-Menger conditions on every subset:
// (-1)^k cm_det >= 0 for all k-subsets, and cm_det = 0 for all
// (d+2)-subsets. Exponential; small n only.
inline bool cm_embeddable(const SqDistConfig& c, std::size_t d) {
  const std::size_t n = c.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Index> pts;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) pts.push_back(i);
    if (pts.size() < 2) continue;
    const Rational cm = cm_det_leibniz(pts, c);
    const int sign = pts.size() % 2 ? -cm.sign() : cm.sign();
    if (sign < 0) return false;
    if (pts.size() >= d + 2 && !cm.is_zero()) return false;
  }
  return true;
}

// Brute-force filter for the search: every n-subset of the region that
// passes the exact verifier.
inline std::vector<std::vector<LatticePoint>> brute_force_crescents(const std::vector<LatticePoint>& region,
                                                                    std::size_t n) {
  std::vector<std::vector<LatticePoint>> out;
  crescent::for_each_subset(region.size(), n, [&](std::span<const Index> sub) {
    std::vector<LatticePoint> pts;
    for (Index i : sub) pts.push_back(region[i]);
    if (!crescent::verify_crescent(crescent::to_exact_config(pts))) out.push_back(pts);
    return true;
  });
  return out;
}

}  // namespace oracle
