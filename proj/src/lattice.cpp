#include "crescent/lattice.hpp"

#include "crescent/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace crescent {

std::int64_t sq_norm(LatticePoint p) { return p.a * p.a + p.a * p.b + p.b * p.b; }

std::int64_t sq_norm(LatticePoint p, LatticePoint q) { return sq_norm(p - q); }

bool in_region(const HexRegion& region, LatticePoint p) {
  const LatticePoint d = p - region.center;
  const std::int64_t r = region.radius;
  return std::abs(d.a) <= r && std::abs(d.b) <= r && std::abs(d.a + d.b) <= r;
}

std::vector<LatticePoint> enumerate_region(const HexRegion& region) {
  if (region.radius < 0) throw Error(ErrorKind::InvalidArgument, "negative hex radius");
  const std::int64_t r = region.radius;
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(3 * r * r + 3 * r + 1));
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = std::max(-r, -r - a); b <= std::min(r, r - a); ++b)
      out.push_back(LatticePoint{a, b} + region.center);
  return out;
}

HexRegion bounding_hex(std::span<const LatticePoint> points) {
  if (points.empty()) return {};
  std::int64_t amin = std::numeric_limits<std::int64_t>::max(), amax = std::numeric_limits<std::int64_t>::min();
  std::int64_t bmin = amin, bmax = amax, smin = amin, smax = amax;
  for (const auto& p : points) {
    amin = std::min(amin, p.a), amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b), bmax = std::max(bmax, p.b);
    smin = std::min(smin, p.a + p.b), smax = std::max(smax, p.a + p.b);
  }
  // Grow r until some center satisfies all three slab constraints.
  for (std::int64_t r = 0;; ++r) {
    for (std::int64_t ca = amax - r; ca <= amin + r; ++ca)
      for (std::int64_t cb = bmax - r; cb <= bmin + r; ++cb)
        if (smax - r <= ca + cb && ca + cb <= smin + r) return HexRegion{r, {ca, cb}};
  }
}

namespace {

std::int64_t cross(LatticePoint u, LatticePoint v) { return u.a * v.b - u.b * v.a; }

}  // namespace

bool collinear(LatticePoint p, LatticePoint q, LatticePoint r) { return cross(q - p, r - p) == 0; }

bool concyclic(LatticePoint p, LatticePoint q, LatticePoint r, LatticePoint s) {
  if (collinear(p, q, r) || collinear(p, q, s) || collinear(p, r, s) || collinear(q, r, s)) return false;
  // Lifted in-circle determinant with rows (x, y, x^2 + y^2) taken relative
  // to p. With x = a + b/2, y = (sqrt3/2) b the x and y columns reduce to
  // (a, b) up to the nonzero factor sqrt3/2, and x^2 + y^2 = sq_norm.
  const LatticePoint u = q - p, v = r - p, w = s - p;
  const __int128 nu = sq_norm(u), nv = sq_norm(v), nw = sq_norm(w);
  const __int128 det = u.a * (static_cast<__int128>(v.b) * nw - nv * w.b) -
                       u.b * (static_cast<__int128>(v.a) * nw - nv * w.a) +
                       nu * (static_cast<__int128>(v.a) * w.b - static_cast<__int128>(v.b) * w.a);
  return det == 0;
}

SqDistConfig to_exact_config(std::span<const LatticePoint> points) {
  const std::size_t n = points.size();
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t d = sq_norm(points[i], points[j]);
      if (d == 0)
        throw Error(ErrorKind::CoincidentPoints,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      m(i, j) = Rational(d);
      m(j, i) = Rational(d);
    }
  return SqDistConfig(std::move(m), 2);
}

LatticePoint from_half_units(std::int64_t p, std::int64_t q) {
  if ((p - q) % 2 != 0) throw Error(ErrorKind::InvalidArgument, "half-unit coordinates must share parity");
  return {(q - p) / 2, p};
}

std::vector<LatticePoint> figure1_lattice_points() {
  // (p, q) with the point at (p * sqrt3/2, q/2).
  constexpr std::array<std::array<std::int64_t, 2>, 8> half_units{{
      {0, 2}, {2, 0}, {4, 0}, {5, 5}, {3, 9}, {1, 7}, {3, 7}, {2, 4},
  }};
  std::vector<LatticePoint> out;
  out.reserve(half_units.size());
  for (const auto& [p, q] : half_units) out.push_back(from_half_units(p, q));
  return out;
}

LatticePoint apply_point_group(std::size_t g, LatticePoint p) {
  if (g >= kPointGroupOrder) throw Error(ErrorKind::InvalidArgument, "point group index out of range");
  if (g >= 6) {
    p = {p.b, p.a};
    g -= 6;
  }
  for (std::size_t k = 0; k < g; ++k) p = {-p.b, p.a + p.b};
  return p;
}

}  // namespace crescent
