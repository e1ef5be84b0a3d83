#pragma once

// Unit triangular lattice in integer coordinates.
//
// LatticePoint{a, b} is a*u + b*v with u = (1, 0) and v = (1/2, sqrt(3)/2),
// so the squared length of (a, b) is a^2 + ab + b^2 (a Loeschian number).
// All predicates here are exact integer computations.

#include "crescent/exact_geometry.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace crescent {

struct LatticePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.a - q.a, p.b - q.b}; }
  friend LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.a + q.a, p.b + q.b}; }
};

// Centered hexagon {c + (a, b) : |a|, |b|, |a + b| <= radius}; 3r^2 + 3r + 1 points.
struct HexRegion {
  std::int64_t radius = 0;
  LatticePoint center{};
};

std::int64_t sq_norm(LatticePoint p);
std::int64_t sq_norm(LatticePoint p, LatticePoint q);

// Region points in lexicographic (a, b) order.
std::vector<LatticePoint> enumerate_region(const HexRegion& region);

bool in_region(const HexRegion& region, LatticePoint p);

// Smallest hexagon containing all points; ties on the center resolved to
// the lexicographically least center.
HexRegion bounding_hex(std::span<const LatticePoint> points);

bool collinear(LatticePoint p, LatticePoint q, LatticePoint r);

// Four points on a common circle. Returns false whenever three of them are
// collinear (or two coincide).
bool concyclic(LatticePoint p, LatticePoint q, LatticePoint r, LatticePoint s);

// Squared-distance configuration in dimension 2. Throws
// Error{CoincidentPoints} if two points coincide.
SqDistConfig to_exact_config(std::span<const LatticePoint> points);

// Converts (p * sqrt(3)/2, q/2) with p = q (mod 2) to lattice coordinates,
// using the basis u' = (0, 1), v' = (sqrt(3)/2, 1/2), which is congruent to
// the (u, v) basis above. Throws Error{InvalidArgument} on parity mismatch.
LatticePoint from_half_units(std::int64_t p, std::int64_t q);

// The eight-point planar crescent configuration with Cartesian coordinates
// (0,1), (sqrt3,0), (2sqrt3,0), (5sqrt3/2,5/2), (3sqrt3/2,9/2),
// (sqrt3/2,7/2), (3sqrt3/2,7/2), (sqrt3,2), converted by from_half_units.
std::vector<LatticePoint> figure1_lattice_points();

// The 12 isometries fixing the origin: index g < 6 is rotation by 60*g
// degrees, g >= 6 is the reflection (a, b) -> (b, a) followed by rotation
// g - 6.
inline constexpr std::size_t kPointGroupOrder = 12;
LatticePoint apply_point_group(std::size_t g, LatticePoint p);

}  // namespace crescent
