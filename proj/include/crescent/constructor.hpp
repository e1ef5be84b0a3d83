#pragma once

// Crescent configurations in R^(n-2) built by repeated apex extension.
//
// Start from an isosceles, non-equilateral triangle (squared sides s, s, t).
// Each apex step adds a point on the line through the circumcenter
// perpendicular to the current affine span, at squared distance
// s' = R^2 + delta from every existing point, delta a multiple of R^2; the new value occurs m times
// for an m-point configuration. The final step adds the circumcenter of the
// (n-1)-point simplex, whose squared distance R^2 to all of them occurs n-1
// times. Each step is re-verified exactly; failures retry the most recent
// free parameter along a fixed schedule.

#include "crescent/exact_geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace crescent {

struct ApexChoice {
  Rational delta;  // > 0; new squared distance is circumradius_sq + delta
  friend bool operator==(const ApexChoice&, const ApexChoice&) = default;
};

struct ConstructionTrace {
  Rational base_s;
  Rational base_t;
  std::vector<ApexChoice> apexes;
  std::size_t retries = 0;
  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

// k-th value (k >= 0) of the schedule 1, 1/2, 2, 1/3, 3, 1/4, 4, ...
Rational delta_schedule(std::size_t k);

// Apex k-th try uses delta = apex_multiplier(k) * R^2 of the current simplex,
// multipliers 1/2, 2, 1/3, 3, ... (the schedule without 1). Scaling by R^2
// keeps the new circumradius R^2 (1 + m)^2 / (4m) a fixed multiple of the old
// one, so entry sizes grow linearly in n; an absolute delta squares them at
// every step. m = 1 is skipped: it puts the new circumcenter in the old
// hyperplane, which no later retry can undo.
Rational apex_multiplier(std::size_t k);

// Triangle with squared sides (s, s, t): points 0-1 and 0-2 at s, 1-2 at t.
// Throws Error{DegenerateTriangle} if t = s or t >= 4s, InvalidArgument if
// s or t is not positive.
SqDistConfig base_config(const Rational& s, const Rational& t);

// Throws Error{DegenerateSimplex} if the input is affinely dependent,
// Error{DistanceCollision} if the new squared distance already occurs,
// Error{InvalidArgument} if delta <= 0.
SqDistConfig apex_extend(const SqDistConfig& config, const ApexChoice& choice);

// Throws Error{DegenerateSimplex} or Error{DistanceCollision}.
SqDistConfig add_circumcenter(const SqDistConfig& config);

struct ConstructionParams {
  // Default (2, 3): acute, so no circumcenter ever lands on a triangle edge.
  // A right base (t = 2s) puts it on the hypotenuse and every later
  // circumcenter on a common hyperplane with the last apex; no delta helps.
  std::optional<std::pair<Rational, Rational>> base;
  std::size_t retry_budget = 64;                      // per step
};

struct Construction {
  SqDistConfig config;
  ConstructionTrace trace;
};

// Throws Error{InvalidArgument} for n < 3, Error{RetryBudgetExhausted}.
Construction construct_crescent(std::size_t n, const ConstructionParams& params = {});

// Rebuilds the configuration a trace describes, without retries.
SqDistConfig replay(std::size_t n, const ConstructionTrace& trace);

}  // namespace crescent
