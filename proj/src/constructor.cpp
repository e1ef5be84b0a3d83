#include "crescent/constructor.hpp"

#include "crescent/error.hpp"

#include <string>

namespace crescent {

Rational delta_schedule(std::size_t k) {
  if (k == 0) return Rational(1);
  if (k % 2 == 1) return Rational(1, static_cast<std::int64_t>((k + 3) / 2));
  return Rational(static_cast<std::int64_t>(k / 2 + 1));
}

Rational apex_multiplier(std::size_t k) { return delta_schedule(k + 1); }

SqDistConfig base_config(const Rational& s, const Rational& t) {
  if (s.sign() <= 0 || t.sign() <= 0)
    throw Error(ErrorKind::InvalidArgument, "base side lengths must be positive");
  if (t == s) throw Error(ErrorKind::DegenerateTriangle, "equilateral base triangle");
  if (t >= Rational(4) * s) throw Error(ErrorKind::DegenerateTriangle, "t >= 4s violates the triangle inequality");
  const Rational upper[] = {s, s, t};
  return SqDistConfig::from_upper(3, upper, 2);
}

namespace {

bool occurs(const SqDistConfig& config, const Rational& value) {
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = i + 1; j < config.size(); ++j)
      if (config(i, j) == value) return true;
  return false;
}

SqDistConfig append_equidistant(const SqDistConfig& config, const Rational& value, std::size_t dim) {
  const std::size_t m = config.size();
  RationalMatrix out(m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = config(i, j);
  for (std::size_t i = 0; i < m; ++i) {
    out(i, m) = value;
    out(m, i) = value;
  }
  return SqDistConfig(std::move(out), dim);
}

SqDistConfig line_config() {
  const Rational upper[] = {Rational(1), Rational(4), Rational(1)};
  return SqDistConfig::from_upper(3, upper, 1);
}

// Empty when the step fails in a way the retry loop may absorb.
template <typename Make>
std::optional<SqDistConfig> attempt(Make&& make) {
  try {
    SqDistConfig c = make();
    if (verify_crescent(c)) return std::nullopt;
    return c;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DistanceCollision || e.kind() == ErrorKind::DegenerateSimplex ||
        e.kind() == ErrorKind::DegenerateTriangle)
      return std::nullopt;
    throw;
  }
}

}  // namespace

SqDistConfig apex_extend(const SqDistConfig& config, const ApexChoice& choice) {
  if (choice.delta.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "apex delta must be positive");
  const Rational value = circumradius_sq(config) + choice.delta;
  if (occurs(config, value))
    throw Error(ErrorKind::DistanceCollision, "apex distance " + value.to_string() + " already present");
  return append_equidistant(config, value, config.size());
}

SqDistConfig add_circumcenter(const SqDistConfig& config) {
  const Rational r2 = circumradius_sq(config);
  if (occurs(config, r2))
    throw Error(ErrorKind::DistanceCollision, "circumradius " + r2.to_string() + " already present");
  return append_equidistant(config, r2, config.size() - 1);
}

Construction construct_crescent(std::size_t n, const ConstructionParams& params) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3, got " + std::to_string(n));
  Construction out;
  if (n == 3) {
    out.config = line_config();
    out.trace.base_s = Rational(1);
    out.trace.base_t = Rational(4);
    return out;
  }

  const Rational s = params.base ? params.base->first : Rational(2);
  const Rational t0 = params.base ? params.base->second : Rational(3);
  if (params.base) base_config(s, t0);  // bad user input is an error, not a retry
  const std::size_t budget = params.retry_budget;
  const std::size_t apex_count = n - 4;
  ConstructionTrace& trace = out.trace;
  trace.base_s = s;
  trace.base_t = t0;

  // Only n = 4 retries the base: t0 first, then schedule values other than t0.
  std::size_t t_index = 0;
  auto next_t = [&]() -> bool {
    while (t_index < budget * 4) {
      const Rational t = delta_schedule(t_index++);
      if (t != t0 && t != s) {
        trace.base_t = t;
        return true;
      }
    }
    return false;
  };

  std::vector<SqDistConfig> stack;
  std::size_t base_attempts = 0;
  while (true) {
    if (auto c = attempt([&] { return base_config(s, trace.base_t); })) {
      stack.push_back(std::move(*c));
      break;
    }
    if (apex_count > 0 || ++base_attempts > budget || !next_t())
      throw Error(ErrorKind::RetryBudgetExhausted, "no valid base triangle for the given parameters");
    ++trace.retries;
  }

  std::vector<std::size_t> schedule_index(apex_count, 0);
  trace.apexes.assign(apex_count, ApexChoice{});

  // Runs apex i (0-based) from stack[i], advancing its schedule on failure.
  auto run_apex = [&](std::size_t i) {
    for (std::size_t tries = 0;; ++tries) {
      if (tries > budget)
        throw Error(ErrorKind::RetryBudgetExhausted, "apex step " + std::to_string(i) + " exceeded its retry budget");
      const ApexChoice choice{apex_multiplier(schedule_index[i]) * circumradius_sq(stack[i])};
      if (auto c = attempt([&] { return apex_extend(stack[i], choice); })) {
        trace.apexes[i] = choice;
        stack.push_back(std::move(*c));
        return;
      }
      ++schedule_index[i];
      ++trace.retries;
    }
  };

  for (std::size_t i = 0; i < apex_count; ++i) run_apex(i);

  for (std::size_t tries = 0;; ++tries) {
    if (tries > budget)
      throw Error(ErrorKind::RetryBudgetExhausted, "circumcenter step exceeded its retry budget");
    if (auto c = attempt([&] { return add_circumcenter(stack.back()); })) {
      out.config = std::move(*c);
      return out;
    }
    ++trace.retries;
    if (apex_count > 0) {
      stack.pop_back();
      ++schedule_index[apex_count - 1];
      run_apex(apex_count - 1);
    } else {
      std::optional<SqDistConfig> base;
      while (!base) {
        if (!next_t()) throw Error(ErrorKind::RetryBudgetExhausted, "no base triangle admits a circumcenter");
        base = attempt([&] { return base_config(s, trace.base_t); });
      }
      stack.assign(1, std::move(*base));
    }
  }
}

SqDistConfig replay(std::size_t n, const ConstructionTrace& trace) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  if (n == 3) return line_config();
  if (trace.apexes.size() != n - 4)
    throw Error(ErrorKind::InvalidArgument, "trace has " + std::to_string(trace.apexes.size()) +
                                                " apexes, expected " + std::to_string(n - 4));
  SqDistConfig c = base_config(trace.base_s, trace.base_t);
  for (const auto& a : trace.apexes) c = apex_extend(c, a);
  return add_circumcenter(c);
}

}  // namespace crescent
