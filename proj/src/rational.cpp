#include "crescent/rational.hpp"

#include "crescent/error.hpp"

#include <cctype>

namespace crescent {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateIndex: return "DuplicateIndex";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::PrerequisiteViolated: return "PrerequisiteViolated";
    case ErrorKind::DistanceCollision: return "DistanceCollision";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::RetryBudgetExhausted: return "RetryBudgetExhausted";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::RegionTooSmall: return "RegionTooSmall";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(mpq_class(p, q));
}

std::string Rational::to_string() const {
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace crescent
