#include "gkm/rational.hpp"

#include <cctype>
#include <utility>

#include "gkm/error.hpp"

namespace gkm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::ScopeError: return "ScopeError";
    case ErrorKind::NotIndexIncreasing: return "NotIndexIncreasing";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::InfeasibleInstance: return "InfeasibleInstance";
    case ErrorKind::NotAClass: return "NotAClass";
    case ErrorKind::DegreeError: return "DegreeError";
    case ErrorKind::NonConstant: return "NonConstant";
    case ErrorKind::NonZero: return "NonZero";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::AmbiguousBelowNeighbor: return "AmbiguousBelowNeighbor";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::Unclassifiable: return "Unclassifiable";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::UnknownInstance: return "UnknownInstance";
  }
  return "Unknown";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(text, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(ErrorKind::ParseError, "malformed denominator in '" + std::string(text) + "'");
  }
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace gkm
