#include "ctxlab/rational.hpp"

#include "ctxlab/error.hpp"

#include <cctype>

namespace ctxlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::DuplicateContext: return "DuplicateContext";
    case ErrorKind::DuplicateAtomInContext: return "DuplicateAtomInContext";
    case ErrorKind::PasteInvalid: return "PasteInvalid";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorKind::WeightsNotNormalized: return "WeightsNotNormalized";
    case ErrorKind::MissingAtom: return "MissingAtom";
    case ErrorKind::MissingCoordinate: return "MissingCoordinate";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::NonUnitState: return "NonUnitState";
    case ErrorKind::NonUnitVector: return "NonUnitVector";
    case ErrorKind::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorKind::NonOrthonormalContext: return "NonOrthonormalContext";
    case ErrorKind::UnknownContext: return "UnknownContext";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw Error(ErrorKind::Syntax, "not a rational number: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Syntax, "not a rational number: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::Syntax, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return value.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

RationalVector primitive_integer_vector(const RationalVector& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) {
    lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(x)));
  }
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    Integer n = boost::multiprecision::numerator(x) * (lcm_den / boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, Integer(abs(n)));
    ints.push_back(n);
  }
  if (g == 0) return v;
  RationalVector out;
  out.reserve(v.size());
  for (auto& n : ints) out.emplace_back(n / g);
  return out;
}

}  // namespace ctxlab
