#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ctxlab {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RationalVector = std::vector<Rational>;

// Accepts "p", "-p", "p/q". Throws Error(Syntax) otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational dot(const RationalVector& a, const RationalVector& b);

// Scales to integer entries with gcd 1. The zero vector is returned unchanged.
RationalVector primitive_integer_vector(const RationalVector& v);

}  // namespace ctxlab
