#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace pathfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Accepts "p/q", integers, and finite decimals ("0.125"); the value is exact.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational & q);

/// The exact dyadic value of a finite double.
Rational rational_from_double(double value);

double to_double(const Rational & q);

BigInt floor(const Rational & q);
BigInt ceil(const Rational & q);

/// floor(q * m) and ceil(q * m), clamped to the int64 range.
std::int64_t floor_mul(const Rational & q, std::int64_t m);
std::int64_t ceil_mul(const Rational & q, std::int64_t m);

Rational pow(const Rational & q, unsigned exponent);

/// count <= q * m, exactly.
bool at_most(std::int64_t count, const Rational & q, std::int64_t m);
/// count >= q * m, exactly.
bool at_least(std::int64_t count, const Rational & q, std::int64_t m);

} // namespace pathfree
