#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tropadic {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Lattice vectors (elements of M or N) and exponent vectors.
using IntVec = std::vector<std::int64_t>;
/// Points of N_Q.
using RatVec = std::vector<Rational>;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Decimal and exponent notation are rejected.
Rational parse_rational(std::string_view text);

Rational dot(const IntVec& u, const RatVec& v);
Rational dot(const RatVec& u, const RatVec& v);
std::int64_t dot(const IntVec& u, const IntVec& v);

RatVec to_rational(const IntVec& v);

/// Checked narrowing; throws Error(Overflow).
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64(const Rational& q);

/// Smallest positive rescaling of v with coprime integer entries.
/// The zero vector maps to the zero vector.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

Rational floor(const Rational& q);

/// Least common multiple of the denominators of the entries.
Integer common_denominator(const RatVec& v);

}  // namespace tropadic
