// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

// Exact integer and rational scalars, rational points, and the error type
// shared by every module.

#ifndef LATCAYLEY_ARITH_HPP_
#define LATCAYLEY_ARITH_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcayley {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of Q^N. Coordinates are always exact.
struct RationalPoint {
  std::vector<Rational> coords;

  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
  static RationalPoint zeros(std::size_t n) {
    return RationalPoint(std::vector<Rational>(n, Rational(0)));
  }
  static RationalPoint from_ints(std::span<const std::int64_t> v);
  static RationalPoint from_ints(std::initializer_list<long> v);

  std::size_t ambient_dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_integral() const;
  /// Integer coordinates; throws if a coordinate is fractional or exceeds int64.
  std::vector<std::int64_t> to_int64() const;
  std::string to_string() const;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.coords == b.coords;
  }
  friend std::strong_ordering operator<=>(const RationalPoint& a,
                                          const RationalPoint& b);
};

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator-(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator*(const Rational& s, const RationalPoint& a);

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// Divides `v` (and `offset`, when given) by their common gcd. Zero vectors are
/// left untouched.
void make_primitive(std::vector<Integer>& v);
void make_primitive(std::vector<Integer>& v, Integer& offset);

/// Scales a rational vector by the lcm of its denominators.
std::vector<Integer> clear_denominators(std::span<const Rational> v);

bool fits_int64(const Integer& x);
std::int64_t to_int64(const Integer& x);

std::string to_string(const Rational& q);
std::string to_string(std::span<const Integer> v);

}  // namespace latcayley

#endif  // LATCAYLEY_ARITH_HPP_
