// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "latcayley/arith.hpp"

#include <limits>
#include <sstream>

namespace latcayley {

RationalPoint RationalPoint::from_ints(std::span<const std::int64_t> v) {
  RationalPoint p;
  p.coords.reserve(v.size());
  for (auto x : v) p.coords.emplace_back(Integer(static_cast<long>(x)));
  return p;
}

RationalPoint RationalPoint::from_ints(std::initializer_list<long> v) {
  RationalPoint p;
  for (auto x : v) p.coords.emplace_back(x);
  return p;
}

bool RationalPoint::is_integral() const {
  for (const auto& c : coords)
    if (c.get_den() != 1) return false;
  return true;
}

std::vector<std::int64_t> RationalPoint::to_int64() const {
  std::vector<std::int64_t> out;
  out.reserve(coords.size());
  for (const auto& c : coords) {
    if (c.get_den() != 1) throw Error("non-integer coordinate " + latcayley::to_string(c));
    out.push_back(latcayley::to_int64(c.get_num()));
  }
  return out;
}

std::string RationalPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += latcayley::to_string(coords[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const RationalPoint& a,
                                 const RationalPoint& b) {
  const std::size_t n = std::min(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.coords.size() <=> b.coords.size();
}

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("dimension mismatch");
  RationalPoint r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("dimension mismatch");
  RationalPoint r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

RationalPoint operator*(const Rational& s, const RationalPoint& a) {
  RationalPoint r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void make_primitive(std::vector<Integer>& v, Integer& offset) {
  Integer g = abs(offset);
  for (const auto& x : v) {
    if (g == 1) return;
    g = gcd(g, x);
  }
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(offset.get_mpz_t(), offset.get_mpz_t(), g.get_mpz_t());
}

std::vector<Integer> clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

bool fits_int64(const Integer& x) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return x >= lo && x <= hi;
}

std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw Error("integer " + x.get_str() + " exceeds 64 bits");
  if (x.fits_slong_p()) return x.get_si();
  return std::stoll(x.get_str());
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace latcayley
