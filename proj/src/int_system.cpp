// Copyright 2026 The latcayley Authors.
// SPDX-License-Identifier: Apache-2.0

#include "int_system.hpp"

#include <algorithm>
#include <type_traits>

namespace latcayley::detail {
namespace {

using i128 = __int128;

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

bool small(const Integer& x, int bits) { return mpz_sizeinbase(x.get_mpz_t(), 2) < std::size_t(bits); }

i128 to_i128(const Integer& x) { return static_cast<i128>(to_int64(x)); }

Integer to_integer(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : x;
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  Integer v = (hi << 64) + lo;
  return neg ? Integer(-v) : v;
}

// The system in local coordinates y (integer, inside [lo, hi]):
//   a_r·y <= b_r for every facet row r,
//   den_i divides R_i - g_i·y, and then x_{pivot i} = (R_i - g_i·y) / den_i.
template <typename T>
struct LocalSystem {
  std::size_t k = 0;
  std::vector<T> a, b;           // rows of length k
  std::vector<T> g, rhs, den;    // pivot rows of length k
  std::vector<T> lo, hi;
};

template <typename T>
std::int64_t narrow(const T& x) {
  if constexpr (std::is_same_v<T, Integer>) {
    return to_int64(x);
  } else {
    if (x > INT64_MAX || x < INT64_MIN) throw Error("lattice point exceeds 64-bit range");
    return static_cast<std::int64_t>(x);
  }
}

template <typename T>
void run(const LocalSystem<T>& s, const AffineChart& chart,
         std::vector<std::int64_t>& out) {
  const std::size_t k = s.k;
  const std::size_t rows = s.b.size();
  const std::size_t piv = s.rhs.size();
  const std::size_t n = chart.ambient_dim();
  std::vector<T> y(k);
  std::vector<std::int64_t> x(n);

  auto emit = [&]() {
    for (std::size_t i = 0; i < piv; ++i) {
      T v = s.rhs[i];
      for (std::size_t j = 0; j < k; ++j) v -= s.g[i * k + j] * y[j];
      if (v % s.den[i] != 0) return;
      x[chart.pivot_coords()[i]] = narrow(T(v / s.den[i]));
    }
    for (std::size_t j = 0; j < k; ++j) x[chart.free_coords()[j]] = narrow(y[j]);
    out.insert(out.end(), x.begin(), x.end());
  };

  if (k == 0) {
    for (std::size_t r = 0; r < rows; ++r)
      if (s.b[r] < 0) return;
    emit();
    return;
  }

  const std::size_t last = k - 1;
  for (std::size_t j = 0; j < last; ++j) y[j] = s.lo[j];
  while (true) {
    // Range of the innermost coordinate given the outer ones.
    T lo = s.lo[last], hi = s.hi[last];
    bool empty = false;
    for (std::size_t r = 0; r < rows && !empty; ++r) {
      T rest = s.b[r];
      for (std::size_t j = 0; j < last; ++j) rest -= s.a[r * k + j] * y[j];
      const T& c = s.a[r * k + last];
      if (c > 0) {
        T q = floor_div(rest, c);
        if (q < hi) hi = q;
      } else if (c < 0) {
        T q = ceil_div(rest, c);
        if (q > lo) lo = q;
      } else if (rest < 0) {
        empty = true;
      }
      if (lo > hi) empty = true;
    }
    if (!empty)
      for (y[last] = lo; y[last] <= hi; ++y[last]) emit();

    std::size_t j = last;
    while (j > 0) {
      --j;
      if (y[j] < s.hi[j]) {
        ++y[j];
        break;
      }
      y[j] = s.lo[j];
      if (j == 0) return;
    }
    if (last == 0) return;
  }
}

}  // namespace

void bounding_box(const DualDescription& d, std::vector<Integer>& lo,
                  std::vector<Integer>& hi) {
  lo.assign(d.ambient_dim, Integer(0));
  hi.assign(d.ambient_dim, Integer(0));
  if (d.vertices.empty()) throw Error("empty polytope");
  for (std::size_t j = 0; j < d.ambient_dim; ++j) {
    Rational mn = d.vertices.front()[j], mx = mn;
    for (const auto& v : d.vertices) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = floor_div(mn.get_num(), mn.get_den());
    hi[j] = ceil_div(mx.get_num(), mx.get_den());
  }
}

PointSet enumerate_lattice_points(std::size_t ambient_dim,
                                  std::span<const Hyperplane> equalities,
                                  std::span<const Inequality> facets,
                                  std::span<const Integer> lo,
                                  std::span<const Integer> hi, ContainMode mode) {
  auto chart = AffineChart::from_equalities(ambient_dim, equalities);
  if (!chart) return PointSet(ambient_dim);
  const std::size_t k = chart->local_dim();

  LocalSystem<Integer> big;
  big.k = k;
  for (const auto& f : facets) {
    Inequality r = chart->restrict(f.normal, f.offset);
    big.a.insert(big.a.end(), r.normal.begin(), r.normal.end());
    big.b.push_back(mode == ContainMode::RelativeInterior ? Integer(r.offset - 1)
                                                          : r.offset);
  }
  for (std::size_t i = 0; i < chart->pivot_coords().size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < k; ++j) row.push_back(chart->coef(i, j));
    row.push_back(chart->rhs(i));
    Integer den = 1;
    for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < k; ++j)
      big.g.push_back(Integer(row[j] * den));
    big.rhs.push_back(Integer(row.back() * den));
    big.den.push_back(den);
  }
  Integer volume = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t c = chart->free_coords()[j];
    big.lo.push_back(lo[c]);
    big.hi.push_back(hi[c]);
    if (hi[c] < lo[c]) return PointSet(ambient_dim);
    if (j + 1 < k) volume *= hi[c] - lo[c] + 1;
  }
  if (volume > Integer(2000000000))
    throw Error("lattice-point enumeration box too large (" + volume.get_str() +
                " outer points)");

  std::vector<std::int64_t> out;
  bool fast = k <= 32;
  auto check = [&](const std::vector<Integer>& v) {
    for (const auto& x : v) fast = fast && small(x, 60);
  };
  check(big.a), check(big.b), check(big.g), check(big.rhs), check(big.den);
  check(big.lo), check(big.hi);
  if (fast) {
    LocalSystem<i128> s;
    s.k = k;
    auto conv = [](const std::vector<Integer>& v) {
      std::vector<i128> w;
      w.reserve(v.size());
      for (const auto& x : v) w.push_back(to_i128(x));
      return w;
    };
    s.a = conv(big.a), s.b = conv(big.b), s.g = conv(big.g);
    s.rhs = conv(big.rhs), s.den = conv(big.den);
    s.lo = conv(big.lo), s.hi = conv(big.hi);
    run(s, *chart, out);
  } else {
    run(big, *chart, out);
  }
  return PointSet::from_flat(ambient_dim, std::move(out));
}

ScaledMembership::ScaledMembership(const DualDescription& p, long scale,
                                   ContainMode mode)
    : n_(p.ambient_dim), eq_count_(p.equalities.size()) {
  const Integer s = scale;
  auto add = [&](const std::vector<Integer>& normal, Integer offset) {
    for (const auto& x : normal) {
      a_.push_back(x);
      fast_ = fast_ && small(x, 31);
    }
    fast_ = fast_ && small(offset, 62);
    b_.push_back(std::move(offset));
  };
  for (const auto& h : p.equalities) add(h.normal, s * h.offset);
  for (const auto& f : p.facets)
    add(f.normal, mode == ContainMode::RelativeInterior ? Integer(s * f.offset - 1)
                                                        : Integer(s * f.offset));
  if (fast_) {
    for (const auto& x : a_) a64_.push_back(to_int64(x));
    for (const auto& x : b_) b128_.push_back(to_i128(x));
  }
}

template <typename Row>
bool ScaledMembership::check(const Row& value_of) const {
  const std::size_t rows = b_.size();
  if (fast_) {
    for (std::size_t r = 0; r < rows; ++r) {
      i128 v = 0;
      const std::int64_t* a = a64_.data() + r * n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (a[j]) v += static_cast<i128>(a[j]) * value_of(j);
      if (r < eq_count_ ? v != b128_[r] : v > b128_[r]) return false;
    }
    return true;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    Integer v = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      v += a_[r * n_ + j] * to_integer(value_of(j));
    }
    if (r < eq_count_ ? v != b_[r] : v > b_[r]) return false;
  }
  return true;
}

bool ScaledMembership::contains(std::span<const std::int64_t> x) const {
  return check([&](std::size_t j) { return static_cast<i128>(x[j]); });
}

bool ScaledMembership::contains_difference(std::span<const std::int64_t> x,
                                           std::span<const std::int64_t> y) const {
  return check([&](std::size_t j) {
    return static_cast<i128>(x[j]) - static_cast<i128>(y[j]);
  });
}

}  // namespace latcayley::detail
