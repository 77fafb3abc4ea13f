#pragma once

// Brute-force enumeration of real roots inside a coefficient box, and the
// coverage audit that measures how the six strings tile the affine slice.
//
// A coefficient vector (q,r,l,m,n) is a real root iff
//   l^2 - l m - l r + m^2 - m n + n^2 - n r + q^2 - q r + r^2 = 1.
// The enumerator scans (q,r,l,m) and solves the quadratic in n, so the box
// walk is quartic, not quintic, in the bound.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootcal/lattice.hpp"
#include "rootcal/strings.hpp"

namespace rootcal {

// Full enumeration is quartic in the bound; these caps keep a call bounded
// near a second.
inline constexpr std::int64_t kEnumerateFullCap = 32;
inline constexpr std::int64_t kEnumerateAffineCap = 128;

namespace detail {

// Largest s with s*s <= v, exact.
inline std::int64_t isqrt64(std::int64_t v) {
  if (v < 0) throw std::domain_error("isqrt64: negative argument");
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

}  // namespace detail

// All real roots with every coefficient in [-bound, bound], in lexicographic
// (q,r,l,m,n) order.  affine_only restricts to q = 0.
inline std::vector<RootVector> enumerate_real_roots(std::int64_t bound, bool affine_only = false) {
  if (bound < 0) throw std::domain_error("enumerate_real_roots: negative bound");
  const std::int64_t cap = affine_only ? kEnumerateAffineCap : kEnumerateFullCap;
  if (bound > cap) {
    throw std::domain_error("enumerate_real_roots: bound " + std::to_string(bound) +
                            " exceeds cap " + std::to_string(cap) +
                            (affine_only ? " (affine)" : " (full)"));
  }
  std::vector<RootVector> out;
  const std::int64_t qlo = affine_only ? 0 : -bound;
  const std::int64_t qhi = affine_only ? 0 : bound;
  for (std::int64_t q = qlo; q <= qhi; ++q) {
    for (std::int64_t r = -bound; r <= bound; ++r) {
      for (std::int64_t l = -bound; l <= bound; ++l) {
        for (std::int64_t m = -bound; m <= bound; ++m) {
          // n^2 - (m + r) n + (C - 1) = 0 with the n-free part C.
          const std::int64_t c0 = l * l - l * m - l * r + m * m + q * q - q * r + r * r;
          const std::int64_t b = m + r;
          const std::int64_t disc = b * b - 4 * (c0 - 1);
          if (disc < 0) continue;
          const std::int64_t s = detail::isqrt64(disc);
          if (s * s != disc) continue;
          for (int pm : {-1, +1}) {
            if (pm < 0 && s == 0) continue;
            const std::int64_t num = b + pm * s;
            if (num % 2 != 0) continue;
            const std::int64_t n = num / 2;
            if (n < -bound || n > bound) continue;
            out.push_back(RootVector(q, r, l, m, n));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CoverageReport {
  std::int64_t bound = 0;
  long total = 0;          // affine real roots in the box
  long covered_once = 0;   // exactly one (sign, string, k) matches
  long covered_multi = 0;  // more than one matches
  long uncovered = 0;      // no string hits it
  std::vector<RootVector> uncovered_list;
  std::vector<std::pair<RootVector, long>> multi_list;

  bool exact_cover() const { return uncovered == 0 && covered_multi == 0; }
};

// Runs identify_all over every affine real root in the box.  An exact cover
// means the six signed strings partition the affine real roots.
inline CoverageReport coverage_report(std::int64_t bound) {
  CoverageReport rep;
  rep.bound = bound;
  for (const RootVector& rv : enumerate_real_roots(bound, /*affine_only=*/true)) {
    ++rep.total;
    const auto hits = identify_all(rv);
    if (hits.empty()) {
      ++rep.uncovered;
      rep.uncovered_list.push_back(rv);
    } else if (hits.size() == 1) {
      ++rep.covered_once;
    } else {
      ++rep.covered_multi;
      rep.multi_list.emplace_back(rv, static_cast<long>(hits.size()));
    }
  }
  return rep;
}

}  // namespace rootcal
