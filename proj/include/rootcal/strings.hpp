#pragma once

// The six orbit strings gamma_i(k) that tile the affine real roots, the
// identification map back from coefficients, and the closure table for the
// four affine generators.
//
// With s the affine Coxeter element:
//   gamma_0 = s^k a0,  gamma_1 = s^k a1,  gamma_2 = s^k a2,  gamma_3 = s^k a3,
//   gamma_4 = s2 s^k a1,  gamma_5 = s2 s^k a3.
// Every member is a real root, and {+-gamma_i(k)} covers each affine real
// root exactly once (coverage_report measures this).

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootcal/lattice.hpp"
#include "rootcal/numeric.hpp"
#include "rootcal/weyl.hpp"

namespace rootcal {

inline constexpr int kStringCount = 6;

inline void check_string_index(int i) {
  if (i < 0 || i >= kStringCount) {
    throw std::out_of_range("string index " + std::to_string(i) + " outside [0,5]");
  }
}

// (1 + m (-1)^k + 2 n k) / 2 for signs m, n; always an integer.
inline Int parity_coefficient(int m_sign, int n_sign, const Int& k) {
  const int par = (k % 2) == 0 ? 1 : -1;
  const Int num = 1 + Int(m_sign) * par + 2 * Int(n_sign) * k;
  return num / 2;
}

inline RootVector gamma(int i, const Int& k) {
  check_string_index(i);
  auto p = [&](int ms, int ns) { return parity_coefficient(ms, ns, k); };
  switch (i) {
    case 0: return RootVector(0, p(+1, +1), k, p(-1, +1), k);
    case 1: return RootVector(0, -k, p(+1, -1), -k, p(-1, -1));
    case 2: return RootVector(0, p(-1, +1), k, p(+1, +1), k);
    case 3: return RootVector(0, -k, p(-1, -1), -k, p(+1, -1));
    case 4: return RootVector(0, -k, p(+1, -1), 1 - k, p(-1, -1));
    default: return RootVector(0, -k, p(-1, -1), 1 - k, p(+1, -1));
  }
}

struct SignedString {
  int sign = +1;  // +1 or -1
  int index = 0;  // 0..5
  Int k = 0;

  friend bool operator==(const SignedString& a, const SignedString& b) {
    return a.sign == b.sign && a.index == b.index && a.k == b.k;
  }
  friend bool operator!=(const SignedString& a, const SignedString& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    os << (sign < 0 ? '-' : '+') << "gamma_" << index << '(' << k << ')';
    return os.str();
  }
};

inline RootVector realize(const SignedString& s) {
  RootVector rv = gamma(s.index, s.k);
  if (s.sign < 0) rv = -rv;
  return rv;
}

// All (sign, string, k) whose member equals rv.  The candidate k is pinned
// by a linear slot (the a1 coefficient for strings 0 and 2, minus the a0
// coefficient otherwise), so the search is finite and complete.
inline std::vector<SignedString> identify_all(const RootVector& rv) {
  std::vector<SignedString> out;
  if (rv.q() != 0) return out;
  for (int sign : {+1, -1}) {
    for (int i = 0; i < kStringCount; ++i) {
      const Int k = (i == 0 || i == 2) ? Int(sign) * rv.l() : Int(-sign) * rv.r();
      const SignedString cand{sign, i, k};
      if (realize(cand) == rv) out.push_back(cand);
    }
  }
  return out;
}

// First match in (sign +, then -, index ascending) order; empty when rv is
// not on any string.  Coverage scans separately check the match is unique.
inline std::optional<SignedString> identify(const RootVector& rv) {
  auto all = identify_all(rv);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// Image of s_node on a string member, re-identified as a string member.
inline SignedString reflect_string(int node, const SignedString& s) {
  const RootVector rv = reflect_coeff(node, realize(s));
  auto hit = identify(rv);
  if (!hit) {
    throw std::domain_error("reflect_string: s_" + std::to_string(node) + " maps " + s.str() +
                            " off the string family");
  }
  return *hit;
}

// One closure-table entry: s_node gamma_j(K) = sign gamma_index(k_scale K + k_offset),
// valid on one parity class of K.
struct StringReflection {
  int sign;
  int index;
  int k_scale;
  int k_offset;

  SignedString applied_to(const Int& k) const { return {sign, index, k_scale * k + Int(k_offset)}; }
};

// Transcribed closure table, indexed [string j][node 0..3][K odd].
// closure_check verifies it against reflect_string over a K window.
inline const StringReflection& table1(int node, int string_index, bool odd) {
  check_string_index(string_index);
  if (node < 0 || node > 3) throw std::out_of_range("table1: node outside [0,3]");
  static const StringReflection t[kStringCount][4][2] = {
      // gamma_0
      {{{-1, 0, -1, 0}, {+1, 0, +1, 0}},
       {{-1, 4, +1, +1}, {+1, 5, -1, 0}},
       {{+1, 0, +1, 0}, {-1, 0, -1, 0}},
       {{-1, 5, +1, +1}, {+1, 4, -1, 0}}},
      // gamma_1
      {{{-1, 4, -1, +1}, {-1, 4, -1, +1}},
       {{-1, 1, -1, 0}, {+1, 1, +1, 0}},
       {{+1, 4, +1, 0}, {+1, 4, +1, 0}},
       {{+1, 1, +1, 0}, {-1, 1, -1, 0}}},
      // gamma_2
      {{{+1, 2, +1, 0}, {-1, 2, -1, 0}},
       {{+1, 4, -1, 0}, {-1, 5, +1, +1}},
       {{-1, 2, -1, 0}, {+1, 2, +1, 0}},
       {{+1, 5, -1, 0}, {-1, 4, +1, +1}}},
      // gamma_3
      {{{-1, 5, -1, +1}, {-1, 5, -1, +1}},
       {{+1, 3, +1, 0}, {-1, 3, -1, 0}},
       {{+1, 5, +1, 0}, {+1, 5, +1, 0}},
       {{-1, 3, -1, 0}, {+1, 3, +1, 0}}},
      // gamma_4
      {{{-1, 1, -1, +1}, {-1, 1, -1, +1}},
       {{+1, 2, -1, 0}, {-1, 0, +1, -1}},
       {{+1, 1, +1, 0}, {+1, 1, +1, 0}},
       {{-1, 2, +1, -1}, {+1, 0, -1, 0}}},
      // gamma_5
      {{{-1, 3, -1, +1}, {-1, 3, -1, +1}},
       {{-1, 2, +1, -1}, {+1, 0, -1, 0}},
       {{+1, 3, +1, 0}, {+1, 3, +1, 0}},
       {{+1, 2, -1, 0}, {-1, 0, +1, -1}}}};
  return t[string_index][node][odd ? 1 : 0];
}

struct ClosureFailure {
  int node = 0;
  int string_index = 0;
  Int k = 0;
  std::string detail;
};

struct ClosureReport {
  long cases = 0;
  std::vector<ClosureFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Checks every table entry for string arguments K in [kmin, kmax]: the
// reflected-and-identified member must equal the tabulated image.
inline ClosureReport closure_check(const Int& kmin, const Int& kmax) {
  ClosureReport rep;
  for (int node = 0; node <= 3; ++node) {
    for (int j = 0; j < kStringCount; ++j) {
      for (Int k = kmin; k <= kmax; ++k) {
        ++rep.cases;
        const bool odd = (k % 2) != 0;
        const SignedString want = table1(node, j, odd).applied_to(k);
        std::string problem;
        try {
          const SignedString got = reflect_string(node, SignedString{+1, j, k});
          if (got != want) problem = "got " + got.str() + ", table says " + want.str();
        } catch (const std::domain_error& e) {
          problem = e.what();
        }
        if (!problem.empty()) rep.failures.push_back({node, j, k, problem});
      }
    }
  }
  return rep;
}

}  // namespace rootcal
