#pragma once

// The trigonometric Calogero potential attached to the affine real roots,
// in three routes that must agree:
//   closed      12 trig terms over the coordinate differences,
//   direct      per-string lattice sums truncated at |n| <= N,
//   enumerated  a sum over enumerated real roots in a coefficient box.
// Plus the Weyl action on particle coordinates, the induced permutation of
// the 12 trig terms, analytic gradients, and the decoupling limit
// q6 -> infinity.
//
// Coordinates are x = (q1,...,q6) paired with roots through the same
// Lorentzian form as the lattice.  Only q1..q4 differences and q6 enter the
// potential; q5 is cyclic.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "rootcal/enumerate.hpp"
#include "rootcal/lattice.hpp"
#include "rootcal/numeric.hpp"
#include "rootcal/strings.hpp"
#include "rootcal/weyl.hpp"

namespace rootcal {

// |sin| or |cos| below this at a would-be pole aborts the evaluation.
inline constexpr double kTrigPoleThreshold = 1e-13;

struct PotentialParams {
  double g = 1.0;
  // With both_signs the sum runs over all roots instead of one per +- pair,
  // doubling every route (and the measured decoupling prefactor).
  bool both_signs = false;

  double sign_factor() const { return both_signs ? 2.0 : 1.0; }
};

// Free kinetic form matching the Lorentzian pairing: T = x.x / 2.
template <class T>
T kinetic(const Coord6<T>& v) {
  return inner6(v, v) / T(2);
}

namespace detail {

// Deterministic fixed-tree summation: halve until blocks of <= 32, then
// accumulate left to right.  Order of `terms` is part of the contract.
inline double pairwise_sum(const std::vector<double>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 32) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += terms[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& terms) {
  return pairwise_sum(terms, 0, terms.size());
}

}  // namespace detail

// sum_{j in Z} 1/(A + B j)^2 = pi^2 / (B^2 sin^2(pi A / B)).
inline double inverse_square_sum(double a, double b) {
  if (b == 0.0) throw std::domain_error("inverse_square_sum: zero step");
  const double s = std::sin(std::numbers::pi * a / b);
  if (std::abs(s) < kTrigPoleThreshold) {
    throw singularity_error("inverse_square_sum: argument on a lattice point");
  }
  const double pi = std::numbers::pi;
  return pi * pi / (b * b * s * s);
}

// One parity class of a string: members embed as base + t * step, t in Z.
struct ParityLine {
  Coord6d base{};
  Coord6d step{};
};

struct StringForm {
  ParityLine even;  // n = 2t
  ParityLine odd;   // n = 2t + 1
};

inline Coord6d embed_double(const RootVector& rv) {
  const Vec6 v = embed(rv);
  Coord6d out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = to_double(v[i]);
  return out;
}

inline const std::array<StringForm, kStringCount>& string_forms() {
  static const std::array<StringForm, kStringCount> forms = [] {
    std::array<StringForm, kStringCount> f{};
    for (int i = 0; i < kStringCount; ++i) {
      const Coord6d g0 = embed_double(gamma(i, 0));
      const Coord6d g1 = embed_double(gamma(i, 1));
      const Coord6d g2 = embed_double(gamma(i, 2));
      const Coord6d g3 = embed_double(gamma(i, 3));
      for (std::size_t j = 0; j < 6; ++j) {
        f[i].even.base[j] = g0[j];
        f[i].even.step[j] = g2[j] - g0[j];
        f[i].odd.base[j] = g1[j];
        f[i].odd.step[j] = g3[j] - g1[j];
      }
    }
    return f;
  }();
  return forms;
}

// g sum_{n in Z} 1/(gamma_i(n).x)^2, via one closed even and one closed odd
// sub-sum (both linear in n with step +-2 q6).
inline double string_potential_closed(int i, const Coord6d& x,
                                      const PotentialParams& params = {}) {
  check_string_index(i);
  const StringForm& f = string_forms()[i];
  double total = 0.0;
  for (const ParityLine* line : {&f.even, &f.odd}) {
    const double a = inner6(line->base, x);
    const double b = inner6(line->step, x);
    total += inverse_square_sum(a, b);
  }
  return params.sign_factor() * params.g * total;
}

// g sum_{n=-N..N} 1/(gamma_i(n).x)^2, term order fixed by ascending n.
inline double string_potential_direct(int i, const Coord6d& x, const PotentialParams& params,
                                      std::int64_t trunc) {
  check_string_index(i);
  if (trunc < 0) throw std::domain_error("string_potential_direct: negative truncation");
  const StringForm& f = string_forms()[i];
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(2 * trunc + 1));
  for (std::int64_t n = -trunc; n <= trunc; ++n) {
    const std::int64_t p = ((n % 2) + 2) % 2;
    const std::int64_t t = (n - p) / 2;
    const ParityLine& line = p == 0 ? f.even : f.odd;
    const double a = inner6(line.base, x);
    const double b = inner6(line.step, x);
    const double d = a + b * static_cast<double>(t);
    if (std::abs(d) < kTrigPoleThreshold) {
      throw singularity_error("string_potential_direct: vanishing pairing on string " +
                              std::to_string(i) + " at n=" + std::to_string(n));
    }
    terms.push_back(1.0 / (d * d));
  }
  return params.sign_factor() * params.g * detail::pairwise_sum(terms);
}

// ---- the 12 trig terms ----------------------------------------------------

// Slot order: s12 s13 s14 s23 s24 s34 c12 c13 c14 c23 c24 c34.
inline constexpr int kSlotCount = 12;
inline constexpr int kSlotPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline std::string slot_name(int t) {
  static const char* names[kSlotCount] = {"s12", "s13", "s14", "s23", "s24", "s34",
                                          "c12", "c13", "c14", "c23", "c24", "c34"};
  if (t < 0 || t >= kSlotCount) throw std::out_of_range("slot_name: slot outside [0,12)");
  return names[t];
}

// The two slots produced by each string's closed form (even, odd class).
inline constexpr int kStringSlots[kStringCount][2] = {{8, 9}, {0, 11}, {3, 2},
                                                      {5, 6}, {1, 10}, {4, 7}};

inline void check_regular_point(const Coord6d& x) {
  if (x[5] == 0.0) throw singularity_error("potential: q6 = 0");
}

// 1/sin^2 (t < 6) or 1/cos^2 (t >= 6) of pi (q_i - q_j) / (2 q6).
inline double slot_value(int t, const Coord6d& x) {
  if (t < 0 || t >= kSlotCount) throw std::out_of_range("slot_value: slot outside [0,12)");
  check_regular_point(x);
  const int i = kSlotPairs[t % 6][0];
  const int j = kSlotPairs[t % 6][1];
  const double arg = std::numbers::pi * (x[i] - x[j]) / (2.0 * x[5]);
  const double tr = t < 6 ? std::sin(arg) : std::cos(arg);
  if (std::abs(tr) < kTrigPoleThreshold) {
    throw singularity_error("slot_value: pole in " + slot_name(t));
  }
  return 1.0 / (tr * tr);
}

inline std::array<double, kSlotCount> slot_values(const Coord6d& x) {
  std::array<double, kSlotCount> out{};
  for (int t = 0; t < kSlotCount; ++t) out[t] = slot_value(t, x);
  return out;
}

inline double potential_prefactor(const Coord6d& x, const PotentialParams& params) {
  check_regular_point(x);
  const double pi = std::numbers::pi;
  return params.sign_factor() * pi * pi * params.g / (4.0 * x[5] * x[5]);
}

// ---- the three routes -----------------------------------------------------

inline double potential_closed(const Coord6d& x, const PotentialParams& params = {}) {
  const auto slots = slot_values(x);
  double acc = 0.0;
  for (int t = 0; t < kSlotCount; ++t) acc += slots[t];
  return potential_prefactor(x, params) * acc;
}

inline double potential_direct(const Coord6d& x, const PotentialParams& params = {},
                               std::int64_t trunc = 1000) {
  check_regular_point(x);
  double acc = 0.0;
  for (int i = 0; i < kStringCount; ++i) acc += string_potential_direct(i, x, params, trunc);
  return acc;
}

// Sum over enumerated real roots in the coefficient box, one representative
// per +- pair (the lexicographically larger member).
inline double potential_enumerated(const Coord6d& x, const PotentialParams& params = {},
                                   std::int64_t bound = 24, bool affine_only = true) {
  check_regular_point(x);
  std::vector<double> terms;
  for (const RootVector& rv : enumerate_real_roots(bound, affine_only)) {
    if (!((-rv) < rv)) continue;
    const double d = inner6(embed_double(rv), x);
    if (std::abs(d) < kTrigPoleThreshold) {
      throw singularity_error("potential_enumerated: vanishing pairing at " + rv.str());
    }
    terms.push_back(1.0 / (d * d));
  }
  return params.sign_factor() * params.g * detail::pairwise_sum(terms);
}

// ---- decoupling limit -----------------------------------------------------

// prefactor * g * sum_{i<j} 1/(x_i - x_j)^2 over four coordinates.
inline double finite_a3_potential(const std::array<double, 4>& x, double g, double prefactor) {
  double acc = 0.0;
  for (const auto& pr : kSlotPairs) {
    const double d = x[static_cast<std::size_t>(pr[0])] - x[static_cast<std::size_t>(pr[1])];
    if (std::abs(d) < kTrigPoleThreshold) {
      throw singularity_error("finite_a3_potential: coinciding coordinates");
    }
    acc += 1.0 / (d * d);
  }
  return prefactor * g * acc;
}

inline std::array<double, 4> first_four(const Coord6d& x) { return {x[0], x[1], x[2], x[3]}; }

struct LimitSample {
  double q6 = 0.0;
  double value = 0.0;  // potential_closed at this q6 (sign convention included)
  double limit = 0.0;  // prefactor-1 target g sum 1/(q_i-q_j)^2
  double ratio = 0.0;  // value / limit; tends to 1 (one sign) or 2 (both)
};

// Re-evaluates the potential with q6 swept over the given values, against
// the fixed prefactor-1 rational Calogero target.
inline std::vector<LimitSample> limit_scan(Coord6d x, const PotentialParams& params,
                                           const std::vector<double>& q6_values) {
  std::vector<LimitSample> out;
  const double limit = finite_a3_potential(first_four(x), params.g, 1.0);
  for (double q6 : q6_values) {
    x[5] = q6;
    LimitSample s;
    s.q6 = q6;
    s.value = potential_closed(x, params);
    s.limit = limit;
    s.ratio = s.value / limit;
    out.push_back(s);
  }
  return out;
}

// ---- Weyl action on coordinates and trig terms ----------------------------

// The printed node-0 substitution differs from the derived reflection: it
// induces identical images of every difference q_i - q_j (i,j <= 4) and
// fixes q6, so the potential cannot tell them apart, but it is not a
// Lorentzian isometry and changes the kinetic form.
template <class T>
Coord6<T> transcribed_sigma0_coord(const Coord6<T>& x) {
  return {T(0) - x[1] - x[2] + x[3] - x[5],
          T(0) - x[2],
          T(0) - x[1],
          x[0] - x[1] - x[2] + x[5],
          x[0] - x[3] + x[4] + x[5],
          x[5]};
}

enum class ReflectionVariant { derived, printed };

// s_i on particle coordinates.  The derived action is the Lorentzian
// reflection itself; nodes 1..3 are neighbour transpositions of q1..q4
// either way, node 0 differs between the variants.
inline Coord6d coordinate_reflection(int node, const Coord6d& x,
                                     ReflectionVariant variant = ReflectionVariant::derived) {
  if (node < 0 || node > 3) {
    throw std::out_of_range("coordinate_reflection: node outside [0,3]");
  }
  if (variant == ReflectionVariant::printed && node == 0) {
    return transcribed_sigma0_coord(x);
  }
  return reflect_coord<double>(node, x);
}

inline Coord6d coordinate_coxeter(const Coord6d& x) {
  return apply_word_coord<double>(coxeter_word(CoxeterKind::affine), x);
}

// perm[t] = index of the original slot that equals slot t after the map:
// slot_value(t, image) == slot_value(perm[t], x).
using TermPermutation = std::array<int, kSlotCount>;

inline const TermPermutation& term_permutation(int node) {
  if (node < 0 || node > 3) throw std::out_of_range("term_permutation: node outside [0,3]");
  static const TermPermutation perms[4] = {
      {10, 11, 2, 3, 6, 7, 4, 5, 8, 9, 0, 1},
      {0, 3, 4, 1, 2, 5, 6, 9, 10, 7, 8, 11},
      {1, 0, 2, 3, 5, 4, 7, 6, 8, 9, 11, 10},
      {0, 2, 1, 4, 3, 5, 6, 8, 7, 10, 9, 11},
  };
  return perms[node];
}

inline const TermPermutation& coxeter_term_permutation() {
  static const TermPermutation perm = {11, 7, 3, 2, 10, 6, 5, 1, 9, 8, 4, 0};
  return perm;
}

// The printed node-3 row: every output carries a spurious sin/cos flip
// relative to the row above (it equals the verified row composed with the
// swap t -> (t + 6) mod 12), contradicting the printed coordinate action
// q3 <-> q4, which cannot exchange sin and cos.
inline const TermPermutation& transcribed_node3_term_permutation() {
  static const TermPermutation perm = {6, 8, 7, 10, 9, 11, 0, 2, 1, 4, 3, 5};
  return perm;
}

// max_t relative gap between slot_value(t, image) and slot_value(perm[t], x).
inline double term_permutation_residual(const Coord6d& x, const Coord6d& image,
                                        const TermPermutation& perm) {
  const auto base = slot_values(x);
  const auto moved = slot_values(image);
  double worst = 0.0;
  for (int t = 0; t < kSlotCount; ++t) {
    const double want = base[static_cast<std::size_t>(perm[t])];
    const double gap = std::abs(moved[t] - want) / std::max(1.0, std::abs(want));
    worst = std::max(worst, gap);
  }
  return worst;
}

// ---- invariance reporting -------------------------------------------------

struct InvarianceRow {
  std::string name;
  double potential_residual = 0.0;  // |V(map x) - V(x)| / max(1, |V(x)|)
  double kinetic_residual = 0.0;    // |T(map p) - T(p)| / max(1, |T(p)|)
};

struct InvarianceReport {
  double potential = 0.0;
  double kinetic = 0.0;
  std::vector<InvarianceRow> rows;

  double max_generator_potential_residual() const {
    double worst = 0.0;
    for (const auto& r : rows) {
      if (r.name != "sigma0_printed") worst = std::max(worst, r.potential_residual);
    }
    return worst;
  }
};

// Residuals of V and T under the four derived generators, the Coxeter
// element, and the printed s_0 variant (whose kinetic row is expected to be
// large; its potential row is expected to vanish).
inline InvarianceReport invariance_report(const Coord6d& x, const Coord6d& p,
                                          const PotentialParams& params = {}) {
  InvarianceReport rep;
  rep.potential = potential_closed(x, params);
  rep.kinetic = kinetic(p);
  auto add = [&](const std::string& name, const Coord6d& xi, const Coord6d& pi) {
    InvarianceRow row;
    row.name = name;
    row.potential_residual = std::abs(potential_closed(xi, params) - rep.potential) /
                             std::max(1.0, std::abs(rep.potential));
    row.kinetic_residual =
        std::abs(kinetic(pi) - rep.kinetic) / std::max(1.0, std::abs(rep.kinetic));
    rep.rows.push_back(row);
  };
  for (int node = 0; node <= 3; ++node) {
    add("sigma" + std::to_string(node), coordinate_reflection(node, x),
        coordinate_reflection(node, p));
  }
  add("coxeter", coordinate_coxeter(x), coordinate_coxeter(p));
  add("sigma0_printed", transcribed_sigma0_coord(x), transcribed_sigma0_coord(p));
  return rep;
}

// ---- gradient --------------------------------------------------------------

// Analytic partials of potential_closed.  Slot 4 (the q5 channel) is
// identically zero; the q6 channel carries both the 1/q6^2 prefactor and
// the argument dependence.
inline Coord6d potential_gradient(const Coord6d& x, const PotentialParams& params = {}) {
  check_regular_point(x);
  const double pi = std::numbers::pi;
  const double pref = potential_prefactor(x, params);
  Coord6d grad{};
  double sum_f = 0.0;
  double sum_df_a = 0.0;  // sum of f'(a_t) * a_t, feeds the q6 channel
  for (int t = 0; t < kSlotCount; ++t) {
    const int i = kSlotPairs[t % 6][0];
    const int j = kSlotPairs[t % 6][1];
    const double arg = pi * (x[i] - x[j]) / (2.0 * x[5]);
    const double tr = t < 6 ? std::sin(arg) : std::cos(arg);
    if (std::abs(tr) < kTrigPoleThreshold) {
      throw singularity_error("potential_gradient: pole in " + slot_name(t));
    }
    const double f = 1.0 / (tr * tr);
    const double co = t < 6 ? std::cos(arg) : -std::sin(arg);
    const double dfda = -2.0 * co / (tr * tr * tr);
    sum_f += f;
    sum_df_a += dfda * arg;
    const double datadx = pi / (2.0 * x[5]);
    grad[static_cast<std::size_t>(i)] += pref * dfda * datadx;
    grad[static_cast<std::size_t>(j)] -= pref * dfda * datadx;
  }
  grad[4] = 0.0;
  grad[5] = -2.0 * pref * sum_f / x[5] - pref * sum_df_a / x[5];
  return grad;
}

// Central-difference oracle for the analytic gradient; step scales with the
// coordinate magnitude.
inline Coord6d potential_gradient_fd(const Coord6d& x, const PotentialParams& params = {},
                                     double rel_step = 1e-6) {
  Coord6d grad{};
  double scale = 1.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  const double h = rel_step * scale;
  for (std::size_t i = 0; i < 6; ++i) {
    Coord6d lo = x, hi = x;
    lo[i] -= h;
    hi[i] += h;
    grad[i] = (potential_closed(hi, params) - potential_closed(lo, params)) / (2.0 * h);
  }
  return grad;
}

}  // namespace rootcal
