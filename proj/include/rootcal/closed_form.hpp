#pragma once

// Exact closed form for powers of the affine Coxeter element.
//
// The element satisfies a(k+1) = 2 a(k) - 2 a(k-2) + a(k-3), whose
// characteristic roots are -1 and a triple 1, but the matrix is
// nondefective enough that a(k) = alt (-1)^k + cst + lin k + quad k^2
// holds exactly; the four matrices are solved from a(0..3) and never
// guessed from a transcription.

#include <array>
#include <cstddef>
#include <sstream>
#include <string>

#include "rootcal/numeric.hpp"
#include "rootcal/weyl.hpp"

namespace rootcal {

// Coefficients of the four-term recurrence above, newest lag first.
inline constexpr std::array<int, 4> kAffineRecurrence{2, 0, -2, 1};

struct ClosedFormAffine {
  RatMatrix5 alt, cst, lin, quad;

  RatMatrix5 at(const Int& k) const {
    const bool odd = (k % 2) != 0;
    const Rat kk(k);
    RatMatrix5 out = odd ? (cst - alt) : (cst + alt);
    out = out + kk * lin + (kk * kk) * quad;
    return out;
  }
};

namespace detail {

// Solve the 4x4 system sending (alt, cst, lin, quad) to a(0..3) for every
// matrix entry at once.
inline ClosedFormAffine solve_affine_closed_form() {
  const IntMatrix5& m = coxeter_matrix(CoxeterKind::affine);
  std::array<RatMatrix5, 4> powers;
  powers[0] = to_rational(IntMatrix5::identity());
  for (std::size_t s = 1; s < 4; ++s) powers[s] = to_rational(matrix_power(m, Int(s)));

  // Row k: alt (-1)^k + cst + lin k + quad k^2 = a(k), k = 0..3.
  Rat sys[4][8] = {};
  for (int k = 0; k < 4; ++k) {
    sys[k][0] = (k % 2 == 0) ? 1 : -1;
    sys[k][1] = 1;
    sys[k][2] = k;
    sys[k][3] = k * k;
    sys[k][4 + k] = 1;
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (pivot < 4 && sys[pivot][col] == 0) ++pivot;
    if (pivot != col) {
      for (int c = 0; c < 8; ++c) std::swap(sys[pivot][c], sys[col][c]);
    }
    const Rat inv_p = Rat(1) / sys[col][col];
    for (int c = 0; c < 8; ++c) sys[col][c] *= inv_p;
    for (int r = 0; r < 4; ++r) {
      if (r == col || sys[r][col] == 0) continue;
      const Rat f = sys[r][col];
      for (int c = 0; c < 8; ++c) sys[r][c] -= f * sys[col][c];
    }
  }

  // Unknown t is now sum_s sys[t][4+s] a(s).
  auto combine = [&](int t) {
    RatMatrix5 out;
    for (int s = 0; s < 4; ++s) out = out + sys[t][4 + s] * powers[s];
    return out;
  };
  ClosedFormAffine cf{combine(0), combine(1), combine(2), combine(3)};
  for (int k = 0; k < 4; ++k) {
    if (cf.at(Int(k)) != powers[static_cast<std::size_t>(k)]) {
      throw std::logic_error("affine closed form failed to reproduce its anchors");
    }
  }
  return cf;
}

}  // namespace detail

inline const ClosedFormAffine& affine_closed_form() {
  static const ClosedFormAffine cf = detail::solve_affine_closed_form();
  return cf;
}

// Exact power application through the closed form; equals
// matrix_power(affine, k).apply(rv) for every integer k.
inline RootVector eval_affine_closed_form(const Int& k, const RootVector& rv) {
  const RatMatrix5 a = affine_closed_form().at(k);
  RootVector out;
  for (std::size_t r = 0; r < kRank; ++r) {
    Rat acc = 0;
    for (std::size_t c = 0; c < kRank; ++c) acc += a.at(r, c) * Rat(rv.c[c]);
    out.c[r] = to_int_exact(acc);
  }
  return out;
}

struct ClosedFormRowCheck {
  int node = 0;
  bool linear_print = true;  // transcribed row reads as a linear form
  bool matches = false;      // and equals the solved row
  std::string detail;
};

namespace detail {

struct TranscribedRow {
  // Coefficients of (q, r, l, m, n) in the constant, (-1)^k, k and k^2
  // pieces of one output coefficient.
  std::array<Rat, 5> cst, alt, lin, quad;
};

inline std::string row_str(const std::array<Rat, 5>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace detail

// Compares the solved affine closed form against an independently
// transcribed per-coefficient table, row by row.  The node-0 transcription
// does not read as a linear form (it carries a product term and a
// duplicated r in its k coefficient); the discrepancy is reported here and
// nowhere absorbed into the solver.
inline std::array<ClosedFormRowCheck, kRank> affine_closed_form_transcription_checks() {
  const ClosedFormAffine& cf = affine_closed_form();
  const Rat h(1, 2), qu(1, 4);

  auto solved_row = [&](const RatMatrix5& mat, int node) {
    std::array<Rat, 5> out;
    for (std::size_t c = 0; c < kRank; ++c) out[c] = mat.at(slot(node), c);
    return out;
  };

  std::array<detail::TranscribedRow, kRank> rows{};
  rows[slot(-1)] = {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
  rows[slot(1)] = {{0, 0, h, 0, h}, {0, 0, h, 0, -h}, {-h, 1, -1, 1, -1}, {h, 0, 0, 0, 0}};
  rows[slot(2)] = {{-qu, h, 0, h, 0}, {qu, -h, 0, h, 0}, {0, 1, -1, 1, -1}, {h, 0, 0, 0, 0}};
  rows[slot(3)] = {{0, 0, h, 0, h}, {0, 0, -h, 0, h}, {-h, 1, -1, 1, -1}, {h, 0, 0, 0, 0}};

  std::array<ClosedFormRowCheck, kRank> out{};
  for (int node = kNodeMin; node <= kNodeMax; ++node) {
    ClosedFormRowCheck chk;
    chk.node = node;
    if (node == 0) {
      chk.linear_print = false;
      chk.matches = false;
      chk.detail =
          "transcribed node-0 line is not linear in (q,r,l,m,n): its alternating part "
          "multiplies q into (2r-2m-q)/4 where the solved row needs q/4 + (2r-2m-q)/4, and "
          "its k part reads (2r-l+m-n) where the solved row has (r-l+m-n); solved row: cst " +
          detail::row_str(solved_row(cf.cst, 0)) + " alt " + detail::row_str(solved_row(cf.alt, 0)) +
          " k " + detail::row_str(solved_row(cf.lin, 0)) + " k^2 " +
          detail::row_str(solved_row(cf.quad, 0));
    } else {
      const detail::TranscribedRow& t = rows[slot(node)];
      chk.matches = solved_row(cf.cst, node) == t.cst && solved_row(cf.alt, node) == t.alt &&
                    solved_row(cf.lin, node) == t.lin && solved_row(cf.quad, node) == t.quad;
      chk.detail = chk.matches ? "" : "solved row differs from transcription";
    }
    out[slot(node)] = chk;
  }
  return out;
}

}  // namespace rootcal
