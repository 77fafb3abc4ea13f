#pragma once

// Weyl reflections, reduced words, and the two Coxeter elements as exact
// 5x5 matrices acting on (q, r, l, m, n).
//
// Convention: a word (w0 w1 ... wk) acts rightmost letter first, so
// apply_word({2,0,1,3}, rv) computes s2(s0(s1(s3(rv)))).  This is the order
// under which the word {2,0,1,3} reproduces the tabulated affine Coxeter
// matrix below.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rootcal/lattice.hpp"
#include "rootcal/numeric.hpp"

namespace rootcal {

// s_i on coefficients: only the node-i coefficient moves,
// c_i -> c_i - sum_j K(i,j) c_j.
inline RootVector reflect_coeff(int node, const RootVector& rv) {
  check_node(node);
  const CartanMatrix& k = cartan_matrix();
  const std::size_t i = slot(node);
  Int pairing = 0;
  for (std::size_t j = 0; j < kRank; ++j) pairing += k[i][j] * rv.c[j];
  RootVector out = rv;
  out.c[i] -= pairing;
  return out;
}

// s_i on 6-vectors: v -> v - (a_i . v) a_i.  Works for exact and floating
// scalars alike; simple roots have integer entries.
template <class T>
Coord6<T> reflect_coord(int node, const Coord6<T>& v) {
  check_node(node);
  Coord6<T> root{};
  for (std::size_t j = 0; j < 6; ++j) root[j] = T(kSimpleRoots[slot(node)][j]);
  const T pairing = inner6(root, v);
  Coord6<T> out = v;
  for (std::size_t j = 0; j < 6; ++j) out[j] -= pairing * root[j];
  return out;
}

inline Vec6 reflect_vec6(int node, const Vec6& v) { return reflect_coord<Rat>(node, v); }

using WeylWord = std::vector<int>;

inline RootVector apply_word(const WeylWord& word, RootVector rv) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) rv = reflect_coeff(*it, rv);
  return rv;
}

template <class T>
Coord6<T> apply_word_coord(const WeylWord& word, Coord6<T> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect_coord<T>(*it, v);
  return v;
}

// Dense 5x5 exact matrix on coefficient vectors.
template <class T>
struct Matrix5 {
  std::array<T, kRank * kRank> a{};

  T& at(std::size_t r, std::size_t c) { return a[r * kRank + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a[r * kRank + c]; }

  static Matrix5 identity() {
    Matrix5 m;
    for (std::size_t i = 0; i < kRank; ++i) m.at(i, i) = 1;
    return m;
  }

  friend Matrix5 operator*(const Matrix5& x, const Matrix5& y) {
    Matrix5 out;
    for (std::size_t r = 0; r < kRank; ++r) {
      for (std::size_t k = 0; k < kRank; ++k) {
        if (x.at(r, k) == 0) continue;
        for (std::size_t c = 0; c < kRank; ++c) out.at(r, c) += x.at(r, k) * y.at(k, c);
      }
    }
    return out;
  }

  friend Matrix5 operator+(const Matrix5& x, const Matrix5& y) {
    Matrix5 out;
    for (std::size_t i = 0; i < kRank * kRank; ++i) out.a[i] = x.a[i] + y.a[i];
    return out;
  }

  friend Matrix5 operator-(const Matrix5& x, const Matrix5& y) {
    Matrix5 out;
    for (std::size_t i = 0; i < kRank * kRank; ++i) out.a[i] = x.a[i] - y.a[i];
    return out;
  }

  friend Matrix5 operator*(const T& s, const Matrix5& y) {
    Matrix5 out;
    for (std::size_t i = 0; i < kRank * kRank; ++i) out.a[i] = s * y.a[i];
    return out;
  }

  friend bool operator==(const Matrix5& x, const Matrix5& y) { return x.a == y.a; }
  friend bool operator!=(const Matrix5& x, const Matrix5& y) { return !(x == y); }

  RootVector apply(const RootVector& rv) const {
    RootVector out;
    for (std::size_t r = 0; r < kRank; ++r) {
      Int acc = 0;
      for (std::size_t c = 0; c < kRank; ++c) acc += Int(at(r, c)) * rv.c[c];
      out.c[r] = acc;
    }
    return out;
  }

  T trace() const {
    T acc{};
    for (std::size_t i = 0; i < kRank; ++i) acc += at(i, i);
    return acc;
  }
};

using IntMatrix5 = Matrix5<Int>;
using RatMatrix5 = Matrix5<Rat>;

inline RatMatrix5 to_rational(const IntMatrix5& m) {
  RatMatrix5 out;
  for (std::size_t i = 0; i < kRank * kRank; ++i) out.a[i] = Rat(m.a[i]);
  return out;
}

inline IntMatrix5 to_integer(const RatMatrix5& m) {
  IntMatrix5 out;
  for (std::size_t i = 0; i < kRank * kRank; ++i) out.a[i] = to_int_exact(m.a[i]);
  return out;
}

// Exact inverse by Gauss-Jordan elimination.  Throws std::domain_error on a
// singular input.
inline RatMatrix5 inverse(const RatMatrix5& m) {
  RatMatrix5 lhs = m;
  RatMatrix5 rhs = RatMatrix5::identity();
  for (std::size_t col = 0; col < kRank; ++col) {
    std::size_t pivot = col;
    while (pivot < kRank && lhs.at(pivot, col) == 0) ++pivot;
    if (pivot == kRank) throw std::domain_error("inverse: singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < kRank; ++c) {
        std::swap(lhs.at(pivot, c), lhs.at(col, c));
        std::swap(rhs.at(pivot, c), rhs.at(col, c));
      }
    }
    const Rat inv_p = Rat(1) / lhs.at(col, col);
    for (std::size_t c = 0; c < kRank; ++c) {
      lhs.at(col, c) *= inv_p;
      rhs.at(col, c) *= inv_p;
    }
    for (std::size_t r = 0; r < kRank; ++r) {
      if (r == col || lhs.at(r, col) == 0) continue;
      const Rat f = lhs.at(r, col);
      for (std::size_t c = 0; c < kRank; ++c) {
        lhs.at(r, c) -= f * lhs.at(col, c);
        rhs.at(r, c) -= f * rhs.at(col, c);
      }
    }
  }
  return rhs;
}

// Matrix of a word: column j is the word applied to basis vector j.
inline IntMatrix5 matrix_of_word(const WeylWord& word) {
  IntMatrix5 m;
  for (int node = kNodeMin; node <= kNodeMax; ++node) {
    const RootVector img = apply_word(word, unit_root(node));
    for (std::size_t r = 0; r < kRank; ++r) m.at(r, slot(node)) = img.c[r];
  }
  return m;
}

enum class CoxeterKind { affine, hyperbolic };

inline const WeylWord& coxeter_word(CoxeterKind kind) {
  static const WeylWord affine{2, 0, 1, 3};
  static const WeylWord hyperbolic{-1, 2, 0, 1, 3};
  return kind == CoxeterKind::affine ? affine : hyperbolic;
}

inline const IntMatrix5& coxeter_matrix(CoxeterKind kind) {
  static const IntMatrix5 affine = matrix_of_word(coxeter_word(CoxeterKind::affine));
  static const IntMatrix5 hyperbolic = matrix_of_word(coxeter_word(CoxeterKind::hyperbolic));
  return kind == CoxeterKind::affine ? affine : hyperbolic;
}

namespace detail {
inline IntMatrix5 from_rows(const int (&rows)[kRank][kRank]) {
  IntMatrix5 m;
  for (std::size_t r = 0; r < kRank; ++r)
    for (std::size_t c = 0; c < kRank; ++c) m.at(r, c) = rows[r][c];
  return m;
}
}  // namespace detail

// Independently transcribed single-application tables for the two Coxeter
// elements; the word-built matrices are checked against these.
inline const IntMatrix5& transcribed_coxeter_matrix(CoxeterKind kind) {
  static const IntMatrix5 affine = detail::from_rows({
      {1, 0, 0, 0, 0},
      {1, 1, -1, 2, -1},
      {0, 1, -1, 1, 0},
      {0, 2, -1, 1, -1},
      {0, 1, 0, 1, -1},
  });
  static const IntMatrix5 hyperbolic = detail::from_rows({
      {0, 1, -1, 2, -1},
      {1, 1, -1, 2, -1},
      {0, 1, -1, 1, 0},
      {0, 2, -1, 1, -1},
      {0, 1, 0, 1, -1},
  });
  return kind == CoxeterKind::affine ? affine : hyperbolic;
}

// Exact integer power; negative exponents go through the exact rational
// inverse (both Coxeter matrices are unimodular).
inline IntMatrix5 matrix_power(const IntMatrix5& m, const Int& k) {
  IntMatrix5 base = m;
  Int e = k;
  if (e < 0) {
    base = to_integer(inverse(to_rational(m)));
    e = -e;
  }
  IntMatrix5 acc = IntMatrix5::identity();
  while (e > 0) {
    if ((e & 1) != 0) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// Characteristic polynomial, coefficients by descending power and monic, by
// the Faddeev-LeVerrier recursion carried out over exact rationals.
inline std::array<Int, kRank + 1> characteristic_polynomial(const IntMatrix5& m) {
  const RatMatrix5 a = to_rational(m);
  std::array<Rat, kRank + 1> coeff{};
  coeff[0] = 1;
  RatMatrix5 b = RatMatrix5::identity();
  for (std::size_t k = 1; k <= kRank; ++k) {
    RatMatrix5 ab = a * b;
    coeff[k] = -ab.trace() / Rat(k);
    b = ab;
    for (std::size_t i = 0; i < kRank; ++i) b.at(i, i) += coeff[k];
  }
  std::array<Int, kRank + 1> out{};
  for (std::size_t i = 0; i <= kRank; ++i) out[i] = to_int_exact(coeff[i]);
  return out;
}

struct PowerTranscriptionCheck {
  int power = 0;
  bool matches = false;
  std::string note;
};

// Cross-check of the word-built hyperbolic element against transcribed
// expansions of its powers -2, -1, 1, 2.  Discrepancies are reported, never
// silently corrected.
inline std::vector<PowerTranscriptionCheck> hyperbolic_power_transcription_checks() {
  static const IntMatrix5 pow1 = transcribed_coxeter_matrix(CoxeterKind::hyperbolic);
  static const IntMatrix5 inv1 = detail::from_rows({
      {-1, 1, 0, 0, 0},
      {-1, 0, 1, 0, 1},
      {-1, 0, 1, -1, 2},
      {0, 0, 1, -1, 1},
      {-1, 0, 2, -1, 1},
  });
  static const IntMatrix5 pow2 = detail::from_rows({
      {1, 3, -2, 2, -2},
      {1, 4, -3, 4, -3},
      {1, 2, -1, 2, -2},
      {2, 2, -2, 3, -2},
      {1, 2, -2, 2, -1},
  });
  static const IntMatrix5 inv2 = detail::from_rows({
      {0, -1, 1, 0, 1},
      {-1, -1, 3, -2, 3},
      {-2, -1, 4, -2, 3},
      {-2, 0, 2, -1, 2},
      {-2, -1, 3, -2, 4},
  });

  const IntMatrix5& m = coxeter_matrix(CoxeterKind::hyperbolic);
  std::vector<PowerTranscriptionCheck> out;
  out.push_back({1, matrix_power(m, 1) == pow1, ""});
  out.push_back({-1, matrix_power(m, -1) == inv1, ""});
  out.push_back({2, matrix_power(m, 2) == pow2,
                 "transcribed node-0 line ends with a dangling '+'; the numeric "
                 "coefficients are complete and are compared as written"});
  out.push_back({-2, matrix_power(m, -2) == inv2,
                 "transcribed line writes the basis with b symbols; coefficients "
                 "are compared as written"});
  return out;
}

}  // namespace rootcal
