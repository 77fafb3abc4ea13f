#pragma once

// Simple-root data for the rank-5 chain extending A3, together with the
// Lorentzian pairing it embeds in.
//
// Node indices run -1, 0, 1, 2, 3: nodes 1..3 span the finite A3 diagram,
// node 0 closes the affine square 0-1-2-3-0, node -1 hangs off node 0.
// Coefficient vectors store (q, r, l, m, n), the coefficients of
// (a_{-1}, a_0, a_1, a_2, a_3).  Everything here is exact.

#include <array>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rootcal/numeric.hpp"

namespace rootcal {

inline constexpr int kNodeMin = -1;
inline constexpr int kNodeMax = 3;
inline constexpr std::size_t kRank = 5;

inline void check_node(int node) {
  if (node < kNodeMin || node > kNodeMax) {
    throw std::out_of_range("node index " + std::to_string(node) + " outside [-1,3]");
  }
}

// Storage slot of node i in rank-5 arrays.
constexpr std::size_t slot(int node) { return static_cast<std::size_t>(node + 1); }

template <class T>
using Coord6 = std::array<T, 6>;

using Vec6 = Coord6<Rat>;
using Coord6d = Coord6<double>;

// x.y = x1 y1 + x2 y2 + x3 y3 + x4 y4 - x5 y6 - x6 y5.
// The 5/6 cross terms carry the two null directions.
template <class T>
T inner6(const Coord6<T>& x, const Coord6<T>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3] - x[4] * y[5] - x[5] * y[4];
}

// Coefficient vector over the simple-root basis.
struct RootVector {
  std::array<Int, 5> c{};

  RootVector() = default;
  RootVector(Int q, Int r, Int l, Int m, Int n)
      : c{std::move(q), std::move(r), std::move(l), std::move(m), std::move(n)} {}

  const Int& q() const { return c[0]; }
  const Int& r() const { return c[1]; }
  const Int& l() const { return c[2]; }
  const Int& m() const { return c[3]; }
  const Int& n() const { return c[4]; }

  Int& operator[](std::size_t i) { return c.at(i); }
  const Int& operator[](std::size_t i) const { return c.at(i); }

  // Coefficient of node i.
  const Int& coeff(int node) const {
    check_node(node);
    return c[slot(node)];
  }
  Int& coeff(int node) {
    check_node(node);
    return c[slot(node)];
  }

  friend RootVector operator+(const RootVector& a, const RootVector& b) {
    RootVector out;
    for (std::size_t i = 0; i < kRank; ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
  }
  friend RootVector operator-(const RootVector& a, const RootVector& b) {
    RootVector out;
    for (std::size_t i = 0; i < kRank; ++i) out.c[i] = a.c[i] - b.c[i];
    return out;
  }
  RootVector operator-() const {
    RootVector out;
    for (std::size_t i = 0; i < kRank; ++i) out.c[i] = -c[i];
    return out;
  }
  friend RootVector operator*(const Int& s, const RootVector& a) {
    RootVector out;
    for (std::size_t i = 0; i < kRank; ++i) out.c[i] = s * a.c[i];
    return out;
  }

  friend bool operator==(const RootVector& a, const RootVector& b) { return a.c == b.c; }
  friend bool operator!=(const RootVector& a, const RootVector& b) { return !(a == b); }
  // Lexicographic order on (q, r, l, m, n); used for deterministic listings.
  friend bool operator<(const RootVector& a, const RootVector& b) { return a.c < b.c; }

  bool is_zero() const {
    for (const auto& v : c) {
      if (v != 0) return false;
    }
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < kRank; ++i) {
      if (i) os << ',';
      os << c[i];
    }
    return os.str();
  }
};

// Basis vector of node i.
inline RootVector unit_root(int node) {
  check_node(node);
  RootVector rv;
  rv.c[slot(node)] = 1;
  return rv;
}

// Simple roots as 6-vectors, stored by slot: a_{-1}, a_0, a_1, a_2, a_3.
inline constexpr std::array<std::array<int, 6>, kRank> kSimpleRoots{{
    {0, 0, 0, 0, -1, 1},
    {-1, 0, 0, 1, 1, 0},
    {1, -1, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, 0},
    {0, 0, 1, -1, 0, 0},
}};

inline Vec6 simple_root_vec6(int node) {
  check_node(node);
  Vec6 out;
  for (std::size_t j = 0; j < 6; ++j) out[j] = kSimpleRoots[slot(node)][j];
  return out;
}

using CartanMatrix = std::array<std::array<Int, kRank>, kRank>;

// Pairing matrix of the simple roots, recomputed from the stored 6-vectors.
inline CartanMatrix gram_from_roots() {
  CartanMatrix k{};
  for (std::size_t i = 0; i < kRank; ++i) {
    for (std::size_t j = 0; j < kRank; ++j) {
      Coord6<Int> x{}, y{};
      for (std::size_t t = 0; t < 6; ++t) {
        x[t] = kSimpleRoots[i][t];
        y[t] = kSimpleRoots[j][t];
      }
      k[i][j] = inner6(x, y);
    }
  }
  return k;
}

// Cartan matrix, rows and columns ordered -1, 0, 1, 2, 3.  All simple roots
// have square length 2, so this doubles as the Gram matrix.
inline const CartanMatrix& cartan_matrix() {
  static const CartanMatrix k = [] {
    CartanMatrix m{};
    constexpr int rows[kRank][kRank] = {
        {2, -1, 0, 0, 0},
        {-1, 2, -1, 0, -1},
        {0, -1, 2, -1, 0},
        {0, 0, -1, 2, -1},
        {0, -1, 0, -1, 2},
    };
    for (std::size_t i = 0; i < kRank; ++i)
      for (std::size_t j = 0; j < kRank; ++j) m[i][j] = rows[i][j];
    return m;
  }();
  return k;
}

// Exact 6-vector of a coefficient vector.
inline Vec6 embed(const RootVector& rv) {
  Vec6 out{};
  for (std::size_t j = 0; j < 6; ++j) out[j] = 0;
  for (std::size_t i = 0; i < kRank; ++i) {
    for (std::size_t j = 0; j < 6; ++j) out[j] += Rat(rv.c[i] * kSimpleRoots[i][j]);
  }
  return out;
}

// a.b through the Cartan matrix; equals inner6(embed(a), embed(b)).
inline Int inner_coeff(const RootVector& a, const RootVector& b) {
  const CartanMatrix& k = cartan_matrix();
  Int acc = 0;
  for (std::size_t i = 0; i < kRank; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < kRank; ++j) acc += a.c[i] * k[i][j] * b.c[j];
  }
  return acc;
}

// Half the square length: the level set unit_norm_form == 1 is exactly the
// real-root condition
//   l^2 - l m - l r + m^2 - m n + n^2 - n r + q^2 - q r + r^2 = 1.
inline Int unit_norm_form(const RootVector& rv) {
  Int two = inner_coeff(rv, rv);
  return two / 2;
}

inline bool is_real_root(const RootVector& rv) { return inner_coeff(rv, rv) == 2; }

}  // namespace rootcal
