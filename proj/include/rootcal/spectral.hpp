#pragma once

// Numeric spectral form of the hyperbolic Coxeter element.
//
// Its characteristic polynomial x^5 - 3x^3 - 3x^2 + 1 has five simple
// roots: a unimodular complex pair, a reciprocal real pair, and -1.  Powers
// are evaluated as sum_i lambda_i^k P_i with spectral projectors built
// numerically; every recovered coefficient is rounded back to an integer
// under a residual guard.  The exact route (matrix_power) stays the ground
// truth; this form exists to be checked against it.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string>

#include "rootcal/numeric.hpp"
#include "rootcal/weyl.hpp"

namespace rootcal {

inline constexpr double kSpectralSeparation = 1e-6;   // min eigenvalue gap
inline constexpr double kSpectralIdentity = 1e-10;    // spectral identity slack
inline constexpr double kSpectralRounding = 1e-6;     // relative rounding residual
inline constexpr int kSpectralMaxPower = 120;

using Cplx = std::complex<double>;
using Mat5c = std::array<Cplx, kRank * kRank>;

struct SpectralDecomp {
  // Order: unimodular pair (negative imaginary part first), growing real,
  // decaying real, -1.
  std::array<Cplx, kRank> lambda{};
  std::array<Mat5c, kRank> proj{};
};

namespace detail {

inline double char_quintic_residual(const Cplx& z) {
  const Cplx v = std::pow(z, 5) - 3.0 * std::pow(z, 3) - 3.0 * z * z + 1.0;
  return std::abs(v);
}

inline SpectralDecomp build_hyperbolic_spectral() {
  const IntMatrix5& m = coxeter_matrix(CoxeterKind::hyperbolic);
  Eigen::Matrix<double, 5, 5> a;
  for (std::size_t r = 0; r < kRank; ++r)
    for (std::size_t c = 0; c < kRank; ++c) a(static_cast<long>(r), static_cast<long>(c)) = to_double(m.at(r, c));

  Eigen::EigenSolver<Eigen::Matrix<double, 5, 5>> solver(a);
  if (solver.info() != Eigen::Success) throw residual_error("eigen decomposition failed");
  const auto vals = solver.eigenvalues();
  const Eigen::Matrix<Cplx, 5, 5> vecs = solver.eigenvectors();
  const Eigen::Matrix<Cplx, 5, 5> vinv = vecs.inverse();

  // Canonical slots.
  std::array<int, kRank> order{-1, -1, -1, -1, -1};
  for (int i = 0; i < 5; ++i) {
    const Cplx z = vals(i);
    int s;
    if (std::fabs(z.imag()) > 1e-8) {
      s = z.imag() < 0 ? 0 : 1;
    } else if (z.real() < -0.5) {
      s = 4;
    } else if (z.real() > 1.0) {
      s = 2;
    } else {
      s = 3;
    }
    if (order[static_cast<std::size_t>(s)] != -1) throw residual_error("eigenvalue classification collision");
    order[static_cast<std::size_t>(s)] = i;
  }

  SpectralDecomp sd;
  for (std::size_t s = 0; s < kRank; ++s) {
    const int i = order[s];
    sd.lambda[s] = vals(i);
    for (std::size_t r = 0; r < kRank; ++r)
      for (std::size_t c = 0; c < kRank; ++c)
        sd.proj[s][r * kRank + c] = vecs(static_cast<long>(r), i) * vinv(i, static_cast<long>(c));
  }

  for (std::size_t i = 0; i < kRank; ++i) {
    for (std::size_t j = i + 1; j < kRank; ++j) {
      if (std::abs(sd.lambda[i] - sd.lambda[j]) < kSpectralSeparation) {
        throw residual_error("eigenvalue separation below threshold");
      }
    }
    if (char_quintic_residual(sd.lambda[i]) > kSpectralIdentity) {
      throw residual_error("eigenvalue misses the characteristic quintic");
    }
  }
  if (std::fabs(std::abs(sd.lambda[0]) - 1.0) > kSpectralIdentity ||
      std::abs(sd.lambda[0] - std::conj(sd.lambda[1])) > kSpectralIdentity) {
    throw residual_error("unimodular pair check failed");
  }
  if (std::abs(sd.lambda[2] * sd.lambda[3] - 1.0) > kSpectralIdentity) {
    throw residual_error("reciprocal real pair check failed");
  }
  if (std::abs(sd.lambda[4] - Cplx(-1.0, 0.0)) > kSpectralIdentity) {
    throw residual_error("missing eigenvalue -1");
  }
  for (std::size_t r = 0; r < kRank; ++r) {
    for (std::size_t c = 0; c < kRank; ++c) {
      Cplx acc = 0;
      for (std::size_t s = 0; s < kRank; ++s) acc += sd.proj[s][r * kRank + c];
      const double want = r == c ? 1.0 : 0.0;
      if (std::abs(acc - want) > kSpectralIdentity) {
        throw residual_error("projectors do not resolve the identity");
      }
    }
  }
  return sd;
}

inline Cplx cpow_int(Cplx z, long long k) {
  if (k < 0) {
    z = 1.0 / z;
    k = -k;
  }
  Cplx acc(1.0, 0.0);
  while (k > 0) {
    if (k & 1) acc *= z;
    z *= z;
    k >>= 1;
  }
  return acc;
}

}  // namespace detail

inline const SpectralDecomp& hyperbolic_spectral() {
  static const SpectralDecomp sd = detail::build_hyperbolic_spectral();
  return sd;
}

// Spectral power application, rounded back to exact integers.  Guarded to
// |k| <= 120; the rounding residual (relative, 1e-6) throws residual_error
// when double precision gives out.  For |k| <= 20 the result is checked in
// the test suite to coincide with the exact matrix route.
inline RootVector eval_hyperbolic_closed_form(const Int& k, const RootVector& rv) {
  if (k > kSpectralMaxPower || k < -kSpectralMaxPower) {
    throw std::domain_error("eval_hyperbolic_closed_form: |k| > 120 unsupported");
  }
  const SpectralDecomp& sd = hyperbolic_spectral();
  const long long kk = to_int64(k);

  std::array<Cplx, kRank> acc{};
  for (std::size_t s = 0; s < kRank; ++s) {
    const Cplx lk = detail::cpow_int(sd.lambda[s], kk);
    for (std::size_t r = 0; r < kRank; ++r) {
      Cplx dot = 0;
      for (std::size_t c = 0; c < kRank; ++c) {
        dot += sd.proj[s][r * kRank + c] * to_double(rv.c[c]);
      }
      acc[r] += lk * dot;
    }
  }

  RootVector out;
  for (std::size_t r = 0; r < kRank; ++r) {
    const double re = acc[r].real();
    const double rounded = std::round(re);
    const double slack = kSpectralRounding * std::max(1.0, std::fabs(re));
    if (std::fabs(re - rounded) > slack || std::fabs(acc[r].imag()) > slack) {
      std::ostringstream os;
      os << "eval_hyperbolic_closed_form: rounding residual " << std::fabs(re - rounded)
         << " (imag " << std::fabs(acc[r].imag()) << ") at k=" << k;
      throw residual_error(os.str());
    }
    out.c[r] = Int(rounded);
  }
  return out;
}

}  // namespace rootcal
