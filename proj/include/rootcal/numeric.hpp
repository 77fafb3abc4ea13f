#pragma once

// Exact arithmetic aliases and the error types shared across the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rootcal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

inline bool is_integer(const Rat& v) { return boost::multiprecision::denominator(v) == 1; }

// Exact Rat -> Int conversion. Throws std::domain_error on a nontrivial
// denominator; never rounds.
inline Int to_int_exact(const Rat& v) {
  if (!is_integer(v)) {
    throw std::domain_error("to_int_exact: " + v.str() + " is not an integer");
  }
  return boost::multiprecision::numerator(v);
}

inline std::int64_t to_int64(const Int& v) { return v.convert_to<std::int64_t>(); }

// A closed-form evaluator met a vanishing trig factor, or an inverse-square
// lattice sum has a zero of its linear form on the lattice.
struct singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Floating-point recovery of an exact integer quantity drifted past the
// accepted residual.
struct residual_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rootcal
