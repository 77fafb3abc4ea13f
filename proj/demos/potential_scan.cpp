// Compares the three potential routes at one configuration, then sweeps q6
// toward the decoupling limit.

#include <cstdio>

#include "rootcal/rootcal.hpp"

using namespace rootcal;

int main() {
  const Coord6d x{0.31, 0.07, -0.23, -0.61, 0.0, 1.7};
  const PotentialParams params{1.0, false};

  const double closed = potential_closed(x, params);
  std::printf("closed:              %.15g\n", closed);
  for (std::int64_t n : {100LL, 1000LL, 10000LL}) {
    const double series = potential_direct(x, params, n);
    std::printf("series  N=%-7lld    %.15g   gap %.3g\n", static_cast<long long>(n), series,
                closed - series);
  }
  for (std::int64_t b : {8LL, 32LL, 128LL}) {
    const double enumerated = potential_enumerated(x, params, b);
    std::printf("enum    B=%-7lld    %.15g   gap %.3g\n", static_cast<long long>(b), enumerated,
                closed - enumerated);
  }

  std::printf("\nq6 sweep toward the rational Calogero limit:\n");
  const auto samples = limit_scan(x, params, {5.0, 50.0, 500.0, 5000.0});
  for (const auto& s : samples) {
    std::printf("q6=%-8g V=%.12g  limit=%.12g  ratio=%.12g\n", s.q6, s.value, s.limit, s.ratio);
  }
  return 0;
}
