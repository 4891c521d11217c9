// Times the probe with the OpenMP kernels against the serial reference.
//
//   bench_probe [points] [repeats]

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "jetworks/probe.hpp"

using namespace jetworks::probe;

namespace {

template <class F>
double best_of(int repeats, F f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t points = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400001;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
  if (points % 2 == 0) ++points;

  const SampleSeries a = sample(-1, 1, points, [](double t) { return t * t; });
  const SampleSeries b = sample(-1, 1, points, [](double t) { return std::pow(std::fabs(t), 3.0); });

  std::printf("points %zu, threads %d, best of %d\n", points, omp_get_max_threads(), repeats);
  for (Backend backend : {Backend::Serial, Backend::Parallel}) {
    ProbeConfig cfg;
    cfg.backend = backend;
    // Fine grid at full resolution so the kernels dominate.
    cfg.target_cells = points - 1;
    SmoothnessReport rep;
    const double rec = best_of(repeats, [&] { recover_pointwise(a, b, 2, 3, cfg); });
    const Recovery r = recover_pointwise(a, b, 2, 3, cfg);
    const double est = best_of(repeats, [&] { rep = estimate_derivatives(r.g, 6, cfg); });
    std::printf("%-8s recover %9.3f ms  estimate %9.3f ms  %s\n", backend == Backend::Serial ? "serial" : "openmp",
                rec * 1e3, est * 1e3, rep.verdict().c_str());
  }
}
