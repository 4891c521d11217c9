#pragma once

// Inner loops of the probe. Each kernel exists twice: an OpenMP version used
// by default and a plain serial reference that tests compare against. Both
// must produce bitwise identical results.

#include <cstddef>
#include <vector>

namespace jetworks::probe::detail {

struct ArgMax {
  double value = 0;
  std::size_t index = 0;  // smallest index on ties
};

struct Kernels {
  // g[i] = real o-th root of v[i], sign preserved, one Newton step.
  void (*odd_root)(const double* v, std::size_t n, unsigned o, double* g);
  ArgMax (*max_abs)(const double* v, std::size_t n);
  // max |g[i]^e - v[i]|
  ArgMax (*power_residual)(const double* g, const double* v, std::size_t n, unsigned e);
  // out[k] = sum_j w[j] v[first + k + (j - p) * stride] * scale, k < count
  void (*stencil)(const double* v, const std::vector<double>& w, std::size_t stride, double scale,
                  std::size_t first, std::size_t count, double* out);
  // max |a[i] - b[i]|
  ArgMax (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

const Kernels& parallel_kernels();
const Kernels& serial_kernels();

// Shared scalar pieces so both backends round identically.
double int_pow(double x, unsigned e);
double odd_root_one(double v, unsigned o);

}  // namespace jetworks::probe::detail
