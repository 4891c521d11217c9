#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jetworks::probe {

// Uniformly sampled values f(t0 + i*h), i = 0..N-1.
struct SampleSeries {
  double t0 = 0;
  double h = 1;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double t(std::size_t i) const { return t0 + static_cast<double>(i) * h; }
  // Throws InvalidArgument unless h > 0, all values finite, N >= 5 and odd.
  void validate() const;
};

SampleSeries sample(double lo, double hi, std::size_t n, double (*f)(double));

enum class Backend { Parallel, Serial };

// All float tolerances of the probe in one place. Tolerances are relative
// with the absolute floor applied to the scale.
struct ProbeConfig {
  double consistency_tol = 1e-9;
  double roundtrip_tol = 1e-12;
  double abs_floor = 1e-300;
  // A row is flagged when refining the grid from 2H to H shrinks the
  // largest estimate change by less than this factor. Smooth data contracts
  // by ~16 under the fourth-order stencils, a jump in the derivative by ~1.
  double min_contraction = 1.5;
  // Target number of cells of the finest grid used for the estimates.
  std::size_t target_cells = 100;
  Backend backend = Backend::Parallel;
};

struct Recovery {
  SampleSeries g;
  double residual = 0;  // relative, on the even (or second odd) channel
  unsigned root_exponent = 0;
};

// g^m and g^n sampled on one grid -> g, via the real root of the odd power.
Recovery recover_pointwise(const SampleSeries& a, const SampleSeries& b, unsigned m, unsigned n,
                           const ProbeConfig& cfg = {});

struct DerivativeRow {
  unsigned order = 0;
  double max_abs_estimate = 0;
  bool blowup = false;
  double contraction = 0;  // max change (4H->2H) over max change (2H->H); inf when the latter is 0
  double location = 0;     // where the last change is largest
  double step = 0;         // finest step H
  std::size_t first_index = 0;
  std::size_t stride = 1;
  std::vector<double> estimates;  // at first_index + k*stride, finest step
};

struct SmoothnessReport {
  std::vector<DerivativeRow> rows;
  bool smooth = true;
  unsigned order = 0;  // SMOOTH_UP_TO(order) or NONSMOOTH_AT(order, location)
  double location = 0;

  std::string verdict() const;
};

SmoothnessReport estimate_derivatives(const SampleSeries& s, unsigned max_order, const ProbeConfig& cfg = {});

// Central stencil weights for the order-sigma derivative on offsets -p..p.
std::vector<double> stencil_weights(unsigned sigma, unsigned p);

enum class DemoKind { Identity, Abs, Custom };

struct DemoReport {
  Recovery recovery;
  SmoothnessReport report;
  SmoothnessReport input_m;
  SmoothnessReport input_n;
  std::vector<std::string> notes;
};

// Samples g on 2001 points of [-1, 1] (or takes `custom`), powers it, and
// runs the recovery and the derivative estimates.
DemoReport joris_demo(DemoKind kind, unsigned m, unsigned n, const SampleSeries* custom = nullptr,
                      unsigned max_order = 4, const ProbeConfig& cfg = {});

struct CsvSamples {
  SampleSeries gm;
  SampleSeries gn;
};

// Header `t,gm,gn`, one row per grid point, uniform strictly increasing t.
CsvSamples read_csv(std::istream& in);

}  // namespace jetworks::probe
