#pragma once

#include <vector>

#include "copmix/grid.hpp"

namespace copmix {

/// Kernel scale in data units; strictly positive and finite.
struct Bandwidth {
  double h;
  explicit Bandwidth(double value);
};

/// Standard Gaussian kernel (2*pi)^{-1/2} exp(-u^2/2).
double gaussian_kernel(double u);

/// Rescaled kernel K_h(u) = K(u/h) / h.
double kernel_h(double u, Bandwidth h);

/// Parameters of the stabilized geometric-mean smoother: the exponential of
/// the kernel-weighted average of log f over a window of +-window_mult
/// bandwidths, with f floored at log_floor inside the logarithm. The window
/// mass (about 0.95 for the default multiplier) is deliberately not
/// renormalized, so smoothing a constant c yields c^0.95..., not c.
struct SmootherParams {
  double window_mult = 1.96;
  double log_floor = 1e-5;
  int panels = 1024;  // trapezoid panels across the window
};

/// Precomputed window nodes and quadrature weights. The nodes are stored in
/// bandwidth units, so one table serves every bandwidth.
class SmootherTable {
 public:
  explicit SmootherTable(SmootherParams params = {});

  const SmootherParams& params() const { return params_; }

  /// Sum of the quadrature weights: the trapezoid estimate of the kernel
  /// mass inside the window.
  double total_weight() const { return total_weight_; }

  double smooth_at(const GriddedDensity& f, Bandwidth h, double x) const;
  std::vector<double> smooth_on_grid(const GriddedDensity& f, Bandwidth h) const;

 private:
  SmootherParams params_;
  std::vector<double> unit_offsets_;  // node positions in units of h
  std::vector<double> weights_;       // trapezoid coefficient times kernel value
  double total_weight_ = 0.0;
};

/// One-shot smoother evaluation at a point (builds a table internally).
double nonlinear_smooth_at(const GriddedDensity& f, Bandwidth h, double x,
                           const SmootherParams& params = {});

/// Smoother evaluated at every grid point of f. The output is not a density
/// and is deliberately left unnormalized.
std::vector<double> smooth_on_grid(const GriddedDensity& f, Bandwidth h,
                                   const SmootherParams& params = {});

}  // namespace copmix
