#pragma once

#include <span>
#include <vector>

namespace copmix {

/// Uniform grid of m points on [lo, hi]; point j sits at lo + j * step.
struct Grid1D {
  double lo = 0.0;
  double hi = 1.0;
  int m = 2;
  double step = 1.0;

  /// Validates lo < hi and m >= 16.
  static Grid1D make(double lo, double hi, int m);

  double point(int j) const { return lo + j * step; }
  bool same_as(const Grid1D& other) const;
};

/// Univariate density tabulated on a uniform grid.
/// Values are non-negative and trapezoid-integrate to one once normalized.
struct GriddedDensity {
  Grid1D grid;
  std::vector<double> values;
};

/// Cumulative distribution tabulated on a uniform grid: non-decreasing,
/// starts at zero, ends at the total mass of the underlying density.
struct GriddedCdf {
  Grid1D grid;
  std::vector<double> values;
};

/// Composite trapezoid rule: step * (v0/2 + v1 + ... + v_{m-2} + v_{m-1}/2).
double trapezoid_integral(std::span<const double> values, double step);

/// Rescale by a single positive constant so the trapezoid integral is one.
GriddedDensity normalize(const GriddedDensity& d);

/// Running trapezoid sums; the last value equals the density's total mass.
GriddedCdf cdf_from_density(const GriddedDensity& d);

/// Linear interpolation between bracketing grid points, with clamped
/// extrapolation: values[0] below the grid, values[m-1] above it.
double eval_linear(const Grid1D& grid, std::span<const double> values, double x);

}  // namespace copmix
