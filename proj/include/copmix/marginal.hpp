#pragma once

#include <span>
#include <vector>

#include "copmix/grid.hpp"
#include "copmix/kernel.hpp"

namespace copmix {

/// Per-component, per-dimension marginal densities with their CDFs and the
/// (fixed) bandwidths used to smooth and update them. Indexed [k][j].
struct MarginalSet {
  std::vector<std::vector<GriddedDensity>> densities;
  std::vector<std::vector<GriddedCdf>> cdfs;
  std::vector<std::vector<Bandwidth>> bandwidths;

  int components() const { return static_cast<int>(densities.size()); }
  int dims() const { return densities.empty() ? 0 : static_cast<int>(densities[0].size()); }
};

/// Weighted kernel-density update: values[g] is proportional to
/// sum_i weights[i] * K_h(data[i] - grid_point[g]), normalized to mass one.
/// Throws EmptyComponentError when the total weight is at most 1e-12
/// (a dead cluster; the caller decides how to recover).
GriddedDensity update_marginal(std::span<const double> data_col,
                               std::span<const double> weights_col,
                               Bandwidth h, const Grid1D& grid);

/// CDF evaluated at x by clamped linear interpolation, then clamped into
/// [1e-10, 1 - 1e-10] so copula densities stay well-defined.
double push_forward(const GriddedCdf& cdf, double x);

/// Recompute every CDF from its density. Call after replacing densities.
void refresh_cdfs(MarginalSet& set);

}  // namespace copmix
