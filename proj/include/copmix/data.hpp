#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace copmix {

/// Dense row-major n-by-d matrix of observations.
struct DataMatrix {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<double> values;  // row-major, n*d entries

  DataMatrix() = default;
  DataMatrix(std::size_t rows, std::size_t cols)
      : n(rows), d(cols), values(rows * cols, 0.0) {}

  double operator()(std::size_t i, std::size_t j) const { return values[i * d + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values[i * d + j]; }

  std::span<const double> row(std::size_t i) const { return {values.data() + i * d, d}; }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = values[i * d + j];
    return col;
  }
};

}  // namespace copmix
