#pragma once

#include <span>
#include <utility>
#include <vector>

namespace copmix {

/// FGM dependence parameter, constrained to [-1, 1] so the copula density
/// stays non-negative.
struct CopulaParam {
  double theta = 0.0;
  CopulaParam() = default;
  explicit CopulaParam(double value);
};

using CopulaParamVector = std::vector<CopulaParam>;

/// FGM copula density c(u, v; theta) = 1 + theta (1 - 2u)(1 - 2v).
double fgm_density(double u, double v, CopulaParam theta);

/// Exact FGM draw by conditional inversion: u = w1 and v solves the
/// conditional CDF equation given u. With a = theta (1 - 2u):
///   v = ((1+a) - sqrt((1+a)^2 - 4 a w2)) / (2a),  v = w2 when a ~ 0.
std::pair<double, double> fgm_sample(CopulaParam theta, double w1, double w2);

/// Weighted maximum-likelihood update of the FGM parameter: maximizes
/// sum_i weights[i] * log(1 + theta a_i), a_i = (1-2u_i)(1-2v_i), over
/// theta in [-1 + bound_eps, 1 - bound_eps] by golden-section search
/// (the objective is concave). A flat objective ties to theta = 0.
CopulaParam update_theta(std::span<const std::pair<double, double>> us,
                         std::span<const double> weights, double bound_eps);

/// Family interface the fit engine is written against. Only the bivariate
/// FGM family is provided; other families plug in behind this surface.
class CopulaFamily {
 public:
  virtual ~CopulaFamily() = default;
  virtual double log_density(std::span<const double> u, double theta) const = 0;
  virtual std::pair<double, double> sample(double theta, double w1, double w2) const = 0;
  virtual double fit_weighted(std::span<const std::pair<double, double>> us,
                              std::span<const double> weights,
                              double bound_eps) const = 0;
};

class FgmCopula final : public CopulaFamily {
 public:
  double log_density(std::span<const double> u, double theta) const override;
  std::pair<double, double> sample(double theta, double w1, double w2) const override;
  double fit_weighted(std::span<const std::pair<double, double>> us,
                      std::span<const double> weights,
                      double bound_eps) const override;
};

/// Shared immutable FGM instance.
const CopulaFamily& fgm_copula();

}  // namespace copmix
