#pragma once

#include <string>
#include <vector>

#include "genlap/framework.hpp"

namespace genlap {

// Scale/shape parameters must be positive and finite; locations finite.
// Violations raise std::domain_error. All densities evaluate to 0 below the
// support and cdfs clamp to {0,1}, so grid sweeps are total. Quantiles
// require u in (0,1).

struct LaplaceParams {
    double mu = 0.0;
    double sigma = 1.0;
};
struct ExponentialParams { double lambda; };
struct WeibullParams { double c; double lambda; };
struct GumbelParams { double mu; double sigma; };
struct ParetoParams { double theta; double k; };     // support [theta, inf)
struct RayleighParams { double sigma; };
struct LindleyParams { double theta; };
struct LogLogisticParams { double alpha; double gamma; };
struct HalfCauchyParams { double phi; };
struct NormalParams { double mu; double sigma; };
struct CauchyParams { double theta; double lambda; };

UnivariateDistribution laplace(const LaplaceParams& params = {});
UnivariateDistribution exponential(const ExponentialParams& params);
UnivariateDistribution weibull(const WeibullParams& params);
UnivariateDistribution gumbel(const GumbelParams& params);
UnivariateDistribution pareto(const ParetoParams& params);
UnivariateDistribution rayleigh(const RayleighParams& params);
UnivariateDistribution lindley(const LindleyParams& params);     // numeric quantile
UnivariateDistribution log_logistic(const LogLogisticParams& params);
UnivariateDistribution half_cauchy(const HalfCauchyParams& params);
UnivariateDistribution normal(const NormalParams& params);
UnivariateDistribution cauchy(const CauchyParams& params);

// Name-keyed constructor with positional parameters:
//   exponential{lambda}        weibull{c, lambda}     gumbel{mu, sigma}
//   pareto{theta, k}           rayleigh{sigma}        lindley{theta}
//   log-logistic{alpha, gamma} half-cauchy{phi}       normal{mu, sigma}
//   cauchy{theta, lambda}      laplace{mu, sigma}
UnivariateDistribution make_family(const std::string& name,
                                   const std::vector<double>& params);

// Families accepted by make_family, in registration order.
const std::vector<std::string>& family_names();

// Inverse standard normal cdf (rational approximation plus one Halley
// refinement, |error| < 1e-14 over (0,1)).
double probit(double u);

} // namespace genlap
