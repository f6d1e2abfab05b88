#pragma once

#include <cstdint>
#include <vector>

#include "genlap/framework.hpp"

namespace genlap {

// Beta-mixture Laplace law: a standard Laplace base reshaped by the
// two-component generator H(t) = p t^alpha + (1-p)(1 - (1-t)^beta), then
// shifted and scaled. alpha, beta > 0; p in [0,1]; sigma > 0.
struct BmlParams {
    double alpha;
    double beta;
    double p;
    double mu = 0.0;
    double sigma = 1.0;
};

// Open interval on which the standard-case mgf is finite.
struct MgfDomain {
    double lo; // -min(1, alpha)
    double hi; //  min(1, beta)
};

double bml_pdf(const BmlParams& params, double x);
double bml_cdf(const BmlParams& params, double x);

// Survival is evaluated branch-wise in its own closed form, never as
// 1 - cdf, so the right tail keeps full relative accuracy.
double bml_survival(const BmlParams& params, double x);

// hazard = pdf / survival. Throws numerical_error once survival underflows
// to zero (x far beyond the representable right tail).
double bml_hazard(const BmlParams& params, double x);

// Numeric inversion of the cdf; |cdf(result) - q| <= 1e-12.
double bml_quantile(const BmlParams& params, double q);

// Mgf domain in caller units: the standard-case interval divided by sigma.
MgfDomain bml_mgf_domain(const BmlParams& params);

// Closed-form mgf. For the location-scale case this is
// exp(t mu) * M_std(sigma t). Throws std::domain_error when sigma*t is
// outside the open domain or within 1e-9 of an endpoint (the value grows
// without bound there).
double bml_mgf(const BmlParams& params, double t);

// Finite binomial-sum mgf for integer shapes m, n >= 1;
// domain -min(1,m) < t < min(1,n), endpoints excluded.
double bml_mgf_integer(int m, int n, double p, double t);

// k-th raw moment, standard case, integer shapes.
double bml_moment_integer(int m, int n, double p, int k);

// Truncated double-series expansion of the density (terms blocks of each
// component sum). Converges to bml_pdf as terms grows, and terminates
// exactly for integer shapes. If truncation is non-null it receives an
// estimate of the neglected tail plus accumulated roundoff.
double bml_series_pdf(const BmlParams& params, double x, int terms,
                      double* truncation = nullptr);

// Exact mixture sampler: one uniform selects the component, a fresh
// independent uniform feeds that component's closed-form quantile, and the
// Laplace quantile maps the result onto the real line.
std::vector<double> bml_sample(const BmlParams& params, std::size_t n,
                               std::uint64_t seed);

// The same law assembled through the generic composition path.
GeneratedDistribution bml_distribution(const BmlParams& params);

} // namespace genlap
