#pragma once

#include <vector>

namespace genlap {

struct ShapeEstimate {
    double alpha_hat;
    double beta_hat;
};

// Exact maximizer of each component likelihood for one observation of the
// standard (mu = 0, sigma = 1) beta-mixture Laplace law. Both closed forms
// follow from d/dt [log t + t * log c] = 0.
ShapeEstimate mle_single(double x);

// Sum of log densities of the standard mixture. Returns -inf when any
// observation lands where the density underflows to zero.
double log_likelihood(const std::vector<double>& data, double alpha, double beta,
                      double p);

struct FitResult {
    double alpha_hat;
    double beta_hat;
    std::vector<double> weights;        // nonnegative, sum to one
    std::vector<ShapeEstimate> per_obs; // candidate estimate from each observation
    double log_lik;                     // full-sample log-likelihood at the combined estimate
};

// Likelihood-weighted combination of the per-observation closed-form
// estimates: each candidate pair is scored by the full-sample log-likelihood
// and the shapes are averaged under the normalized weights. The mixing
// proportion p is treated as known. Costs O(n^2) density evaluations.
FitResult fit_weighted(const std::vector<double>& data, double p);

} // namespace genlap
