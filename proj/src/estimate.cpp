#include "genlap/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "genlap/bml.hpp"
#include "genlap/errors.hpp"

namespace genlap {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

} // namespace

ShapeEstimate mle_single(double x) {
    if (!std::isfinite(x)) throw std::domain_error("mle_single: observation must be finite");
    const double e = 0.5 * std::exp(-std::fabs(x)); // in (0, 1/2]
    // "inner" maximizes t * c^t against c = e, "outer" against c = 1 - e;
    // which component each belongs to swaps across the median.
    const double inner = -1.0 / std::log(e);
    const double outer = -1.0 / std::log1p(-e);
    if (x < 0.0) return {inner, outer};
    return {outer, inner};
}

double log_likelihood(const std::vector<double>& data, double alpha, double beta,
                      double p) {
    const BmlParams q{alpha, beta, p};
    double sum = 0.0;
    for (double x : data) {
        if (!std::isfinite(x)) throw std::domain_error("log_likelihood: observation must be finite");
        sum += std::log(bml_pdf(q, x)); // log(0) = -inf propagates, by design
    }
    return sum;
}

FitResult fit_weighted(const std::vector<double>& data, double p) {
    if (data.empty()) throw std::domain_error("fit_weighted: data is empty");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("fit_weighted: p must lie in [0, 1]");
    const std::size_t n = data.size();

    FitResult out;
    out.per_obs.reserve(n);
    for (double x : data) out.per_obs.push_back(mle_single(x));

    std::vector<double> score(n, kNegInf);
    for (std::size_t i = 0; i < n; ++i) {
        const ShapeEstimate& c = out.per_obs[i];
        // an extreme observation can push a candidate to 0 or infinity, where
        // the likelihood limit is zero; such candidates simply drop out
        if (!(std::isfinite(c.alpha_hat) && c.alpha_hat > 0.0)) continue;
        if (!(std::isfinite(c.beta_hat) && c.beta_hat > 0.0)) continue;
        score[i] = log_likelihood(data, c.alpha_hat, c.beta_hat, p);
    }

    const double top = *std::max_element(score.begin(), score.end());
    if (!(top > kNegInf)) {
        throw numerical_error("fit_weighted: every candidate has zero likelihood");
    }

    out.weights.resize(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.weights[i] = std::exp(score[i] - top);
        norm += out.weights[i];
    }
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.weights[i] /= norm;
        if (out.weights[i] == 0.0) continue; // keeps 0 * inf out of the averages
        a += out.weights[i] * out.per_obs[i].alpha_hat;
        b += out.weights[i] * out.per_obs[i].beta_hat;
    }
    out.alpha_hat = a;
    out.beta_hat = b;
    out.log_lik = log_likelihood(data, a, b, p);
    return out;
}

} // namespace genlap
