#pragma once

#include "genlap/framework.hpp"

namespace genlap {

// Shape parameters must be positive and finite; mixing weight p lies in
// [0,1]. Violations raise std::domain_error at construction time.

struct BetaGenParams {
    double alpha;
    double beta;
};

struct KumGenParams {
    double a;
    double b;
};

struct BmGenParams {
    double alpha;
    double beta;
    double p;
};

// T ~ Uniform(0,1): composing with it returns the base law unchanged.
GeneratorDistribution uniform_gen();

// T ~ Beta(alpha, beta). Quantile is closed form when either shape is 1,
// otherwise the regularized incomplete beta inverse.
GeneratorDistribution beta_gen(const BetaGenParams& params);

// T ~ Kumaraswamy(a, b): H(t) = 1 - (1 - t^a)^b, fully closed form.
GeneratorDistribution kumaraswamy_gen(const KumGenParams& params);

// H(t) = t^alpha, the Beta(alpha, 1) law.
GeneratorDistribution power_gen(double alpha);

// H(t) = 1 - (1-t)^beta, the Beta(1, beta) law.
GeneratorDistribution reflected_power_gen(double beta);

// Two-component mixture H(t) = p t^alpha + (1-p)(1 - (1-t)^beta). Quantile
// is closed form at p = 0 or 1 and numeric inversion otherwise.
GeneratorDistribution bm_gen(const BmGenParams& params);

} // namespace genlap
