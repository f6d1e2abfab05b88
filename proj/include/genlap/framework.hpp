#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "genlap/errors.hpp"
#include "genlap/specfun.hpp"

namespace genlap {

// Distribution of a variable T on (0,1) used to reshape a base law.
// Invariants: cdf(0)=0, cdf(1)=1, cdf nondecreasing; quantile is a right
// inverse of cdf.
struct GeneratorDistribution {
    std::function<double(double)> pdf;      // h on (0,1)
    std::function<double(double)> cdf;      // H on [0,1]
    std::function<double(double)> quantile; // H^{-1} on [0,1]
    std::string name;
};

// Base law F with closed-form quantile.
struct UnivariateDistribution {
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    std::function<double(double)> quantile;
    RealInterval support;
    std::string name;
};

// Law of F^{-1}(T): cdf G(y) = H(F(y)), pdf g(y) = h(F(y)) f(y).
// Inherits the base support.
class GeneratedDistribution {
public:
    GeneratedDistribution(UnivariateDistribution base, GeneratorDistribution gen);

    double pdf(double x) const;
    double cdf(double x) const;
    const RealInterval& support() const { return base_.support; }
    const std::string& name() const { return name_; }
    const UnivariateDistribution& base() const { return base_; }
    const GeneratorDistribution& generator() const { return gen_; }

private:
    UnivariateDistribution base_;
    GeneratorDistribution gen_;
    std::string name_;
};

GeneratedDistribution compose(UnivariateDistribution base, GeneratorDistribution gen);

// Weighted mixture of generators: pdf/cdf are the weighted sums, quantile is
// numeric inversion of the mixed cdf. Weights must be positive and sum to 1
// within 1e-12. A single component with weight 1 is returned unchanged.
GeneratorDistribution
mix_generators(std::vector<std::pair<double, GeneratorDistribution>> parts);

// n inverse-transform draws: y = F^{-1}(H^{-1}(u)) with u uniform on (0,1).
// Deterministic for a given seed; n must be >= 1.
std::vector<double> sample_inverse(const GeneratedDistribution& dist, std::size_t n,
                                   std::uint64_t seed);

// Solves G(y) = q for q in (0,1): bracket expansion from [-50, 50] clipped to
// the support, then bisection until |G(y) - q| <= 1e-10.
double numeric_quantile(const GeneratedDistribution& dist, double q);

// k-th raw moment by adaptive quadrature split at the base median, absolute
// accuracy target 1e-8. Throws numerical_error when the tail probe or the
// quadrature fails to converge (e.g. the moment does not exist).
double numeric_moment(const GeneratedDistribution& dist, int k);

// --- shared numeric kernels ---

// Adaptive Gauss-Kronrod 15(7) integration; lo/hi may be +-infinity (mapped
// through t/(1-t) tail transforms). Throws numerical_error when the error
// estimate cannot be brought below tol.
double integrate(const std::function<double(double)>& f, double lo, double hi, double tol);

// Bisection inverse of a nondecreasing cdf on `support`, started from
// [init_lo, init_hi] and expanded outward until the bracket straddles q.
// Stops when |cdf(x) - q| <= tol_q or the bracket is at roundoff width.
double invert_monotone_cdf(const std::function<double(double)>& cdf, double q,
                           RealInterval support, double init_lo, double init_hi,
                           double tol_q);

} // namespace genlap
