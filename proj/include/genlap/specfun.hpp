#pragma once

#include "genlap/errors.hpp"

namespace genlap {

// Support of a distribution; endpoints may be +-infinity.
struct RealInterval {
    double lo;
    double hi;
};

// log Gamma(x) for x > 0. Relative accuracy <= 1e-12 on [1e-3, 1e3]
// (Lanczos approximation; see specfun.cpp for the coefficient set).
double log_gamma(double x);

// Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta_fn(double a, double b);

// Regularized incomplete beta I_x(a,b) for x in [0,1], a,b > 0.
// Absolute accuracy <= 1e-12.
double reg_inc_beta(double x, double a, double b);

// Inverse of reg_inc_beta in x: returns x with |I_x(a,b) - q| <= 1e-12.
double inv_reg_inc_beta(double q, double a, double b);

// Error function. NaN input is rejected (domain error), like every function
// in this header.
double erf(double x);

// Generalized binomial coefficient r(r-1)...(r-k+1)/k!, gen_binom(r,0) = 1.
double gen_binom(double r, int k);

} // namespace genlap
