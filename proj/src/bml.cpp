#include "genlap/bml.hpp"

#include <cmath>

#include "genlap/basedist.hpp"
#include "genlap/generators.hpp"
#include "genlap/rng.hpp"
#include "genlap/specfun.hpp"

namespace genlap {

namespace {

void validate(const BmlParams& q) {
    if (!(q.alpha > 0.0) || !std::isfinite(q.alpha)) {
        throw std::domain_error("alpha must be positive and finite");
    }
    if (!(q.beta > 0.0) || !std::isfinite(q.beta)) {
        throw std::domain_error("beta must be positive and finite");
    }
    if (!(q.p >= 0.0 && q.p <= 1.0)) throw std::domain_error("p must lie in [0,1]");
    if (!std::isfinite(q.mu)) throw std::domain_error("mu must be finite");
    if (!(q.sigma > 0.0) || !std::isfinite(q.sigma)) {
        throw std::domain_error("sigma must be positive and finite");
    }
}

// eps = (1/2) e^{-|z|} is the Laplace density height at |z|; every branch
// formula below is written in it.
double eps_of(double z) { return 0.5 * std::exp(-std::fabs(z)); }

double std_pdf(double a, double b, double p, double z) {
    const double e = eps_of(z);
    double acc = 0.0;
    if (z < 0.0) {
        if (p > 0.0) acc += p * a * std::pow(e, a);
        if (p < 1.0) acc += (1.0 - p) * b * std::pow(1.0 - e, b - 1.0) * e;
    } else {
        if (p > 0.0) acc += p * a * std::pow(1.0 - e, a - 1.0) * e;
        if (p < 1.0) acc += (1.0 - p) * b * std::pow(e, b);
    }
    return acc;
}

double std_cdf(double a, double b, double p, double z) {
    const double e = eps_of(z);
    if (z < 0.0) {
        double acc = 0.0;
        if (p > 0.0) acc += p * std::pow(e, a);
        if (p < 1.0) acc -= (1.0 - p) * std::expm1(b * std::log1p(-e));
        return acc;
    }
    return 1.0 - (p > 0.0 ? p * -std::expm1(a * std::log1p(-e)) : 0.0) -
           (p < 1.0 ? (1.0 - p) * std::pow(e, b) : 0.0);
}

double std_survival(double a, double b, double p, double z) {
    const double e = eps_of(z);
    if (z < 0.0) {
        double acc = 0.0;
        if (p > 0.0) acc += p * (1.0 - std::pow(e, a));
        if (p < 1.0) acc += (1.0 - p) * std::exp(b * std::log1p(-e));
        return acc;
    }
    double acc = 0.0;
    if (p > 0.0) acc += p * -std::expm1(a * std::log1p(-e));
    if (p < 1.0) acc += (1.0 - p) * std::pow(e, b);
    return acc;
}

double laplace_std_quantile(double u) {
    return u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
}

// Component mgfs of the standard case. m1 is finite on -a < t < 1, m2 on
// -1 < t < b; the mixture domain is their intersection.
double mgf_left(double a, double t) {
    const double head = a * std::pow(0.5, a) / (t + a);
    const double tail = a * beta_fn(a, 1.0 - t) * std::pow(2.0, -t) *
                        (1.0 - reg_inc_beta(0.5, a, 1.0 - t));
    return head + tail;
}

double mgf_right(double b, double t) {
    const double head = b * std::pow(0.5, b) / (b - t);
    const double tail = b * beta_fn(b, 1.0 + t) * std::pow(2.0, t) *
                        (1.0 - reg_inc_beta(0.5, b, 1.0 + t));
    return head + tail;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

double binom_int(int n, int j) {
    double v = 1.0;
    for (int i = 1; i <= j; ++i) v = v * (n - j + i) / i;
    return v;
}

} // namespace

double bml_pdf(const BmlParams& params, double x) {
    validate(params);
    const double z = (x - params.mu) / params.sigma;
    return std_pdf(params.alpha, params.beta, params.p, z) / params.sigma;
}

double bml_cdf(const BmlParams& params, double x) {
    validate(params);
    const double z = (x - params.mu) / params.sigma;
    return std_cdf(params.alpha, params.beta, params.p, z);
}

double bml_survival(const BmlParams& params, double x) {
    validate(params);
    const double z = (x - params.mu) / params.sigma;
    return std_survival(params.alpha, params.beta, params.p, z);
}

double bml_hazard(const BmlParams& params, double x) {
    const double r = bml_survival(params, x);
    if (r <= 0.0) {
        throw numerical_error("bml_hazard: survival underflowed to zero");
    }
    return bml_pdf(params, x) / r;
}

double bml_quantile(const BmlParams& params, double q) {
    validate(params);
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("quantile: q outside (0,1)");
    const double a = params.alpha, b = params.beta, p = params.p;
    auto cdf = [a, b, p](double z) { return std_cdf(a, b, p, z); };
    const double kInf = std::numeric_limits<double>::infinity();
    const double z = invert_monotone_cdf(cdf, q, {-kInf, kInf}, -60.0, 60.0, 1e-12);
    return params.mu + params.sigma * z;
}

MgfDomain bml_mgf_domain(const BmlParams& params) {
    validate(params);
    return {-std::min(1.0, params.alpha) / params.sigma,
            std::min(1.0, params.beta) / params.sigma};
}

double bml_mgf(const BmlParams& params, double t) {
    validate(params);
    const double ts = params.sigma * t; // standard-case argument
    const double lo = -std::min(1.0, params.alpha);
    const double hi = std::min(1.0, params.beta);
    if (!(ts > lo + 1e-9 && ts < hi - 1e-9)) {
        throw std::domain_error("bml_mgf: t outside the finite domain");
    }
    double m = 0.0;
    if (params.p > 0.0) m += params.p * mgf_left(params.alpha, ts);
    if (params.p < 1.0) m += (1.0 - params.p) * mgf_right(params.beta, ts);
    return std::exp(t * params.mu) * m;
}

double bml_mgf_integer(int m, int n, double p, double t) {
    if (m < 1 || n < 1) throw std::domain_error("integer shapes must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0,1]");
    const double lo = -std::min(1.0, static_cast<double>(m));
    const double hi = std::min(1.0, static_cast<double>(n));
    if (!(t > lo && t < hi)) {
        throw std::domain_error("bml_mgf_integer: t outside the finite domain");
    }

    double left = std::pow(0.5, m) * m / (m + t);
    for (int j = 0; j <= m - 1; ++j) {
        left += 0.5 * m * binom_int(m - 1, j) * ((j % 2) ? -1.0 : 1.0) *
                std::pow(0.5, j) / (1.0 + j - t);
    }
    double right = std::pow(0.5, n) * n / (n - t);
    for (int j = 0; j <= n - 1; ++j) {
        right += 0.5 * n * binom_int(n - 1, j) * ((j % 2) ? -1.0 : 1.0) *
                 std::pow(0.5, j) / (1.0 + j + t);
    }
    return p * left + (1.0 - p) * right;
}

double bml_moment_integer(int m, int n, double p, int k) {
    if (m < 1 || n < 1) throw std::domain_error("integer shapes must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0,1]");
    if (k < 1) throw std::domain_error("moment order must be >= 1");

    const double sign_k = (k % 2) ? -1.0 : 1.0;
    double sum_m = 0.0;
    for (int j = 0; j <= m - 1; ++j) {
        sum_m += binom_int(m - 1, j) * ((j % 2) ? -1.0 : 1.0) /
                 (std::pow(2.0, j) * std::pow(j + 1.0, k + 1.0));
    }
    const double left =
        factorial(k) * (sign_k / (std::pow(2.0, m) * std::pow(m, k)) + 0.5 * m * sum_m);

    double sum_n = 0.0;
    for (int j = 0; j <= n - 1; ++j) {
        sum_n += binom_int(n - 1, j) * ((j % 2) ? -1.0 : 1.0) /
                 (std::pow(2.0, j) * std::pow(j + 1.0, k + 1.0));
    }
    const double right = factorial(k) * (1.0 / (std::pow(2.0, n) * std::pow(n, k)) +
                                         0.5 * n * sign_k * sum_n);

    return p * left + (1.0 - p) * right;
}

double bml_series_pdf(const BmlParams& params, double x, int terms,
                      double* truncation) {
    validate(params);
    if (terms < 1) throw std::domain_error("terms must be >= 1");
    const double a = params.alpha, b = params.beta, p = params.p;
    const double z = (x - params.mu) / params.sigma;
    const double e = eps_of(z);
    const double F = z < 0.0 ? e : 1.0 - e;
    const double f = e / params.sigma;

    // Double sum in long double: the inner alternating block cancels hard
    // for large j, so extra precision buys usable depth.
    const long double Fl = F;
    long double bracket = 0.0L;
    long double peak = 0.0L;
    long double last_j_block = 0.0L;
    for (int j = 0; j < terms; ++j) {
        const double wj = p * a * gen_binom(a - 1.0, j);
        if (wj == 0.0) {
            last_j_block = 0.0L;
            continue;
        }
        long double inner = 0.0L;
        long double fk = 1.0L; // F^k
        for (int k = 0; k <= j; ++k) {
            const long double term =
                (((j + k) % 2) ? -1.0L : 1.0L) * wj * binom_int(j, k) * fk;
            inner += term;
            peak = std::max(peak, std::fabs(term));
            fk *= Fl;
        }
        bracket += inner;
        last_j_block = inner;
    }
    long double last_i_term = 0.0L;
    long double fi = 1.0L;
    for (int i = 0; i < terms; ++i) {
        const double wi = (1.0 - p) * b * gen_binom(b - 1.0, i);
        last_i_term = ((i % 2) ? -1.0L : 1.0L) * wi * fi;
        bracket += last_i_term;
        peak = std::max(peak, std::fabs(last_i_term));
        fi *= Fl;
    }
    if (truncation) {
        const long double roundoff = peak * 1.1e-19L * (terms + 1);
        *truncation = static_cast<double>(
            (std::fabs(last_j_block) + std::fabs(last_i_term) + roundoff) * f);
    }
    return static_cast<double>(bracket) * f;
}

std::vector<double> bml_sample(const BmlParams& params, std::size_t n,
                               std::uint64_t seed) {
    validate(params);
    if (n < 1) throw std::domain_error("bml_sample: requires n >= 1");
    SplitMix64 rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.next_unit();
        const double v = rng.next_unit(); // fresh draw for the quantile
        double t;
        if (u < params.p) {
            t = std::exp(std::log(v) / params.alpha); // Beta(alpha, 1)
        } else {
            t = -std::expm1(std::log1p(-v) / params.beta); // Beta(1, beta)
        }
        out.push_back(params.mu + params.sigma * laplace_std_quantile(t));
    }
    return out;
}

GeneratedDistribution bml_distribution(const BmlParams& params) {
    validate(params);
    return compose(laplace({params.mu, params.sigma}),
                   bm_gen({params.alpha, params.beta, params.p}));
}

} // namespace genlap
