#include "genlap/specfun.hpp"

#include <cmath>
#include <limits>

namespace genlap {

namespace {

void require_finite(double x, const char* what) {
    if (std::isnan(x)) throw std::domain_error(std::string(what) + ": NaN argument");
}

// Lanczos approximation, g = 7, 9 terms (Godfrey's coefficient set).
// For z >= 0.5:  lgamma(z) = log(sqrt(2 pi)) + (z-0.5) log(t) - t + log(A(z)),
// t = z + g - 0.5, A(z) = c0 + sum_i c_i / (z - 1 + i).
// Empirical relative error of the exp'd value is below 1e-13 on [0.5, 1e3];
// the reflection formula extends that to (0, 0.5).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_lgamma(double z) {
    if (z < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return std::log(M_PI / std::sin(M_PI * z)) - lanczos_lgamma(1.0 - z);
    }
    const double zm1 = z - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (zm1 + i);
    const double t = zm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (zm1 + 0.5) * std::log(t) - t + std::log(a);
}

// Continued fraction for I_x(a,b), modified Lentz algorithm. Converges
// rapidly for x < (a+1)/(a+b+2); the caller switches to the symmetric form
// outside that region.
double ibeta_cf(double x, double a, double b) {
    constexpr double eps = 1e-16;
    constexpr double fpmin = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) return h;
    }
    throw numerical_error("reg_inc_beta: continued fraction did not converge");
}

double beta_pdf(double x, double a, double b, double log_beta) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta);
}

} // namespace

double log_gamma(double x) {
    require_finite(x, "log_gamma");
    if (x <= 0.0) throw std::domain_error("log_gamma: requires x > 0");
    return lanczos_lgamma(x);
}

double beta_fn(double a, double b) {
    require_finite(a, "beta_fn");
    require_finite(b, "beta_fn");
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("beta_fn: requires a, b > 0");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double reg_inc_beta(double x, double a, double b) {
    require_finite(x, "reg_inc_beta");
    require_finite(a, "reg_inc_beta");
    require_finite(b, "reg_inc_beta");
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("reg_inc_beta: requires a, b > 0");
    if (x < 0.0 || x > 1.0) throw std::domain_error("reg_inc_beta: requires x in [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front = std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b)
                                  + a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * ibeta_cf(x, a, b) / a;
    }
    // I_x(a,b) = 1 - I_{1-x}(b,a)
    return 1.0 - std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b)
                          + b * std::log1p(-x) + a * std::log(x))
                     * ibeta_cf(1.0 - x, b, a) / b;
}

double inv_reg_inc_beta(double q, double a, double b) {
    require_finite(q, "inv_reg_inc_beta");
    require_finite(a, "inv_reg_inc_beta");
    require_finite(b, "inv_reg_inc_beta");
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("inv_reg_inc_beta: requires a, b > 0");
    if (q < 0.0 || q > 1.0) throw std::domain_error("inv_reg_inc_beta: requires q in [0,1]");
    if (q == 0.0) return 0.0;
    if (q == 1.0) return 1.0;

    const double log_beta = log_gamma(a) + log_gamma(b) - log_gamma(a + b);
    double lo = 0.0, hi = 1.0;
    double x = a / (a + b); // mean as the starting point
    for (int it = 0; it < 200; ++it) {
        const double f = reg_inc_beta(x, a, b) - q;
        if (std::fabs(f) <= 1e-13) return x;
        if (f > 0.0) hi = x; else lo = x;
        const double d = beta_pdf(x, a, b, log_beta);
        double step_x = x - f / d; // Newton, bisection fallback outside the bracket
        if (!(d > 0.0) || step_x <= lo || step_x >= hi) step_x = 0.5 * (lo + hi);
        if (step_x == x) break;
        x = step_x;
    }
    return x;
}

double erf(double x) {
    require_finite(x, "erf");
    return std::erf(x);
}

double gen_binom(double r, int k) {
    require_finite(r, "gen_binom");
    if (k < 0) throw std::domain_error("gen_binom: requires k >= 0");
    double out = 1.0;
    for (int i = 0; i < k; ++i) out *= (r - i) / (i + 1);
    return out;
}

} // namespace genlap
