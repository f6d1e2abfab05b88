#include "genlap/generators.hpp"

#include <cmath>

#include "genlap/specfun.hpp"

namespace genlap {

namespace {

void require_shape(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be positive and finite");
    }
}

// pdf evaluations outside [0,1] return 0; cdf evaluations clamp to {0,1}.
// At the endpoints the IEEE pow limits (0^0 = 1, 0^negative = +inf) yield
// the correct one-sided density limits, so no special casing is needed.
bool below(double t) { return t < 0.0; }
bool above(double t) { return t > 1.0; }

} // namespace

GeneratorDistribution uniform_gen() {
    GeneratorDistribution g;
    g.pdf = [](double t) { return (below(t) || above(t)) ? 0.0 : 1.0; };
    g.cdf = [](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        return t;
    };
    g.quantile = [](double u) {
        if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
        return u;
    };
    g.name = "uniform";
    return g;
}

GeneratorDistribution beta_gen(const BetaGenParams& params) {
    require_shape(params.alpha, "alpha");
    require_shape(params.beta, "beta");
    const double a = params.alpha, b = params.beta;
    const double norm = beta_fn(a, b);

    GeneratorDistribution g;
    g.pdf = [a, b, norm](double t) {
        if (below(t) || above(t)) return 0.0;
        return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0) / norm;
    };
    g.cdf = [a, b](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        return reg_inc_beta(t, a, b);
    };
    g.quantile = [a, b](double u) {
        if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
        if (u == 0.0) return 0.0;
        if (u == 1.0) return 1.0;
        if (b == 1.0) return std::pow(u, 1.0 / a);
        if (a == 1.0) return -std::expm1(std::log1p(-u) / b);
        return inv_reg_inc_beta(u, a, b);
    };
    g.name = "beta";
    return g;
}

GeneratorDistribution kumaraswamy_gen(const KumGenParams& params) {
    require_shape(params.a, "a");
    require_shape(params.b, "b");
    const double a = params.a, b = params.b;

    GeneratorDistribution g;
    g.pdf = [a, b](double t) {
        if (below(t) || above(t)) return 0.0;
        return a * b * std::pow(t, a - 1.0) * std::pow(1.0 - std::pow(t, a), b - 1.0);
    };
    g.cdf = [a, b](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        return -std::expm1(b * std::log1p(-std::pow(t, a)));
    };
    g.quantile = [a, b](double u) {
        if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
        return std::pow(-std::expm1(std::log1p(-u) / b), 1.0 / a);
    };
    g.name = "kum";
    return g;
}

GeneratorDistribution power_gen(double alpha) {
    require_shape(alpha, "alpha");
    GeneratorDistribution g;
    g.pdf = [alpha](double t) {
        if (below(t) || above(t)) return 0.0;
        return alpha * std::pow(t, alpha - 1.0);
    };
    g.cdf = [alpha](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        return std::pow(t, alpha);
    };
    g.quantile = [alpha](double u) {
        if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
        return std::pow(u, 1.0 / alpha);
    };
    g.name = "power";
    return g;
}

GeneratorDistribution reflected_power_gen(double beta) {
    require_shape(beta, "beta");
    GeneratorDistribution g;
    g.pdf = [beta](double t) {
        if (below(t) || above(t)) return 0.0;
        return beta * std::pow(1.0 - t, beta - 1.0);
    };
    g.cdf = [beta](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        return -std::expm1(beta * std::log1p(-t));
    };
    g.quantile = [beta](double u) {
        if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
        return -std::expm1(std::log1p(-u) / beta);
    };
    g.name = "reflected-power";
    return g;
}

GeneratorDistribution bm_gen(const BmGenParams& params) {
    require_shape(params.alpha, "alpha");
    require_shape(params.beta, "beta");
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw std::domain_error("p must lie in [0,1]");
    }
    const double a = params.alpha, b = params.beta, p = params.p;

    GeneratorDistribution g;
    g.pdf = [a, b, p](double t) {
        if (below(t) || above(t)) return 0.0;
        double acc = 0.0;
        if (p > 0.0) acc += p * a * std::pow(t, a - 1.0);
        if (p < 1.0) acc += (1.0 - p) * b * std::pow(1.0 - t, b - 1.0);
        return acc;
    };
    g.cdf = [a, b, p](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return 1.0;
        double acc = 0.0;
        if (p > 0.0) acc += p * std::pow(t, a);
        if (p < 1.0) acc -= (1.0 - p) * std::expm1(b * std::log1p(-t));
        return acc;
    };
    auto cdf_copy = g.cdf;
    g.quantile = [a, b, p, cdf_copy](double u) {
        if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
        if (u == 0.0) return 0.0;
        if (u == 1.0) return 1.0;
        if (p == 1.0) return std::pow(u, 1.0 / a);
        if (p == 0.0) return -std::expm1(std::log1p(-u) / b);
        return invert_monotone_cdf(cdf_copy, u, {0.0, 1.0}, 0.0, 1.0, 1e-13);
    };
    g.name = "bm";
    return g;
}

} // namespace genlap
