#include "genlap/basedist.hpp"

#include <cmath>
#include <limits>

namespace genlap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be positive and finite");
    }
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be finite");
    }
}

double checked_u(double u) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("quantile: u outside (0,1)");
    return u;
}

} // namespace

double probit(double u) {
    checked_u(u);
    // Acklam's rational approximation (~1e-9), then one Halley step against
    // the erfc-based cdf pushes the error below 1e-14.
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (u < plow) {
        const double q = std::sqrt(-2.0 * std::log(u));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (u <= 1.0 - plow) {
        const double q = u - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-u));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // Halley refinement: e = Phi(x) - u, with Phi via erfc for tail accuracy.
    const double kSqrt2Pi = 2.5066282746310002;
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - u;
    const double r = e * kSqrt2Pi * std::exp(0.5 * x * x);
    return x - r / (1.0 + 0.5 * x * r);
}

UnivariateDistribution laplace(const LaplaceParams& params) {
    require_finite(params.mu, "mu");
    require_positive(params.sigma, "sigma");
    const double mu = params.mu, s = params.sigma;
    UnivariateDistribution d;
    d.pdf = [mu, s](double x) { return 0.5 / s * std::exp(-std::fabs(x - mu) / s); };
    d.cdf = [mu, s](double x) {
        const double z = (x - mu) / s;
        return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
    };
    d.quantile = [mu, s](double u) {
        checked_u(u);
        const double z = u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
        return mu + s * z;
    };
    d.support = {-kInf, kInf};
    d.name = "laplace";
    return d;
}

UnivariateDistribution exponential(const ExponentialParams& params) {
    require_positive(params.lambda, "lambda");
    const double l = params.lambda;
    UnivariateDistribution d;
    d.pdf = [l](double x) { return x < 0.0 ? 0.0 : l * std::exp(-l * x); };
    d.cdf = [l](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-l * x); };
    d.quantile = [l](double u) { return -std::log1p(-checked_u(u)) / l; };
    d.support = {0.0, kInf};
    d.name = "exponential";
    return d;
}

UnivariateDistribution weibull(const WeibullParams& params) {
    require_positive(params.c, "c");
    require_positive(params.lambda, "lambda");
    const double c = params.c, l = params.lambda;
    UnivariateDistribution d;
    d.pdf = [c, l](double x) {
        if (x < 0.0) return 0.0;
        const double z = std::pow(l * x, c);
        return c * l * std::pow(l * x, c - 1.0) * std::exp(-z);
    };
    d.cdf = [c, l](double x) {
        return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(l * x, c));
    };
    d.quantile = [c, l](double u) {
        return std::pow(-std::log1p(-checked_u(u)), 1.0 / c) / l;
    };
    d.support = {0.0, kInf};
    d.name = "weibull";
    return d;
}

UnivariateDistribution gumbel(const GumbelParams& params) {
    require_finite(params.mu, "mu");
    require_positive(params.sigma, "sigma");
    const double mu = params.mu, s = params.sigma;
    UnivariateDistribution d;
    d.pdf = [mu, s](double x) {
        const double z = (x - mu) / s;
        const double e = std::exp(-z);
        if (!std::isfinite(e)) return 0.0; // exp(-e) underflows faster than e grows
        return e * std::exp(-e) / s;
    };
    d.cdf = [mu, s](double x) { return std::exp(-std::exp(-(x - mu) / s)); };
    d.quantile = [mu, s](double u) { return mu - s * std::log(-std::log(checked_u(u))); };
    d.support = {-kInf, kInf};
    d.name = "gumbel";
    return d;
}

UnivariateDistribution pareto(const ParetoParams& params) {
    require_positive(params.theta, "theta");
    require_positive(params.k, "k");
    const double th = params.theta, k = params.k;
    UnivariateDistribution d;
    d.pdf = [th, k](double x) {
        return x < th ? 0.0 : (k / th) * std::pow(x / th, -k - 1.0);
    };
    d.cdf = [th, k](double x) { return x <= th ? 0.0 : 1.0 - std::pow(x / th, -k); };
    d.quantile = [th, k](double u) { return th * std::pow(1.0 - checked_u(u), -1.0 / k); };
    d.support = {th, kInf};
    d.name = "pareto";
    return d;
}

UnivariateDistribution rayleigh(const RayleighParams& params) {
    require_positive(params.sigma, "sigma");
    const double s2 = params.sigma * params.sigma;
    UnivariateDistribution d;
    d.pdf = [s2](double x) {
        return x < 0.0 ? 0.0 : x / s2 * std::exp(-0.5 * x * x / s2);
    };
    d.cdf = [s2](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-0.5 * x * x / s2); };
    d.quantile = [s2](double u) {
        return std::sqrt(-2.0 * s2 * std::log1p(-checked_u(u)));
    };
    d.support = {0.0, kInf};
    d.name = "rayleigh";
    return d;
}

UnivariateDistribution lindley(const LindleyParams& params) {
    require_positive(params.theta, "theta");
    const double th = params.theta;
    UnivariateDistribution d;
    d.pdf = [th](double x) {
        return x < 0.0 ? 0.0 : th * th / (th + 1.0) * (1.0 + x) * std::exp(-th * x);
    };
    d.cdf = [th](double x) {
        if (x <= 0.0) return 0.0;
        return 1.0 - (1.0 + th * x / (th + 1.0)) * std::exp(-th * x);
    };
    // the inverse needs the secondary Lambert W branch, so it is numeric
    auto cdf_copy = d.cdf;
    d.quantile = [cdf_copy](double u) {
        checked_u(u);
        return invert_monotone_cdf(cdf_copy, u, {0.0, kInf}, 0.0, 16.0, 1e-13);
    };
    d.support = {0.0, kInf};
    d.name = "lindley";
    return d;
}

UnivariateDistribution log_logistic(const LogLogisticParams& params) {
    require_positive(params.alpha, "alpha");
    require_positive(params.gamma, "gamma");
    const double a = params.alpha, g = params.gamma;
    UnivariateDistribution d;
    d.pdf = [a, g](double x) {
        if (x <= 0.0) return 0.0;
        const double z = std::pow(x / a, g);
        const double den = 1.0 + z;
        return (g / a) * std::pow(x / a, g - 1.0) / (den * den);
    };
    d.cdf = [a, g](double x) {
        if (x <= 0.0) return 0.0;
        return 1.0 - 1.0 / (1.0 + std::pow(x / a, g));
    };
    d.quantile = [a, g](double u) {
        checked_u(u);
        return a * std::pow(u / (1.0 - u), 1.0 / g);
    };
    d.support = {0.0, kInf};
    d.name = "log-logistic";
    return d;
}

UnivariateDistribution half_cauchy(const HalfCauchyParams& params) {
    require_positive(params.phi, "phi");
    const double ph = params.phi;
    UnivariateDistribution d;
    d.pdf = [ph](double x) {
        if (x < 0.0) return 0.0;
        const double z = x / ph;
        return 2.0 / (M_PI * ph * (1.0 + z * z));
    };
    d.cdf = [ph](double x) { return x <= 0.0 ? 0.0 : 2.0 / M_PI * std::atan(x / ph); };
    d.quantile = [ph](double u) { return ph * std::tan(0.5 * M_PI * checked_u(u)); };
    d.support = {0.0, kInf};
    d.name = "half-cauchy";
    return d;
}

UnivariateDistribution normal(const NormalParams& params) {
    require_finite(params.mu, "mu");
    require_positive(params.sigma, "sigma");
    const double mu = params.mu, s = params.sigma;
    const double kInvSqrt2Pi = 0.3989422804014327;
    UnivariateDistribution d;
    d.pdf = [mu, s, kInvSqrt2Pi](double x) {
        const double z = (x - mu) / s;
        return kInvSqrt2Pi / s * std::exp(-0.5 * z * z);
    };
    d.cdf = [mu, s](double x) {
        return 0.5 * std::erfc(-(x - mu) / (s * std::sqrt(2.0)));
    };
    d.quantile = [mu, s](double u) { return mu + s * probit(u); };
    d.support = {-kInf, kInf};
    d.name = "normal";
    return d;
}

UnivariateDistribution cauchy(const CauchyParams& params) {
    require_finite(params.theta, "theta");
    require_positive(params.lambda, "lambda");
    const double th = params.theta, l = params.lambda;
    UnivariateDistribution d;
    d.pdf = [th, l](double x) {
        const double z = (x - th) / l;
        return 1.0 / (M_PI * l * (1.0 + z * z));
    };
    d.cdf = [th, l](double x) { return 0.5 + std::atan((x - th) / l) / M_PI; };
    d.quantile = [th, l](double u) {
        return th + l * std::tan(M_PI * (checked_u(u) - 0.5));
    };
    d.support = {-kInf, kInf};
    d.name = "cauchy";
    return d;
}

namespace {

double arg(const std::vector<double>& v, std::size_t i) { return v.at(i); }

void require_count(const std::vector<double>& v, std::size_t n, const char* family) {
    if (v.size() != n) {
        throw std::domain_error(std::string(family) + ": expected " +
                                std::to_string(n) + " parameter(s), got " +
                                std::to_string(v.size()));
    }
}

} // namespace

UnivariateDistribution make_family(const std::string& name,
                                   const std::vector<double>& params) {
    if (name == "exponential") {
        require_count(params, 1, "exponential");
        return exponential({arg(params, 0)});
    }
    if (name == "weibull") {
        require_count(params, 2, "weibull");
        return weibull({arg(params, 0), arg(params, 1)});
    }
    if (name == "gumbel") {
        require_count(params, 2, "gumbel");
        return gumbel({arg(params, 0), arg(params, 1)});
    }
    if (name == "pareto") {
        require_count(params, 2, "pareto");
        return pareto({arg(params, 0), arg(params, 1)});
    }
    if (name == "rayleigh") {
        require_count(params, 1, "rayleigh");
        return rayleigh({arg(params, 0)});
    }
    if (name == "lindley") {
        require_count(params, 1, "lindley");
        return lindley({arg(params, 0)});
    }
    if (name == "log-logistic") {
        require_count(params, 2, "log-logistic");
        return log_logistic({arg(params, 0), arg(params, 1)});
    }
    if (name == "half-cauchy") {
        require_count(params, 1, "half-cauchy");
        return half_cauchy({arg(params, 0)});
    }
    if (name == "normal") {
        require_count(params, 2, "normal");
        return normal({arg(params, 0), arg(params, 1)});
    }
    if (name == "cauchy") {
        require_count(params, 2, "cauchy");
        return cauchy({arg(params, 0), arg(params, 1)});
    }
    if (name == "laplace") {
        require_count(params, 2, "laplace");
        return laplace({arg(params, 0), arg(params, 1)});
    }
    throw std::domain_error("unknown family: " + name);
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "exponential", "weibull",  "gumbel",       "pareto",      "rayleigh", "lindley",
        "log-logistic", "half-cauchy", "normal",   "cauchy",      "laplace",
    };
    return names;
}

} // namespace genlap
