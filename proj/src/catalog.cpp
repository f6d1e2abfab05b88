#include "genlap/catalog.hpp"

#include <cmath>

#include "genlap/basedist.hpp"
#include "genlap/generators.hpp"
#include "genlap/specfun.hpp"

namespace genlap {

namespace {

void require_count(const std::vector<double>& v, std::size_t n, const char* what) {
    if (v.size() != n) {
        throw std::domain_error(std::string(what) + ": expected " + std::to_string(n) +
                                " parameter(s), got " + std::to_string(v.size()));
    }
}

// The beta-generated families share the cdf I_F(alpha, beta); their pdfs
// below are the printed closed forms, not f * h(F).
CatalogEntry beta_family(const std::string& id, double alpha, double beta,
                         UnivariateDistribution base,
                         std::vector<double> base_params,
                         std::function<double(double)> pdf) {
    CatalogEntry e;
    e.id = id;
    e.gen_params = {alpha, beta};
    e.base_params = std::move(base_params);
    e.pdf = std::move(pdf);
    auto base_cdf = base.cdf;
    e.cdf = [base_cdf, alpha, beta](double x) {
        const double F = base_cdf(x);
        if (F <= 0.0) return 0.0;
        if (F >= 1.0) return 1.0;
        return reg_inc_beta(F, alpha, beta);
    };
    e.support = base.support;
    e.gen = beta_gen({alpha, beta});
    e.base = std::move(base);
    return e;
}

CatalogEntry kum_family(const std::string& id, double a, double b,
                        UnivariateDistribution base, std::vector<double> base_params,
                        std::function<double(double)> pdf) {
    CatalogEntry e;
    e.id = id;
    e.gen_params = {a, b};
    e.base_params = std::move(base_params);
    e.pdf = std::move(pdf);
    auto base_cdf = base.cdf;
    e.cdf = [base_cdf, a, b](double x) {
        const double F = base_cdf(x);
        if (F <= 0.0) return 0.0;
        if (F >= 1.0) return 1.0;
        return 1.0 - std::pow(1.0 - std::pow(F, a), b);
    };
    e.support = base.support;
    e.gen = kumaraswamy_gen({a, b});
    e.base = std::move(base);
    return e;
}

} // namespace

CatalogEntry make_catalog_entry(const std::string& id,
                                const std::vector<double>& gp,
                                const std::vector<double>& bp) {
    require_count(gp, 2, "generator");
    const double s1 = gp[0], s2 = gp[1];

    if (id == "beta-exponential") {
        require_count(bp, 1, id.c_str());
        const double l = bp[0];
        const double inv_b = 1.0 / beta_fn(s1, s2);
        return beta_family(id, s1, s2, exponential({l}), bp, [s1, s2, l, inv_b](double x) {
            if (x <= 0.0) return 0.0;
            return l * inv_b * std::exp(-s2 * l * x) *
                   std::pow(1.0 - std::exp(-l * x), s1 - 1.0);
        });
    }
    if (id == "beta-weibull") {
        require_count(bp, 2, id.c_str());
        const double c = bp[0], l = bp[1];
        const double inv_b = 1.0 / beta_fn(s1, s2);
        return beta_family(id, s1, s2, weibull({c, l}), bp, [s1, s2, c, l, inv_b](double x) {
            if (x <= 0.0) return 0.0;
            const double z = std::pow(l * x, c);
            return c * std::pow(l, c) * inv_b * std::pow(x, c - 1.0) *
                   std::exp(-s2 * z) * std::pow(1.0 - std::exp(-z), s1 - 1.0);
        });
    }
    if (id == "beta-gumbel") {
        require_count(bp, 2, id.c_str());
        const double mu = bp[0], sg = bp[1];
        const double inv_b = 1.0 / beta_fn(s1, s2);
        return beta_family(id, s1, s2, gumbel({mu, sg}), bp, [s1, s2, mu, sg, inv_b](double x) {
            const double u = std::exp(-(x - mu) / sg);
            if (!std::isfinite(u)) return 0.0;
            return inv_b / sg * u * std::exp(-s1 * u) *
                   std::pow(1.0 - std::exp(-u), s2 - 1.0);
        });
    }
    if (id == "beta-laplace") {
        require_count(bp, 2, id.c_str());
        const double mu = bp[0], sg = bp[1];
        const double inv_b = 1.0 / beta_fn(s1, s2);
        return beta_family(id, s1, s2, laplace({mu, sg}), bp, [s1, s2, mu, sg, inv_b](double x) {
            const double z = std::fabs(x - mu) / sg;
            const double half_e = 0.5 * std::exp(-z);
            if (x < mu) {
                return inv_b / sg * std::pow(half_e, s1) * std::pow(1.0 - half_e, s2 - 1.0);
            }
            return inv_b / sg * std::pow(half_e, s2) * std::pow(1.0 - half_e, s1 - 1.0);
        });
    }
    if (id == "beta-pareto") {
        require_count(bp, 2, id.c_str());
        const double th = bp[0], k = bp[1];
        const double inv_b = 1.0 / beta_fn(s1, s2);
        return beta_family(id, s1, s2, pareto({th, k}), bp, [s1, s2, th, k, inv_b](double x) {
            if (x < th) return 0.0;
            const double r = std::pow(x / th, -k);
            return k / th * inv_b * std::pow(1.0 - r, s1 - 1.0) *
                   std::pow(x / th, -k * s2 - 1.0);
        });
    }
    if (id == "beta-rayleigh") {
        require_count(bp, 1, id.c_str());
        const double sg = bp[0];
        const double inv_b = 1.0 / beta_fn(s1, s2);
        return beta_family(id, s1, s2, rayleigh({sg}), bp, [s1, s2, sg, inv_b](double x) {
            if (x <= 0.0) return 0.0;
            const double z = 0.5 * x * x / (sg * sg);
            return x / (sg * sg) * inv_b * std::exp(-s2 * z) *
                   std::pow(1.0 - std::exp(-z), s1 - 1.0);
        });
    }
    if (id == "kum-weibull") {
        require_count(bp, 2, id.c_str());
        const double c = bp[0], l = bp[1];
        return kum_family(id, s1, s2, weibull({c, l}), bp, [s1, s2, c, l](double x) {
            if (x <= 0.0) return 0.0;
            const double z = std::pow(l * x, c);
            const double F = 1.0 - std::exp(-z);
            return s1 * s2 * c * std::pow(l, c) * std::pow(x, c - 1.0) * std::exp(-z) *
                   std::pow(F, s1 - 1.0) * std::pow(1.0 - std::pow(F, s1), s2 - 1.0);
        });
    }
    if (id == "kum-laplace") {
        require_count(bp, 2, id.c_str());
        const double mu = bp[0], sg = bp[1];
        return kum_family(id, s1, s2, laplace({mu, sg}), bp, [s1, s2, mu, sg](double x) {
            const double z = std::fabs(x - mu) / sg;
            const double half_e = 0.5 * std::exp(-z);
            const double F = x < mu ? half_e : 1.0 - half_e;
            return s1 * s2 / (2.0 * sg) * std::exp(-z) * std::pow(F, s1 - 1.0) *
                   std::pow(1.0 - std::pow(F, s1), s2 - 1.0);
        });
    }
    if (id == "kum-gumbel") {
        require_count(bp, 2, id.c_str());
        const double mu = bp[0], sg = bp[1];
        return kum_family(id, s1, s2, gumbel({mu, sg}), bp, [s1, s2, mu, sg](double x) {
            const double u = std::exp(-(x - mu) / sg);
            if (!std::isfinite(u)) return 0.0;
            return s1 * s2 / sg * u * std::exp(-s1 * u) *
                   std::pow(1.0 - std::exp(-s1 * u), s2 - 1.0);
        });
    }
    if (id == "kum-lindley") {
        require_count(bp, 1, id.c_str());
        const double th = bp[0];
        return kum_family(id, s1, s2, lindley({th}), bp, [s1, s2, th](double x) {
            if (x <= 0.0) return 0.0;
            const double f = th * th / (th + 1.0) * (1.0 + x) * std::exp(-th * x);
            const double F = 1.0 - (1.0 + th * x / (th + 1.0)) * std::exp(-th * x);
            return s1 * s2 * f * std::pow(F, s1 - 1.0) *
                   std::pow(1.0 - std::pow(F, s1), s2 - 1.0);
        });
    }
    if (id == "kum-half-cauchy") {
        require_count(bp, 1, id.c_str());
        const double ph = bp[0];
        return kum_family(id, s1, s2, half_cauchy({ph}), bp, [s1, s2, ph](double x) {
            if (x <= 0.0) return 0.0;
            const double F = 2.0 / M_PI * std::atan(x / ph);
            const double f = 2.0 / (M_PI * ph * (1.0 + (x / ph) * (x / ph)));
            return s1 * s2 * f * std::pow(F, s1 - 1.0) *
                   std::pow(1.0 - std::pow(F, s1), s2 - 1.0);
        });
    }
    throw std::domain_error("unknown catalog id: " + id);
}

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = {
        "beta-exponential", "beta-weibull", "beta-gumbel",  "beta-laplace",
        "beta-pareto",      "beta-rayleigh", "kum-weibull", "kum-laplace",
        "kum-gumbel",       "kum-lindley",   "kum-half-cauchy",
    };
    return ids;
}

double catalog_pdf(const CatalogEntry& entry, double x) { return entry.pdf(x); }

double catalog_cdf(const CatalogEntry& entry, double x) { return entry.cdf(x); }

double catalog_hazard(const CatalogEntry& entry, double x) {
    return entry.pdf(x) / (1.0 - entry.cdf(x));
}

double oracle_check(const CatalogEntry& entry, const std::vector<double>& grid) {
    GeneratedDistribution composed = compose(entry.base, entry.gen);
    double worst = 0.0;
    for (double x : grid) {
        worst = std::max(worst, std::fabs(entry.pdf(x) - composed.pdf(x)));
        worst = std::max(worst, std::fabs(entry.cdf(x) - composed.cdf(x)));
    }
    return worst;
}

} // namespace genlap
