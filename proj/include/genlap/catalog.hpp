#pragma once

#include <string>
#include <vector>

#include "genlap/framework.hpp"

namespace genlap {

// A generated family with its closed-form pdf/cdf typed in directly from the
// algebraic expression, next to the base law and generator that produce the
// same family through composition. The two evaluation paths share no code
// beyond the special functions, so their agreement cross-validates both.
struct CatalogEntry {
    std::string id;
    std::vector<double> gen_params;  // (alpha, beta) or (a, b)
    std::vector<double> base_params;
    std::function<double(double)> pdf;  // hand-coded closed form
    std::function<double(double)> cdf;
    UnivariateDistribution base;
    GeneratorDistribution gen;
    RealInterval support;
};

// Known ids: beta-exponential, beta-weibull, beta-gumbel, beta-laplace,
// beta-pareto, beta-rayleigh, kum-weibull, kum-laplace, kum-gumbel,
// kum-lindley, kum-half-cauchy. Base parameters are positional, matching
// make_family.
CatalogEntry make_catalog_entry(const std::string& id,
                                const std::vector<double>& gen_params,
                                const std::vector<double>& base_params);

const std::vector<std::string>& catalog_ids();

double catalog_pdf(const CatalogEntry& entry, double x);
double catalog_cdf(const CatalogEntry& entry, double x);
double catalog_hazard(const CatalogEntry& entry, double x);

// Max absolute deviation between the hand-coded pdf/cdf and the framework
// composition of entry.base with entry.gen, over the given grid.
double oracle_check(const CatalogEntry& entry, const std::vector<double>& grid);

} // namespace genlap
