// Acceptance harness: each numbered check covers one release gate and prints
// exactly one PASS/FAIL line. Run with no arguments for the full battery or
// with a list of check numbers, e.g. `acceptance_tests 1 4 9`. The exit code
// is the number of failed checks.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "genlap/basedist.hpp"
#include "genlap/bml.hpp"
#include "genlap/catalog.hpp"
#include "genlap/errors.hpp"
#include "genlap/estimate.hpp"
#include "genlap/framework.hpp"
#include "genlap/rng.hpp"
#include "genlap/simstudy.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

struct CheckResult {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

// ---------------------------------------------------------------- check 1

const std::map<std::string, std::vector<std::pair<std::vector<double>, std::vector<double>>>>&
catalog_matrix() {
    using Sets = std::vector<std::pair<std::vector<double>, std::vector<double>>>;
    static const std::map<std::string, Sets> m = {
        {"beta-exponential", {{{2, 3}, {1.5}}, {{0.8, 1.2}, {0.5}}, {{5, 2}, {1}}}},
        {"beta-weibull", {{{2, 3}, {1.5, 1}}, {{0.9, 2}, {0.7, 2}}, {{3, 1.2}, {2, 0.5}}}},
        {"beta-gumbel", {{{2, 3}, {0, 1}}, {{1.5, 0.8}, {-1, 2}}, {{3, 2}, {0.5, 0.5}}}},
        {"beta-laplace", {{{2, 3}, {0, 1}}, {{0.8, 0.9}, {0, 1}}, {{2.5, 1.5}, {1, 2}}}},
        {"beta-pareto", {{{2, 3}, {1, 4}}, {{1.5, 2.5}, {2, 3}}, {{0.9, 3}, {1, 2}}}},
        {"beta-rayleigh", {{{2, 3}, {1}}, {{1.2, 0.8}, {2}}, {{3, 1}, {0.5}}}},
        {"kum-weibull", {{{2, 3}, {1.5, 1}}, {{0.8, 1.2}, {0.7, 2}}, {{3, 2}, {2, 0.5}}}},
        {"kum-laplace", {{{2, 3}, {0, 1}}, {{1, 1}, {0, 1}}, {{1.5, 2.5}, {-1, 0.5}}}},
        {"kum-gumbel", {{{2, 3}, {0, 1}}, {{1.5, 0.8}, {-1, 2}}, {{2.5, 2}, {0.5, 0.5}}}},
        {"kum-lindley", {{{2, 3}, {1}}, {{0.8, 1.2}, {0.5}}, {{3, 2}, {2}}}},
        {"kum-half-cauchy", {{{2, 3}, {1}}, {{1.5, 0.8}, {2}}, {{3, 2}, {0.5}}}},
    };
    return m;
}

// abscissae at equally spaced probabilities of the generated law itself
std::vector<double> probability_grid(const genlap::CatalogEntry& e, int points) {
    std::vector<double> xs;
    xs.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double u = 0.0005 + (0.9995 - 0.0005) * i / (points - 1);
        xs.push_back(e.base.quantile(e.gen.quantile(u)));
    }
    return xs;
}

CheckResult check_catalog_oracle() {
    CheckResult r;
    double worst = 0.0;
    int families = 0, sets = 0;
    for (const auto& [id, variants] : catalog_matrix()) {
        ++families;
        for (const auto& [gp, bp] : variants) {
            ++sets;
            const auto entry = genlap::make_catalog_entry(id, gp, bp);
            const double dev = genlap::oracle_check(entry, probability_grid(entry, 201));
            worst = std::max(worst, dev);
            if (!(dev <= 1e-10)) r.fail(fmt("%s deviates by %.3g", id.c_str(), dev));
        }
    }
    if (families != 11) r.fail(fmt("expected 11 families, saw %d", families));
    r.detail = fmt("11 families, %d sets, max |closed - composed| = %.2e", sets, worst) +
               (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

// ---------------------------------------------------------------- check 2

const std::vector<genlap::BmlParams>& bml_matrix() {
    static const std::vector<genlap::BmlParams> sets = {
        {1.0, 1.0, 0.5},           {2.0, 3.0, 0.5},          {3.0, 2.0, 0.7},
        {0.8, 0.9, 0.3},           {5.0, 2.0, 0.9},          {2.0, 5.0, 0.1},
        {1.3, 0.6, 0.0},           {3.0, 4.0, 1.0},          {2.0, 3.0, 0.5, 1.5, 0.5},
        {1.0, 2.0, 0.7, -2.0, 3.0}, {4.0, 4.0, 0.5, 0.0, 2.0}, {0.9, 1.1, 0.6, 1.0, 1.0},
    };
    return sets;
}

CheckResult check_bml_consistency() {
    CheckResult r;
    double worst_norm = 0.0, worst_deriv = 0.0, worst_cont = 0.0, worst_special = 0.0;
    const genlap::UnivariateDistribution lap = genlap::laplace({0.0, 1.0});

    for (const genlap::BmlParams& q : bml_matrix()) {
        auto pdf = [&q](double x) { return genlap::bml_pdf(q, x); };

        const double mass = genlap::integrate(pdf, -kInf, kInf, 1e-10);
        worst_norm = std::max(worst_norm, std::fabs(mass - 1.0));
        if (!(std::fabs(mass - 1.0) <= 1e-9)) r.fail(fmt("normalization off by %.3g", mass - 1.0));

        // half-step offset keeps the grid off the kink at mu, where a
        // symmetric difference measures the derivative jump, not an error
        const double h = 1e-6;
        for (int i = 0; i < 24; ++i) {
            const double x = q.mu + q.sigma * (-6.0 + 12.0 * (i + 0.5) / 24.0);
            const double slope = (genlap::bml_cdf(q, x + h) - genlap::bml_cdf(q, x - h)) / (2.0 * h);
            const double dev = std::fabs(slope - pdf(x));
            worst_deriv = std::max(worst_deriv, dev);
            if (!(dev <= 1e-6)) r.fail(fmt("cdf derivative off by %.3g at x=%.3g", dev, x));
        }

        const double below = std::nextafter(q.mu, -kInf);
        const double above = std::nextafter(q.mu, kInf);
        const double jump_pdf = std::fabs(pdf(below) - pdf(above));
        const double jump_cdf = std::fabs(genlap::bml_cdf(q, below) - genlap::bml_cdf(q, above));
        worst_cont = std::max(worst_cont, std::max(jump_pdf, jump_cdf));
        if (!(jump_pdf <= 1e-13 && jump_cdf <= 1e-13)) {
            r.fail(fmt("branch jump %.3g/%.3g at mu", jump_pdf, jump_cdf));
        }
    }

    // reductions to the documented special cases, standard location and scale
    for (int i = 0; i <= 60; ++i) {
        const double x = -6.0 + 12.0 * i / 60.0;
        const double f = lap.pdf(x);
        const double big_f = lap.cdf(x);

        double dev = std::fabs(genlap::bml_cdf({2.5, 1.7, 1.0}, x) - std::pow(big_f, 2.5));
        worst_special = std::max(worst_special, dev);

        dev = std::fabs(genlap::bml_cdf({1.4, 2.2, 0.0}, x) -
                        (-std::expm1(2.2 * std::log1p(-big_f))));
        worst_special = std::max(worst_special, dev);

        const double a1 = 0.35 * f + 0.65 * 2.2 * std::pow(1.0 - big_f, 1.2) * f;
        dev = std::fabs(genlap::bml_pdf({1.0, 2.2, 0.35}, x) - a1);
        worst_special = std::max(worst_special, dev);

        const double b1 = 0.35 * 2.5 * std::pow(big_f, 1.5) * f + 0.65 * f;
        dev = std::fabs(genlap::bml_pdf({2.5, 1.0, 0.35}, x) - b1);
        worst_special = std::max(worst_special, dev);

        dev = std::fabs(genlap::bml_pdf({1.0, 1.0, 0.42}, x) - f);
        worst_special = std::max(worst_special, dev);
    }
    if (!(worst_special <= 1e-14)) r.fail(fmt("special-case deviation %.3g", worst_special));

    const std::string note = fmt(
        "12 sets; norm %.1e, deriv %.1e, branch %.1e, special %.1e", worst_norm,
        worst_deriv, worst_cont, worst_special);
    r.detail = note + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

// ---------------------------------------------------------------- check 3

double quad_mgf(const genlap::BmlParams& q, double t) {
    // the density underflows before exp overflows, so a zero density means
    // the true product is zero; the guard keeps inf * 0 out of the quadrature
    auto f = [&q, t](double x) {
        const double g = genlap::bml_pdf(q, x);
        if (g == 0.0) return 0.0;
        return std::exp(t * x) * g;
    };
    return genlap::integrate(f, -kInf, kInf, 1e-10);
}

double quad_moment(const genlap::BmlParams& q, int k) {
    auto f = [&q, k](double x) {
        const double g = genlap::bml_pdf(q, x);
        if (g == 0.0) return 0.0;
        return std::pow(x, k) * g;
    };
    return genlap::integrate(f, -kInf, kInf, 1e-10);
}

CheckResult check_mgf_moments() {
    CheckResult r;
    const std::vector<std::array<double, 3>> sets = {
        {1.0, 1.0, 0.5}, {2.0, 3.0, 0.5}, {3.0, 2.0, 0.7}};
    double worst_mgf = 0.0, worst_int = 0.0, worst_mom = 0.0, worst_mc = 0.0;

    for (const auto& s : sets) {
        const int m = static_cast<int>(s[0]);
        const int n = static_cast<int>(s[1]);
        const double p = s[2];
        const genlap::BmlParams q{s[0], s[1], p};
        const genlap::MgfDomain dom = genlap::bml_mgf_domain(q);

        for (double t : {0.6 * dom.lo, 0.25 * dom.lo, 0.3 * dom.hi, 0.7 * dom.hi}) {
            const double closed = genlap::bml_mgf(q, t);
            const double dev = std::fabs(closed - quad_mgf(q, t));
            worst_mgf = std::max(worst_mgf, dev);
            if (!(dev <= 1e-7)) r.fail(fmt("mgf vs quadrature %.3g at t=%.3g", dev, t));

            const double dint = std::fabs(genlap::bml_mgf_integer(m, n, p, t) - closed);
            worst_int = std::max(worst_int, dint);
            if (!(dint <= 1e-12)) r.fail(fmt("integer mgf off by %.3g at t=%.3g", dint, t));
        }

        // Monte Carlo: one sample reused for k = 1..4, standard errors from
        // the closed higher moments
        const std::size_t draws = 1000000;
        const std::vector<double> xs = genlap::bml_sample(q, draws, 424242u + m + 10 * n);
        for (int k = 1; k <= 4; ++k) {
            const double closed = genlap::bml_moment_integer(m, n, p, k);
            const double dq = std::fabs(closed - quad_moment(q, k));
            worst_mom = std::max(worst_mom, dq);
            if (!(dq <= 1e-8)) r.fail(fmt("moment k=%d vs quadrature %.3g", k, dq));

            long double acc = 0.0L;
            for (double x : xs) acc += std::pow(static_cast<long double>(x), k);
            const double mc = static_cast<double>(acc / draws);
            const double var = genlap::bml_moment_integer(m, n, p, 2 * k) - closed * closed;
            const double se = std::sqrt(var / static_cast<double>(draws));
            const double sigmas = std::fabs(mc - closed) / se;
            worst_mc = std::max(worst_mc, sigmas);
            if (!(sigmas <= 4.0)) {
                r.fail(fmt("moment k=%d is %.2f standard errors from Monte Carlo", k, sigmas));
            }
        }
    }
    const std::string note =
        fmt("mgf %.1e, integer %.1e, moments %.1e, worst MC pull %.2f sigma", worst_mgf,
            worst_int, worst_mom, worst_mc);
    r.detail = note + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

// ---------------------------------------------------------------- check 4

CheckResult check_sampler_ks() {
    CheckResult r;
    const std::vector<genlap::BmlParams> sets = {
        {2.0, 3.0, 0.5}, {1.0, 2.0, 0.7}, {0.8, 0.9, 0.3}};
    const std::size_t n = 100000;
    const double critical = 1.63 / std::sqrt(static_cast<double>(n));
    double worst = 0.0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
        std::vector<double> xs = genlap::bml_sample(sets[s], n, 1000u + s);
        std::sort(xs.begin(), xs.end());
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double f = genlap::bml_cdf(sets[s], xs[i]);
            d = std::max(d, std::max((i + 1.0) / n - f, f - static_cast<double>(i) / n));
        }
        worst = std::max(worst, d);
        if (!(d < critical)) {
            r.fail(fmt("KS %.4g >= %.4g for set %zu", d, critical, s));
        }
    }
    r.detail = fmt("3 parameter sets at n=%zu, worst KS %.4g < %.4g", n, worst, critical) +
               (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

// ---------------------------------------------------------------- check 5

double inner_score(double t, double eps) { return std::log(t) + t * std::log(eps); }
double outer_score(double t, double eps) { return std::log(t) + (t - 1.0) * std::log1p(-eps); }

int argmax_violations(double that, double eps, bool outer) {
    int bad = 0;
    const double peak = outer ? outer_score(that, eps) : inner_score(that, eps);
    for (int j = 0; j <= 40; ++j) {
        const double t = that * std::pow(10.0, -2.0 + 4.0 * j / 40.0);
        const double s = outer ? outer_score(t, eps) : inner_score(t, eps);
        if (s > peak) ++bad;
    }
    return bad;
}

CheckResult check_estimator_properties() {
    CheckResult r;

    genlap::SplitMix64 rng(20260814u);
    int bad = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const double x = -5.0 * rng.next_unit();
        const double eps = 0.5 * std::exp(x);
        const genlap::ShapeEstimate m = genlap::mle_single(x);
        bad += argmax_violations(m.alpha_hat, eps, false);
        bad += argmax_violations(m.beta_hat, eps, true);
    }
    for (int rep = 0; rep < 200; ++rep) {
        const double x = 5.0 * rng.next_unit();
        const double eps = 0.5 * std::exp(-x);
        const genlap::ShapeEstimate m = genlap::mle_single(x);
        bad += argmax_violations(m.alpha_hat, eps, true);
        bad += argmax_violations(m.beta_hat, eps, false);
    }
    if (bad != 0) r.fail(fmt("%d grid points beat the closed-form maximizer", bad));

    const std::vector<double> data = genlap::bml_sample({2.0, 3.0, 0.5}, 40, 9090u);
    const genlap::FitResult fit = genlap::fit_weighted(data, 0.5);
    double total = 0.0;
    for (double w : fit.weights) total += w;
    if (!(std::fabs(total - 1.0) <= 1e-12)) r.fail(fmt("weights sum to 1%+.3g", total - 1.0));

    std::vector<double> score(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        score[i] = genlap::log_likelihood(data, fit.per_obs[i].alpha_hat,
                                          fit.per_obs[i].beta_hat, 0.5);
    }
    const double top = *std::max_element(score.begin(), score.end());
    double worst_w = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        // second pass shifts every score by a constant; the normalized
        // weights must not move (scale invariance of the likelihood weights)
        const double shift = pass == 0 ? 0.0 : 137.0;
        double norm = 0.0;
        for (double s : score) norm += std::exp(s + shift - (top + shift));
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double w = std::exp(score[i] + shift - (top + shift)) / norm;
            worst_w = std::max(worst_w, std::fabs(w - fit.weights[i]));
        }
    }
    if (!(worst_w <= 1e-12)) r.fail(fmt("weight recipe deviates by %.3g", worst_w));

    int swaps_broken = 0;
    for (double x : {0.05, 0.31, 1.0, 2.7, 6.0, 19.5, 0.0001, 3.14}) {
        const genlap::ShapeEstimate pos = genlap::mle_single(x);
        const genlap::ShapeEstimate neg = genlap::mle_single(-x);
        if (neg.alpha_hat != pos.beta_hat || neg.beta_hat != pos.alpha_hat) ++swaps_broken;
    }
    if (swaps_broken != 0) r.fail(fmt("reflection identity broken at %d points", swaps_broken));

    if (r.ok) {
        r.detail = fmt("400 observations, 0 argmax violations; weights within %.1e; "
                       "reflection exact", worst_w);
    }
    return r;
}

// ---------------------------------------------------------------- check 6

CheckResult check_recovery_table() {
    CheckResult r;
    const auto rows = genlap::run_table({10, 50, 100}, 2000, 1.0, 2.0, 0.5, 42u);
    const genlap::StudyRow& last = rows[2];

    if (!(last.alpha_hat_mean >= 1.0 && last.alpha_hat_mean <= 1.2)) {
        r.fail(fmt("mean alpha_hat %.4f outside [1.0, 1.2]", last.alpha_hat_mean));
    }
    if (!(last.beta_hat_mean >= 1.9 && last.beta_hat_mean <= 2.2)) {
        r.fail(fmt("mean beta_hat %.4f outside [1.9, 2.2]", last.beta_hat_mean));
    }
    for (int i = 1; i < 3; ++i) {
        if (!(rows[i].mse_alpha < rows[i - 1].mse_alpha)) {
            r.fail(fmt("mse_alpha not decreasing at n=%d", rows[i].n));
        }
        if (!(rows[i].mse_beta < rows[i - 1].mse_beta)) {
            r.fail(fmt("mse_beta not decreasing at n=%d", rows[i].n));
        }
    }
    const std::string note = fmt(
        "k=2000: mean(a^)=%.4f in [1.0,1.2], mean(b^)=%.4f in [1.9,2.2]; "
        "mse a: %.3f>%.3f>%.3f, mse b: %.3f>%.3f>%.3f",
        last.alpha_hat_mean, last.beta_hat_mean, rows[0].mse_alpha, rows[1].mse_alpha,
        rows[2].mse_alpha, rows[0].mse_beta, rows[1].mse_beta, rows[2].mse_beta);
    r.detail = note + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

// ---------------------------------------------------------------- check 7

CheckResult check_fractional_bias() {
    CheckResult r;
    double best = -kInf;
    std::string seen;
    const double ps[] = {0.3, 0.5, 0.7};
    for (int i = 0; i < 3; ++i) {
        const genlap::StudyRow row =
            genlap::run_study({100, 2000, 0.8, 0.9, ps[i], 4200u + static_cast<unsigned>(i)});
        best = std::max(best, row.beta_hat_mean);
        seen += fmt("%sp=%.1f: %.3f", i ? ", " : "", ps[i], row.beta_hat_mean);
    }
    if (!(best > 1.5)) {
        r.fail(fmt("no mean beta_hat above 1.5 (true 0.9): %s", seen.c_str()));
    } else {
        r.detail = fmt("upward bias reproduced, mean beta_hat vs true 0.9: %s", seen.c_str());
    }
    return r;
}

// ---------------------------------------------------------------- check 8

CheckResult check_series() {
    CheckResult r;
    double worst_final = 0.0;
    int decay_breaks = 0;
    const int ladder[] = {1, 2, 3, 4, 5, 10, 20, 40, 60};
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) {
            const genlap::BmlParams q{static_cast<double>(m), static_cast<double>(n), 0.6};
            std::vector<double> err;
            for (int terms : ladder) {
                double e = 0.0;
                for (int i = 0; i <= 12; ++i) {
                    const double x = -3.0 + 6.0 * i / 12.0;
                    e = std::max(e, std::fabs(genlap::bml_series_pdf(q, x, terms) -
                                              genlap::bml_pdf(q, x)));
                }
                err.push_back(e);
            }
            worst_final = std::max(worst_final, err.back());
            if (!(err.back() <= 1e-6)) {
                r.fail(fmt("series error %.3g at N=60 for (%d,%d)", err.back(), m, n));
            }
            // once every block is included the sum stops changing, so the
            // plateau must be flat and the final error must be the minimum
            for (std::size_t j = 5; j + 1 < err.size(); ++j) {
                if (!(err[j + 1] <= err[j] + 1e-18)) ++decay_breaks;
            }
            if (!(err.back() <= *std::min_element(err.begin(), err.end()) + 1e-18)) {
                ++decay_breaks;
            }
        }
    }
    if (decay_breaks != 0) r.fail(fmt("%d error-decay violations", decay_breaks));
    if (r.ok) {
        r.detail = fmt("25 integer shape pairs, |x| <= 3, final error %.1e, decay clean",
                       worst_final);
    }
    return r;
}

// ---------------------------------------------------------------- check 9

#ifdef GENLAP_CLI_PATH

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool shell(const std::string& cmd) {
    const int raw = std::system(cmd.c_str());
    return raw != -1 && WIFEXITED(raw) && WEXITSTATUS(raw) == 0;
}

CheckResult check_cli_determinism() {
    CheckResult r;
    const std::string cli = GENLAP_CLI_PATH;
    const std::string dir = "/tmp/genlap_accept";
    if (!shell("mkdir -p " + dir)) {
        r.fail("cannot create scratch directory");
        return r;
    }

    const std::string sample_cmd = cli + " sample --dist bml --params 2,3,0.5 --n 500 --seed 31415";
    if (!shell(sample_cmd + " --out " + dir + "/s1.txt") ||
        !shell(sample_cmd + " --out " + dir + "/s2.txt")) {
        r.fail("sample command failed");
        return r;
    }
    const std::string s1 = slurp(dir + "/s1.txt");
    if (s1.empty() || s1 != slurp(dir + "/s2.txt")) r.fail("sample output not reproducible");

    const std::string sim_cmd =
        cli + " simulate --n-list 10,25 --k 40 --alpha 1 --beta 2 --p 0.5 --seed 7 --out ";
    bool sim_ok = true;
    sim_ok &= shell("GENLAP_THREADS=1 " + sim_cmd + dir + "/t1.csv");
    sim_ok &= shell("GENLAP_THREADS=2 " + sim_cmd + dir + "/t2.csv");
    sim_ok &= shell("GENLAP_THREADS=8 " + sim_cmd + dir + "/t8.csv");
    sim_ok &= shell("GENLAP_THREADS=8 " + sim_cmd + dir + "/t8b.csv");
    if (!sim_ok) {
        r.fail("simulate command failed");
        return r;
    }
    const std::string t1 = slurp(dir + "/t1.csv");
    if (t1.empty()) r.fail("simulate produced no output");
    if (t1 != slurp(dir + "/t2.csv")) r.fail("worker count 2 changed the table");
    if (t1 != slurp(dir + "/t8.csv")) r.fail("worker count 8 changed the table");
    if (t1 != slurp(dir + "/t8b.csv")) r.fail("repeated run changed the table");

    if (r.ok) r.detail = "sample and simulate byte-identical across runs and worker counts 1/2/8";
    return r;
}

#else

CheckResult check_cli_determinism() {
    CheckResult r;
    r.fail("built without GENLAP_CLI_PATH");
    return r;
}

#endif

// ----------------------------------------------------------------

struct Check {
    int id;
    const char* label;
    double time_cap; // seconds, 0 = uncapped
    std::function<CheckResult()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Check> checks = {
        {1, "catalog closed forms match framework composition", 10.0, check_catalog_oracle},
        {2, "mixture-law analytic consistency", 30.0, check_bml_consistency},
        {3, "mgf and moments cross-validated", 120.0, check_mgf_moments},
        {4, "sampler passes Kolmogorov-Smirnov at the 1% level", 0.0, check_sampler_ks},
        {5, "estimator argmax, weights and reflection", 0.0, check_estimator_properties},
        {6, "shape recovery study hits the reference bands", 300.0, check_recovery_table},
        {7, "fractional-shape bias phenomenon reproduced", 300.0, check_fractional_bias},
        {8, "series density converges to the closed form", 0.0, check_series},
        {9, "command-line outputs are bit-reproducible", 0.0, check_cli_determinism},
    };

    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int failures = 0, ran = 0;
    for (const Check& c : checks) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) {
            continue;
        }
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        CheckResult result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result.fail(fmt("threw %s", e.what()));
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_cap > 0.0 && secs >= c.time_cap) {
            result.fail(fmt("took %.1fs, cap %.0fs", secs, c.time_cap));
        }
        std::printf("%s  %d  %s%s%s [%.1fs]\n", result.ok ? "PASS" : "FAIL", c.id, c.label,
                    result.detail.empty() ? "" : ": ", result.detail.c_str(), secs);
        std::fflush(stdout);
        if (!result.ok) ++failures;
    }
    std::printf("acceptance: %d/%d checks passed\n", ran - failures, ran);
    return failures;
}
