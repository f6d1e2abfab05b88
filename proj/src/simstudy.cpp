#include "genlap/simstudy.hpp"

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

#include "genlap/bml.hpp"
#include "genlap/estimate.hpp"
#include "genlap/rng.hpp"

namespace genlap {

namespace {

// compensated accumulation keeps the reduction independent of how the work
// was partitioned, since it always runs serially in replication order
struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

} // namespace

int worker_count(int k) {
    int want = 0;
    if (const char* env = std::getenv("GENLAP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1024) want = static_cast<int>(v);
    }
    if (want == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        want = hw == 0 ? 1 : static_cast<int>(hw);
    }
    if (want > k) want = k;
    return want < 1 ? 1 : want;
}

StudyRow run_study(const StudyConfig& cfg) {
    if (cfg.n < 1) throw std::domain_error("run_study: n must be at least 1");
    if (cfg.k < 1) throw std::domain_error("run_study: k must be at least 1");
    const std::size_t k = static_cast<std::size_t>(cfg.k);

    std::vector<double> a_hat(k), b_hat(k);
    const int workers = worker_count(cfg.k);
    const std::size_t chunk = (k + workers - 1) / workers;

    auto replicate = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t r = lo; r < hi; ++r) {
            const std::vector<double> data =
                bml_sample({cfg.alpha, cfg.beta, cfg.p}, cfg.n, substream_seed(cfg.seed, r));
            const FitResult fit = fit_weighted(data, cfg.p);
            a_hat[r] = fit.alpha_hat;
            b_hat[r] = fit.beta_hat;
        }
    };

    if (workers == 1) {
        replicate(0, k);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(k, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    replicate(lo, hi);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    KahanSum ma, mb, sa, sb;
    for (std::size_t r = 0; r < k; ++r) {
        ma.add(a_hat[r]);
        mb.add(b_hat[r]);
        const double da = a_hat[r] - cfg.alpha;
        const double db = b_hat[r] - cfg.beta;
        sa.add(da * da);
        sb.add(db * db);
    }
    StudyRow row;
    row.n = cfg.n;
    row.k = cfg.k;
    row.alpha_true = cfg.alpha;
    row.alpha_hat_mean = ma.s / static_cast<double>(k);
    row.mse_alpha = sa.s / static_cast<double>(k);
    row.beta_true = cfg.beta;
    row.beta_hat_mean = mb.s / static_cast<double>(k);
    row.mse_beta = sb.s / static_cast<double>(k);
    return row;
}

std::vector<StudyRow> run_table(const std::vector<int>& n_list, int k, double alpha,
                                double beta, double p, std::uint64_t seed) {
    if (n_list.empty()) throw std::domain_error("run_table: n_list is empty");
    std::vector<StudyRow> rows;
    rows.reserve(n_list.size());
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        StudyConfig cfg{n_list[i], k, alpha, beta, p, substream_seed(seed, i)};
        rows.push_back(run_study(cfg));
    }
    return rows;
}

std::string study_csv(const std::vector<StudyRow>& rows) {
    std::string out = "n,k,alpha,alpha_hat,mse_alpha,beta,beta_hat,mse_beta\n";
    char line[256];
    for (const StudyRow& r : rows) {
        std::snprintf(line, sizeof(line), "%d,%d,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g\n",
                      r.n, r.k, r.alpha_true, r.alpha_hat_mean, r.mse_alpha, r.beta_true,
                      r.beta_hat_mean, r.mse_beta);
        out += line;
    }
    return out;
}

} // namespace genlap
