#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace genlap {

struct StudyConfig {
    int n;              // sample size per replication
    int k;              // number of replications
    double alpha;
    double beta;
    double p;
    std::uint64_t seed; // replication r draws from substream_seed(seed, r)
};

struct StudyRow {
    int n;
    int k;
    double alpha_true;
    double alpha_hat_mean;
    double mse_alpha;
    double beta_true;
    double beta_hat_mean;
    double mse_beta;
};

// Monte-Carlo recovery experiment: k independent samples of size n from the
// standard beta-mixture Laplace law, each fitted by the weighted closed-form
// estimator with p known. Replications run in parallel but the result is
// independent of the worker count: seeds come from the replication index and
// the reduction is a fixed-order compensated sum.
StudyRow run_study(const StudyConfig& cfg);

// One row per sample size; row r uses substream_seed(seed, r) as its study
// seed so rows are decorrelated.
std::vector<StudyRow> run_table(const std::vector<int>& n_list, int k, double alpha,
                                double beta, double p, std::uint64_t seed);

// CSV with header n,k,alpha,alpha_hat,mse_alpha,beta,beta_hat,mse_beta.
std::string study_csv(const std::vector<StudyRow>& rows);

// Honors GENLAP_THREADS when set to a positive integer, otherwise the
// hardware concurrency; never more than k, never less than one.
int worker_count(int k);

} // namespace genlap
