// genlap: command-line front end. Subcommands:
//   eval      tabulate pdf/cdf/survival/hazard over a grid
//   sample    inverse-transform draws, one per line
//   fit       weighted closed-form shape estimation from a data stream
//   simulate  Monte-Carlo estimator-recovery table
//   families  list the distribution ids eval/sample accept
//
// Every subcommand takes --format csv|json; both encodings carry the same
// values. CSV numbers print with %.15g (%.17g for raw draws, which must
// round-trip bit-exactly); JSON numbers use the serializer's shortest
// round-trip form.
//
// Exit codes: 0 ok, 1 usage or parameter error, 2 unreadable input data,
// 3 numerical failure or unexpected error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "genlap/bml.hpp"
#include "genlap/catalog.hpp"
#include "genlap/errors.hpp"
#include "genlap/estimate.hpp"
#include "genlap/framework.hpp"
#include "genlap/simstudy.hpp"

namespace {

struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = s.find(sep, start);
        if (end == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

double parse_real(const std::string& tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size()) {
        throw std::domain_error("not a number: '" + tok + "'");
    }
    return v;
}

std::vector<double> parse_reals(const std::string& csv) {
    std::vector<double> out;
    for (const std::string& tok : split(csv, ',')) out.push_back(parse_real(tok));
    return out;
}

std::vector<double> parse_grid(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw std::domain_error("grid must be lo:hi:step");
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    const double step = parse_real(parts[2]);
    if (!(step > 0.0)) throw std::domain_error("grid step must be positive");
    if (!(hi >= lo)) throw std::domain_error("grid upper end below lower end");
    const double span = (hi - lo) / step;
    if (!(span < 1e7)) throw std::domain_error("grid has too many points");
    const long count = std::lround(span) + 1;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) xs.push_back(lo + step * static_cast<double>(i));
    return xs;
}

// csv and json must parse back to the same doubles, so json numbers are first
// rounded through the same 15-digit text the csv columns print with
double digits15(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return std::strtod(buf, nullptr);
}

// uniform view over the mixture law and the catalog families
struct EvalTarget {
    std::function<double(double)> pdf, cdf, survival, hazard;
    std::function<std::vector<double>(std::size_t, std::uint64_t)> sample;
};

EvalTarget resolve_target(const std::string& id, const std::vector<double>& params) {
    EvalTarget t;
    if (id == "bml") {
        genlap::BmlParams q;
        if (params.size() == 3) {
            q = {params[0], params[1], params[2]};
        } else if (params.size() == 5) {
            q = {params[0], params[1], params[2], params[3], params[4]};
        } else {
            throw std::domain_error("bml takes alpha,beta,p or alpha,beta,p,mu,sigma");
        }
        (void)genlap::bml_pdf(q, 0.0); // validate once, before any output
        t.pdf = [q](double x) { return genlap::bml_pdf(q, x); };
        t.cdf = [q](double x) { return genlap::bml_cdf(q, x); };
        t.survival = [q](double x) { return genlap::bml_survival(q, x); };
        t.hazard = [q](double x) { return genlap::bml_hazard(q, x); };
        t.sample = [q](std::size_t n, std::uint64_t seed) {
            return genlap::bml_sample(q, n, seed);
        };
        return t;
    }
    if (params.size() < 3) {
        throw std::domain_error(id + " takes two generator shapes, then base parameters");
    }
    const std::vector<double> gen_params(params.begin(), params.begin() + 2);
    const std::vector<double> base_params(params.begin() + 2, params.end());
    auto entry = std::make_shared<genlap::CatalogEntry>(
        genlap::make_catalog_entry(id, gen_params, base_params));
    t.pdf = [entry](double x) { return genlap::catalog_pdf(*entry, x); };
    t.cdf = [entry](double x) { return genlap::catalog_cdf(*entry, x); };
    t.survival = [entry](double x) { return 1.0 - genlap::catalog_cdf(*entry, x); };
    t.hazard = [entry](double x) { return genlap::catalog_hazard(*entry, x); };
    t.sample = [entry](std::size_t n, std::uint64_t seed) {
        return genlap::sample_inverse(genlap::compose(entry->base, entry->gen), n, seed);
    };
    return t;
}

std::vector<double> read_data_stream(std::istream& in) {
    std::vector<double> data;
    std::string tok;
    while (in >> tok) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || !std::isfinite(v)) {
            throw data_error("unreadable value '" + tok + "'");
        }
        data.push_back(v);
    }
    if (data.empty()) throw data_error("no data values supplied");
    return data;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void cmd_eval(const std::string& id, const std::vector<double>& params,
              const std::vector<double>& xs, const std::string& format,
              const std::string& out_path) {
    const EvalTarget t = resolve_target(id, params);
    Output out(out_path);
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (double x : xs) {
            rows.push_back({{"x", digits15(x)},
                            {"pdf", digits15(t.pdf(x))},
                            {"cdf", digits15(t.cdf(x))},
                            {"survival", digits15(t.survival(x))},
                            {"hazard", digits15(t.hazard(x))}});
        }
        out.stream() << rows.dump(2) << "\n";
        return;
    }
    out.stream() << "x,pdf,cdf,survival,hazard\n";
    char line[192];
    for (double x : xs) {
        std::snprintf(line, sizeof(line), "%.15g,%.15g,%.15g,%.15g,%.15g\n", x, t.pdf(x),
                      t.cdf(x), t.survival(x), t.hazard(x));
        out.stream() << line;
    }
}

void cmd_sample(const std::string& id, const std::vector<double>& params, std::size_t n,
                std::uint64_t seed, const std::string& format, const std::string& out_path) {
    const EvalTarget t = resolve_target(id, params);
    const std::vector<double> draws = t.sample(n, seed);
    Output out(out_path);
    if (format == "json") {
        out.stream() << nlohmann::json(draws).dump() << "\n";
        return;
    }
    char line[64];
    for (double y : draws) {
        std::snprintf(line, sizeof(line), "%.17g\n", y);
        out.stream() << line;
    }
}

void cmd_fit(double p, const std::string& in_path, const std::string& format,
             const std::string& out_path) {
    std::vector<double> data;
    if (in_path.empty()) {
        data = read_data_stream(std::cin);
    } else {
        std::ifstream in(in_path);
        if (!in) throw data_error("cannot open input file " + in_path);
        data = read_data_stream(in);
    }
    const genlap::FitResult fit = genlap::fit_weighted(data, p);
    Output out(out_path);
    if (format == "csv") {
        char line[192];
        std::snprintf(line, sizeof(line), "%.15g,%.15g,%zu,%.15g,%.15g\n", fit.alpha_hat,
                      fit.beta_hat, data.size(), p, fit.log_lik);
        out.stream() << "alpha_hat,beta_hat,n,p,log_likelihood\n" << line;
        return;
    }
    nlohmann::ordered_json j;
    j["alpha_hat"] = digits15(fit.alpha_hat);
    j["beta_hat"] = digits15(fit.beta_hat);
    j["n"] = data.size();
    j["p"] = digits15(p);
    j["log_likelihood"] = digits15(fit.log_lik);
    out.stream() << j.dump(2) << "\n";
}

void cmd_simulate(const std::string& nlist_csv, int k, double alpha, double beta, double p,
                  std::uint64_t seed, const std::string& format, const std::string& out_path) {
    std::vector<int> sizes;
    for (double v : parse_reals(nlist_csv)) {
        const int n = static_cast<int>(v);
        if (v != n || n < 1) throw std::domain_error("sample sizes must be positive integers");
        sizes.push_back(n);
    }
    const auto rows = genlap::run_table(sizes, k, alpha, beta, p, seed);
    Output out(out_path);
    if (format == "json") {
        nlohmann::ordered_json recs = nlohmann::ordered_json::array();
        for (const genlap::StudyRow& r : rows) {
            recs.push_back({{"n", r.n},
                            {"k", r.k},
                            {"alpha", digits15(r.alpha_true)},
                            {"alpha_hat", digits15(r.alpha_hat_mean)},
                            {"mse_alpha", digits15(r.mse_alpha)},
                            {"beta", digits15(r.beta_true)},
                            {"beta_hat", digits15(r.beta_hat_mean)},
                            {"mse_beta", digits15(r.mse_beta)}});
        }
        out.stream() << recs.dump(2) << "\n";
        return;
    }
    out.stream() << genlap::study_csv(rows);
}

void cmd_families(const std::string& format) {
    std::vector<std::string> ids = genlap::catalog_ids();
    ids.push_back("bml");
    if (format == "json") {
        std::cout << nlohmann::json(ids).dump() << "\n";
        return;
    }
    for (const std::string& id : ids) std::cout << id << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generated-distribution toolkit"};
    app.require_subcommand(1);

    std::string dist, params_csv, grid_spec, x_csv, in_path, out_path, nlist_csv;
    std::string format; // empty means per-subcommand default (json for fit, csv elsewhere)
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double p = 0.5, alpha = 1.0, beta = 1.0;
    int k = 0;

    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output encoding: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* eval = app.add_subcommand("eval", "tabulate pdf, cdf, survival and hazard");
    eval->add_option("--dist", dist, "distribution id (see `genlap families`)")->required();
    eval->add_option("--params", params_csv, "comma-separated parameters")->required();
    eval->add_option("--grid", grid_spec, "evaluation grid lo:hi:step");
    eval->add_option("--x", x_csv, "explicit comma-separated evaluation points");
    eval->add_option("--out", out_path, "write to file instead of stdout");
    add_format(eval);

    CLI::App* sample = app.add_subcommand("sample", "draw by inverse transform");
    sample->add_option("--dist", dist, "distribution id")->required();
    sample->add_option("--params", params_csv, "comma-separated parameters")->required();
    sample->add_option("--n", n, "number of draws")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "stream seed")->required();
    sample->add_option("--out", out_path, "write to file instead of stdout");
    add_format(sample);

    CLI::App* fit = app.add_subcommand("fit", "estimate mixture shapes from data");
    fit->add_option("--p", p, "known mixing proportion")->required();
    fit->add_option("--in", in_path, "data file, whitespace-separated (default stdin)");
    fit->add_option("--out", out_path, "write to file instead of stdout");
    add_format(fit);

    CLI::App* simulate = app.add_subcommand("simulate", "estimator recovery table");
    simulate->add_option("--n-list", nlist_csv, "comma-separated sample sizes")->required();
    simulate->add_option("--k", k, "replications per size")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--alpha", alpha, "true first shape")->required();
    simulate->add_option("--beta", beta, "true second shape")->required();
    simulate->add_option("--p", p, "mixing proportion")->required();
    simulate->add_option("--seed", seed, "master seed")->required();
    simulate->add_option("--out", out_path, "write to file instead of stdout");
    add_format(simulate);

    CLI::App* families = app.add_subcommand("families", "list known distribution ids");
    add_format(families);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (format.empty()) format = *fit ? "json" : "csv";

    try {
        if (*eval) {
            if (grid_spec.empty() == x_csv.empty()) {
                throw std::domain_error("eval needs exactly one of --grid or --x");
            }
            const std::vector<double> xs =
                grid_spec.empty() ? parse_reals(x_csv) : parse_grid(grid_spec);
            cmd_eval(dist, parse_reals(params_csv), xs, format, out_path);
        } else if (*sample) {
            cmd_sample(dist, parse_reals(params_csv), n, seed, format, out_path);
        } else if (*fit) {
            cmd_fit(p, in_path, format, out_path);
        } else if (*simulate) {
            cmd_simulate(nlist_csv, k, alpha, beta, p, seed, format, out_path);
        } else if (*families) {
            cmd_families(format);
        }
    } catch (const data_error& e) {
        std::cerr << "genlap: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "genlap: " << e.what() << "\n";
        return 1;
    } catch (const genlap::numerical_error& e) {
        std::cerr << "genlap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "genlap: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
