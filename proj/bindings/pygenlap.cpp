// Python bindings for the core operations: mixture-law evaluation and
// sampling, closed-form estimation, the catalog of generated families, the
// recovery study harness and the special functions underneath them.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "genlap/basedist.hpp"
#include "genlap/bml.hpp"
#include "genlap/catalog.hpp"
#include "genlap/estimate.hpp"
#include "genlap/framework.hpp"
#include "genlap/simstudy.hpp"
#include "genlap/specfun.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_genlap, m) {
    m.doc() = "generated-distribution toolkit";

    py::class_<genlap::BmlParams>(m, "BmlParams")
        .def(py::init([](double alpha, double beta, double p, double mu, double sigma) {
                 return genlap::BmlParams{alpha, beta, p, mu, sigma};
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("p"), py::arg("mu") = 0.0,
             py::arg("sigma") = 1.0)
        .def_readwrite("alpha", &genlap::BmlParams::alpha)
        .def_readwrite("beta", &genlap::BmlParams::beta)
        .def_readwrite("p", &genlap::BmlParams::p)
        .def_readwrite("mu", &genlap::BmlParams::mu)
        .def_readwrite("sigma", &genlap::BmlParams::sigma)
        .def("__repr__", [](const genlap::BmlParams& q) {
            return "BmlParams(alpha=" + std::to_string(q.alpha) +
                   ", beta=" + std::to_string(q.beta) + ", p=" + std::to_string(q.p) +
                   ", mu=" + std::to_string(q.mu) + ", sigma=" + std::to_string(q.sigma) + ")";
        });

    py::class_<genlap::MgfDomain>(m, "MgfDomain")
        .def_readonly("lo", &genlap::MgfDomain::lo)
        .def_readonly("hi", &genlap::MgfDomain::hi);

    m.def("bml_pdf", &genlap::bml_pdf, py::arg("params"), py::arg("x"));
    m.def("bml_cdf", &genlap::bml_cdf, py::arg("params"), py::arg("x"));
    m.def("bml_survival", &genlap::bml_survival, py::arg("params"), py::arg("x"));
    m.def("bml_hazard", &genlap::bml_hazard, py::arg("params"), py::arg("x"));
    m.def("bml_quantile", &genlap::bml_quantile, py::arg("params"), py::arg("q"));
    m.def("bml_mgf_domain", &genlap::bml_mgf_domain, py::arg("params"));
    m.def("bml_mgf", &genlap::bml_mgf, py::arg("params"), py::arg("t"));
    m.def("bml_mgf_integer", &genlap::bml_mgf_integer, py::arg("m"), py::arg("n"),
          py::arg("p"), py::arg("t"));
    m.def("bml_moment_integer", &genlap::bml_moment_integer, py::arg("m"), py::arg("n"),
          py::arg("p"), py::arg("k"));
    m.def(
        "bml_series_pdf",
        [](const genlap::BmlParams& q, double x, int terms) {
            double trunc = 0.0;
            const double value = genlap::bml_series_pdf(q, x, terms, &trunc);
            return py::make_tuple(value, trunc);
        },
        py::arg("params"), py::arg("x"), py::arg("terms"),
        "Truncated series density; returns (value, truncation_estimate).");
    m.def("bml_sample", &genlap::bml_sample, py::arg("params"), py::arg("n"),
          py::arg("seed"));

    py::class_<genlap::ShapeEstimate>(m, "ShapeEstimate")
        .def_readonly("alpha_hat", &genlap::ShapeEstimate::alpha_hat)
        .def_readonly("beta_hat", &genlap::ShapeEstimate::beta_hat)
        .def("__repr__", [](const genlap::ShapeEstimate& e) {
            return "ShapeEstimate(alpha_hat=" + std::to_string(e.alpha_hat) +
                   ", beta_hat=" + std::to_string(e.beta_hat) + ")";
        });

    py::class_<genlap::FitResult>(m, "FitResult")
        .def_readonly("alpha_hat", &genlap::FitResult::alpha_hat)
        .def_readonly("beta_hat", &genlap::FitResult::beta_hat)
        .def_readonly("weights", &genlap::FitResult::weights)
        .def_readonly("per_obs", &genlap::FitResult::per_obs)
        .def_readonly("log_lik", &genlap::FitResult::log_lik);

    m.def("mle_single", &genlap::mle_single, py::arg("x"));
    m.def("log_likelihood", &genlap::log_likelihood, py::arg("data"), py::arg("alpha"),
          py::arg("beta"), py::arg("p"));
    m.def("fit_weighted", &genlap::fit_weighted, py::arg("data"), py::arg("p"));

    // catalog entries travel as shared handles; evaluation goes through the
    // free functions so the hand-coded forms and the composition stay paired
    py::class_<genlap::CatalogEntry, std::shared_ptr<genlap::CatalogEntry>>(m, "CatalogEntry")
        .def_readonly("id", &genlap::CatalogEntry::id)
        .def_readonly("gen_params", &genlap::CatalogEntry::gen_params)
        .def_readonly("base_params", &genlap::CatalogEntry::base_params);

    m.def(
        "make_catalog_entry",
        [](const std::string& id, const std::vector<double>& gen_params,
           const std::vector<double>& base_params) {
            return std::make_shared<genlap::CatalogEntry>(
                genlap::make_catalog_entry(id, gen_params, base_params));
        },
        py::arg("id"), py::arg("gen_params"), py::arg("base_params"));
    m.def("catalog_ids", [] { return genlap::catalog_ids(); });
    m.def(
        "catalog_pdf",
        [](const std::shared_ptr<genlap::CatalogEntry>& e, double x) {
            return genlap::catalog_pdf(*e, x);
        },
        py::arg("entry"), py::arg("x"));
    m.def(
        "catalog_cdf",
        [](const std::shared_ptr<genlap::CatalogEntry>& e, double x) {
            return genlap::catalog_cdf(*e, x);
        },
        py::arg("entry"), py::arg("x"));
    m.def(
        "catalog_hazard",
        [](const std::shared_ptr<genlap::CatalogEntry>& e, double x) {
            return genlap::catalog_hazard(*e, x);
        },
        py::arg("entry"), py::arg("x"));
    m.def(
        "catalog_sample",
        [](const std::shared_ptr<genlap::CatalogEntry>& e, std::size_t n, std::uint64_t seed) {
            return genlap::sample_inverse(genlap::compose(e->base, e->gen), n, seed);
        },
        py::arg("entry"), py::arg("n"), py::arg("seed"));

    py::class_<genlap::StudyRow>(m, "StudyRow")
        .def_readonly("n", &genlap::StudyRow::n)
        .def_readonly("k", &genlap::StudyRow::k)
        .def_readonly("alpha_true", &genlap::StudyRow::alpha_true)
        .def_readonly("alpha_hat_mean", &genlap::StudyRow::alpha_hat_mean)
        .def_readonly("mse_alpha", &genlap::StudyRow::mse_alpha)
        .def_readonly("beta_true", &genlap::StudyRow::beta_true)
        .def_readonly("beta_hat_mean", &genlap::StudyRow::beta_hat_mean)
        .def_readonly("mse_beta", &genlap::StudyRow::mse_beta);

    m.def(
        "run_study",
        [](int n, int k, double alpha, double beta, double p, std::uint64_t seed) {
            return genlap::run_study({n, k, alpha, beta, p, seed});
        },
        py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("beta"), py::arg("p"),
        py::arg("seed"));
    m.def("run_table", &genlap::run_table, py::arg("n_list"), py::arg("k"), py::arg("alpha"),
          py::arg("beta"), py::arg("p"), py::arg("seed"));
    m.def("study_csv", &genlap::study_csv, py::arg("rows"));

    m.def("log_gamma", &genlap::log_gamma, py::arg("x"));
    m.def("beta_fn", &genlap::beta_fn, py::arg("a"), py::arg("b"));
    m.def("reg_inc_beta", &genlap::reg_inc_beta, py::arg("x"), py::arg("a"), py::arg("b"));
    m.def("inv_reg_inc_beta", &genlap::inv_reg_inc_beta, py::arg("q"), py::arg("a"),
          py::arg("b"));
    m.def("probit", &genlap::probit, py::arg("u"));
}
