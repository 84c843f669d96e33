#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tavis/closed_form.hpp"
#include "tavis/errors.hpp"
#include "tavis/features.hpp"
#include "tavis/model.hpp"
#include "tavis/observables.hpp"
#include "tavis/oracle.hpp"

namespace py = pybind11;
using namespace tavis;

namespace {

py::array_t<double> column(const ObservableSeries& s, double ObservablePoint::*field) {
    py::array_t<double> out(static_cast<py::ssize_t>(s.points.size()));
    auto view = out.mutable_unchecked<1>();
    for (std::size_t k = 0; k < s.points.size(); ++k) view(k) = s.points[k].*field;
    return out;
}

py::array_t<double> population(const ObservableSeries& s, double Populations::*field) {
    py::array_t<double> out(static_cast<py::ssize_t>(s.points.size()));
    auto view = out.mutable_unchecked<1>();
    for (std::size_t k = 0; k < s.points.size(); ++k) view(k) = s.points[k].pops.*field;
    return out;
}

py::dict series_dict(const ObservableSeries& s) {
    py::dict d;
    d["tau"] = column(s, &ObservablePoint::tau);
    d["purity_direct"] = column(s, &ObservablePoint::purity_direct);
    d["purity_eq8"] = column(s, &ObservablePoint::purity_eq8);
    d["linear_entropy"] = column(s, &ObservablePoint::linear_entropy);
    d["von_neumann_entropy"] = column(s, &ObservablePoint::von_neumann_entropy);
    d["field_purity"] = column(s, &ObservablePoint::field_purity);
    d["mean_n"] = column(s, &ObservablePoint::mean_photon_number);
    d["p_ee"] = population(s, &Populations::p_ee);
    d["p_eg"] = population(s, &Populations::p_eg);
    d["p_ge"] = population(s, &Populations::p_ge);
    d["p_gg"] = population(s, &Populations::p_gg);
    return d;
}

ObservableSeries series_from(const ModelParams& params, const std::vector<double>& tau, const std::string& backend) {
    return compute_series(params, tau, parse_backend(backend));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact dynamics of two nonidentical two-level atoms in a coherent single-mode field";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<TruncationTooTight>(m, "TruncationTooTight", PyExc_ValueError);
    py::register_exception<InsufficientSpan>(m, "InsufficientSpan", PyExc_ValueError);
    py::register_exception<EigensolverFailure>(m, "EigensolverFailure", PyExc_RuntimeError);

    py::class_<ModelParams>(m, "ModelParams")
        .def_readonly("r_ratio", &ModelParams::r_ratio)
        .def_readonly("mean_photons", &ModelParams::mean_photons)
        .def_readonly("phase", &ModelParams::phase)
        .def_readonly("n_max", &ModelParams::n_max)
        .def_readonly("tail_tolerance", &ModelParams::tail_tolerance)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(r_ratio=" + std::to_string(p.r_ratio) + ", mean_photons=" +
                   std::to_string(p.mean_photons) + ", n_max=" + std::to_string(p.n_max) + ")";
        });

    m.def("make_params", &make_params, py::arg("r_ratio"), py::arg("mean_photons"), py::arg("phase") = 0.,
          py::arg("tail_tolerance") = kDefaultTailTolerance, py::arg("n_max") = 0);
    m.def("choose_truncation", &choose_truncation, py::arg("mean_photons"),
          py::arg("tail_tolerance") = kDefaultTailTolerance);
    m.def("poisson_tail", &poisson_tail, py::arg("mean_photons"), py::arg("n_max"));
    m.def(
        "coherent_weights",
        [](const ModelParams& p) {
            const auto w = coherent_weights(p);
            return py::make_tuple(py::array_t<double>(w.weights.size(), w.weights.data()),
                                  py::array_t<std::complex<double>>(w.amplitudes.size(), w.amplitudes.data()));
        },
        py::arg("params"), "(p_n, coherent amplitudes) for n = 0..n_max");

    py::class_<SectorSpectrum>(m, "SectorSpectrum")
        .def_readonly("lambda_plus", &SectorSpectrum::lambda_plus)
        .def_readonly("lambda_minus", &SectorSpectrum::lambda_minus)
        .def_readonly("beta", &SectorSpectrum::beta);
    m.def("sector_spectrum", &sector_spectrum, py::arg("n"), py::arg("r_ratio"));

    auto amps = [](const SectorAmplitudes& a) {
        py::array_t<std::complex<double>> out(4);
        auto v = out.mutable_unchecked<1>();
        const auto arr = a.as_array();
        for (int k = 0; k < 4; ++k) v(k) = arr[k];
        return out;
    };
    m.def(
        "amplitudes_closed", [amps](int n, double r, double tau) { return amps(amplitudes_closed(n, r, tau)); },
        py::arg("n"), py::arg("r_ratio"), py::arg("tau"), "[c1, c2, c3, c4] from the analytic solution");
    m.def(
        "amplitudes_oracle", [amps](int n, double r, double tau) { return amps(amplitudes_oracle(n, r, tau)); },
        py::arg("n"), py::arg("r_ratio"), py::arg("tau"), "[c1, c2, c3, c4] from exact diagonalization");
    m.def(
        "hamiltonian_block", [](int n, double r) { return hamiltonian_block(n, r).matrix; }, py::arg("n"),
        py::arg("r_ratio"));

    m.def(
        "purity_eq8", [](const ModelParams& p, double tau) { return purity_eq8(p, tau); }, py::arg("params"),
        py::arg("tau"));
    m.def(
        "simulate",
        [](const ModelParams& p, const std::vector<double>& tau, const std::string& backend) {
            return series_dict(series_from(p, tau, backend));
        },
        py::arg("params"), py::arg("tau"), py::arg("backend") = "closed_form",
        "Observables on the given scaled-time grid, as a dict of numpy arrays.");
    m.def(
        "detect_features",
        [](const ModelParams& p, const std::vector<double>& tau, const std::string& backend) {
            const auto rep = detect_features(series_from(p, tau, backend), p);
            py::dict d;
            d["r_ratio"] = rep.r_ratio;
            d["mean_photons"] = rep.mean_photons;
            d["t_revival_predicted"] = rep.t_revival_predicted;
            d["t_revival_measured"] = rep.t_revival_measured;
            d["purity_collapse_min"] = rep.purity_collapse_min;
            d["purity_revival_max"] = rep.purity_revival_max;
            d["collapse_window"] = py::make_tuple(rep.collapse_window.first, rep.collapse_window.second);
            d["revival_window"] = py::make_tuple(rep.revival_window.first, rep.revival_window.second);
            return d;
        },
        py::arg("params"), py::arg("tau"), py::arg("backend") = "closed_form");
    m.def("revival_time", &revival_time, py::arg("mean_photons"));
    m.def("required_span", &required_span, py::arg("mean_photons"));
    m.def("linspace", &linspace, py::arg("start"), py::arg("end"), py::arg("steps"));
}
