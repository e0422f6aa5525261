#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "hsres/error.hpp"
#include "hsres/fock.hpp"
#include "hsres/gaussian.hpp"
#include "hsres/measures.hpp"
#include "hsres/pmix.hpp"
#include "hsres/probe_design.hpp"
#include "hsres/suite.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace hsres;

namespace {

// Matrices cross the boundary as complex numpy arrays and are validated here.
DensityMatrix density(const ComplexMatrix& m) { return DensityMatrix(m); }
Observable observable(const ComplexMatrix& m) { return Observable(m); }

py::tuple state(const FockState& s) { return py::make_tuple(s.rho.matrix(), s.truncation.trace_deficit); }

FockSpace space_or(std::optional<Index> cutoff, const FockSpace& fallback) {
  return cutoff ? FockSpace(*cutoff) : fallback;
}

py::dict optimum(const GaussianOptimum& o) {
  return py::dict("lambda_sq"_a = o.lambda_sq, "x0"_a = o.state.mean_x(), "dx"_a = o.state.dx(),
                  "dy"_a = o.state.dy(), "grid_lambda_sq"_a = o.grid_lambda_sq,
                  "analytic_lambda_sq"_a = o.analytic_lambda_sq);
}

py::dict witness(const WitnessResult& w) {
  return py::dict("verdict"_a = to_string(w.verdict), "lambda_sq"_a = w.lambda_sq, "threshold"_a = w.threshold,
                  "margin"_a = w.margin());
}

CoherentMixture mixture(const std::vector<double>& weights, const std::vector<Complex>& amplitudes) {
  return CoherentMixture(weights, amplitudes);
}

}  // namespace

PYBIND11_MODULE(_hsres, m) {
  m.doc() = "Hilbert-Schmidt resolution of quantum probes";

  static py::exception<Error> base(m, "HsresError", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<DimensionError> dimension(m, "DimensionError", base.ptr());
  static py::exception<InvariantError> invariant(m, "InvariantError", base.ptr());
  static py::exception<TruncationError> truncation(m, "TruncationError", base.ptr());
  static py::exception<ConvergenceError> convergence(m, "ConvergenceError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const DimensionError& e) {
      py::set_error(dimension, e.what());
    } catch (const InvariantError& e) {
      py::set_error(invariant, e.what());
    } catch (const TruncationError& e) {
      py::set_error(truncation, e.what());
    } catch (const ConvergenceError& e) {
      py::set_error(convergence, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  // measures
  m.def("lambda_sq", [](const ComplexMatrix& rho, const ComplexMatrix& g, const std::string& method) {
    const DensityMatrix r = density(rho);
    const Observable o = observable(g);
    if (method == "trace") return lambda_sq(r, o);
    if (method == "spectral_g") return lambda_sq_spectral_g(r, o);
    if (method == "spectral_rho") return lambda_sq_spectral_rho(r, o);
    if (method == "commutator") return lambda_sq_commutator(r, o);
    throw DomainError("lambda_sq: unknown method '" + method + "'");
  }, "rho"_a, "g"_a, "method"_a = "trace");
  m.def("tilde_lambda_sq", [](const ComplexMatrix& rho, const ComplexMatrix& g) {
    return tilde_lambda_sq(density(rho), observable(g));
  }, "rho"_a, "g"_a);
  m.def("variance", [](const ComplexMatrix& rho, const ComplexMatrix& g) {
    return variance(density(rho), observable(g));
  }, "rho"_a, "g"_a);
  m.def("fisher_info", [](const ComplexMatrix& rho, const ComplexMatrix& g) {
    return fisher_info(density(rho), observable(g));
  }, "rho"_a, "g"_a);
  m.def("skew_info", [](const ComplexMatrix& rho, const ComplexMatrix& g) {
    return skew_info(density(rho), observable(g));
  }, "rho"_a, "g"_a);
  m.def("evolve", [](const ComplexMatrix& rho, const ComplexMatrix& g, double chi) {
    return evolve(density(rho), observable(g), chi).matrix();
  }, "rho"_a, "g"_a, "chi"_a);
  m.def("hs_distance_sq", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return hs_distance_sq(density(a), density(b));
  }, "rho1"_a, "rho2"_a);
  m.def("bures_distance_sq", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return bures_distance_sq(density(a), density(b));
  }, "rho1"_a, "rho2"_a);
  m.def("hellinger_distance", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return hellinger_distance(density(a), density(b));
  }, "rho1"_a, "rho2"_a);
  m.def("small_signal_ratio", [](const ComplexMatrix& rho, const ComplexMatrix& g, double chi) {
    return small_signal_ratio(density(rho), observable(g), chi);
  }, "rho"_a, "g"_a, "chi"_a);

  // fock
  m.def("number_operator", [](Index cutoff) { return number_operator(FockSpace(cutoff)).matrix(); }, "cutoff"_a);
  m.def("quadratures", [](Index cutoff) {
    const Quadratures q = quadratures(FockSpace(cutoff));
    return py::make_tuple(q.x.matrix(), q.y.matrix());
  }, "cutoff"_a);
  m.def("coherent_state", [](Complex alpha, std::optional<Index> cutoff) {
    return state(coherent_state(alpha, space_or(cutoff, space_for_coherent(alpha))));
  }, "alpha"_a, "cutoff"_a = py::none(), "Returns (rho, trace_deficit).");
  m.def("squeezed_vacuum", [](double r, std::optional<Index> cutoff) {
    return state(squeezed_vacuum(r, space_or(cutoff, space_for_squeezed(r))));
  }, "r"_a, "cutoff"_a = py::none());
  m.def("thermal_state", [](double xi, std::optional<Index> cutoff) {
    return state(thermal_state(xi, space_or(cutoff, space_for_thermal(xi))));
  }, "xi"_a, "cutoff"_a = py::none());
  m.def("gaussian_state", [](double mx, double my, double dx, double dy, std::optional<Index> cutoff) {
    return state(gaussian_state(mx, my, dx, dy, space_or(cutoff, space_for_gaussian(mx, my, dx, dy))));
  }, "mean_x"_a, "mean_y"_a, "dx"_a, "dy"_a, "cutoff"_a = py::none());

  // gaussian
  py::class_<AxisAlignedGaussian>(m, "AxisAlignedGaussian")
      .def(py::init<double, double, double, double>(), "mean_x"_a, "mean_y"_a, "dx"_a, "dy"_a)
      .def_static("squeezed_vacuum", &AxisAlignedGaussian::squeezed_vacuum, "r"_a)
      .def_static("thermal", &AxisAlignedGaussian::thermal, "xi"_a)
      .def_static("coherent", &AxisAlignedGaussian::coherent, "alpha"_a)
      .def_property_readonly("mean_x", &AxisAlignedGaussian::mean_x)
      .def_property_readonly("mean_y", &AxisAlignedGaussian::mean_y)
      .def_property_readonly("dx", &AxisAlignedGaussian::dx)
      .def_property_readonly("dy", &AxisAlignedGaussian::dy)
      .def_property_readonly("purity_factor", &AxisAlignedGaussian::purity_factor);
  m.def("mean_photon", &mean_photon, "g"_a);
  m.def("hs_displacement", &hs_displacement, "g"_a, "chi"_a);
  m.def("hs_phase", &hs_phase, "g"_a, "chi"_a);
  m.def("lambda_x_gauss", &lambda_x_gauss, "g"_a);
  m.def("lambda_y_gauss", &lambda_y_gauss, "g"_a);
  m.def("lambda_n_gauss", &lambda_n_gauss, "g"_a);
  m.def("optimize_displacement", [](double n) { return optimum(optimize_displacement(n)); }, "n"_a);
  m.def("optimize_phase", [](double n) { return optimum(optimize_phase(n)); }, "n"_a);

  // pmix
  m.def("mixture_density", [](const std::vector<double>& w, const std::vector<Complex>& a,
                              std::optional<Index> cutoff) {
    const CoherentMixture mix = mixture(w, a);
    return state(to_density(mix, space_or(cutoff, space_for_mixture(mix))));
  }, "weights"_a, "amplitudes"_a, "cutoff"_a = py::none());
  m.def("lambda_sq_weak", [](const std::vector<double>& w, const std::vector<Complex>& a, const std::string& g) {
    if (g != "X" && g != "N") throw DomainError("lambda_sq_weak: generator must be X or N");
    return lambda_sq_weak(mixture(w, a), g == "X" ? WeakGenerator::x : WeakGenerator::n);
  }, "weights"_a, "amplitudes"_a, "generator"_a);
  m.def("witness", [](const ComplexMatrix& rho, const std::string& g) {
    const DensityMatrix r = density(rho);
    const FockSpace s(r.dim());
    if (g == "X") return witness(witness_displacement(r, quadratures(s).x));
    if (g == "N") return witness(witness_number(r, number_operator(s)));
    throw DomainError("witness: generator must be X or N for a single mode");
  }, "rho"_a, "generator"_a);

  // probe design
  m.def("optimum_pure_generator", [](const ComplexMatrix& rho) {
    const GeneratorOptimum o = optimum_pure_generator(density(rho));
    py::object g = py::none();
    if (o.generator) g = py::cast(ComplexMatrix(o.generator->matrix()));
    return py::dict("generator"_a = g, "lambda_sq"_a = o.lambda_sq, "r_max"_a = o.r_max, "r_min"_a = o.r_min);
  }, "rho"_a);
  m.def("two_level_lambda", &two_level_lambda, "q"_a, "mu"_a, "g1"_a, "g2"_a);

  // reproduction suite
  m.def("report_json", [](std::uint64_t seed, bool corrupt) {
    SuiteOptions o;
    o.seed = seed;
    o.corrupt_lambda_sign = corrupt;
    py::gil_scoped_release release;
    return to_json(run_suite(o));
  }, "seed"_a = SuiteOptions{}.seed, "corrupt_lambda_sign"_a = false);
}
