#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mvsf/cli.hpp"
#include "mvsf/errors.hpp"
#include "mvsf/integrate.hpp"
#include "mvsf/kober.hpp"
#include "mvsf/multigamma.hpp"
#include "mvsf/sampler.hpp"
#include "mvsf/zonal.hpp"

namespace py = pybind11;
using namespace mvsf;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

HermitianMatrix to_hermitian(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DomainError("expected a square matrix");
  const auto n = static_cast<std::size_t>(a.shape(0));
  ComplexMatrix m(n, n);
  auto r = a.unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = r(i, j);
  return HermitianMatrix(m);
}

CArray to_array(const HermitianMatrix& x) {
  const auto n = static_cast<py::ssize_t>(x.order());
  CArray out({n, n});
  auto w = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) w(i, j) = x(i, j);
  return out;
}

McConfig config(std::uint64_t samples, std::uint64_t seed, std::uint64_t batch) { return {samples, seed, batch}; }

}  // namespace

PYBIND11_MODULE(_mvsf, m) {
  m.doc() = "Matrix-variate gamma, beta and Kober operator numerics";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NonconvergedQuadrature>(m, "NonconvergedQuadrature", base.ptr());
  py::register_exception<RejectionTooLow>(m, "RejectionTooLow", base.ptr());
  py::register_exception<NormTooLarge>(m, "NormTooLarge", base.ptr());
  py::register_exception<NonconvergentTail>(m, "NonconvergentTail", base.ptr());
  py::register_exception<UnsupportedOrder>(m, "UnsupportedOrder", base.ptr());

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("value", &McEstimate::value)
      .def_readonly("std_error", &McEstimate::std_error)
      .def_readonly("n", &McEstimate::n)
      .def("__repr__", [](const McEstimate& e) {
        std::ostringstream s;
        s << "McEstimate(" << e.value << " +- " << e.std_error << ")";
        return s.str();
      });

  py::enum_<BetaRepresentation>(m, "BetaRepresentation")
      .value("type1", BetaRepresentation::type1)
      .value("type2", BetaRepresentation::type2);

  m.def("complex_multigamma", [](double a, int p) { return complex_multigamma({a, p}); }, py::arg("alpha"), py::arg("p"));
  m.def("real_multigamma", [](double a, int p) { return real_multigamma({a, p}); }, py::arg("alpha"), py::arg("p"));
  m.def("complex_matrix_beta", [](double a, double b, int p) { return complex_matrix_beta({a, b, p}); },
        py::arg("alpha"), py::arg("beta"), py::arg("p"));
  m.def("real_matrix_beta", [](double a, double b, int p) { return real_matrix_beta({a, b, p}); }, py::arg("alpha"),
        py::arg("beta"), py::arg("p"));

  // Quadrature returns (value, error_estimate).
  const auto quad = [](QuadratureResult r) { return py::make_tuple(r.value, r.error_estimate); };
  m.def("gamma_integral_real_p2", [quad](double a, int n) { return quad(gamma_integral_real_p2(a, {n})); },
        py::arg("alpha"), py::arg("nodes") = 64);
  m.def("gamma_integral_complex_p2", [quad](double a, int n) { return quad(gamma_integral_complex_p2(a, {n})); },
        py::arg("alpha"), py::arg("nodes") = 64);
  m.def("beta_integral_real_p2", [quad](double a, double b, int n) { return quad(beta_integral_real_p2(a, b, {n})); },
        py::arg("alpha"), py::arg("beta"), py::arg("nodes") = 64);
  m.def("beta_integral_complex_p2",
        [quad](double a, double b, int n) { return quad(beta_integral_complex_p2(a, b, {n})); }, py::arg("alpha"),
        py::arg("beta"), py::arg("nodes") = 64);

  m.def(
      "mc_gamma_integral",
      [](int p, double a, std::uint64_t samples, std::uint64_t seed, std::uint64_t batch) {
        py::gil_scoped_release release;
        return mc_gamma_integral(p, a, config(samples, seed, batch));
      },
      py::arg("p"), py::arg("alpha"), py::arg("samples") = 1'000'000, py::arg("seed") = 0, py::arg("batch") = 10'000);
  m.def(
      "mc_beta_integral",
      [](int p, double a, double b, BetaRepresentation rep, std::uint64_t samples, std::uint64_t seed,
         std::uint64_t batch) {
        py::gil_scoped_release release;
        return mc_beta_integral(p, a, b, rep, config(samples, seed, batch));
      },
      py::arg("p"), py::arg("alpha"), py::arg("beta"), py::arg("rep") = BetaRepresentation::type1,
      py::arg("samples") = 1'000'000, py::arg("seed") = 0, py::arg("batch") = 10'000);

  m.def("zonal_c", [](std::vector<int> parts, const CArray& x) { return zonal_c(Partition(parts), to_hermitian(x)); },
        py::arg("partition"), py::arg("x"));
  m.def(
      "hyp_pfq",
      [](std::vector<double> a, std::vector<double> b, const CArray& x, int k_max) {
        const auto v = hyp_pfq({std::move(a), std::move(b), k_max}, to_hermitian(x));
        return py::make_tuple(v.value, v.tail_bound);
      },
      py::arg("a"), py::arg("b"), py::arg("x"), py::arg("k_max") = 25, "Returns (value, tail_bound).");

  m.def(
      "kober2_power",
      [](double alpha, double beta, double gamma, const CArray& u) {
        return kober2_detpower_closed({KoberKind::second, alpha, beta, DetPowerNeg{gamma}, to_hermitian(u)});
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("u"));
  m.def(
      "kober1_case1",
      [](double alpha, double beta, double gamma, const CArray& u) {
        return kober1_case1_closed({KoberKind::first, alpha, beta, DetPower{gamma}, to_hermitian(u)});
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("u"));

  m.def("density", [](double a, const CArray& b, const CArray& x) { return density({a, to_hermitian(b)}, to_hermitian(x)); },
        py::arg("alpha"), py::arg("b"), py::arg("x"));
  m.def(
      "sample",
      [](double a, const CArray& b, std::size_t count, std::uint64_t seed) {
        MatrixGammaStream stream({a, to_hermitian(b)}, seed);
        py::list out;
        for (std::size_t k = 0; k < count; ++k) out.append(to_array(stream.next()));
        return out;
      },
      py::arg("alpha"), py::arg("b"), py::arg("count"), py::arg("seed") = 0);
  m.def(
      "normalization_check",
      [](double a, const CArray& b, std::uint64_t samples, std::uint64_t seed) {
        const MatrixGammaParams params{a, to_hermitian(b)};
        py::gil_scoped_release release;
        return normalization_check(params, config(samples, seed, 10'000));
      },
      py::arg("alpha"), py::arg("b"), py::arg("samples") = 1'000'000, py::arg("seed") = 0);
  m.def(
      "empirical_mean",
      [](double a, const CArray& b, std::uint64_t samples, std::uint64_t seed) {
        const MatrixGammaParams params{a, to_hermitian(b)};
        py::gil_scoped_release release;
        return empirical_mean(params, config(samples, seed, 10'000));
      },
      py::arg("alpha"), py::arg("b"), py::arg("samples") = 1'000'000, py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "mvsf");
        std::vector<const char*> argv;
        for (const auto& s : args) argv.push_back(s.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
