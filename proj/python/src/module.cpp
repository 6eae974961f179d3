#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

#include "haarhankel/csv.hpp"
#include "haarhankel/errors.hpp"
#include "haarhankel/haar.hpp"
#include "haarhankel/oracle.hpp"
#include "haarhankel/series.hpp"
#include "haarhankel/specfun.hpp"

namespace py = pybind11;
using namespace haarhankel;

namespace {

using DetailTuple = std::tuple<int, std::int64_t, double>;

WaveletCoefficients make_coefficients(double h, int max_level, double scaling,
                                      const std::vector<DetailTuple>& details, double threshold) {
  std::vector<DetailCoefficient> entries;
  entries.reserve(details.size());
  for (const auto& [j, k, v] : details) {
    entries.push_back({j, k, v});
  }
  return WaveletCoefficients(h, max_level, scaling, std::move(entries), threshold);
}

std::vector<DetailTuple> detail_tuples(const WaveletCoefficients& c) {
  std::vector<DetailTuple> out;
  out.reserve(c.details().size());
  for (const auto& d : c.details()) {
    out.emplace_back(d.level, d.index, d.value);
  }
  return out;
}

RadialFunction radial(std::function<double(double)> f) {
  RadialFunction rf;
  rf.evaluate = std::move(f);
  return rf;
}

template <double (*F)(double)>
void def_special(py::module_& m, const char* name, const char* doc) {
  m.def(name, py::vectorize(F), py::arg("x"), doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hankel transforms of order 0 and 1 through Haar wavelet series";

  py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);

  py::enum_<TransformOrder>(m, "TransformOrder")
      .value("Order0", TransformOrder::Order0)
      .value("Order1", TransformOrder::Order1);

  def_special<specfun::bessel_j0>(m, "bessel_j0", "J0(x)");
  def_special<specfun::bessel_j1>(m, "bessel_j1", "J1(x)");
  def_special<specfun::struve_h0>(m, "struve_h0", "H0(x), x >= 0");
  def_special<specfun::struve_h1>(m, "struve_h1", "H1(x), x >= 0");
  def_special<specfun::struve_d>(m, "struve_d", "H0 J1 - H1 J0, x >= 0");
  def_special<specfun::j0_primitive>(m, "j0_primitive", "int_0^x J0(t) dt, x >= 0");

  py::class_<WaveletCoefficients>(m, "WaveletCoefficients")
      .def(py::init(&make_coefficients), py::arg("h"), py::arg("max_level"), py::arg("scaling"),
           py::arg("details"), py::arg("threshold") = 0.0,
           "details: list of (j, k, value), coarse to fine with ascending k")
      .def_property_readonly("h", &WaveletCoefficients::h)
      .def_property_readonly("max_level", &WaveletCoefficients::max_level)
      .def_property_readonly("scaling", &WaveletCoefficients::scaling)
      .def_property_readonly("threshold", &WaveletCoefficients::threshold)
      .def_property_readonly("details", &detail_tuples)
      .def("detail", &WaveletCoefficients::detail, py::arg("j"), py::arg("k"))
      .def("sparsified", &WaveletCoefficients::sparsified, py::arg("eps"))
      .def("to_csv",
           [](const WaveletCoefficients& c) {
             std::ostringstream out;
             io::write_coefficients_csv(out, c);
             return out.str();
           })
      .def_static(
          "from_csv",
          [](const std::string& text, double h) {
            std::istringstream in(text);
            return io::read_coefficients_csv(in, h);
          },
          py::arg("text"), py::arg("h"))
      .def("__len__", [](const WaveletCoefficients& c) { return c.details().size() + 1; })
      .def("__repr__", [](const WaveletCoefficients& c) {
        return "WaveletCoefficients(h=" + io::format_double(c.h()) +
               ", max_level=" + std::to_string(c.max_level()) +
               ", details=" + std::to_string(c.details().size()) + ")";
      });

  m.def("gaussian_coefficients", &gaussian_coefficients, py::arg("a"), py::arg("h"), py::arg("max_level"),
        "Closed-form Haar table of g(r) = r^2 exp(-a^2 r^2) on [0, h]");
  m.def("gaussian_exact_transform", py::vectorize(&gaussian_exact_transform), py::arg("a"), py::arg("p"));

  m.def(
      "decompose",
      [](std::function<double(double)> f, double h, int max_level, double eps, double abs_tol,
         int max_depth) {
        IntegrationOptions opts;
        opts.abs_tol = abs_tol;
        opts.max_depth = max_depth;
        return decompose(radial(std::move(f)), h, max_level, eps, opts);
      },
      py::arg("f"), py::arg("h"), py::arg("max_level"), py::arg("eps") = 0.0,
      py::arg("abs_tol") = IntegrationOptions{}.abs_tol, py::arg("max_depth") = IntegrationOptions{}.max_depth,
      "Haar table of g(r) = f(r) r on [0, h] by adaptive quadrature");
  m.def("reconstruct", &reconstruct, py::arg("coeffs"), py::arg("x"),
        "Partial Haar sum at rescaled x in [0, 1]");
  m.def(
      "reconstruct",
      [](const WaveletCoefficients& c, py::array_t<double, py::array::c_style | py::array::forcecast> x) {
        py::array_t<double> out(x.request().shape);
        const double* in = x.data();
        double* dst = out.mutable_data();
        for (py::ssize_t i = 0; i < x.size(); ++i) {
          dst[i] = reconstruct(c, in[i]);
        }
        return out;
      },
      py::arg("coeffs"), py::arg("x"));

  m.def("atom_transform_scaling", &atom_transform_scaling, py::arg("k"), py::arg("p"), py::arg("order"));
  m.def("atom_transform_detail", &atom_transform_detail, py::arg("j"), py::arg("k"), py::arg("p"),
        py::arg("order"));
  m.def("transform", &transform, py::arg("coeffs"), py::arg("order"), py::arg("p"));
  m.def(
      "transform_grid",
      [](const WaveletCoefficients& c, TransformOrder order, const std::vector<double>& grid) {
        const auto curve = transform_grid(c, order, grid);
        py::array_t<double> values(static_cast<py::ssize_t>(curve.size()));
        auto out = values.mutable_unchecked<1>();
        for (std::size_t i = 0; i < curve.size(); ++i) {
          out(static_cast<py::ssize_t>(i)) = curve[i].value;
        }
        return values;
      },
      py::arg("coeffs"), py::arg("order"), py::arg("grid"),
      "Transform values on a strictly increasing grid of p >= 0");

  m.def(
      "direct_hankel",
      [](std::function<double(double)> f, TransformOrder order, double p, double r_max, double abs_tol,
         double rel_tol, std::size_t max_panels, const std::vector<double>& breakpoints) {
        QuadratureConfig cfg;
        cfg.r_max = r_max;
        cfg.abs_tol = abs_tol;
        cfg.rel_tol = rel_tol;
        cfg.max_panels = max_panels;
        return direct_hankel(radial(std::move(f)), order, p, cfg, breakpoints);
      },
      py::arg("f"), py::arg("order"), py::arg("p"), py::arg("r_max"),
      py::arg("abs_tol") = QuadratureConfig{}.abs_tol, py::arg("rel_tol") = QuadratureConfig{}.rel_tol,
      py::arg("max_panels") = QuadratureConfig{}.max_panels, py::arg("breakpoints") = std::vector<double>{},
      "int_0^r_max f(r) J_n(p r) r dr by panel quadrature between Bessel zeros");
}
