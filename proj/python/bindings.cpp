#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvq/errors.hpp"
#include "mvq/module_io.hpp"
#include "mvq/verify.hpp"

namespace py = pybind11;
using namespace mvq;

namespace {

CartanData cartan(const std::string& family, int rank) { return cartan_matrix(parse_family(family), rank); }

ModuleInput intervals_module(const std::string& family, int rank, const std::vector<std::tuple<int, int, int>>& spec) {
  IntervalSpec s;
  for (auto [a, b, mult] : spec) s.push_back({a - 1, b - 1, mult});
  return from_intervals(cartan(family, rank), s);
}

py::object optional_int(const std::optional<std::int64_t>& v) { return v ? py::object(py::int_(*v)) : py::none(); }

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["module"] = r.module;
  d["e"] = r.e;
  d["ring_dim"] = r.ring.finite ? py::object(py::int_(r.ring.dimension)) : py::object(py::str("INFINITE"));
  d["ring_hilbert"] = r.ring.hilbert;
  d["chi"] = optional_int(r.chi);
  d["poincare"] = r.poincare ? py::object(py::cast(r.poincare->coeffs)) : py::none();
  d["dim_match"] = r.dim_match;
  d["series_match"] = r.series_match;
  d["mode"] = mode_name(r.mode);
  return d;
}

VerifyOptions options(const std::optional<std::string>& mode, int max_dim) {
  VerifyOptions o;
  if (mode) {
    if (*mode == "assert")
      o.mode = Mode::Assert;
    else if (*mode == "explore")
      o.mode = Mode::Explore;
    else
      throw InputError("mode must be \"assert\" or \"explore\"");
  }
  o.poincare.count.max_total_dim = max_dim;
  return o;
}

}  // namespace

PYBIND11_MODULE(_mvq, m) {
  m.doc() = "Rings of T-fixed components against quiver Grassmannians of preprojective modules";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<PavingViolation>(m, "PavingViolation", PyExc_ArithmeticError);

  m.def("weyl_group_order", [](const std::string& family, int rank) { return weyl_elements(cartan(family, rank)).size(); },
        py::arg("family"), py::arg("rank"));
  m.def(
      "chamber_weights",
      [](const std::string& family, int rank) {
        std::vector<std::vector<int>> out;
        for (const auto& g : chamber_weights(cartan(family, rank))) out.push_back(g.weight.coords);
        return out;
      },
      py::arg("family"), py::arg("rank"));
  m.def(
      "check_admissibility",
      [](const std::string& family, int rank) {
        const auto rep = check_reduced_words(cartan(family, rank));
        py::dict d;
        d["elements"] = rep.elements;
        d["reduced_words"] = rep.reduced_words;
        d["checks"] = rep.checks;
        d["failures"] = rep.failures;
        return d;
      },
      py::arg("family"), py::arg("rank"));

  py::class_<ModuleInput>(m, "Module")
      .def_static("from_file", [](const std::string& path) { return parse_module_file(path); }, py::arg("path"))
      .def_static("from_json", [](const std::string& text) { return parse_module_text(text); }, py::arg("text"))
      .def_static("from_intervals", &intervals_module, py::arg("family"), py::arg("rank"), py::arg("intervals"),
                  "intervals: list of (from, to, mult), 1-based")
      .def_readonly("id", &ModuleInput::id)
      .def_property_readonly("dims", [](const ModuleInput& in) { return in.module.dims; })
      .def_property_readonly("is_kq", [](const ModuleInput& in) { return in.module.is_kq(); })
      .def_property_readonly("cartan", [](const ModuleInput& in) { return in.module.quiver.cartan().name(); })
      .def("__add__",
           [](const ModuleInput& a, const ModuleInput& b) {
             ModuleInput out{a.id + " (+) " + b.id, direct_sum(a.module, b.module), std::nullopt};
             if (a.intervals && b.intervals) {
               out.intervals = *a.intervals;
               out.intervals->insert(out.intervals->end(), b.intervals->begin(), b.intervals->end());
             }
             return out;
           })
      .def("__repr__", [](const ModuleInput& in) { return "<mvq.Module " + in.id + ">"; })
      .def("d_gamma",
           [](const ModuleInput& in, const std::vector<int>& gamma) { return d_gamma(in.module, Weight{gamma}); },
           py::arg("gamma"))
      .def("dgamma_table",
           [](const ModuleInput& in) {
             std::vector<std::pair<std::vector<int>, int>> out;
             for (const auto& g : chamber_weights(in.module.quiver.cartan()))
               out.emplace_back(g.weight.coords, d_gamma(in.module, g.weight));
             return out;
           })
      .def("polytope", [](const ModuleInput& in) {
        const auto data = polytope_data(in.module);
        std::vector<std::pair<std::string, std::vector<int>>> vertices;
        for (std::size_t k = 0; k < data.elements.size(); ++k)
          vertices.emplace_back(format_word(data.elements[k].word), data.lambda[k].coords);
        py::dict d;
        d["vertices"] = vertices;
        d["pseudo_weyl"] = check_pseudo_weyl(in.module.quiver.cartan(), data.family());
        return d;
      });

  m.def(
      "ring",
      [](const ModuleInput& in, const std::vector<int>& e) {
        const auto p = presentation(in.module, e);
        const auto q = quotient_dimension(p);
        py::dict d;
        d["ring_dim"] = q.finite ? py::object(py::int_(q.dimension)) : py::object(py::str("INFINITE"));
        d["ring_hilbert"] = q.hilbert;
        d["presentation"] = to_canonical_text(p);
        return d;
      },
      py::arg("module"), py::arg("e"));
  m.def(
      "euler_cc",
      [](const ModuleInput& in, const std::vector<int>& e) {
        if (!in.intervals) throw InputError("convolution needs a module built from intervals");
        return euler_cc(in.module.quiver.cartan(), *in.intervals, e);
      },
      py::arg("module"), py::arg("e"));
  m.def(
      "count_points",
      [](const ModuleInput& in, const std::vector<int>& e, std::uint64_t q, int max_dim) {
        CountOptions o;
        o.max_total_dim = max_dim;
        return py::int_(py::str(count_points_fq(in.module, e, q, o).get_str()));
      },
      py::arg("module"), py::arg("e"), py::arg("q"), py::arg("max_dim") = 8);
  m.def(
      "poincare",
      [](const ModuleInput& in, const std::vector<int>& e, int max_dim) {
        PoincareOptions o;
        o.count.max_total_dim = max_dim;
        return poincare_poly(in.module, e, o).coeffs;
      },
      py::arg("module"), py::arg("e"), py::arg("max_dim") = 8);
  m.def(
      "verify",
      [](const ModuleInput& in, const std::vector<int>& e, std::optional<std::string> mode, int max_dim) {
        return report_dict(verify(in, e, options(mode, max_dim)));
      },
      py::arg("module"), py::arg("e"), py::arg("mode") = py::none(), py::arg("max_dim") = 8);
  m.def(
      "scan",
      [](const ModuleInput& in, std::optional<std::string> mode, int max_dim) {
        py::list out;
        for (const auto& r : scan(in, options(mode, max_dim))) out.append(report_dict(r));
        return out;
      },
      py::arg("module"), py::arg("mode") = py::none(), py::arg("max_dim") = 8);
  m.def(
      "factor_check",
      [](const ModuleInput& a, const ModuleInput& b, const std::vector<int>& e) {
        const auto fc = factor_check(a.module, b.module, e);
        py::dict d;
        d["lhs"] = optional_int(fc.lhs);
        d["rhs"] = optional_int(fc.rhs);
        d["holds"] = fc.holds();
        return d;
      },
      py::arg("m1"), py::arg("m2"), py::arg("e"));
}
