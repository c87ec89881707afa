#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellweyl/hurwitz.hpp"
#include "ellweyl/interval.hpp"
#include "ellweyl/scherk.hpp"
#include "ellweyl/serialize.hpp"
#include "ellweyl/verify.hpp"

namespace py = pybind11;
using namespace ellweyl;

namespace {

Ambient parse_ambient(const std::string& name) {
  if (name == "V") return Ambient::V;
  if (name == "Vtilde") return Ambient::Vtilde;
  if (name == "Vhat") return Ambient::Vhat;
  throw py::value_error("ambient must be 'V', 'Vtilde' or 'Vhat'");
}

// JSON documents cross the boundary as Python objects via the json module.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_ellweyl, m) {
  m.doc() = "Core operations of the ellweyl library";

  py::register_exception<ProductMismatchError>(m, "ProductMismatchError", PyExc_ValueError);

  py::enum_<Kind>(m, "Kind")
      .value("D4", Kind::D4)
      .value("E6", Kind::E6)
      .value("E7", Kind::E7)
      .value("E8", Kind::E8);

  py::class_<RootVector>(m, "RootVector")
      .def(py::init<std::vector<int>, int, int>(), py::arg("beta"), py::arg("k") = 0, py::arg("l") = 0)
      .def_readwrite("beta", &RootVector::beta)
      .def_readwrite("k", &RootVector::k)
      .def_readwrite("l", &RootVector::l)
      .def("canonical", [](const RootVector& r) { return canonical(r); })
      .def(py::self == py::self)
      .def("__repr__", [](const RootVector& r) { return to_string(r); });

  py::class_<Triple>(m, "Triple")
      .def_readonly("kind", &Triple::kind)
      .def_readonly("w_fin", &Triple::w_fin)
      .def_readonly("lambda_", &Triple::lambda)
      .def_readonly("mu", &Triple::mu)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("inverse", &triple_inverse)
      .def("__pow__", [](const Triple& x, long long e) { return triple_pow(x, e); })
      .def("matrix", [](const Triple& x, const std::string& a) { return triple_to_matrix(x, parse_ambient(a)).matrix(); },
           py::arg("ambient") = "Vtilde")
      .def("to_json", [](const Triple& x) { return to_python(to_json(x)); });

  py::class_<ReflTuple>(m, "ReflTuple")
      .def(py::init<Kind, std::vector<RootVector>>())
      .def_property_readonly("kind", &ReflTuple::kind)
      .def_property_readonly("entries", &ReflTuple::entries)
      .def_property_readonly("product", &ReflTuple::product)
      .def("__len__", &ReflTuple::size)
      .def("sigma", [](const ReflTuple& t, int i, int dir) { return sigma(i, t, dir); }, py::arg("i"),
           py::arg("direction") = 1)
      .def(py::self == py::self);

  m.def("finite_roots", &finite_roots);
  m.def("highest_root", &highest_root);
  m.def("simple_root", &simple_root, py::arg("kind"), py::arg("i"), py::arg("k") = 0, py::arg("l") = 0);
  m.def("gram_matrix", [](Kind k, const std::string& a) { return gram_matrix(k, parse_ambient(a)); },
        py::arg("kind"), py::arg("ambient") = "Vtilde");
  m.def("signature", [](const IntMatrix& g) {
    const Signature s = signature(g);
    return py::make_tuple(s.positive, s.negative, s.zero);
  });
  m.def("coxeter_triple", &coxeter_triple);
  m.def("central_z", &central_z);
  m.def("reflection_triple", &reflection_triple);
  m.def("scherk_length", [](const Triple& x) { return to_python(to_json(scherk_length(x))); });
  m.def("standard_tuple", &standard_tuple);
  m.def("apply_braid", &apply_braid, py::arg("word"), py::arg("tuple"));

  m.def(
      "orbit_census",
      [](const ReflTuple& seed, int bound, std::size_t max_states, int threads) {
        std::optional<OrbitCensus> c;
        {
          py::gil_scoped_release release;
          c.emplace(orbit_explore(seed, {bound, max_states, threads}));
        }
        return to_python(census_summary(*c, 0));
      },
      py::arg("seed"), py::arg("bound") = 0, py::arg("max_states") = 1'000'000, py::arg("threads") = 1);

  m.def(
      "connect",
      [](const ReflTuple& from, const ReflTuple& to, int bound, std::size_t max_states) {
        ConnectResult r;
        {
          py::gil_scoped_release release;
          r = connect_search(from, to, bound, max_states);
        }
        return r.word;
      },
      py::arg("source"), py::arg("target"), py::arg("bound") = 1, py::arg("max_states") = 1'000'000,
      "Braid word taking source to target, or None if the bounded search is inconclusive.");

  m.def(
      "interval_poset",
      [](Kind kind, int bound, const std::string& format, std::size_t max_states) {
        const auto fmt = parse_poset_format(format);
        if (!fmt) throw py::value_error("format must be 'json' or 'dot'");
        std::string out;
        {
          py::gil_scoped_release release;
          out = export_poset(build_poset(orbit_explore(standard_tuple(kind), {bound, max_states, 1})), *fmt);
        }
        return out;
      },
      py::arg("kind"), py::arg("bound") = 0, py::arg("format") = "json", py::arg("max_states") = 1'000'000);

  m.def(
      "verify",
      [](const std::vector<Kind>& kinds, int samples, std::size_t census_states, std::uint64_t seed) {
        VerifyOptions o;
        o.seed = seed;
        o.normal_form_pairs = o.braid_words = samples;
        o.central_samples = samples;
        o.lambda_census_states = census_states;
        o.connect_census_states = census_states;
        o.connect_samples = std::max(1, samples / 100);
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_paper_suite(kinds, o);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["kind"] = r.kind;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("kinds"), py::arg("samples") = 10'000, py::arg("census_states") = 1'000'000,
      py::arg("seed") = VerifyOptions{}.seed);
}
