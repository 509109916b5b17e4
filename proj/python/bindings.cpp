// Python bindings for the kinv core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "kinv/alexander.hpp"
#include "kinv/bracket.hpp"
#include "kinv/diagram.hpp"
#include "kinv/error.hpp"
#include "kinv/group.hpp"
#include "kinv/homsearch.hpp"
#include "kinv/wirtinger.hpp"

namespace py = pybind11;
using namespace kinv;

namespace {

// Laurent polynomials cross the boundary as {exponent: coefficient}.
py::dict poly_dict(const LaurentPoly& p) {
  py::dict d;
  for (int e = p.min_exponent(); !p.is_zero() && e <= p.max_exponent(); ++e) {
    BigInt c = p.coeff(e);
    if (c != 0) d[py::int_(e)] = py::module_::import("builtins").attr("int")(c.str());
  }
  return d;
}

py::dict report_dict(const HomCountReport& r) {
  py::dict d;
  d["hom_count"] = r.hom_count;
  d["epi_count"] = r.epi_count;
  d["orbit_count"] = r.orbit_count ? py::object(py::int_(*r.orbit_count)) : py::object(py::none());
  py::dict longs;
  for (const auto& [h, c] : r.longitude_breakdown) longs[py::str(h.to_cycles())] = c;
  d["longitudes"] = longs;
  d["longitudes_epi_only"] = r.breakdown_is_epi_only;
  d["class_size"] = r.class_size;
  d["branching_depth"] = r.branching_depth;
  d["nodes_visited"] = r.nodes_visited;
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

Permutation meridian_image(const PermGroup& g, std::optional<std::uint64_t> order,
                           std::optional<std::string> rep) {
  if (rep) return parse_cycles(*rep, g.degree());
  if (!order) throw InvalidInput("give class_order or class_rep");
  auto x = find_class_rep(g, *order);
  if (!x) throw ComputeError("group has no element of order " + std::to_string(*order));
  return *x;
}

Diagram knot(const std::string& arg) {
  return arg.rfind("X[", 0) == 0 ? parse_pd(arg, "pd") : table_lookup(arg);
}

}  // namespace

PYBIND11_MODULE(_kinv, m) {
  m.doc() = "Knot invertibility via finite group quotients";

  auto base = py::register_exception<Error>(m, "KinvError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ComputeError>(m, "ComputeError", base.ptr());

  py::class_<Diagram>(m, "Diagram")
      .def(py::init([](const std::string& pd, const std::string& name) { return parse_pd(pd, name); }),
           py::arg("pd"), py::arg("name") = "")
      .def_property_readonly("name", &Diagram::name)
      .def_property_readonly("crossing_count", &Diagram::crossing_count)
      .def_property_readonly("writhe", [](const Diagram& d) { return writhe(d); })
      .def("to_pd", &Diagram::to_pd)
      .def("reverse", [](const Diagram& d) { return reverse(d); })
      .def("mirror", [](const Diagram& d) { return mirror(d); })
      .def("__repr__", [](const Diagram& d) {
        return "<Diagram " + (d.name().empty() ? std::string("pd") : d.name()) + ", " +
               std::to_string(d.crossing_count()) + " crossings>";
      });

  m.def("table_lookup", [](const std::string& name) { return table_lookup(name); }, py::arg("name"));
  m.def("knot_names", [] { return default_knot_table().names(); });
  m.def("knot", &knot, py::arg("name_or_pd"), "Table name or literal PD code");

  m.def("wirtinger", [](const Diagram& d) { return to_string(presentation(d)); }, py::arg("diagram"));
  m.def("wirtinger_checks", [](const Diagram& d) {
    py::dict out;
    for (const auto& c : validate(presentation(d))) out[py::str(c.name)] = c.passed;
    return out;
  }, py::arg("diagram"));
  m.def("alexander", [](const Diagram& d) { return poly_dict(alexander_poly(presentation(d))); },
        py::arg("diagram"), "Normalized Alexander polynomial as {exponent: coefficient}");
  m.def("alexander_str", [](const Diagram& d) { return alexander_poly(presentation(d)).to_string("t"); },
        py::arg("diagram"));
  m.def("jones", [](const Diagram& d) { return poly_dict(jones(d)); }, py::arg("diagram"),
        "Jones polynomial in t as {exponent: coefficient}");
  m.def("jones_str", [](const Diagram& d) { return jones(d).to_string("t"); }, py::arg("diagram"));

  py::class_<PermGroup>(m, "PermGroup")
      .def_property_readonly("name", &PermGroup::name)
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", &PermGroup::order)
      .def("contains", [](const PermGroup& g, const std::string& cycles) {
        return g.contains(parse_cycles(cycles, g.degree()));
      })
      .def("class_rep", [](const PermGroup& g, std::uint64_t order) -> std::optional<std::string> {
        auto x = find_class_rep(g, order);
        if (!x) return std::nullopt;
        return x->to_cycles();
      })
      .def("class_size", [](const PermGroup& g, const std::string& cycles) {
        return conjugacy_class(g, parse_cycles(cycles, g.degree())).size();
      })
      .def("__repr__", [](const PermGroup& g) {
        return "<PermGroup " + g.name() + ", degree " + std::to_string(g.degree()) + ", order " +
               std::to_string(g.order()) + ">";
      });

  m.def("group", [](const std::string& name) { return builtin_group(name); }, py::arg("name"),
        "Bundled group name or path to a group file");
  m.def("group_from_text", [](const std::string& text, const std::string& name) {
    return parse_group_file(text, name);
  }, py::arg("text"), py::arg("name") = "");

  m.def("count_homs",
        [](const Diagram& d, const PermGroup& g, std::optional<std::uint64_t> class_order,
           std::optional<std::string> class_rep, bool epi_only, unsigned threads) {
          SearchSpec spec{presentation(d), g, meridian_image(g, class_order, class_rep), epi_only, true,
                          threads};
          HomCountReport r;
          {
            py::gil_scoped_release release;
            r = count_homs(spec);
          }
          return report_dict(r);
        },
        py::arg("diagram"), py::arg("group"), py::arg("class_order") = py::none(),
        py::arg("class_rep") = py::none(), py::arg("epi_only") = false, py::arg("threads") = 1);

  m.def("invert_test",
        [](const Diagram& d, const PermGroup& g, std::optional<std::uint64_t> class_order,
           std::optional<std::string> class_rep, unsigned threads) {
          Permutation x = meridian_image(g, class_order, class_rep);
          InvertibilityResult res;
          {
            py::gil_scoped_release release;
            res = invertibility_test(presentation(d), g, x, threads);
          }
          py::dict out;
          out["verdict"] = to_string(res.verdict);
          out["reason"] = res.reason;
          out["representative"] = x.to_cycles();
          out["forward"] = report_dict(res.forward);
          out["inverse"] = report_dict(res.inverse);
          return out;
        },
        py::arg("diagram"), py::arg("group"), py::arg("class_order") = py::none(),
        py::arg("class_rep") = py::none(), py::arg("threads") = 1);
}
