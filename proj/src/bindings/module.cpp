// Python extension exposing the main operations: built-in and user
// presentations, class membership checks, cross identities, the
// reference verification run, and direct predicate evaluation on terms.
// Structured results cross the boundary as JSON strings; the package
// wrapper parses them into dictionaries.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lgroup/presentation.hpp"
#include "lgroup/report.hpp"

namespace py = pybind11;

namespace {

using namespace lgroup;

py::int_ big_int(const Int& n) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(int_to_string(n)));
}

class Presentation {
 public:
  explicit Presentation(GroupPresentation p) : p_(std::move(p)) {}

  std::string name() const { return presentation_name(p_); }

  std::string space() const {
    return std::visit(
        [](const auto& t) {
          return std::string(std::decay_t<decltype(t.model)>::space_name());
        },
        p_);
  }

  std::vector<std::string> generators() const {
    return std::visit(
        [](const auto& t) {
          std::vector<std::string> names;
          names.reserve(t.generators.size());
          for (const auto& [n, e] : t.generators) names.push_back(n);
          return names;
        },
        p_);
  }

  std::string to_json() const { return presentation_to_json(p_).dump(2); }

  std::string check_class_json(const std::string& cls, std::uint64_t budget) const {
    const auto c = class_from_string(cls);
    if (!c) throw std::invalid_argument("unknown class: " + cls);
    return verdict_to_json(class_check(p_, *c, budget)).dump(2);
  }

  std::string analyze_json(std::uint64_t budget, bool with_cross) const {
    const auto ga = analyze_group(p_, budget, with_cross);
    nlohmann::json out{{"subject", presentation_name(p_)},
                       {"budget", budget},
                       {"classes", nlohmann::json::array()}};
    for (const auto& v : ga.classes) out["classes"].push_back(verdict_to_json(v));
    if (with_cross) out["cross"] = cross_report_to_json(ga.cross);
    return out.dump(2);
  }

  py::object predicate(const std::string& pred, const std::vector<std::string>& terms) const {
    return std::visit([&](const auto& t) { return predicate_impl(t, pred, terms); }, p_);
  }

 private:
  template <SpaceModel M>
  static py::object predicate_impl(const TypedPresentation<M>& p, const std::string& pred,
                                   const std::vector<std::string>& term_args) {
    const auto& m = p.model;
    const std::map<std::string, typename M::Element> gens(p.generators.begin(),
                                                          p.generators.end());
    const bool pair = pred == "in-principal" || pred == "in-polar" ||
                      pred == "in-zkernel" || pred == "in-perp";
    const std::size_t need = pair ? 2 : 1;
    if (term_args.size() != need) {
      throw terms::EvalError("predicate '" + pred + "' takes " + std::to_string(need) +
                             (need == 1 ? " term" : " terms") + ", got " +
                             std::to_string(term_args.size()));
    }
    std::vector<typename M::Element> vals;
    vals.reserve(term_args.size());
    for (const auto& a : term_args) {
      vals.push_back(terms::eval_term(m, terms::parse_term(a), gens));
    }

    if (pred == "in-principal") {
      const auto n = principal_witness(m, vals[0], vals[1]);
      if (!n) return py::none();
      return big_int(*n);
    }
    if (pred == "in-polar") return py::bool_(in_polar(m, vals[0], vals[1]));
    if (pred == "in-zkernel") return py::bool_(in_zkernel(m, vals[0], vals[1]));
    if (pred == "in-perp") return py::bool_(in_perp(m, vals[0], vals[1]));
    if (pred == "weak-unit") return py::bool_(is_weak_unit(m, vals[0]));
    if (pred == "strong-unit") return py::bool_(is_strong_unit(m, vals[0]));
    if (pred == "regular-open") return py::bool_(coz_regular_open(m, vals[0]));
    if (pred == "coz-closed") return py::bool_(coz_closed(m, vals[0]));
    if (pred == "clcoz-open") return py::bool_(clcoz_open(m, vals[0]));
    if (pred == "coz") return py::str(m.describe_set(m.coz(vals[0])));
    if (pred == "zset") {
      return py::str(m.describe_set(m.set_complement(m.coz(vals[0]))));
    }
    throw terms::EvalError("unknown predicate '" + pred + "'");
  }

  GroupPresentation p_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact computation with archimedean lattice-ordered groups with strong "
      "unit, presented inside C(K) for three computable compact spaces.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PresentationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const terms::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const terms::EvalError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const NotInFamily& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Presentation>(m, "Presentation")
      .def("name", &Presentation::name)
      .def("space", &Presentation::space)
      .def("generators", &Presentation::generators)
      .def("to_json", &Presentation::to_json)
      .def("check_class_json", &Presentation::check_class_json, py::arg("cls"),
           py::arg("budget") = 2000)
      .def("analyze_json", &Presentation::analyze_json, py::arg("budget") = 2000,
           py::arg("with_cross") = true)
      .def("predicate", &Presentation::predicate, py::arg("predicate"), py::arg("terms"));

  m.def("builtin_names", &builtin_names,
        "Names of the four structured built-in presentations; finite spaces "
        "are addressed as 'finite(k)'.");
  m.def(
      "builtin",
      [](const std::string& name) { return Presentation(builtin(name)); },
      py::arg("name"));
  m.def(
      "load",
      [](const std::string& text) { return Presentation(load_presentation_text(text)); },
      py::arg("json_text"));
  m.def(
      "verify_paper_json",
      [](std::uint64_t budget, std::uint64_t seed) {
        return paper_report_to_json(run_paper_verification(budget, seed)).dump(2);
      },
      py::arg("budget") = 2000, py::arg("seed") = 0);
  m.def(
      "verify_paper_text",
      [](std::uint64_t budget, std::uint64_t seed) {
        return paper_report_to_text(run_paper_verification(budget, seed));
      },
      py::arg("budget") = 2000, py::arg("seed") = 0);
  m.def(
      "normalize_term",
      [](const std::string& s) { return terms::term_to_string(terms::parse_term(s)); },
      py::arg("term"),
      "Parse a term and render it back with minimal parentheses.");
}
