#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vdyn/render.hpp"
#include "vdyn/serialize.hpp"
#include "vdyn/verify.hpp"

namespace py = pybind11;
using namespace vdyn;

namespace {

PStrictLabeling make_labeling(int ell, int q, std::vector<int> a, std::vector<int> b, std::vector<int> c) {
  return PStrictLabeling(ell, q, {std::move(a), std::move(b), std::move(c)});
}

RenderFormat format_of(const std::string& name) { return parse_render_format(name); }

}  // namespace

PYBIND11_MODULE(_vdyn, m) {
  m.doc() = "Promotion and rowmotion dynamics on V x [n]";

  py::register_exception<Error>(m, "VdynError", PyExc_ValueError);

  py::class_<PStrictLabeling>(m, "Labeling")
      .def(py::init(&make_labeling), py::arg("ell"), py::arg("q"), py::arg("a"), py::arg("b"), py::arg("c"))
      .def_property_readonly("ell", &PStrictLabeling::ell)
      .def_property_readonly("q", &PStrictLabeling::q)
      .def_property_readonly("a", [](const PStrictLabeling& f) { return f.fiber(Letter::A); })
      .def_property_readonly("b", [](const PStrictLabeling& f) { return f.fiber(Letter::B); })
      .def_property_readonly("c", [](const PStrictLabeling& f) { return f.fiber(Letter::C); })
      .def("to_json", [](const PStrictLabeling& f) { return to_json(f).dump(); })
      .def(py::self == py::self)
      .def("__repr__", [](const PStrictLabeling& f) { return "Labeling(" + to_json(f).dump() + ")"; });

  py::class_<MultiKrewerasWord>(m, "Word")
      .def_static("parse", &MultiKrewerasWord::parse)
      .def_property_readonly("ell", &MultiKrewerasWord::ell)
      .def_property_readonly("q", &MultiKrewerasWord::q)
      .def("__str__", &MultiKrewerasWord::str)
      .def(py::self == py::self)
      .def("__repr__", [](const MultiKrewerasWord& w) { return "Word('" + w.str() + "')"; });

  py::class_<KrewerasWord>(m, "KrewerasWord")
      .def_static("parse", &KrewerasWord::parse)
      .def_property_readonly("n", &KrewerasWord::n)
      .def("__str__", &KrewerasWord::str)
      .def(py::self == py::self)
      .def("__repr__", [](const KrewerasWord& w) { return "KrewerasWord('" + w.str() + "')"; });

  m.def("enumerate_labelings", [](int ell, int q) { return enumerate_labelings(ell, q); });
  m.def("enumerate_words", [](int ell, int q) { return enumerate_words(ell, q); });
  m.def("kreweras_words", [](int n) { return kreweras_words(n); });
  m.def("promote_labeling", &promote_pstrict);
  m.def("promote_word", &promote_word);
  m.def("promote_kreweras", &promote_kreweras);
  m.def("swap_bc", py::overload_cast<const PStrictLabeling&>(&swap_bc));
  m.def("swap_bc", py::overload_cast<const MultiKrewerasWord&>(&swap_bc));
  m.def("word_of_labeling", &word_of_labeling);
  m.def("labeling_of_word", &labeling_of_word);
  m.def("layer_decomposition", [](const MultiKrewerasWord& w) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& l : layer_decomposition(w)) out.emplace_back(l.a, l.b, l.c);
    return out;
  });
  m.def("double_arcs", [](const MultiKrewerasWord& w) {
    std::vector<std::pair<int, int>> out;
    for (const auto& d : double_arcs(w)) out.emplace_back(d.opener_block, d.closer_block);
    return out;
  });
  m.def("standardize", [](const MultiKrewerasWord& w) {
    auto s = standardize(w);
    return std::make_pair(s.word.str(), s.block_sizes);
  });
  m.def("kreweras_count", &kreweras_count);

  // Reports cross as JSON text; the Python wrapper decodes them.
  m.def("_orbit_report", [](const std::string& action, int ell, int q, std::size_t max_elements) {
    py::gil_scoped_release release;
    return to_json(orbit_report(action, ell, q, max_elements)).dump();
  });
  m.def("_run_suite", [](const std::string& suite, std::optional<int> ell_max, std::optional<int> q_max) {
    py::gil_scoped_release release;
    return to_json(run_suite(suite, {ell_max, q_max})).dump();
  });
  m.def("render_word", [](const MultiKrewerasWord& w, const std::string& format) {
    return render_diagram(w, format_of(format));
  });
  m.def("render_kreweras", [](const KrewerasWord& w, const std::string& format) {
    return render_diagram(w, format_of(format));
  });
  m.def("suite_names", &suite_names);
  m.def("action_names", &action_names);
}
