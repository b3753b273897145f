#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ropelab/complex.hpp"
#include "ropelab/error.hpp"
#include "ropelab/families.hpp"
#include "ropelab/io.hpp"
#include "ropelab/normal.hpp"
#include "ropelab/rope.hpp"
#include "ropelab/suites.hpp"

namespace py = pybind11;
using namespace ropelab;

namespace {

Rope from_rows(int n, const std::vector<std::vector<std::string>>& rows, long long ch, bool is_b) {
  Json m = Json::array();
  for (const auto& r : rows) m.push_back(r);
  return rope_from_json(Json{{"n", n}, {"field", ch}, {is_b ? "B" : "A", m}});
}

py::object tri(Tri t) {
  if (t == Tri::Unknown) return py::none();
  return py::bool_(t == Tri::True);
}

py::dict complex_summary(const ComplexRep& c, const std::function<long long(int)>& hf, int lo, int hi) {
  py::dict d;
  d["name"] = c.name;
  d["modules"] = c.modules;
  d["complex"] = verify_complex(c);
  d["graded"] = verify_grading(c);
  d["minimal"] = is_minimal(c);
  d["exact"] = verify_exactness_certificate(c, hf, lo, hi);
  return d;
}

std::vector<std::vector<std::string>> matrix_strings(const GradedMap& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m.entry(i, j).str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_ropelab, m) {
  m.doc() = "ropes supported on a line in P^n";

  py::register_exception<Error>(m, "RopelabError", PyExc_ValueError);

  py::class_<Rope>(m, "Rope")
      .def_readonly("n", &Rope::n)
      .def_readonly("k", &Rope::k)
      .def_readonly("r", &Rope::r)
      .def_readonly("alpha", &Rope::alpha)
      .def_readonly("beta", &Rope::beta)
      .def_readonly("genus", &Rope::genus)
      .def_property_readonly("degree", &Rope::degree)
      .def_property_readonly("nondegenerate", &Rope::nondegenerate)
      .def_property_readonly("characteristic", [](const Rope& c) { return c.field.characteristic(); })
      .def_property_readonly("B", [](const Rope& c) { return matrix_strings(c.B); })
      .def_property_readonly("A", [](const Rope& c) { return matrix_strings(c.A); })
      .def("hilbert_function", &hilbert_function)
      .def("rao_function", &rao_function)
      .def("h0_structure", &h0_structure)
      .def("regularity", &regularity)
      .def("betti_table", [](const Rope& c) { return betti_table(c).gens; })
      .def("to_json", [](const Rope& c) { return to_json(c).dump(); })
      .def("__repr__", [](const Rope& c) {
        return "<Rope n=" + std::to_string(c.n) + " degree=" + std::to_string(c.degree()) +
               " genus=" + std::to_string(c.genus) + ">";
      });

  m.def("rope_from_B", [](int n, const std::vector<std::vector<std::string>>& B, long long ch) { return from_rows(n, B, ch, true); },
        py::arg("n"), py::arg("B"), py::arg("char") = 0);
  m.def("rope_from_A", [](int n, const std::vector<std::vector<std::string>>& A, long long ch) { return from_rows(n, A, ch, false); },
        py::arg("n"), py::arg("A"), py::arg("char") = 0);
  m.def("random_rope",
        [](int n, std::vector<int> alpha, long long ch, std::uint64_t seed) { return random_rope(n, alpha, make_field(ch), seed); },
        py::arg("n"), py::arg("alpha"), py::arg("char") = 0, py::arg("seed") = 1);
  m.def("rope_from_json", [](const std::string& s) { return rope_from_json(Json::parse(s)); });
  m.def("load_rope", &load_rope);
  m.def("save_rope", &save_rope);

  m.def("h0_normal", [](const Rope& c) {
    NormalSections s = h0_normal(c);
    py::dict d;
    d["h0"] = s.h0;
    d["free_params"] = s.free_params;
    d["p_in_image"] = s.p_in_image;
    d["p_block_ok"] = check_pij(c, s);
    return d;
  });
  m.def("normal_lower_bound", &normal_lower_bound);
  m.def("double_line_formula", &double_line_formula, py::arg("n"), py::arg("g"), py::arg("char") = 0);

  m.def("rope_resolution", [](const Rope& c, bool allow_degenerate) {
    return complex_summary(rope_resolution(c, allow_degenerate), [c](int d) { return static_cast<long long>(hilbert_function(c, d)); },
                           -2, (c.beta.empty() ? 0 : c.beta.back()) + 4);
  }, py::arg("rope"), py::arg("allow_degenerate") = false);
  m.def("struct_sheaf_resolution", [](const Rope& c) {
    return complex_summary(struct_sheaf_resolution(c), [c](int d) { return static_cast<long long>(h0_structure(c, d)); },
                           -3 - c.alpha.back(), 6);
  });
  m.def("i2_resolution", [](int n, long long ch, bool minimal) {
    const Field f = make_field(ch);
    return complex_summary(minimal ? minimal_i2_resolution(n, f) : i2_resolution(n, f),
                           [n](int d) { return hf_square_of_line(n, d); }, -2, 6);
  }, py::arg("n"), py::arg("char") = 0, py::arg("minimal") = false);
  m.def("dump_resolution", [](const Rope& c, const std::string& path) { dump_complex(rope_resolution(c, true), path); });
  m.def("set_desk_bound", &set_desk_bound);
  m.def("desk_bound", &desk_bound);

  m.def("dim_V_alpha", &dim_V_alpha);
  m.def("dim_W_beta", &dim_W_beta);
  m.def("minimal_types", [](int n, int k, int g) {
    auto [a, b] = minimal_types(n, k, g);
    return std::make_pair(a.v, b.v);
  });
  m.def("rho_min_dominates", &rho_min_dominates, py::arg("n"), py::arg("k"), py::arg("g"), py::arg("z_lo"),
        py::arg("z_hi"), py::arg("max_minus_g") = 12);
  m.def("component_dim", &component_dim);
  m.def("classify", [](int n, int d, int g, long long ch) {
    Classification c = classify(n, d, g, ch);
    py::dict out;
    out["component_dim"] = c.component_dim;
    out["dim_exact"] = c.dim_exact;
    out["generically_smooth"] = tri(c.generically_smooth);
    out["nonreduced"] = tri(c.nonreduced);
    out["general_member"] = member_name(c.general_member);
    out["strict_gate"] = c.strict_gate;
    out["either_gate"] = c.either_gate;
    return out;
  }, py::arg("n"), py::arg("d"), py::arg("g"), py::arg("char") = 0);
  m.def("is_obstructed", [](const Rope& c) { return tri(is_obstructed(c, c.field.characteristic())); });
  m.def("gin_ideal", [](const Rope& c) {
    std::vector<std::string> out;
    for (const auto& p : gin_ideal(c)) out.push_back(p.str());
    return out;
  });
  m.def("staircase_rope", [](int p, int s, int w, int r, long long ch, bool repair) {
    return rope_from_A(r + 2, staircase_matrix(p, s, w, r, make_field(ch), repair));
  }, py::arg("p"), py::arg("s"), py::arg("w"), py::arg("r"), py::arg("char") = 0, py::arg("repair") = false);

  m.def("run_suite", [](const std::string& name, std::uint64_t seed, int samples) {
    SuiteOptions o;
    o.seed = seed;
    o.samples = samples;
    py::list out;
    for (const auto& r : run_suite(name, o)) {
      py::dict d;
      d["suite"] = r.id;
      d["pass"] = r.pass;
      d["cases"] = r.cases;
      d["detail"] = r.detail;
      d["counterexamples"] = r.counterexamples;
      out.append(d);
    }
    return out;
  }, py::arg("name"), py::arg("seed") = 1, py::arg("samples") = 0);
}
