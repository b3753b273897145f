#include "ropelab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ropelab/error.hpp"

namespace ropelab {

namespace {

Json scalar_json(const Scalar& s) {
  if (s.characteristic()) return static_cast<long long>(s.residue());
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.str();
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  if (j.is_string()) return parse_scalar(f, j.get<std::string>());
  fail(Errc::ParseError, "coefficient must be an integer or a string");
}

std::vector<std::vector<HomPoly>> entries_from_json(const Field& f, const Json& j) {
  const Json& e = j.is_object() ? j.at("entries") : j;
  if (!e.is_array() || e.empty()) fail(Errc::ParseError, "matrix entries must be a nonempty array of rows");
  std::vector<std::vector<HomPoly>> out;
  for (const auto& row : e) {
    if (!row.is_array()) fail(Errc::ParseError, "matrix row must be an array");
    std::vector<HomPoly> r;
    for (const auto& x : row) r.push_back(hompoly_from_json(f, x));
    if (!out.empty() && r.size() != out.front().size()) fail(Errc::ParseError, "ragged matrix rows");
    out.push_back(r);
  }
  return out;
}

Json poly_matrix(const std::vector<std::vector<HomPoly>>& e) {
  Json rows = Json::array();
  for (const auto& row : e) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

Json to_json(const HomPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(scalar_json(x));
  return Json{{"deg", p.degree()}, {"coeffs", c}};
}

HomPoly hompoly_from_json(const Field& f, const Json& j) {
  if (j.is_string()) return parse_hompoly(f, j.get<std::string>());
  if (j.is_number_integer()) return HomPoly::constant(Scalar(f, j.get<long long>()));
  if (!j.is_object() || !j.contains("deg") || !j.contains("coeffs"))
    fail(Errc::ParseError, "polynomial needs \"deg\" and \"coeffs\"");
  const int deg = j.at("deg").get<int>();
  const Json& cs = j.at("coeffs");
  if (deg < 0) return HomPoly::zero(f);
  if (!cs.is_array() || static_cast<int>(cs.size()) != deg + 1)
    fail(Errc::ParseError, "polynomial of degree d needs d+1 coefficients");
  std::vector<Scalar> c;
  for (const auto& x : cs) c.push_back(scalar_from_json(f, x));
  return HomPoly(f, deg, c);
}

Json to_json(const GradedMap& m) {
  return Json{{"source", m.source().twists}, {"target", m.target().twists}, {"entries", poly_matrix(m.entries())}};
}

Json to_json(const Rope& c) {
  return Json{{"n", c.n},         {"field", c.field.characteristic()}, {"B", to_json(c.B)}, {"A", to_json(c.A)},
              {"alpha", c.alpha}, {"beta", c.beta},                    {"genus", c.genus}};
}

Rope rope_from_json(const Json& j) {
  try {
    if (!j.is_object()) fail(Errc::ParseError, "rope must be a JSON object");
    const int n = j.at("n").get<int>();
    const Field f = make_field(j.value("field", 0LL));
    Rope c;
    if (j.contains("B")) {
      GradedMap B = make_B(f, entries_from_json(f, j.at("B")));
      if (j.at("B").is_object() && j.at("B").contains("source") &&
          j.at("B").at("source").get<std::vector<int>>() != B.source().twists)
        fail(Errc::ParseError, "stored B twists disagree with the entries");
      c = rope_from_B(n, B);
    } else if (j.contains("A")) {
      c = rope_from_A(n, make_A(f, entries_from_json(f, j.at("A"))));
    } else {
      fail(Errc::ParseError, "rope needs \"B\" or \"A\"");
    }
    if (j.contains("alpha")) {
      auto a = j.at("alpha").get<std::vector<int>>();
      std::sort(a.begin(), a.end());
      if (a != c.alpha) fail(Errc::ParseError, "stored alpha disagrees with the recomputed right type");
    }
    return c;
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
}

Rope load_rope(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
  return rope_from_json(j);
}

void save_rope(const Rope& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
  out << to_json(c).dump(2) << "\n";
}

Json to_json(const ComplexRep& c) {
  Json maps = Json::array();
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const PolyMatrix& m = c.maps[i];
    Json rows = Json::array();
    for (const auto& row : m.e) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(x.str());
      rows.push_back(r);
    }
    maps.push_back(Json{{"from", i + 1}, {"to", i}, {"source", m.src}, {"target", m.tgt}, {"entries", rows}});
  }
  Json vars = Json::array();
  for (int v = 0; v < c.nvars; ++v) vars.push_back(var_name(c.nvars, v));
  return Json{{"name", c.name},       {"field", c.field.characteristic()}, {"variables", vars},
              {"modules", c.modules}, {"labels", c.labels},               {"maps", maps}};
}

void dump_complex(const ComplexRep& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
  out << to_json(c).dump(2) << "\n";
}

Json to_json(const NormalSections& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis) {
    Json q = Json::array();
    for (const auto& l : b.Q) q.push_back(poly_matrix(l));
    Json ps = Json::array();
    for (const auto& x : b.Ps) ps.push_back(to_json(x));
    basis.push_back(Json{{"P", poly_matrix(b.P)}, {"Ps", ps}, {"Q", q}});
  }
  return Json{{"h0", s.h0}, {"free_params", s.free_params}, {"p_in_image", s.p_in_image}, {"basis", basis}};
}

}  // namespace ropelab
