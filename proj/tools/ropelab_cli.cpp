#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ropelab/complex.hpp"
#include "ropelab/error.hpp"
#include "ropelab/families.hpp"
#include "ropelab/io.hpp"
#include "ropelab/normal.hpp"
#include "ropelab/rope.hpp"
#include "ropelab/suites.hpp"

using namespace ropelab;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  long long characteristic = 0;
  std::uint64_t seed = 1;
  int samples = 0;
  std::string format = "pretty";
  int desk = 0;
  std::string dump;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--char", c.characteristic, "field characteristic (0 or a prime)");
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--samples", c.samples, "samples per cell");
  app->add_option("--format", c.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  app->add_option("--desk-bound", c.desk, "largest n for resolutions");
  app->add_option("--dump-resolution", c.dump, "write the resolution as JSON");
}

// "3", "3,4,5" or "3..5" (also descending, "-1..-6")
std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  const auto dots = s.find("..");
  try {
    if (dots != std::string::npos) {
      const int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
      const int step = a <= b ? 1 : -1;
      for (int x = a;; x += step) {
        out.push_back(x);
        if (x == b) break;
      }
      return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad integer list '" + s + "'");
  }
  if (out.empty()) fail(Errc::ParseError, "empty integer list");
  return out;
}

std::vector<long long> char_list(const std::string& s) {
  std::vector<long long> out;
  for (int x : int_list(s)) out.push_back(x);
  return out;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string type_str(const std::vector<int>& v) { return "(" + join(v) + ")"; }

void print_matrix(std::ostream& os, const GradedMap& m) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cells.emplace_back();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.back().push_back(m.entry(i, j).str());
      width[j] = std::max(width[j], cells.back().back().size());
    }
  }
  for (const auto& row : cells) {
    os << "    [ ";
    for (std::size_t j = 0; j < row.size(); ++j) os << std::string(width[j] - row[j].size(), ' ') << row[j] << "  ";
    os << "]\n";
  }
}

struct Report {
  int d_lo, d_hi;
  std::vector<int> hc, rao, h0;
};

Report tables(const Rope& c) {
  Report r;
  r.d_lo = -(c.alpha.empty() ? 1 : c.alpha.back()) - 1;
  r.d_hi = (c.beta.empty() ? 1 : c.beta.back()) + 2;
  for (int d = r.d_lo; d <= r.d_hi; ++d) {
    r.hc.push_back(hilbert_function(c, d));
    r.rao.push_back(rao_function(c, d));
    r.h0.push_back(h0_structure(c, d));
  }
  return r;
}

Json rope_report_json(const Rope& c) {
  Json j = to_json(c);
  Report r = tables(c);
  j["degree"] = c.degree();
  j["nondegenerate"] = c.nondegenerate();
  j["table_from"] = r.d_lo;
  j["hilbert_function"] = r.hc;
  j["rao_function"] = r.rao;
  j["h0_structure"] = r.h0;
  if (c.nondegenerate()) {
    j["regularity"] = regularity(c);
    Json bt = Json::array();
    for (const auto& g : betti_table(c).gens) {
      Json row = Json::object();
      for (const auto& [deg, cnt] : g) row[std::to_string(deg)] = cnt;
      bt.push_back(row);
    }
    j["betti"] = bt;
  }
  return j;
}

void print_rope(const Rope& c, const std::string& format) {
  if (format == "json") {
    std::cout << rope_report_json(c).dump(2) << "\n";
    return;
  }
  Report r = tables(c);
  if (format == "csv") {
    std::cout << "d,hilbert,rao,h0_structure\n";
    for (std::size_t i = 0; i < r.hc.size(); ++i)
      std::cout << r.d_lo + static_cast<int>(i) << "," << r.hc[i] << "," << r.rao[i] << "," << r.h0[i] << "\n";
    return;
  }
  std::cout << "rope of degree " << c.degree() << " in P^" << c.n << " over "
            << (c.field.characteristic() ? "F_" + std::to_string(c.field.characteristic()) : std::string("Q")) << "\n";
  std::cout << "  genus " << c.genus << ", right type " << type_str(c.alpha) << ", left type " << type_str(c.beta)
            << (c.nondegenerate() ? "" : ", degenerate") << "\n";
  std::cout << "  B:\n";
  print_matrix(std::cout, c.B);
  std::cout << "  A:\n";
  print_matrix(std::cout, c.A);
  if (c.nondegenerate()) {
    std::cout << "  regularity " << regularity(c) << "\n  betti:";
    const auto bt = betti_table(c);
    for (std::size_t i = 0; i < bt.gens.size(); ++i) {
      std::cout << "  G" << i + 1 << " =";
      for (const auto& [deg, cnt] : bt.gens[i]) std::cout << " R(-" << deg << ")^" << cnt;
    }
    std::cout << "\n";
  }
  std::cout << "     d  h_C  rao  h0(O_C)\n";
  for (std::size_t i = 0; i < r.hc.size(); ++i)
    std::printf("  %4d %4d %4d %8d\n", r.d_lo + static_cast<int>(i), r.hc[i], r.rao[i], r.h0[i]);
  std::fflush(stdout);
}

void maybe_dump(const Rope& c, const Common& o) {
  if (o.dump.empty()) return;
  dump_complex(rope_resolution(c, true), o.dump);
}

Rope read_matrix_rope(int n, const std::string& path, bool is_b, long long ch) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
  // a whole rope file, or just the matrix
  if (j.is_object() && (j.contains("B") || j.contains("A"))) {
    if (!j.contains("n")) j["n"] = n;
    if (!j.contains("field")) j["field"] = ch;
    return rope_from_json(j);
  }
  return rope_from_json(Json{{"n", n}, {"field", ch}, {is_b ? "B" : "A", j}});
}

int print_results(const std::vector<CriterionResult>& rs, const std::string& format) {
  bool all = true;
  if (format == "json") {
    Json out = Json::array();
    for (const auto& r : rs) {
      out.push_back(Json{{"suite", r.id},   {"title", r.title},   {"pass", r.pass},
                         {"cases", r.cases}, {"detail", r.detail}, {"counterexamples", r.counterexamples}});
      all = all && r.pass;
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "suite,pass,cases\n";
    for (const auto& r : rs) {
      std::cout << r.id << "," << (r.pass ? "PASS" : "FAIL") << "," << r.cases << "\n";
      all = all && r.pass;
    }
  } else {
    for (const auto& r : rs) {
      std::printf("%s  %-14s %6lld cases  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.cases, r.title.c_str());
      if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
      for (const auto& c : r.counterexamples) std::printf("      counterexample: %s\n", c.c_str());
      all = all && r.pass;
    }
    std::fflush(stdout);
  }
  return all ? 0 : kFail;
}

std::string theorem_suite(const std::string& t) {
  static const std::map<std::string, std::string> alias = {
      {"6.11", "obstruction"}, {"6.13", "staircase"}, {"6.9", "rao"},
      {"double-lines", "obstruction"}, {"staircase", "staircase"}, {"rao", "rao"}};
  auto it = alias.find(t);
  if (it == alias.end()) fail(Errc::ParseError, "unknown theorem '" + t + "'");
  return it->second;
}

std::string tri_csv(Tri t) { return tri_name(t); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ropes on a line: invariants, resolutions, normal sheaves, Hilbert scheme components"};
  app.require_subcommand(1);
  Common o;

  // rope
  auto* rope = app.add_subcommand("rope", "build a rope and print its invariants");
  rope->require_subcommand(1);
  int n = 0;
  std::string bfile, afile, alpha_s, out_path, rope_file;
  auto* rnew = rope->add_subcommand("new", "rope from a B (or A) matrix in JSON");
  rnew->add_option("--n", n, "ambient dimension")->required();
  rnew->add_option("--B", bfile, "JSON matrix B");
  rnew->add_option("--A", afile, "JSON matrix A");
  rnew->add_option("--out", out_path, "save the rope as JSON");
  add_common(rnew, o);
  auto* rrand = rope->add_subcommand("random", "random rope of a given right type");
  rrand->add_option("--n", n, "ambient dimension")->required();
  rrand->add_option("--alpha", alpha_s, "right type, e.g. 1,2")->required();
  rrand->add_option("--out", out_path, "save the rope as JSON");
  add_common(rrand, o);
  auto* rshow = rope->add_subcommand("show", "invariants of a saved rope");
  rshow->add_option("--rope", rope_file, "rope JSON")->required();
  add_common(rshow, o);

  // resolve
  auto* resolve = app.add_subcommand("resolve", "build and check a free resolution");
  std::string kind = "rope";
  resolve->add_option("--kind", kind, "rope, structure, i2 or minimal-i2")
      ->check(CLI::IsMember({"rope", "structure", "i2", "minimal-i2"}));
  resolve->add_option("--rope", rope_file, "rope JSON (rope and structure kinds)");
  resolve->add_option("--n", n, "ambient dimension (i2 kinds)");
  add_common(resolve, o);

  // normal
  auto* normal = app.add_subcommand("normal", "global sections of the normal sheaf");
  normal->require_subcommand(1);
  bool basis = false;
  auto* nh0 = normal->add_subcommand("h0", "dimension of H^0(N_C)");
  nh0->add_option("--rope", rope_file, "rope JSON")->required();
  nh0->add_flag("--basis", basis, "print a basis");
  add_common(nh0, o);
  auto* nsweep = normal->add_subcommand("sweep", "h0 over random ropes; CSV by default");
  std::string n_s = "3..5", g_s = "-1..-6", d_s = "2", chars_s = "0,2,3";
  int n_max = 0, g_min = 0;
  nsweep->add_option("--n", n_s, "ambient dimensions, e.g. 3..5");
  nsweep->add_option("--n-max", n_max, "same as --n 3..N");
  nsweep->add_option("--g", g_s, "genera, e.g. -1..-6");
  nsweep->add_option("--g-min", g_min, "same as --g -1..G");
  nsweep->add_option("--d", d_s, "degrees");
  nsweep->add_option("--alpha", alpha_s, "fixed right type instead of all types");
  nsweep->add_option("--chars", chars_s, "characteristics, e.g. 0,2,3");
  add_common(nsweep, o);

  // families
  auto* fam = app.add_subcommand("families", "component dimensions and classification");
  fam->require_subcommand(1);
  auto* ftable = fam->add_subcommand("table", "CSV of dims, minimal types and classification");
  std::string ft_n = "3..6", ft_d = "2..4", ft_g = "-1..-8";
  ftable->add_option("--n", ft_n, "ambient dimensions");
  ftable->add_option("--d", ft_d, "degrees");
  ftable->add_option("--g", ft_g, "genera");
  ftable->add_option("--chars", chars_s, "characteristics");
  add_common(ftable, o);
  auto* fverify = fam->add_subcommand("verify", "check a theorem at desk scale");
  std::string theorem;
  fverify->add_option("--theorem", theorem, "6.11, 6.13 or 6.9 (or double-lines, staircase, rao)")->required();
  fverify->add_option("--chars", chars_s, "characteristics");
  add_common(fverify, o);

  // verify
  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  std::string suite;
  verify->add_option("--suite", suite, "suite name or all")->required();
  verify->add_option("--n-max", n_max, "largest n");
  verify->add_option("--g-min", g_min, "smallest genus");
  verify->add_option("--chars", chars_s, "characteristics");
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const bool csv_default = nsweep->parsed() || ftable->parsed();
  if (csv_default && o.format == "pretty") {
    bool given = false;
    for (auto* sc : {nsweep, ftable})
      if (sc->parsed() && sc->count("--format")) given = true;
    if (!given) o.format = "csv";
  }

  try {
    if (o.desk > 0) set_desk_bound(o.desk);

    if (rnew->parsed() || rrand->parsed() || rshow->parsed()) {
      Rope c;
      if (rnew->parsed()) {
        if (bfile.empty() == afile.empty()) fail(Errc::ParseError, "give exactly one of --B and --A");
        c = read_matrix_rope(n, bfile.empty() ? afile : bfile, !bfile.empty(), o.characteristic);
      } else if (rrand->parsed()) {
        c = random_rope(n, int_list(alpha_s), make_field(o.characteristic), o.seed);
      } else {
        c = load_rope(rope_file);
      }
      if (!out_path.empty()) save_rope(c, out_path);
      print_rope(c, o.format);
      maybe_dump(c, o);
      return 0;
    }

    if (resolve->parsed()) {
      ComplexRep cx;
      std::function<long long(int)> hf;
      int lo = -2, hi = 6;
      Rope c;
      if (kind == "rope" || kind == "structure") {
        if (rope_file.empty()) fail(Errc::ParseError, "--rope is required for this kind");
        c = load_rope(rope_file);
        if (kind == "rope") {
          cx = rope_resolution(c, true);
          hf = [c](int d) { return static_cast<long long>(hilbert_function(c, d)); };
          hi = c.beta.back() + 4;
        } else {
          cx = struct_sheaf_resolution(c);
          hf = [c](int d) { return static_cast<long long>(h0_structure(c, d)); };
          lo = -3 - c.alpha.back();
        }
      } else {
        if (n < 3) fail(Errc::ParseError, "--n >= 3 is required for this kind");
        const Field f = make_field(o.characteristic);
        cx = kind == "i2" ? i2_resolution(n, f) : minimal_i2_resolution(n, f);
        hf = [n](int d) { return hf_square_of_line(n, d); };
      }
      const bool cplx = verify_complex(cx), graded = verify_grading(cx), minimal = is_minimal(cx);
      ExactnessReport ex = exactness_certificate(cx, hf, lo, hi, o.seed);
      if (!o.dump.empty()) dump_complex(cx, o.dump);
      if (o.format == "json") {
        std::cout << Json{{"name", cx.name},   {"modules", cx.modules}, {"complex", cplx},
                          {"graded", graded},  {"minimal", minimal},    {"exact", ex.ok()},
                          {"ranks", ex.ranks}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << cx.name << "\n";
        for (std::size_t i = cx.modules.size(); i-- > 0;) {
          std::map<int, int> tw;
          for (int d : cx.modules[i]) ++tw[d];
          std::cout << "  F" << i << ":";
          for (const auto& [d, k] : tw) std::cout << " R" << (d ? "(-" + std::to_string(d) + ")" : std::string()) << "^" << k;
          std::cout << "\n";
        }
        std::cout << "  complex " << (cplx ? "yes" : "NO") << ", graded " << (graded ? "yes" : "NO") << ", minimal "
                  << (minimal ? "yes" : "no") << ", exact " << (ex.ok() ? "yes" : "NO") << "\n";
      }
      return cplx && graded && ex.ok() ? 0 : kFail;
    }

    if (nh0->parsed()) {
      Rope c = load_rope(rope_file);
      NormalSections s = h0_normal(c);
      if (o.format == "json") {
        Json j = to_json(s);
        if (!basis) j.erase("basis");
        std::cout << j.dump(2) << "\n";
      } else if (o.format == "csv") {
        std::cout << "h0,free_params,p_in_image\n" << s.h0 << "," << s.free_params << "," << s.p_in_image << "\n";
      } else {
        std::cout << "h0(N_C) = " << s.h0 << " (" << s.free_params << " free parameters, kernel "
                  << s.h0 - s.free_params << ")\n";
        std::cout << "P in the image of B^t: " << (s.p_in_image ? "yes" : "no") << "\n";
        if (basis)
          for (std::size_t i = 0; i < s.basis.size(); ++i) {
            std::cout << "  [" << i << "]";
            const auto& b = s.basis[i];
            for (std::size_t a = 0; a < b.P.size(); ++a)
              for (std::size_t c2 = a; c2 < b.P.size(); ++c2)
                if (!b.P[a][c2].is_zero()) std::cout << " P^" << a << c2 << "=" << b.P[a][c2].str();
            for (std::size_t j = 0; j < b.Ps.size(); ++j)
              if (!b.Ps[j].is_zero()) std::cout << " P^" << j + 1 << "=" << b.Ps[j].str();
            for (std::size_t l = 0; l < b.Q.size(); ++l)
              for (std::size_t a = 0; a < b.Q[l].size(); ++a)
                for (std::size_t c2 = a; c2 < b.Q[l].size(); ++c2)
                  if (!b.Q[l][a][c2].is_zero()) std::cout << " Q^" << a << c2 << "_" << l << "=" << b.Q[l][a][c2].str();
            std::cout << "\n";
          }
      }
      return 0;
    }

    if (nsweep->parsed()) {
      std::vector<int> ns = n_max ? int_list("3.." + std::to_string(n_max)) : int_list(n_s);
      std::vector<int> gs = g_min ? int_list("-1.." + std::to_string(g_min)) : int_list(g_s);
      const std::vector<int> ds = int_list(d_s);
      const std::vector<long long> chars = char_list(chars_s);
      const int samples = o.samples > 0 ? o.samples : 3;
      Json rows = Json::array();
      if (o.format != "json") std::cout << "n,d,g,char,type,seed,sample,h0,expected,p_in_image\n";
      for (int nn : ns)
        for (int d : ds)
          for (int g : gs)
            for (long long ch : chars) {
              const int m = d - 1;
              if (d < 2 || d > nn - 1 || -g < m) continue;
              std::vector<std::vector<int>> types;
              if (!alpha_s.empty()) {
                std::vector<int> a = int_list(alpha_s);
                std::sort(a.begin(), a.end());
                int sum = 0;
                for (int x : a) sum += x;
                if (static_cast<int>(a.size()) == m && sum == -g) types.push_back(a);
              } else {
                types = partitions(-g, m, 1);
              }
              for (const auto& a : types)
                for (int s = 0; s < samples; ++s) {
                  const std::uint64_t sd = cell_seed(o.seed, {nn, d, g, ch, s, a.back()});
                  Rope c = random_rope(nn, a, make_field(ch), sd);
                  NormalSections sec = h0_normal(c);
                  std::string expected;
                  if (d == 2)
                    expected = std::to_string(double_line_formula(nn, g, ch));
                  else if (c.alpha.front() >= 2)
                    expected = std::to_string(expected_h0_if_p_in_image(c));
                  if (o.format == "json") {
                    rows.push_back(Json{{"n", nn},      {"d", d},       {"g", g},        {"char", ch},
                                        {"type", a},    {"seed", sd},   {"sample", s},   {"h0", sec.h0},
                                        {"expected", expected}, {"p_in_image", sec.p_in_image}});
                  } else {
                    std::cout << nn << "," << d << "," << g << "," << ch << ",\"" << type_str(a) << "\"," << sd << ","
                              << s << "," << sec.h0 << "," << expected << "," << (sec.p_in_image ? 1 : 0) << "\n";
                  }
                }
            }
      if (o.format == "json") std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (ftable->parsed()) {
      const std::vector<int> ns = int_list(ft_n), ds = int_list(ft_d), gs = int_list(ft_g);
      const std::vector<long long> chars = char_list(chars_s);
      Json rows = Json::array();
      if (o.format != "json")
        std::cout << "n,d,g,char,component_dim,dim_exact,alpha_min,beta_min,dim_V_alpha_min,dim_W_beta_min,"
                     "generically_smooth,nonreduced,general_member,strict_gate,either_gate\n";
      for (int nn : ns)
        for (int d : ds)
          for (int g : gs)
            for (long long ch : chars) {
              if (d < 2 || d > nn - 1 || g > -(d - 1)) continue;
              const int k = nn - d;
              Classification cl = classify(nn, d, g, ch);
              std::string am, bm, dv, dw;
              if (g <= -k) {
                auto [a, b] = minimal_types(nn, k, g);
                am = a.str();
                bm = b.str();
                dv = std::to_string(dim_V_alpha(nn, a.v));
                dw = std::to_string(dim_W_beta(nn, b.v));
              }
              if (o.format == "json") {
                rows.push_back(Json{{"n", nn},
                                    {"d", d},
                                    {"g", g},
                                    {"char", ch},
                                    {"component_dim", cl.component_dim},
                                    {"dim_exact", cl.dim_exact},
                                    {"alpha_min", am},
                                    {"beta_min", bm},
                                    {"dim_V_alpha_min", dv},
                                    {"dim_W_beta_min", dw},
                                    {"generically_smooth", tri_name(cl.generically_smooth)},
                                    {"nonreduced", tri_name(cl.nonreduced)},
                                    {"general_member", member_name(cl.general_member)},
                                    {"strict_gate", cl.strict_gate},
                                    {"either_gate", cl.either_gate}});
              } else {
                std::cout << nn << "," << d << "," << g << "," << ch << "," << cl.component_dim << ","
                          << (cl.dim_exact ? 1 : 0) << ",\"" << am << "\",\"" << bm << "\"," << dv << "," << dw << ","
                          << tri_csv(cl.generically_smooth) << "," << tri_csv(cl.nonreduced) << ","
                          << member_name(cl.general_member) << "," << (cl.strict_gate ? 1 : 0) << ","
                          << (cl.either_gate ? 1 : 0) << "\n";
              }
            }
      if (o.format == "json") std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (fverify->parsed() || verify->parsed()) {
      SuiteOptions so;
      so.seed = o.seed;
      so.samples = o.samples;
      so.chars = char_list(chars_s);
      if (n_max) so.n_max = n_max;
      if (g_min) so.g_min = g_min;
      const std::string name = fverify->parsed() ? theorem_suite(theorem) : suite;
      if (!is_suite(name)) fail(Errc::ParseError, "unknown suite '" + name + "'");
      return print_results(run_suite(name, so), o.format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
