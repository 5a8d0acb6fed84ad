#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "multipath/chromatic.hpp"
#include "multipath/field.hpp"
#include "multipath/hochschild.hpp"
#include "multipath/homology.hpp"
#include "multipath/morse.hpp"
#include "multipath/selftest.hpp"

namespace multipath::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string graph_path;
  std::string field = "q";
  std::string algebra = "ground";
  std::string bimodule;
  Vertex base = 0;
  std::string signs = "sigma";
  std::string format = "json";
  std::string emit_hasse;
  std::string dump_complex;
  bool timing = false;

  // subcommand specific
  std::string variant = "hat";
  std::string family = "line";
  std::size_t n = 2;
  std::size_t max_degree = 4;
  std::size_t max_vertices = 4;
  std::string matching;
  std::string from = "sigma";
  std::string to = "lex";
};

class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json betti_json(const BettiTable& b) {
  json j = json::object();
  for (const auto& [n, d] : b) j[std::to_string(n)] = d;
  return j;
}

template <class F>
json dims_json(const CochainComplex<F>& c) {
  json j = json::object();
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    if (c.dims[i] != 0) j[std::to_string(c.offset + static_cast<int>(i))] = c.dims[i];
  }
  return j;
}

json counts_json(const std::vector<std::size_t>& v) {
  json j = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) j[std::to_string(i)] = v[i];
  }
  return j;
}

std::string hex(EdgeSet h) {
  std::ostringstream s;
  s << std::hex << h.bits();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationFailure("cannot write " + path);
  out << text;
}

Digraph load_graph(const Options& o) {
  Digraph g = read_edge_list_file(o.graph_path);
  if (g.vertex_count() > 0 && o.base >= g.vertex_count()) {
    throw ValidationFailure("base vertex " + std::to_string(o.base) + " is not a vertex of the graph");
  }
  return g;
}

SignChoice sign_choice(const std::string& s) {
  if (s == "sigma") return SignChoice::sigma;
  if (s == "lex") return SignChoice::lex;
  throw ValidationFailure("unknown sign choice '" + s + "'");
}

template <class F>
Coefficients<F> load_coefficients(const F& f, const Options& o) {
  auto a = load_algebra(o.algebra);
  auto m = o.bimodule.empty() ? Bimodule::regular(a) : load_bimodule(o.bimodule, a);
  return Coefficients<F>(f, a, m);
}

void print(const json& report, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << report.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

template <class F>
int cmd_homology(const F& f, const Options& o, json& report) {
  auto g = load_graph(o);
  auto co = load_coefficients(f, o);
  auto p = enumerate_path_poset(g);
  auto c = build_poset_complex(f, p, co, make_assignment(p, sign_choice(o.signs), o.base), o.base);
  if (!o.emit_hasse.empty()) write_file(o.emit_hasse, hasse_dot(p));
  if (!o.dump_complex.empty()) write_file(o.dump_complex, complex_to_json(f, c).dump(1) + "\n");
  auto b = betti(f, c);
  report["betti"] = betti_json(b);
  report["dims"] = dims_json(c);
  report["euler_characteristic"] = euler_characteristic(c);
  report["field"] = f.name();
  report["poset_size"] = p.size();
  return kExitOk;
}

template <class F>
int cmd_chromatic(const F& f, const Options& o, json& report) {
  auto g = load_graph(o);
  auto co = load_coefficients(f, o);
  ChromaticVariant v;
  if (o.variant == "plain") {
    v = ChromaticVariant::plain;
  } else if (o.variant == "hat") {
    v = ChromaticVariant::hat;
  } else {
    throw ValidationFailure("unknown variant '" + o.variant + "'");
  }
  auto c = build_chromatic(f, g, co, v, o.base);
  if (!o.dump_complex.empty()) write_file(o.dump_complex, complex_to_json(f, c).dump(1) + "\n");
  report["betti"] = betti_json(betti(f, c));
  report["dims"] = dims_json(c);
  report["euler_characteristic"] = euler_characteristic(c);
  report["field"] = f.name();
  report["variant"] = o.variant;
  return kExitOk;
}

json check_json(const CheckResult& r) {
  json j;
  j["ok"] = r.ok;
  j["failures"] = r.failures;
  return j;
}

template <class F>
int cmd_compare_chromatic(const F& f, const Options& o, json& report) {
  if (o.n == 0) throw ValidationFailure("-n must be at least 1");
  auto co = load_coefficients(f, o);
  CheckResult r;
  if (o.family == "line") {
    r = check_iso_line(f, co, o.n);
  } else if (o.family == "polygon") {
    r = check_iso_polygon(f, co, o.n);
  } else {
    throw ValidationFailure("unknown family '" + o.family + "'");
  }
  report = check_json(r);
  report["family"] = o.family;
  report["n"] = o.n;
  report["field"] = f.name();
  return r.ok ? kExitOk : kExitInvariant;
}

template <class F>
int cmd_check_les(const F& f, const Options& o, json& report) {
  auto g = load_graph(o);
  auto co = load_coefficients(f, o);
  auto les = check_les(f, g, co, o.base);
  report = check_json(les.check);
  report["betti"] = {{"complement", betti_json(les.tilde)}, {"hat", betti_json(les.hat)},
                     {"multipath", betti_json(les.mu)}};
  report["field"] = f.name();
  return les.check.ok ? kExitOk : kExitInvariant;
}

template <class F>
int cmd_hochschild(const F& f, const Options& o, json& report) {
  auto co = load_coefficients(f, o);
  auto hh = hh_dims(f, co, o.max_degree);
  json j = json::object();
  for (std::size_t i = 0; i < hh.size(); ++i) j[std::to_string(i)] = hh[i];
  report["hh"] = j;
  report["field"] = f.name();
  return kExitOk;
}

template <class F>
int cmd_polygon_check(const F& f, const Options& o, json& report) {
  if (o.n == 0) throw ValidationFailure("-n must be at least 1");
  auto co = load_coefficients(f, o);
  auto r = check_polygon_theorem(f, co, o.n);
  report = check_json(r.check);
  report["multipath"] = betti_json(r.multipath);
  json hh = json::object();
  for (std::size_t i = 0; i < r.hh.size(); ++i) hh[std::to_string(i)] = r.hh[i];
  report["hochschild"] = hh;
  report["n"] = o.n;
  report["field"] = f.name();
  return r.check.ok ? kExitOk : kExitInvariant;
}

int cmd_verify_signs(const Options& o, json& report) {
  auto g = load_graph(o);
  auto p = enumerate_path_poset(g);
  auto eps = make_assignment(p, sign_choice(o.signs), o.base);
  auto check = verify_sign(p, eps);
  auto squares = p.squares();
  json bad = json::array();
  for (std::size_t i : check.violated_squares) {
    bad.push_back({hex(p.element(squares[i].bottom)), hex(p.element(squares[i].top))});
  }
  auto cw = cw_z2_cohomology_dims(p);
  report["ok"] = check.ok;
  report["signs"] = o.signs;
  report["squares"] = squares.size();
  report["violations"] = bad;
  report["cw_cohomology"] = {cw[0], cw[1], cw[2]};
  return check.ok ? kExitOk : kExitInvariant;
}

int cmd_sign_iso(const Options& o, json& report) {
  auto g = load_graph(o);
  auto p = enumerate_path_poset(g);
  auto eps = make_assignment(p, sign_choice(o.from), o.base);
  auto eps2 = make_assignment(p, sign_choice(o.to), o.base);
  auto eta = find_sign_isomorphism(p, eps, eps2);
  report["exists"] = eta.has_value();
  json flipped = json::array();
  if (eta) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if ((*eta)[i]) flipped.push_back(hex(p.element(i)));
    }
  }
  report["eta_support"] = flipped;
  report["from"] = o.from;
  report["to"] = o.to;
  return eta ? kExitOk : kExitInvariant;
}

int cmd_morse(const Options& o, json& report) {
  auto g = load_graph(o);
  auto p = enumerate_path_poset(g);
  Matching m;
  if (o.matching.empty()) {
    m = greedy_matching(p);
  } else {
    std::ifstream in(o.matching, std::ios::binary);
    if (!in) throw ValidationFailure("cannot read " + o.matching);
    std::ostringstream text;
    text << in.rdbuf();
    m = parse_matching(p, text.str());
  }
  auto check = verify_matching(p, m);
  json pairs = json::array();
  for (const auto& [lo, hi] : m) pairs.push_back({hex(p.element(lo)), hex(p.element(hi))});
  report["matching"] = pairs;
  report["valid"] = check.ok;
  if (!check.ok) {
    report["reason"] = check.reason;
    return kExitValidation;
  }
  report["critical"] = counts_json(critical_cells(p, m));
  if (auto b = shortcut_homology(p, m)) {
    report["shortcut"] = betti_json(*b);
  } else {
    report["shortcut"] = "inconclusive";
  }
  return kExitOk;
}

int cmd_selftest(const Options& o, json& report) {
  auto results = run_selftest(o.max_vertices);
  bool all = true;
  json suites = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    json s{{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}};
    if (o.timing) s["seconds"] = r.seconds;
    suites.push_back(s);
  }
  report["ok"] = all;
  report["suites"] = suites;
  return all ? kExitOk : kExitInvariant;
}

template <class Fn>
int with_field(const Options& o, Fn&& fn) {
  AnyField field;
  try {
    field = parse_field(o.field);
  } catch (const std::invalid_argument& e) {
    throw ValidationFailure(e.what());
  }
  return std::visit([&](const auto& f) { return fn(f); }, field);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multipath cohomology of directed graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool graph, bool coefficients) {
    if (graph) {
      sub->add_option("graph", o.graph_path, "edge-list file")->required();
      sub->add_option("--base-vertex", o.base, "base vertex");
    }
    if (coefficients) {
      sub->add_option("--field", o.field, "q or gf:p");
      sub->add_option("--algebra", o.algebra, "algebra file, or ground, dual, trunc:N");
      sub->add_option("--bimodule", o.bimodule, "bimodule file (default: the algebra itself)");
    }
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--timing", o.timing, "include wall-clock time in the report");
  };

  auto* homology = app.add_subcommand("homology", "multipath cohomology");
  add_common(homology, true, true);
  homology->add_option("--signs", o.signs, "sigma or lex");
  homology->add_option("--emit-hasse", o.emit_hasse, "write the Hasse diagram as DOT");
  homology->add_option("--dump-complex", o.dump_complex, "write the cochain complex as JSON");

  auto* verify = app.add_subcommand("verify-signs", "check the square condition");
  add_common(verify, true, false);
  verify->add_option("--signs", o.signs, "sigma or lex");

  auto* iso = app.add_subcommand("sign-iso", "isomorphism between two sign assignments");
  add_common(iso, true, false);
  iso->add_option("--from", o.from, "sigma or lex");
  iso->add_option("--to", o.to, "sigma or lex");

  auto* morse = app.add_subcommand("morse", "acyclic matching and homology shortcut");
  add_common(morse, true, false);
  morse->add_option("--matching", o.matching, "matching file (default: greedy)");

  auto* chromatic = app.add_subcommand("chromatic", "chromatic cohomology");
  add_common(chromatic, true, true);
  chromatic->add_option("--variant", o.variant, "plain or hat");
  chromatic->add_option("--dump-complex", o.dump_complex, "write the cochain complex as JSON");

  auto* compare = app.add_subcommand("compare-chromatic", "chromatic vs multipath on lines and polygons");
  add_common(compare, false, true);
  compare->add_option("--family", o.family, "line or polygon");
  compare->add_option("-n", o.n, "size")->required();

  auto* les = app.add_subcommand("check-les", "exact sequence between chromatic and multipath complexes");
  add_common(les, true, true);

  auto* hh = app.add_subcommand("hochschild", "Hochschild homology from the bar complex");
  add_common(hh, false, true);
  hh->add_option("--max-degree", o.max_degree, "highest degree");

  auto* polygon = app.add_subcommand("polygon-check", "polygon cohomology vs Hochschild homology");
  add_common(polygon, false, true);
  polygon->add_option("-n", o.n, "polygon size")->required();

  auto* selftest = app.add_subcommand("selftest", "brute-force property suites");
  add_common(selftest, false, false);
  selftest->add_option("--max-vertices", o.max_vertices, "largest digraphs to enumerate")->check(CLI::Range(1, 4));

  std::vector<const char*> argv{"multipath"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  json report = json::object();
  int status = kExitOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (homology->parsed()) {
      status = with_field(o, [&](const auto& f) { return cmd_homology(f, o, report); });
    } else if (verify->parsed()) {
      status = cmd_verify_signs(o, report);
    } else if (iso->parsed()) {
      status = cmd_sign_iso(o, report);
    } else if (morse->parsed()) {
      status = cmd_morse(o, report);
    } else if (chromatic->parsed()) {
      status = with_field(o, [&](const auto& f) { return cmd_chromatic(f, o, report); });
    } else if (compare->parsed()) {
      status = with_field(o, [&](const auto& f) { return cmd_compare_chromatic(f, o, report); });
    } else if (les->parsed()) {
      status = with_field(o, [&](const auto& f) { return cmd_check_les(f, o, report); });
    } else if (hh->parsed()) {
      status = with_field(o, [&](const auto& f) { return cmd_hochschild(f, o, report); });
    } else if (polygon->parsed()) {
      status = with_field(o, [&](const auto& f) { return cmd_polygon_check(f, o, report); });
    } else if (selftest->parsed()) {
      status = cmd_selftest(o, report);
    }
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::logic_error& e) {
    // invalid_argument and domain_error are input problems, the rest are bugs
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kExitValidation;
    }
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  if (o.timing) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  print(report, o, out);
  return status;
}

}  // namespace multipath::cli
