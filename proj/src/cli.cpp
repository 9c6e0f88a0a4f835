#include "zzm/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zzm/arrangement.hpp"
#include "zzm/error.hpp"
#include "zzm/homology_forms.hpp"
#include "zzm/jacobi.hpp"
#include "zzm/matchings.hpp"
#include "zzm/motive_json.hpp"
#include "zzm/realization.hpp"
#include "zzm/render.hpp"
#include "zzm/zebra.hpp"

namespace zzm::cli {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return json::array({r.num(), r.den()}); }
json vec_json(const Vec2q& v) { return json::array({rational_json(v.x()), rational_json(v.y())}); }

json int_matrix_json(const MatXi& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

json edge_ids(const VecXi& m) {
  json out = json::array();
  for (int e : support(m)) out.push_back(e + 1);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string input;
  std::string lambda;
  std::string out;
  std::string format;
  std::string weights;
  bool search = false;
  std::string window = "1x1";
  bool quiver = false;
  Style style;
};

bool is_motive_path(const std::string& input) {
  return input.ends_with(".json") || std::filesystem::is_regular_file(input);
}

Mat2i parse_lambda(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (item.empty() || used != item.size())
      throw Error(ErrorKind::Syntax, "--lambda takes four integers a,b,c,d (rows of a matrix over the Aut basis)");
    v.push_back(x);
  }
  if (v.size() != 4)
    throw Error(ErrorKind::Syntax, "--lambda takes four integers a,b,c,d (rows of a matrix over the Aut basis)");
  Mat2i m;
  m << v[0], v[1], v[2], v[3];
  return m;
}

Superpotential load(const Options& o) {
  if (is_motive_path(o.input)) {
    if (!o.lambda.empty()) throw Error(ErrorKind::Precondition, "--lambda applies to polynomial input only");
    return read_motive(read_file(o.input));
  }
  auto poly = parse_polynomial(o.input);
  Mat2i lambda = o.lambda.empty() ? Mat2i::Identity() : parse_lambda(o.lambda);
  return build_superpotential(poly, automorphism_lattice(poly), lambda);
}

WeightRealization read_weights(const Superpotential& S, const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Syntax, std::string("weights: ") + e.what(), static_cast<long>(e.byte) - 1);
  }
  WeightRealization wr;
  VecXi* dst[3] = {&wr.nu1, &wr.nu2, &wr.nu3};
  const char* names[3] = {"nu1", "nu2", "nu3"};
  for (int k = 0; k < 3; ++k) {
    if (!j.is_object() || !j.contains(names[k]) || !j[names[k]].is_array())
      throw Error(ErrorKind::Syntax, std::string("weights need an integer list \"") + names[k] + "\"");
    const json& a = j[names[k]];
    if (static_cast<int>(a.size()) != S.edge_count())
      throw Error(ErrorKind::Precondition, std::string(names[k]) + " needs one entry per edge (" +
                                               std::to_string(S.edge_count()) + ")");
    dst[k]->resize(S.edge_count());
    for (int e = 0; e < S.edge_count(); ++e) {
      if (!a[e].is_number_integer()) throw Error(ErrorKind::Syntax, std::string(names[k]) + " holds a non-integer");
      (*dst[k])(e) = a[e].get<std::int64_t>();
    }
  }
  return wr;
}

json weights_json(const WeightRealization& wr) {
  auto list = [](const VecXi& v) {
    json a = json::array();
    for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
  };
  return {{"nu1", list(wr.nu1)}, {"nu2", list(wr.nu2)}, {"nu3", list(wr.nu3)}};
}

WeightRealization realization(const Superpotential& S, const Options& o, const std::vector<VecXi>& ms) {
  if (!o.weights.empty() && o.search) throw Error(ErrorKind::Precondition, "give --weights or --search, not both");
  if (!o.weights.empty()) {
    auto wr = read_weights(S, o.weights);
    auto rep = validate_weight_realization(S, wr);
    if (!rep.valid) throw Error(ErrorKind::Precondition, "not a weight realization: " + rep.failures.front());
    return wr;
  }
  if (!o.search) throw Error(ErrorKind::Precondition, "this verb needs a weight realization: --weights FILE or --search");
  auto wr = search_weight_realization(S, ms);
  if (!wr) throw Error(ErrorKind::Limit, "no weight realization found within the search budget");
  return *wr;
}

std::pair<int, int> parse_window(const std::string& s) {
  auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("");
    std::size_t a = 0, b = 0;
    int p = std::stoi(s.substr(0, x), &a), q = std::stoi(s.substr(x + 1), &b);
    if (a != x || b != s.size() - x - 1) throw std::invalid_argument("");
    return {p, q};
  } catch (const std::exception&) {
    throw Error(ErrorKind::Syntax, "--window takes PxQ, e.g. 3x3");
  }
}

Scene base_scene(const Options& o) {
  Scene sc;
  auto [p, q] = parse_window(o.window);
  sc.window = {p, q};
  sc.style = o.style;
  return sc;
}

// ---- verbs; each returns the artifact text

std::string draw(const Superpotential& S, const Options& o) {
  auto sc = base_scene(o);
  sc.kind = o.quiver ? SceneKind::Quiver : SceneKind::Tiling;
  sc.S = &S;
  if (S.omega.empty()) throw Error(ErrorKind::Precondition, "input has no edge vectors to draw");
  return render(sc);
}

std::string matchings_verb(const Superpotential& S) {
  auto ms = enumerate_matchings(S);
  auto comp = dimer_completeness(S, ms);
  json list = json::array();
  for (const auto& m : ms) list.push_back(edge_ids(m));
  json j = {{"count", ms.size()}, {"matchings", list}, {"complete", comp.complete}};
  if (comp.complete) {
    json th = json::array();
    for (Index e = 0; e < comp.theta.size(); ++e) th.push_back(rational_json(comp.theta(e)));
    j["theta"] = th;
  } else {
    j["theta"] = nullptr;
  }
  if (!ms.empty()) {
    auto rel = relation_lattice(ms, S.edge_count());
    j["relations"] = {{"basis", int_matrix_json(rel.basis)}, {"binomials", rel.binomials}};
    json cls = json::array();
    for (int c : equivalence_classes(S, ms)) cls.push_back(c + 1);
    j["classes"] = cls;
  }
  return j.dump(2) + "\n";
}

std::string newton_verb(const Superpotential& S, const Options& o) {
  auto ms = enumerate_matchings(S);
  auto wr = realization(S, o, ms);
  auto emb = newton_embedding(S, wr, ms);
  if (o.format == "svg") {
    auto sc = base_scene(o);
    sc.kind = SceneKind::Newton;
    sc.plane_frame = false;
    sc.points = emb.points;
    sc.fiber = emb.fiber;
    return render(sc);
  }
  json pts = json::array();
  for (std::size_t i = 0; i < emb.points.size(); ++i)
    pts.push_back({{"point", vec_json(emb.points[i])},
                   {"fiber", emb.fiber[i]},
                   {"representative", edge_ids(ms[emb.representative[i]])}});
  json hull = json::array();
  for (const auto& p : convex_hull(emb.points)) hull.push_back(vec_json(p));
  json j = {{"weights", weights_json(wr)},
            {"points", pts},
            {"hull", hull},
            {"dimension", affine_dimension(emb.points)}};
  return j.dump(2) + "\n";
}

std::string quad_verb(const Superpotential& S, const Options& o) {
  auto ms = enumerate_matchings(S);
  auto wr = realization(S, o, ms);
  auto omega = realization_omega(wr);
  auto th = realization_theta(S, wr);
  auto qs = quadrangles(S, omega, th, th);
  auto L = realization_lattice(S, omega);
  if (o.format == "svg") {
    auto sc = base_scene(o);
    sc.kind = SceneKind::Quadrangles;
    sc.S = &S;
    sc.omega = omega;
    sc.lattice = L;
    sc.quads = qs;
    sc.plane_frame = false;
    return render(sc);
  }
  json list = json::array();
  Rational total(0);
  for (int e = 0; e < S.edge_count(); ++e) {
    list.push_back({{"e", e + 1}, {"sb", vec_json(qs[e].sb)}, {"sw", vec_json(qs[e].sw)}, {"st", vec_json(qs[e].st)}});
    total += area(qs[e]);
  }
  json j = {{"weights", weights_json(wr)},
            {"quadrangles", list},
            {"lattice", json::array({vec_json(L.b1), vec_json(L.b2)})},
            {"area", rational_json(total)}};
  return j.dump(2) + "\n";
}

std::string jacobi_verb(const Superpotential& S, const Options& o) {
  auto ms = enumerate_matchings(S);
  auto wr = realization(S, o, ms);
  auto a = astar_matrix(S, wr);
  auto rel = check_jacobi_relations(S, wr);
  auto bins = master_binomials(S);
  const int V = S.vertex_count;
  if (o.format == "json") {
    json rows = json::array();
    for (int i = 0; i < V; ++i) {
      json row = json::array();
      for (int k = 0; k < V; ++k) row.push_back(to_string(a.matrix.at(i, k)));
      rows.push_back(row);
    }
    json b = json::array();
    for (const auto& x : bins) b.push_back(x.str());
    json j = {{"weights", weights_json(wr)}, {"matrix", rows},       {"relations_hold", rel.ok},
              {"failures", rel.failures},    {"potential", potential_polynomial(S)}, {"binomials", b}};
    return j.dump(2) + "\n";
  }
  std::string s = "A** (" + std::to_string(V) + " x " + std::to_string(V) + ")\n";
  for (int i = 0; i < V; ++i)
    for (int k = 0; k < V; ++k)
      if (!a.matrix.at(i, k).empty())
        s += "  [" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "] " + to_string(a.matrix.at(i, k)) + "\n";
  s += "potential: " + potential_polynomial(S) + "\n";
  for (const auto& x : bins) s += "D(" + std::to_string(x.edge + 1) + "): " + x.str() + "\n";
  s += std::string("relations: ") + (rel.ok ? "hold" : "violated") + "\n";
  for (const auto& f : rel.failures) s += "  " + f + "\n";
  return s;
}

struct FormSummary {
  bool well_defined = true, identities = true;
  MatXi plus, minus, black, white;
};

FormSummary summarize_forms(const Superpotential& S, const std::vector<VecXi>& ms) {
  FormSummary f;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto pf = poisson_forms(rho_matrices(S, ms[i]));
    MatXi p = restricted_table(pf.plus, ms), m = restricted_table(pf.minus, ms);
    MatXi b = restricted_table(pf.black, ms), w = restricted_table(pf.white, ms);
    if (2 * p != b + w || 2 * m != w - b) f.identities = false;
    if (i == 0) {
      f.plus = p, f.minus = m, f.black = b, f.white = w;
    } else if (p != f.plus || m != f.minus || b != f.black || w != f.white) {
      f.well_defined = false;
    }
  }
  return f;
}

std::string forms_verb(const Superpotential& S) {
  auto ms = enumerate_matchings(S);
  if (ms.empty()) throw Error(ErrorKind::Precondition, "no perfect matchings, so no forms");
  auto rho = rho_matrices(S, ms[0]);
  auto f = summarize_forms(S, ms);
  bool kernel = true;
  std::size_t strict_failures = 0;
  for (const auto& m : ms) {
    auto r = rho_matrices(S, m);
    kernel = kernel && kernel_checks(S, r, ms).ok;
    strict_failures += strict_kernel_checks(S, r).failures.size();
  }
  json j = {{"auxiliary", edge_ids(ms[0])},
            {"rho0", int_matrix_json(rho.rho0)},
            {"rho1", int_matrix_json(rho.rho1)},
            {"tables", {{"plus", int_matrix_json(f.plus)},
                        {"minus", int_matrix_json(f.minus)},
                        {"black", int_matrix_json(f.black)},
                        {"white", int_matrix_json(f.white)}}},
            {"well_defined", f.well_defined},
            {"identities", f.identities},
            {"kernel", kernel},
            {"strict_kernel_failures", strict_failures}};
  return j.dump(2) + "\n";
}

// Full invariant suite. Returns the report; `failed` counts violations.
std::string check_verb(const Superpotential& S, int& failed) {
  std::string s;
  auto line = [&](bool ok, const std::string& what) {
    s += (ok ? "ok    " : "FAIL  ") + what + "\n";
    if (!ok) ++failed;
  };
  auto cyc = derived_cycles(S);
  int c0 = S.sigma0.cycle_count(), c1 = S.sigma1.cycle_count(), c2 = static_cast<int>(cyc.sigma2.size());
  line(c0 + c1 + c2 == S.edge_count(), "genus " + std::to_string(c0) + "+" + std::to_string(c1) + "+" +
                                           std::to_string(c2) + "=" + std::to_string(S.edge_count()));
  s += "      zigzags " + std::to_string(cyc.zigzags.size()) + "\n";
  if (!S.omega.empty()) {
    auto conv = check_convexity(S.sigma0, S.sigma1, S.omega, S.bent);
    line(conv.convex, "faces convex");
    for (const auto& d : conv.diagnostics) s += "      " + d + "\n";
  }
  try {
    incidence_vectors(S);
    auto h = h1_ranks(S);
    line(true, "incidence, H1 ranks " + std::to_string(h.graph) + "/" + std::to_string(h.dual));
  } catch (const Error& e) {
    line(false, std::string("incidence: ") + e.what());
  }
  {
    auto back = read_motive(write_motive(S));
    line(isomorphic(S, back).has_value(), "motive JSON round trip");
  }
  std::vector<VecXi> ms;
  try {
    ms = enumerate_matchings(S);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Limit) throw;
    s += "skip  matchings: " + std::string(e.what()) + "\n";
    return s;
  }
  bool all_perfect = true;
  for (const auto& m : ms) all_perfect = all_perfect && is_perfect_matching(S, m);
  line(all_perfect, "matchings " + std::to_string(ms.size()));
  auto comp = dimer_completeness(S, ms);
  s += std::string("      dimer complete: ") + (comp.complete ? "yes" : "no") + "\n";
  if (!comp.complete) return s;
  try {
    line(true, "weight rank " + std::to_string(weight_rank(S, ms)));
  } catch (const Error& e) {
    line(false, std::string("weight rank: ") + e.what());
  }
  auto f = summarize_forms(S, ms);
  line(f.well_defined, "forms independent of the auxiliary matching");
  line(f.identities, "plus/minus forms from black/white");
  bool kernel = true;
  for (const auto& m : ms) kernel = kernel && kernel_checks(S, rho_matrices(S, m), ms).ok;
  line(kernel, "vertex and zigzag vectors in the form kernels");
  auto classes = equivalence_classes(S, ms);
  s += "      matching classes " + std::to_string(*std::max_element(classes.begin(), classes.end()) + 1) + "\n";
  return s;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "zebra polynomial text, or a motive JSON file")->required();
  sub->add_option("--lambda", o.lambda, "period lattice as integers a,b,c,d over the Aut basis");
  sub->add_option("-o,--out", o.out, "write the artifact here instead of stdout");
  sub->add_option("--format", o.format, "json, svg or text");
}

void add_weights(CLI::App* sub, Options& o) {
  sub->add_option("--weights", o.weights, "JSON file {nu1, nu2, nu3} indexed by edge id");
  sub->add_flag("--search", o.search, "search for a weight realization");
}

void add_style(CLI::App* sub, Options& o) {
  sub->add_option("--window", o.window, "PxQ fundamental domains");
  sub->add_option("--stroke-width", o.style.stroke_width);
  sub->add_option("--scale", o.style.scale, "pixels per unit");
  sub->add_option("--black", o.style.black, "fill of black faces");
  sub->add_option("--white", o.style.white, "fill of white faces");
  sub->add_option("--stroke", o.style.stroke, "stroke colour");
  sub->add_flag("--labels", o.style.labels, "edge or fiber labels");
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& msg, long pos = -1) {
  json j = {{"kind", kind}, {"message", msg}};
  if (pos >= 0) j["position"] = pos;
  err << json{{"error", j}}.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zhegalkin zebra motives"};
  app.name("zzm");
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, std::vector<std::string>> formats = {
      {"draw", {"svg"}},           {"potential", {"json"}},   {"matchings", {"json"}},
      {"newton", {"json", "svg"}}, {"quad", {"json", "svg"}}, {"jacobi", {"text", "json"}},
      {"forms", {"json"}},         {"check", {"text"}}};
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& verb, const std::string& help) {
    auto* s = app.add_subcommand(verb, help);
    add_common(s, o);
    subs[verb] = s;
    return s;
  };
  add_style(sub("draw", "SVG of the tiling"), o);
  subs["draw"]->add_flag("--quiver", o.quiver, "overlay the quiver");
  sub("potential", "motive JSON");
  sub("matchings", "perfect matchings, completeness, relations");
  auto* nw = sub("newton", "embedded Newton polygon");
  add_weights(nw, o);
  add_style(nw, o);
  auto* qd = sub("quad", "quadrangle tiling of a weight realization");
  add_weights(qd, o);
  add_style(qd, o);
  add_weights(sub("jacobi", "tautological matrix and Jacobi relations"), o);
  sub("forms", "rho matrices and Poisson forms");
  sub("check", "invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return 1;
  }

  std::string verb;
  for (const auto& [name, s] : subs)
    if (s->parsed()) verb = name;
  const auto& allowed = formats.at(verb);
  if (o.format.empty()) o.format = allowed.front();
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end()) {
    emit_error(err, "usage", verb + " does not produce " + o.format);
    return 1;
  }

  int failed = 0;
  std::string artifact;
  try {
    Superpotential S;
    try {
      S = load(o);
    } catch (const Error& e) {
      if (verb == "check" && e.kind() == ErrorKind::Invariant) {
        out << "FAIL  " << e.what() << "\n";
        return 2;
      }
      throw;
    }
    if (verb == "draw") artifact = draw(S, o);
    else if (verb == "potential") artifact = write_motive(S);
    else if (verb == "matchings") artifact = matchings_verb(S);
    else if (verb == "newton") artifact = newton_verb(S, o);
    else if (verb == "quad") artifact = quad_verb(S, o);
    else if (verb == "jacobi") artifact = jacobi_verb(S, o);
    else if (verb == "forms") artifact = forms_verb(S);
    else artifact = check_verb(S, failed);
  } catch (const Error& e) {
    emit_error(err, to_string(e.kind()), e.what(), e.position());
    return 1;
  } catch (const std::exception& e) {
    emit_error(err, "internal", e.what());
    return 1;
  }

  if (o.out.empty()) {
    out << artifact;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!(f << artifact)) {
      emit_error(err, "io", "cannot write " + o.out);
      return 1;
    }
  }
  return failed ? 2 : 0;
}

}  // namespace zzm::cli
