#include "zzm/motive_json.hpp"

#include <map>

#include "json.hpp"
#include "zzm/error.hpp"

namespace zzm {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return json::array({r.num(), r.den()}); }
json vec_json(const Vec2q& v) { return json::array({rational_json(v.x()), rational_json(v.y())}); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    auto d = j[1].get<std::int64_t>();
    if (d == 0) throw Error(ErrorKind::Syntax, "zero denominator");
    return Rational(j[0].get<std::int64_t>(), d);
  }
  throw Error(ErrorKind::Syntax, "expected a rational [num, den], got " + j.dump());
}

Vec2q vec_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::Syntax, "expected a 2-vector, got " + j.dump());
  return Vec2q(rational_from(j[0]), rational_from(j[1]));
}

std::vector<std::vector<int>> cycles_from(const json& j, const char* name) {
  if (!j.is_array()) throw Error(ErrorKind::Syntax, std::string(name) + " must be a list of cycles");
  std::vector<std::vector<int>> out;
  for (const auto& c : j) {
    if (!c.is_array()) throw Error(ErrorKind::Syntax, std::string(name) + " must be a list of cycles");
    std::vector<int> cyc;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw Error(ErrorKind::Syntax, std::string(name) + " holds a non-integer id");
      cyc.push_back(x.get<int>());
    }
    out.push_back(cyc);
  }
  return out;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorKind::Syntax, std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

std::string write_motive(const Superpotential& S) {
  json edges = json::array();
  for (int e = 0; e < S.edge_count(); ++e) {
    json x = {{"id", e + 1}, {"s", S.source[e] + 1}, {"t", S.target[e] + 1}};
    if (static_cast<int>(S.omega.size()) == S.edge_count()) x["vec"] = vec_json(S.omega[e]);
    edges.push_back(x);
  }
  auto cycles = [](const Permutation& p) {
    json out = json::array();
    for (auto c : p.cycles()) {
      for (int& e : c) ++e;
      out.push_back(c);
    }
    return out;
  };
  json j = {{"edges", edges}, {"sigma0", cycles(S.sigma0)}, {"sigma1", cycles(S.sigma1)}};
  j["lattice"] = json::array({vec_json(S.lattice.b1), vec_json(S.lattice.b2)});
  j["lambda"] = json::array({json::array({S.lambda(0, 0), S.lambda(0, 1)}), json::array({S.lambda(1, 0), S.lambda(1, 1)})});
  return j.dump(2) + "\n";
}

Superpotential read_motive(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Syntax, std::string("motive JSON: ") + e.what(), static_cast<long>(e.byte) - 1);
  }
  if (!j.is_object()) throw Error(ErrorKind::Syntax, "motive JSON must be an object");
  const json& edges = field(j, "edges");
  if (!edges.is_array() || edges.empty()) throw Error(ErrorKind::Syntax, "\"edges\" must be a non-empty list");
  const int n = static_cast<int>(edges.size());

  Superpotential S;
  try {
    S.sigma0 = Permutation::from_cycles(n, cycles_from(field(j, "sigma0"), "sigma0"));
    S.sigma1 = Permutation::from_cycles(n, cycles_from(field(j, "sigma1"), "sigma1"));
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("bad cycles: ") + e.what());
  }
  S.finalize();

  std::vector<int> given_s(n, -1), given_t(n, -1);
  std::vector<Vec2q> omega(n);
  bool have_vec = true;
  for (const auto& x : edges) {
    if (!x.is_object()) throw Error(ErrorKind::Syntax, "edge entries must be objects");
    const json& idj = field(x, "id");
    if (!idj.is_number_integer()) throw Error(ErrorKind::Syntax, "edge id must be an integer");
    int id = idj.get<int>();
    if (id < 1 || id > n || given_s[id - 1] != -1) throw Error(ErrorKind::Syntax, "edge ids must be 1..n, each once");
    const json& s = field(x, "s");
    const json& t = field(x, "t");
    if (!s.is_number_integer() || !t.is_number_integer()) throw Error(ErrorKind::Syntax, "s and t must be integers");
    given_s[id - 1] = s.get<int>();
    given_t[id - 1] = t.get<int>();
    if (x.contains("vec")) omega[id - 1] = vec_from(x["vec"]);
    else have_vec = false;
  }

  // endpoints must induce the same vertex partition as sigma2
  std::map<int, int> to_derived;
  std::map<int, int> from_derived;
  auto match = [&](int given, int derived) {
    auto a = to_derived.emplace(given, derived).first;
    auto b = from_derived.emplace(derived, given).first;
    if (a->second != derived || b->second != given)
      throw Error(ErrorKind::Invariant, "edge endpoints disagree with the vertex cycles of sigma1^-1 sigma0");
  };
  for (int e = 0; e < n; ++e) {
    match(given_s[e], S.source[e]);
    match(given_t[e], S.target[e]);
  }

  if (have_vec) {
    S.omega = omega;
    for (const auto* p : {&S.sigma0, &S.sigma1})
      for (const auto& c : p->cycles()) {
        Vec2q sum(Rational(0), Rational(0));
        for (int e : c) sum += omega[e];
        if (sum != Vec2q(Rational(0), Rational(0)))
          throw Error(ErrorKind::Invariant, "edge vectors do not close around the face of edge " + std::to_string(c[0] + 1));
      }
  }
  if (j.contains("lattice")) {
    const json& L = j["lattice"];
    if (!L.is_array() || L.size() != 2) throw Error(ErrorKind::Syntax, "\"lattice\" must hold two vectors");
    S.lattice = {vec_from(L[0]), vec_from(L[1])};
  }
  if (j.contains("lambda")) {
    const json& L = j["lambda"];
    if (!L.is_array() || L.size() != 2) throw Error(ErrorKind::Syntax, "\"lambda\" must be a 2x2 integer matrix");
    for (int r = 0; r < 2; ++r) {
      if (!L[r].is_array() || L[r].size() != 2) throw Error(ErrorKind::Syntax, "\"lambda\" must be a 2x2 integer matrix");
      for (int c = 0; c < 2; ++c) {
        if (!L[r][c].is_number_integer()) throw Error(ErrorKind::Syntax, "\"lambda\" must be a 2x2 integer matrix");
        S.lambda(r, c) = L[r][c].get<std::int64_t>();
      }
    }
  }
  return S;
}

std::string segments_jsonl(const std::vector<EdgeSegment>& segments) {
  std::string out;
  for (const auto& s : segments) {
    json j = {{"mid", vec_json(s.midpoint)}, {"src", vec_json(s.source)}, {"tgt", vec_json(s.target)},
              {"vec", vec_json(s.vector)}};
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace zzm
