#include "zzm/matchings.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "zzm/error.hpp"
#include "zzm/homology_forms.hpp"
#include "zzm/linalg.hpp"

namespace zzm {

std::optional<std::int64_t> weight_degree(const Superpotential& S, const VecXi& nu) {
  if (nu.size() != S.edge_count()) return std::nullopt;
  if ((nu.array() < 0).any()) return std::nullopt;
  std::optional<std::int64_t> deg;
  for (const Permutation* p : {&S.sigma0, &S.sigma1})
    for (const auto& c : p->cycles()) {
      std::int64_t s = 0;
      for (int e : c) s = checked::add(s, nu(e));
      if (deg && *deg != s) return std::nullopt;
      deg = s;
    }
  return deg;
}

bool is_perfect_matching(const Superpotential& S, const VecXi& m) {
  if (m.size() != S.edge_count() || (m.array() > 1).any()) return false;
  auto d = weight_degree(S, m);
  return d && *d == 1;
}

std::vector<int> support(const VecXi& m) {
  std::vector<int> s;
  for (Index e = 0; e < m.size(); ++e)
    if (m(e) != 0) s.push_back(static_cast<int>(e));
  return s;
}

std::int64_t default_matching_cap() {
  if (const char* v = std::getenv("ZZM_MAX_MATCHINGS")) {
    char* end = nullptr;
    long long n = std::strtoll(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return n;
  }
  return 1000000;
}

namespace {

struct Cover {
  const Superpotential& S;
  std::int64_t cap;
  int faces;
  std::vector<std::vector<int>> edges_of;  // face -> edges on it
  std::vector<bool> covered;
  std::vector<int> chosen;
  std::vector<std::vector<int>> found;

  int face_a(int e) const { return S.white[e]; }
  int face_b(int e) const { return S.white_count + S.black[e]; }
  bool free_edge(int e) const { return !covered[face_a(e)] && !covered[face_b(e)]; }

  void run() {
    int best = -1, best_count = 0;
    for (int f = 0; f < faces; ++f) {
      if (covered[f]) continue;
      int c = 0;
      for (int e : edges_of[f]) c += free_edge(e);
      if (c == 0) return;
      if (best < 0 || c < best_count) {
        best = f;
        best_count = c;
      }
    }
    if (best < 0) {
      if (static_cast<std::int64_t>(found.size()) >= cap)
        throw Error(ErrorKind::Limit, "more than " + std::to_string(cap) + " perfect matchings");
      found.push_back(chosen);
      return;
    }
    for (int e : edges_of[best]) {
      if (!free_edge(e)) continue;
      covered[face_a(e)] = covered[face_b(e)] = true;
      chosen.push_back(e);
      run();
      chosen.pop_back();
      covered[face_a(e)] = covered[face_b(e)] = false;
    }
  }
};

}  // namespace

std::vector<VecXi> enumerate_matchings(const Superpotential& S, std::int64_t cap) {
  const int n = S.edge_count();
  if (S.white_count != S.black_count) return {};
  Cover c{S, cap, S.white_count + S.black_count, {}, {}, {}, {}};
  c.edges_of.resize(c.faces);
  for (int e = 0; e < n; ++e) {
    c.edges_of[c.face_a(e)].push_back(e);
    c.edges_of[c.face_b(e)].push_back(e);
  }
  c.covered.assign(c.faces, false);
  c.run();
  for (auto& s : c.found) std::sort(s.begin(), s.end());
  std::sort(c.found.begin(), c.found.end());
  std::vector<VecXi> out;
  for (const auto& s : c.found) {
    VecXi m = VecXi::Zero(n);
    for (int e : s) m(e) = 1;
    out.push_back(m);
  }
  return out;
}

MatXi matching_matrix(const std::vector<VecXi>& matchings, int edge_count) {
  MatXi M(edge_count, static_cast<Index>(matchings.size()));
  for (std::size_t i = 0; i < matchings.size(); ++i) M.col(static_cast<Index>(i)) = matchings[i];
  return M;
}

Completeness dimer_completeness(const Superpotential& S, const std::vector<VecXi>& matchings) {
  Completeness c;
  if (matchings.empty()) return c;
  VecXi sum = VecXi::Zero(S.edge_count());
  for (const auto& m : matchings) sum += m;
  if ((sum.array() <= 0).any()) return c;
  c.complete = true;
  Rational k(static_cast<std::int64_t>(matchings.size()));
  c.theta = VecXq(sum.size());
  for (Index e = 0; e < sum.size(); ++e) c.theta(e) = Rational(sum(e)) / k;
  return c;
}

std::vector<int> decompose_weight(const Superpotential& S, const VecXi& nu, const std::vector<VecXi>& matchings) {
  auto deg = weight_degree(S, nu);
  if (!deg) throw Error(ErrorKind::Precondition, "not a weight function");
  VecXi rest = nu;
  std::vector<int> parts;
  for (std::int64_t k = 0; k < *deg; ++k) {
    int pick = -1;
    for (std::size_t i = 0; i < matchings.size(); ++i)
      if (((rest - matchings[i]).array() >= 0).all()) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick < 0) throw Error(ErrorKind::Invariant, "no perfect matching fits under the remaining weight");
    rest -= matchings[pick];
    parts.push_back(pick);
  }
  return parts;
}

namespace {

std::string monomial_word(const VecXi& mu, int sign) {
  std::ostringstream os;
  bool first = true;
  for (Index i = 0; i < mu.size(); ++i) {
    std::int64_t k = sign * mu(i);
    if (k <= 0) continue;
    if (!first) os << '*';
    first = false;
    os << "Xm" << i + 1;
    if (k > 1) os << '^' << k;
  }
  return first ? "1" : os.str();
}

}  // namespace

RelationLattice relation_lattice(const std::vector<VecXi>& matchings, int edge_count) {
  if (matchings.empty()) throw Error(ErrorKind::Precondition, "no perfect matchings");
  RelationLattice r;
  r.basis = integer_kernel(matching_matrix(matchings, edge_count));
  for (Index c = 0; c < r.basis.cols(); ++c)
    r.binomials.push_back(monomial_word(r.basis.col(c), 1) + " - " + monomial_word(r.basis.col(c), -1));
  return r;
}

bool equivalent(const Superpotential& S, const VecXi& a, const VecXi& b) {
  return integer_solve(vertex_matrix(S), a - b).has_value();
}

std::vector<int> equivalence_classes(const Superpotential& S, const std::vector<VecXi>& matchings) {
  const MatXi A = vertex_matrix(S);
  std::vector<int> cls(matchings.size(), -1), reps;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (integer_solve(A, matchings[i] - matchings[reps[k]])) {
        cls[i] = static_cast<int>(k);
        break;
      }
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
    }
  }
  return cls;
}

int weight_rank(const Superpotential& S, const std::vector<VecXi>& matchings) {
  if (matchings.empty()) return 0;
  int r = static_cast<int>(integer_rank(matching_matrix(matchings, S.edge_count())));
  if (dimer_completeness(S, matchings).complete && r != S.vertex_count + 2)
    throw Error(ErrorKind::Invariant, "rank of the weight semigroup is " + std::to_string(r) + ", expected " +
                                          std::to_string(S.vertex_count + 2));
  return r;
}

}  // namespace zzm
