#include "zzm/jacobi.hpp"

#include <algorithm>
#include <map>

#include "zzm/error.hpp"
#include "zzm/homology_forms.hpp"
#include "zzm/linalg.hpp"

namespace zzm {

std::string to_string(const Monomial3& m) {
  std::string out;
  for (int j = 0; j < 3; ++j) {
    if (m.exp[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += "u" + std::to_string(j + 1);
    if (m.exp[j] != 1) out += "^" + std::to_string(m.exp[j]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MonomialBag& bag) {
  if (bag.empty()) return "0";
  std::map<Monomial3, int> counts;
  for (const auto& m : bag) ++counts[m];
  std::string out;
  for (const auto& [m, k] : counts) {
    if (!out.empty()) out += " + ";
    std::string t = to_string(m);
    if (k > 1) out += std::to_string(k) + (t == "1" ? "" : "*" + t);
    else out += t;
  }
  return out;
}

MonomialMatrix MonomialMatrix::identity(int n) {
  auto I = zero(n);
  for (int i = 0; i < n; ++i) I.at(i, i).push_back(Monomial3{});
  return I;
}

std::size_t MonomialMatrix::monomial_count() const {
  std::size_t k = 0;
  for (const auto& b : entries) k += b.size();
  return k;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size != b.size) throw Error(ErrorKind::Precondition, "monomial matrix sizes differ");
  auto c = MonomialMatrix::zero(a.size);
  for (int i = 0; i < a.size; ++i)
    for (int k = 0; k < a.size; ++k) {
      const auto& x = a.at(i, k);
      if (x.empty()) continue;
      for (int j = 0; j < a.size; ++j)
        for (const auto& p : x)
          for (const auto& q : b.at(k, j)) c.at(i, j).push_back(p * q);
    }
  for (auto& e : c.entries) std::sort(e.begin(), e.end());
  return c;
}

MonomialMatrix operator+(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size != b.size) throw Error(ErrorKind::Precondition, "monomial matrix sizes differ");
  auto c = a;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    c.entries[i].insert(c.entries[i].end(), b.entries[i].begin(), b.entries[i].end());
    std::sort(c.entries[i].begin(), c.entries[i].end());
  }
  return c;
}

AStar astar_matrix(const Superpotential& S, const WeightRealization& wr) {
  const int n = S.edge_count();
  if (wr.nu1.size() != n || wr.nu2.size() != n || wr.nu3.size() != n)
    throw Error(ErrorKind::Precondition, "weights have the wrong length");
  AStar a{MonomialMatrix::zero(S.vertex_count), {}};
  for (int e = 0; e < n; ++e) {
    if (wr.nu1(e) <= 0 || wr.nu2(e) <= 0 || wr.nu3(e) <= 0)
      throw Error(ErrorKind::Precondition, "weight of edge " + std::to_string(e + 1) + " is not positive");
    EdgeSummand x{S.source[e], S.target[e], Monomial3{{wr.nu1(e), wr.nu2(e), wr.nu3(e)}}};
    a.phi.push_back(x);
    a.matrix.at(x.s, x.t).push_back(x.mono);
  }
  for (auto& b : a.matrix.entries) std::sort(b.begin(), b.end());
  return a;
}

MonomialMatrix as_matrix(const EdgeSummand& x, int size) {
  auto m = MonomialMatrix::zero(size);
  m.at(x.s, x.t).push_back(x.mono);
  return m;
}

MonomialMatrix phi_of_path(const AStar& a, const std::vector<int>& path) {
  auto out = MonomialMatrix::zero(a.matrix.size);
  if (path.empty()) return MonomialMatrix::identity(a.matrix.size);
  Monomial3 mono;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& x = a.phi[path[i]];
    if (i > 0 && a.phi[path[i - 1]].t != x.s) return out;
    mono = mono * x.mono;
  }
  out.at(a.phi[path.front()].s, a.phi[path.back()].t).push_back(mono);
  return out;
}

JacobiPaths jacobi_paths(const Superpotential& S, int e) {
  JacobiPaths p;
  for (int f = S.sigma0(e); f != e; f = S.sigma0(f)) p.white.push_back(f);
  for (int f = S.sigma1(e); f != e; f = S.sigma1(f)) p.black.push_back(f);
  return p;
}

JacobiReport check_jacobi_relations(const Superpotential& S, const WeightRealization& wr) {
  JacobiReport r;
  auto a = astar_matrix(S, wr);
  for (int e = 0; e < S.edge_count(); ++e) {
    auto p = jacobi_paths(S, e);
    if (phi_of_path(a, p.white) != phi_of_path(a, p.black)) {
      r.ok = false;
      r.failures.push_back("white and black paths around edge " + std::to_string(e + 1) + " differ");
    }
  }
  return r;
}

std::vector<MonomialMatrix> path_series(const Superpotential& S, const WeightRealization& wr, int L,
                                        std::size_t cap) {
  if (L < 0) throw Error(ErrorKind::Precondition, "negative path length");
  auto a = astar_matrix(S, wr);
  std::vector<MonomialMatrix> out{MonomialMatrix::identity(S.vertex_count)};
  for (int j = 1; j <= L; ++j) {
    out.push_back(out.back() * a.matrix);
    if (out.back().monomial_count() > cap)
      throw Error(ErrorKind::Limit, "path series power " + std::to_string(j) + " exceeds " + std::to_string(cap) +
                                        " monomials");
  }
  return out;
}

bool MasterBinomial::vanishes() const {
  auto w = white, b = black;
  std::sort(w.begin(), w.end());
  std::sort(b.begin(), b.end());
  return w == b;
}

namespace {

std::string product(const std::vector<int>& edges) {
  std::string s;
  for (int e : edges) s += (s.empty() ? "X" : "*X") + std::to_string(e + 1);
  return s.empty() ? "1" : s;
}

}  // namespace

std::string MasterBinomial::str() const { return product(white) + " - " + product(black); }

std::vector<MasterBinomial> master_binomials(const Superpotential& S) {
  std::vector<MasterBinomial> out;
  for (int e = 0; e < S.edge_count(); ++e) {
    auto p = jacobi_paths(S, e);
    out.push_back({e, p.white, p.black});
  }
  return out;
}

std::string potential_polynomial(const Superpotential& S) {
  std::string s;
  for (const auto& c : S.sigma0.cycles()) s += (s.empty() ? "" : " + ") + product(c);
  for (const auto& c : S.sigma1.cycles()) s += " - " + product(c);
  return s;
}

TauPair tau_matrices(const Superpotential& S, const VecXi& m) {
  auto rho = rho_matrices(S, m);
  const MatXi I = MatXi::Identity(S.edge_count(), S.edge_count());
  return {2 * rho.rho0 - I, 2 * rho.rho1 - I};
}

std::int64_t duality_pairing(const MatXi& tau, const VecXi& nu, const VecXi& nu_prime) {
  return nu_prime.dot(tau * nu);
}

QAggregates qbw_aggregates(const Superpotential& S, const WeightRealization& wr, const VecXi& nu) {
  auto th = realization_theta(S, wr);
  auto qs = quadrangles(S, realization_omega(wr), th, th);
  QAggregates q{Vec2q(Rational(0), Rational(0)), Vec2q(Rational(0), Rational(0))};
  for (int e = 0; e < S.edge_count(); ++e) {
    if (nu(e) == 0) continue;
    q.qb += Rational(nu(e)) * qs[e].qb;
    q.qw += Rational(nu(e)) * qs[e].qw;
  }
  return q;
}

std::optional<MatXi> diagonal_conjugator(const Superpotential& S, const WeightRealization& a,
                                         const WeightRealization& b) {
  MatXi A = vertex_matrix(S);
  MatXi r(S.vertex_count, 3);
  const VecXi* x[3] = {&a.nu1, &a.nu2, &a.nu3};
  const VecXi* y[3] = {&b.nu1, &b.nu2, &b.nu3};
  for (int j = 0; j < 3; ++j) {
    auto sol = integer_solve(A, VecXi(*y[j] - *x[j]));
    if (!sol) return std::nullopt;
    r.col(j) = *sol;
  }
  return r;
}

}  // namespace zzm
