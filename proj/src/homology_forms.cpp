#include "zzm/homology_forms.hpp"

#include <cmath>
#include <complex>

#include "zzm/error.hpp"
#include "zzm/linalg.hpp"
#include "zzm/matchings.hpp"

namespace zzm {

IncidenceVectors incidence_vectors(const Superpotential& S) {
  const int n = S.edge_count();
  IncidenceVectors iv;
  iv.vertex.assign(S.vertex_count, VecXi::Zero(n));
  iv.black.assign(S.black_count, VecXi::Zero(n));
  iv.white.assign(S.white_count, VecXi::Zero(n));
  for (int e = 0; e < n; ++e) {
    iv.vertex[S.target[e]](e) += 1;
    iv.vertex[S.source[e]](e) -= 1;
    iv.black[S.black[e]](e) = 1;
    iv.white[S.white[e]](e) = 1;
  }
  for (const auto& z : derived_cycles(S).zigzags) {
    VecXi a = VecXi::Zero(n);
    for (int e : z) a(e) += 1;
    for (int e = 0; e < n; ++e)
      for (int f : z)
        if (S.sigma0(e) == f) a(e) -= 1;
    iv.zigzag.push_back(a);
  }

  VecXi sv = VecXi::Zero(n), sb = VecXi::Zero(n), sw = VecXi::Zero(n);
  for (const auto& v : iv.vertex) sv += v;
  for (const auto& b : iv.black) sb += b;
  for (const auto& w : iv.white) sw += w;
  if (!sv.isZero()) throw Error(ErrorKind::Invariant, "vertex vectors do not sum to zero");
  if (sb != sw || sb != VecXi::Ones(n)) throw Error(ErrorKind::Invariant, "black and white face vectors differ");
  return iv;
}

MatXi vertex_matrix(const Superpotential& S) {
  MatXi A = MatXi::Zero(S.edge_count(), S.vertex_count);
  for (int e = 0; e < S.edge_count(); ++e) {
    A(e, S.target[e]) += 1;
    A(e, S.source[e]) -= 1;
  }
  return A;
}

H1Ranks h1_ranks(const Superpotential& S) {
  const int n = S.edge_count();
  MatXi F = MatXi::Zero(n, S.black_count + S.white_count);
  for (int e = 0; e < n; ++e) {
    F(e, S.black[e]) = 1;
    F(e, S.black_count + S.white[e]) = 1;
  }
  H1Ranks r;
  r.graph = n - static_cast<int>(integer_rank(vertex_matrix(S)));
  r.dual = n - static_cast<int>(integer_rank(F));
  if (r.graph != n - S.vertex_count + 1 || r.dual != S.vertex_count + 1)
    throw Error(ErrorKind::Invariant, "H^1 ranks disagree with the closed forms");
  return r;
}

namespace {

MatXi rho_of(const Permutation& sigma, const VecXi& m) {
  const int n = sigma.size();
  MatXi rho = MatXi::Zero(n, n);
  for (const auto& c : sigma.cycles()) {
    std::size_t start = c.size();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (m(c[i]) == 1) start = i;
    std::vector<int> order;
    for (std::size_t i = 0; i < c.size(); ++i) order.push_back(c[(start + i) % c.size()]);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) rho(order[i], order[j]) = 1;
  }
  return rho;
}

}  // namespace

RhoPair rho_matrices(const Superpotential& S, const VecXi& m) {
  if (!is_perfect_matching(S, m)) throw Error(ErrorKind::Precondition, "not a perfect matching");
  return {rho_of(S.sigma0, m), rho_of(S.sigma1, m), m};
}

PoissonForms poisson_forms(const RhoPair& rho) {
  const Index n = rho.rho0.rows();
  const MatXi I = MatXi::Identity(n, n);
  return {rho.rho0 + rho.rho1 - I, rho.rho0 - rho.rho1, 2 * rho.rho1 - I, 2 * rho.rho0 - I};
}

std::int64_t evaluate_form(const MatXi& F, const VecXi& x, const VecXi& y) { return x.dot(F * y); }

Vec2q evaluate_form(const MatXi& F, const VecXq& x, const std::vector<Vec2q>& omega) {
  Vec2q out(Rational(0), Rational(0));
  for (Index i = 0; i < F.rows(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < F.cols(); ++j)
      if (F(i, j) != 0) out += x(i) * Rational(F(i, j)) * omega[j];
  }
  return out;
}

MatXi restricted_table(const MatXi& F, const std::vector<VecXi>& matchings) {
  const Index k = static_cast<Index>(matchings.size());
  MatXi T = MatXi::Zero(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      T(i, j) = evaluate_form(F, matchings[i] - matchings[0], matchings[j] - matchings[0]);
  return T;
}

namespace {

struct KernelPair {
  MatXi minus, plus;
};

KernelPair kernel_matrices(const RhoPair& rho) {
  return {rho.rho0 - rho.rho1, rho.rho0 + rho.rho1 - MatXi::Identity(rho.rho0.rows(), rho.rho0.cols())};
}

}  // namespace

KernelReport kernel_checks(const Superpotential& S, const RhoPair& rho, const std::vector<VecXi>& matchings) {
  KernelReport r;
  IncidenceVectors iv = incidence_vectors(S);
  KernelPair k = kernel_matrices(rho);
  auto pairs_vanish = [&](const MatXi& F, const VecXi& a) {
    VecXi Fa = F * a, aF = F.transpose() * a;
    for (const auto& m : matchings) {
      VecXi h = m - matchings[0];
      if (h.dot(Fa) != 0 || h.dot(aF) != 0) return false;
    }
    return true;
  };
  for (std::size_t v = 0; v < iv.vertex.size(); ++v)
    if (!pairs_vanish(k.minus, iv.vertex[v])) {
      r.ok = false;
      r.failures.push_back("rho0 - rho1 pairs nontrivially with alpha_v for vertex " + std::to_string(v + 1));
    }
  for (std::size_t z = 0; z < iv.zigzag.size(); ++z)
    if (!pairs_vanish(k.plus, iv.zigzag[z])) {
      r.ok = false;
      r.failures.push_back("rho0 + rho1 - I pairs nontrivially with alpha_z for zigzag " + std::to_string(z + 1));
    }
  return r;
}

KernelReport strict_kernel_checks(const Superpotential& S, const RhoPair& rho) {
  KernelReport r;
  IncidenceVectors iv = incidence_vectors(S);
  KernelPair k = kernel_matrices(rho);
  for (std::size_t v = 0; v < iv.vertex.size(); ++v)
    if (!(k.minus * iv.vertex[v]).isZero()) {
      r.ok = false;
      r.failures.push_back("(rho0 - rho1) alpha_v != 0 for vertex " + std::to_string(v + 1));
    }
  for (std::size_t z = 0; z < iv.zigzag.size(); ++z)
    if (!(k.plus * iv.zigzag[z]).isZero()) {
      r.ok = false;
      r.failures.push_back("(rho0 + rho1 - I) alpha_z != 0 for zigzag " + std::to_string(z + 1));
    }
  return r;
}

double spec_point(const VecXd& psi, const VecXi& nu) { return std::exp(psi.dot(nu.cast<double>())); }

VecXd spec_point(const VecXd& psi, const std::vector<VecXi>& matchings) {
  VecXd out(static_cast<Index>(matchings.size()));
  for (std::size_t i = 0; i < matchings.size(); ++i) out(static_cast<Index>(i)) = spec_point(psi, matchings[i]);
  return out;
}

double curve_derivative_check(const PoissonForms& forms, const VecXq& theta, const std::vector<Vec2q>& omega,
                              const std::vector<Vec2q>& qb, const std::vector<Vec2q>& qw,
                              const std::vector<VecXi>& matchings, const VecXd& psi, double h) {
  using C = std::complex<double>;
  auto as_complex = [](const Vec2q& v) { return C(v.x().to_double(), v.y().to_double()); };
  double worst = 0;
  for (const auto& m : matchings) {
    const double a = psi.dot(m.cast<double>());
    VecXq d = theta;
    for (Index e = 0; e < d.size(); ++e) d(e) -= Rational(m(e));
    const std::pair<const MatXi*, const std::vector<Vec2q>*> curves[2] = {{&forms.black, &qb}, {&forms.white, &qw}};
    for (auto [F, q] : curves) {
      C slope(0, 0);
      for (Index e = 0; e < m.size(); ++e)
        if (m(e) != 0) slope += static_cast<double>(m(e)) * as_complex((*q)[e]);
      auto f = [&](double z) { return std::exp(C(a, 0) + z * slope); };
      C numeric = (f(h) - f(-h)) / (2 * h);
      C exact = 0.5 * as_complex(evaluate_form(*F, d, omega)) * f(0);
      double scale = std::max(std::abs(exact), std::abs(f(0)));
      worst = std::max(worst, std::abs(numeric - exact) / scale);
    }
  }
  return worst;
}

}  // namespace zzm
