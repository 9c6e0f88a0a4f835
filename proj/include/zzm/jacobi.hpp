#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zzm/realization.hpp"

namespace zzm {

/// u1^a u2^b u3^c.
struct Monomial3 {
  std::array<std::int64_t, 3> exp{0, 0, 0};

  Monomial3 operator*(const Monomial3& o) const {
    return {{exp[0] + o.exp[0], exp[1] + o.exp[1], exp[2] + o.exp[2]}};
  }
  auto operator<=>(const Monomial3&) const = default;
};
/// "u1^3*u2*u3^2"; "1" for the unit.
std::string to_string(const Monomial3& m);

/// Sorted multiset of monomials: one entry per path.
using MonomialBag = std::vector<Monomial3>;
/// Collapsed view: "2*u1^2*u2^2 + u1*u2"; "0" when empty.
std::string to_string(const MonomialBag& bag);

/// Square matrix of bags, row-major.
struct MonomialMatrix {
  int size = 0;
  std::vector<MonomialBag> entries;

  static MonomialMatrix zero(int n) { return {n, std::vector<MonomialBag>(static_cast<std::size_t>(n) * n)}; }
  static MonomialMatrix identity(int n);
  MonomialBag& at(int r, int c) { return entries[static_cast<std::size_t>(r) * size + c]; }
  const MonomialBag& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * size + c]; }
  std::size_t monomial_count() const;
  bool operator==(const MonomialMatrix&) const = default;
};
MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix operator+(const MonomialMatrix& a, const MonomialMatrix& b);

/// Single-entry matrix Phi(e): the monomial of e at (s(e), t(e)).
struct EdgeSummand {
  int s = 0, t = 0;
  Monomial3 mono;
};
struct AStar {
  MonomialMatrix matrix;
  std::vector<EdgeSummand> phi;
};
/// Rows and columns are the vertices (sigma2-cycles). Throws Precondition on
/// a non-positive weight.
AStar astar_matrix(const Superpotential& S, const WeightRealization& wr);
MonomialMatrix as_matrix(const EdgeSummand& x, int size);
/// Phi of the path e_1 ... e_k (the zero matrix if it does not compose).
MonomialMatrix phi_of_path(const AStar& a, const std::vector<int>& path);

/// Paths around the white and black face of e, both from t(e) to s(e).
struct JacobiPaths {
  std::vector<int> white, black;
};
JacobiPaths jacobi_paths(const Superpotential& S, int e);

struct JacobiReport {
  bool ok = true;
  std::vector<std::string> failures;
};
/// Phi(white path) == Phi(black path) for every edge.
JacobiReport check_jacobi_relations(const Superpotential& S, const WeightRealization& wr);

/// A^0, ..., A^L. Throws Limit once a power holds more than `cap` monomials.
std::vector<MonomialMatrix> path_series(const Superpotential& S, const WeightRealization& wr, int L,
                                        std::size_t cap = 1000000);

/// White face minus e against black face minus e, variables in cyclic order.
struct MasterBinomial {
  int edge = 0;
  std::vector<int> white, black;
  /// Same variables with multiplicity, so zero in the commutative ring.
  bool vanishes() const;
  std::string str() const;  // "X4*X5*X3*X2*X6 - X2*X5"
};
std::vector<MasterBinomial> master_binomials(const Superpotential& S);
/// Sum over white faces minus sum over black faces of the face monomials.
std::string potential_polynomial(const Superpotential& S);

/// tau_j = (I + s_j)(I - s_j)^-1 = 2 rho_j - I.
struct TauPair {
  MatXi tau0, tau1;
};
TauPair tau_matrices(const Superpotential& S, const VecXi& m);
/// (T_j(nu))(nu') = nu'^t tau_j nu.
std::int64_t duality_pairing(const MatXi& tau, const VecXi& nu, const VecXi& nu_prime);

struct QAggregates {
  Vec2q qb, qw;
};
/// Q_b(nu) = sum nu(e) q_b(e), Q_w likewise.
QAggregates qbw_aggregates(const Superpotential& S, const WeightRealization& wr, const VecXi& nu);

/// r (one row per vertex, one column per u_j) with nu'_j - nu_j = sum_v r(v, j)
/// alpha_v, so that A(nu') = D^-1 A(nu) D with D = diag(u^r(v)). nullopt
/// unless nu_j ~ nu'_j for every j.
std::optional<MatXi> diagonal_conjugator(const Superpotential& S, const WeightRealization& a,
                                         const WeightRealization& b);

}  // namespace zzm
