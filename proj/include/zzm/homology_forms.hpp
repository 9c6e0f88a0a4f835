#pragma once

#include <string>
#include <vector>

#include "zzm/superpotential.hpp"

namespace zzm {

using VecXd = Eigen::VectorXd;

struct IncidenceVectors {
  std::vector<VecXi> vertex;  // +1 into v, -1 out of v
  std::vector<VecXi> black, white;
  std::vector<VecXi> zigzag;  // +1 on z, -1 where sigma0(e) lies on z
};

/// Throws Invariant if sum_v alpha_v != 0 or the face sums differ.
IncidenceVectors incidence_vectors(const Superpotential& S);

/// Columns alpha_v, one per vertex.
MatXi vertex_matrix(const Superpotential& S);

struct H1Ranks {
  int graph = 0;  // rank H^1 of the quiver
  int dual = 0;   // rank H^1 of the dual graph
};
/// Kernel ranks of the vertex and face constraint systems; throws Invariant
/// if they disagree with |E| - |V| + 1 and |V| + 1.
H1Ranks h1_ranks(const Superpotential& S);

/// rho_j = (I - s_j)^-1 where s_j is the permutation matrix of sigma_j with
/// the rows of matched edges cleared. Entry (e', e) is 1 iff e' follows e
/// (or equals it) on their common cycle read from the matched edge.
struct RhoPair {
  MatXi rho0, rho1;
  VecXi matching;
};
RhoPair rho_matrices(const Superpotential& S, const VecXi& m);

struct PoissonForms {
  MatXi plus;   // rho0 + rho1 - I
  MatXi minus;  // rho0 - rho1
  MatXi black;  // -I + 2 rho1
  MatXi white;  // -I + 2 rho0
};
PoissonForms poisson_forms(const RhoPair& rho);

/// x^t F y.
std::int64_t evaluate_form(const MatXi& F, const VecXi& x, const VecXi& y);
/// x^t F omega, omega given row-wise as edge vectors.
Vec2q evaluate_form(const MatXi& F, const VecXq& x, const std::vector<Vec2q>& omega);

/// table(i, j) = F(m_i - m_0, m_j - m_0): the form on the lattice spanned by
/// matching differences.
MatXi restricted_table(const MatXi& F, const std::vector<VecXi>& matchings);

struct KernelReport {
  bool ok = true;
  std::vector<std::string> failures;
};
/// The vertex and zigzag vectors lie in the kernels of rho0 - rho1 and
/// rho0 + rho1 - I as forms on the matching-difference lattice: both
/// h^t F a and a^t F h vanish for every h = m - m_0.
KernelReport kernel_checks(const Superpotential& S, const RhoPair& rho, const std::vector<VecXi>& matchings);
/// The same identities read as matrix times vector. Much stronger, and false
/// as soon as a face's matched edge starts at a different vertex than its
/// neighbour's.
KernelReport strict_kernel_checks(const Superpotential& S, const RhoPair& rho);

/// exp(sum nu(e) psi(e)).
double spec_point(const VecXd& psi, const VecXi& nu);
VecXd spec_point(const VecXd& psi, const std::vector<VecXi>& matchings);

/// Largest relative deviation between the central difference of each
/// coordinate of the two curves psi + z q_b, psi + z q_w at z = 0 and the
/// closed form F(theta - m', omega)/2 times the coordinate, F being the
/// black resp. white form.
double curve_derivative_check(const PoissonForms& forms, const VecXq& theta, const std::vector<Vec2q>& omega,
                              const std::vector<Vec2q>& qb, const std::vector<Vec2q>& qw,
                              const std::vector<VecXi>& matchings, const VecXd& psi, double h);

}  // namespace zzm
