#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zzm/superpotential.hpp"

namespace zzm {

/// Three positive weight functions; omega = (nu1 - nu3, nu2 - nu3) and
/// theta = nu3 / deg nu3.
struct WeightRealization {
  VecXi nu1, nu2, nu3;
};

std::vector<Vec2q> realization_omega(const WeightRealization& wr);
/// Throws Precondition unless nu3 is a weight function of positive degree.
VecXq realization_theta(const Superpotential& S, const WeightRealization& wr);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;
};
/// Positivity, weight-function conditions, face closure (which forces equal
/// degrees), strictly convex faces and strictly convex quadrangles.
ValidationReport validate_weight_realization(const Superpotential& S, const WeightRealization& wr);

/// Offsets from s(e); qb, qw, qt are measured from the midpoint of s t.
struct Quadrangle {
  Vec2q sb, sw, st;
  Vec2q qb, qw, qt;
};

/// Marked points as theta-combinations of edge midpoints, one theta per
/// colour (for barycentric marks the two differ). No matching needed.
std::vector<Quadrangle> quadrangles(const Superpotential& S, const std::vector<Vec2q>& omega,
                                    const VecXq& theta_black, const VecXq& theta_white);
/// Same through (B + I - rho1) omega and (W + I - rho0) omega for the
/// auxiliary matching m.
std::vector<Quadrangle> quadrangles(const Superpotential& S, const WeightRealization& wr, const VecXi& m);

/// theta(e) = 1 / length of the black (resp. white) face of e.
std::array<VecXq, 2> barycentric_theta(const Superpotential& S);

/// s, b, t, w winds strictly counterclockwise.
bool strictly_convex(const Quadrangle& q);
Rational area(const Quadrangle& q);

/// Every face's marked point seen from each of its edges, shifted back along
/// the cycle, is the same point. Returns the offending faces.
std::vector<std::string> marked_point_mismatches(const Superpotential& S, const std::vector<Vec2q>& omega,
                                                 const std::vector<Quadrangle>& quads);

/// Lambda_omega from Omega_omega = Omega_F G with Omega = [omega | A].
/// Throws Precondition on rank deficiency.
LatticeBasis realization_lattice(const Superpotential& S, const std::vector<Vec2q>& omega_F,
                                 const LatticeBasis& lattice_F, const std::vector<Vec2q>& omega);
LatticeBasis realization_lattice(const Superpotential& S, const std::vector<Vec2q>& omega);

/// Positions of the vertices with vertex 0 at the origin, by BFS along edges.
std::vector<Vec2q> lifted_vertices(const Superpotential& S, const std::vector<Vec2q>& omega);

struct NewtonEmbedding {
  /// One point per class of matchings, in order of first occurrence.
  std::vector<Vec2q> points;
  std::vector<int> fiber;           // matchings per class
  std::vector<int> representative;  // first matching of the class
  std::vector<int> class_of;        // per matching
};
/// m' -> (theta - m')^t (rho0 - rho1) omega with matchings[0] as auxiliary
/// matching. Throws Invariant unless constant on classes and injective on them.
NewtonEmbedding newton_embedding(const Superpotential& S, const WeightRealization& wr,
                                 const std::vector<VecXi>& matchings);
Vec2q newton_point(const Superpotential& S, const WeightRealization& wr, const VecXi& m, const VecXi& m_prime);
/// 0, 1 or 2 (-1 for no points).
int affine_dimension(const std::vector<Vec2q>& points);

struct Deformation {
  WeightRealization wr;
  std::int64_t N = 0;
};
/// (N nu_j + nu'_j - nu''_j)_j, doubling N until valid. Throws Precondition
/// when deg nu'_j != deg nu''_j and Limit if nothing up to 2^16 N works.
Deformation deform(const Superpotential& S, const WeightRealization& wr,
                   const std::array<std::array<VecXi, 2>, 3>& nu_prime, std::int64_t N);

struct SearchOptions {
  int max_coefficient = 4;
  std::int64_t max_candidates = 200000;
};
/// First the construction nu_j = omega_j + N nu, nu3 = N nu with omega a
/// scaled copy of S.omega and nu the sum of all matchings; then a bounded
/// lexicographic search over sum c_m m with 0 <= c_m <= max_coefficient.
std::optional<WeightRealization> search_weight_realization(const Superpotential& S,
                                                           const std::vector<VecXi>& matchings,
                                                           const SearchOptions& options = {});

}  // namespace zzm
