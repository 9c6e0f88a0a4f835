#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zzm/arrangement.hpp"
#include "zzm/permutation.hpp"

namespace zzm {

/// Edges of the torus tiling R^2 / Lambda with the face permutations.
///
/// sigma0 cycles are the white faces (counterclockwise), sigma1 cycles the
/// black faces (clockwise). Vertices are the cycles of sigma2 = sigma1^-1 sigma0.
struct Superpotential {
  Permutation sigma0, sigma1;
  /// Realization omega_F: edge vectors in the working frame.
  std::vector<Vec2q> omega;
  /// Lambda as plane vectors.
  LatticeBasis lattice;
  /// Lambda in the Aut basis.
  Mat2i lambda = Mat2i::Identity();
  /// Anchor of each edge: Lambda-coordinates mod 1 of the midpoint of its
  /// first piece. Empty for superpotentials read from files.
  std::vector<std::array<Rational, 2>> anchors;
  /// Edges fused from pieces that bend at a two-valent vertex.
  std::vector<int> bent;

  // Incidence, derived from the permutations by finalize().
  std::vector<int> source, target, white, black;
  int vertex_count = 0, white_count = 0, black_count = 0;

  int edge_count() const { return sigma0.size(); }
  /// Recompute incidence; throws Invariant if the genus identity fails.
  void finalize();
};

struct DerivedCycles {
  std::vector<std::vector<int>> sigma2;
  std::vector<std::vector<int>> zigzags;
};

/// Build F_Lambda. `lambda` is an integer matrix over the basis `aut`.
Superpotential build_superpotential(const ZebraPolynomial& poly, const LatticeBasis& aut, const Mat2i& lambda);
/// Same, from a caller-supplied patch; throws PatchTooSmall if it does not
/// cover a period of Lambda with margin.
Superpotential build_superpotential(const ZebraPolynomial& poly, const std::vector<EdgeSegment>& segments,
                                    const LatticeBasis& aut, const Mat2i& lambda);

/// Vertex cycles (sigma1^-1 sigma0) and zigzags (sigma0 sigma1: apply sigma1,
/// then sigma0).
DerivedCycles derived_cycles(const Superpotential& S);
/// |cycles sigma0| + |cycles sigma1| + |cycles sigma2| == |E|.
bool genus_identity(const Permutation& sigma0, const Permutation& sigma1);

/// phi with phi sigma0 = sigma0' phi and phi sigma1 = sigma1' phi, if any.
std::optional<std::vector<int>> isomorphism(const Permutation& a0, const Permutation& a1, const Permutation& b0,
                                            const Permutation& b1);
std::optional<std::vector<int>> isomorphic(const Superpotential& S, const Superpotential& T);

/// Permutation of edges induced by translating by tau (Aut-basis coordinates).
Permutation deck_action(const Superpotential& S, const Vec2q& tau);

/// Convexity of the faces of S (closure, strict turning, single winding).
ConvexityReport check_convexity(const Superpotential& S);
/// Convexity of the tiling of F; false with a diagnostic when faces are unbounded.
ConvexityReport check_convexity(const ZebraPolynomial& poly);

}  // namespace zzm
