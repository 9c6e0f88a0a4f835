#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "zzm/permutation.hpp"
#include "zzm/zebra.hpp"

namespace zzm {

// Geometry lives in the working frame x = diag(1/2, sqrt(3)/2) p, where p is
// the Euclidean plane point. There the zebra of frequency k v~_j is
// floor(2 x . k v~_j) mod 2 and every line is rational.

/// Oriented boundary interval; black lies on the right of source -> target.
struct EdgeSegment {
  Vec2q midpoint, source, target, vector;
};

struct Box {
  Vec2q lo, hi;
};

/// Basis of a planar lattice, working frame.
struct LatticeBasis {
  Vec2q b1, b2;

  Mat2q matrix() const {
    Mat2q m;
    m.col(0) = b1;
    m.col(1) = b2;
    return m;
  }
  static LatticeBasis from_matrix(const Mat2q& m) { return {m.col(0), m.col(1)}; }
};

/// Squared Euclidean length of a working-frame vector in the true plane.
Rational plane_norm2(const Vec2q& v);
Rational plane_dot(const Vec2q& a, const Vec2q& b);

/// Original-plane vector u (given exactly as D^-2 v~ images) for frequency
/// direction j: diag(1/4, 3/4) v~_j.
Vec2q direction_vector(int j);

/// Lagrange-reduced basis with det > 0, lexicographically least among reduced
/// bases of the same lattice.
LatticeBasis canonical_basis(const LatticeBasis& basis);
bool lattice_contains(const LatticeBasis& lattice, const Vec2q& v);
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);
/// Lattice generated by the given vectors (must span the plane).
LatticeBasis lattice_from_generators(const std::vector<Vec2q>& gens);

/// K: every arrangement vertex has K-integral coordinates.
std::int64_t denominator_bound(const ZebraPolynomial& poly);

/// Number of independent boundary directions (0, 1 or 2).
int direction_rank(const ZebraPolynomial& poly);

/// Boundary intervals inside the closed box [0, N/K]^2.
std::vector<EdgeSegment> extract_edges(const ZebraPolynomial& poly, std::int64_t N);
std::vector<EdgeSegment> extract_edges(const ZebraPolynomial& poly, const Box& box);

/// Largest sup-norm length an unfused interval can have.
Rational segment_length_bound(const ZebraPolynomial& poly);

/// L0 = {tau : tau . v in Z for every frequency v}; always inside Aut.
LatticeBasis zebra_period_lattice(const ZebraPolynomial& poly);

/// Box that holds a full period of `lattice` plus `layers` interval lengths.
Box covering_box(const ZebraPolynomial& poly, const LatticeBasis& lattice, int layers);

/// Segment classes modulo a lattice: (midpoint coordinates mod 1, vector).
using SegmentKey = std::array<Rational, 4>;
SegmentKey segment_key(const Mat2q& inverse_basis, const Vec2q& midpoint, const Vec2q& vector);

/// Segment classes modulo L0 from a patch that covers one L0 period.
class TilingClasses {
 public:
  TilingClasses(const ZebraPolynomial& poly, const std::vector<EdgeSegment>& segments);
  explicit TilingClasses(const ZebraPolynomial& poly);

  const LatticeBasis& period_lattice() const { return l0_; }
  std::size_t size() const { return classes_.size(); }
  /// True iff translating by tau maps the oriented segment set onto itself.
  bool preserves(const Vec2q& tau) const;
  /// Candidate translations m(I) - m(I1) over classes I with vec(I) = vec(I1).
  std::vector<Vec2q> candidates() const;

 private:
  void build(const ZebraPolynomial& poly, const std::vector<EdgeSegment>& segments);

  LatticeBasis l0_;
  Mat2q l0_inverse_;
  std::map<SegmentKey, Vec2q> classes_;  // key -> representative midpoint
};

/// Aut(F) from an extracted patch; throws PatchTooSmall if the patch does not
/// hold a full L0 period.
LatticeBasis automorphism_lattice(const ZebraPolynomial& poly, const std::vector<EdgeSegment>& segments);
/// Aut(F) with automatic patch growth N = 8K, 16K, ... up to 128K.
LatticeBasis automorphism_lattice(const ZebraPolynomial& poly);

bool is_automorphism(const ZebraPolynomial& poly, const Vec2q& tau);

struct ConvexityReport {
  bool convex = true;
  std::vector<std::string> diagnostics;
};

/// Faces are the cycles of sigma0 (white, counterclockwise) and sigma1 (black,
/// clockwise). Each must close, turn strictly the same way at every corner and
/// wind exactly once. Edges listed in `bent` are fused from non-collinear
/// pieces and fail the check.
ConvexityReport check_convexity(const Permutation& sigma0, const Permutation& sigma1,
                                const std::vector<Vec2q>& omega, const std::vector<int>& bent = {});

}  // namespace zzm
