#include "zzm/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "zzm/error.hpp"
#include "zzm/linalg.hpp"

namespace zzm {

Rational plane_dot(const Vec2q& a, const Vec2q& b) {
  return Rational(4) * a.x() * b.x() + Rational(4, 3) * a.y() * b.y();
}

Rational plane_norm2(const Vec2q& v) { return plane_dot(v, v); }

Vec2q direction_vector(int j) {
  const Vec2i& v = base_directions().at(j - 1);
  return Vec2q(Rational(v.x(), 4), Rational(3 * v.y(), 4));
}

namespace {

Rational round_nearest(const Rational& q) { return Rational((q + Rational(1, 2)).floor()); }

bool lex_less4(const Vec2q& a1, const Vec2q& a2, const Vec2q& b1, const Vec2q& b2) {
  if (a1 != b1) return lex_less(a1, b1);
  return lex_less(a2, b2);
}

}  // namespace

LatticeBasis canonical_basis(const LatticeBasis& basis) {
  Vec2q b1 = basis.b1, b2 = basis.b2;
  Rational d = cross(b1, b2);
  if (d.is_zero()) throw Error(ErrorKind::Domain, "lattice basis is degenerate");
  for (;;) {
    if (plane_norm2(b1) > plane_norm2(b2)) std::swap(b1, b2);
    Rational mu = round_nearest(plane_dot(b1, b2) / plane_norm2(b1));
    if (mu.is_zero()) break;
    b2 -= mu * b1;
  }
  const Rational area = d.abs();
  std::vector<Vec2q> cand;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      if (a != 0 || b != 0) cand.push_back(Rational(a) * b1 + Rational(b) * b2);
  std::optional<std::pair<Vec2q, Vec2q>> best;
  for (const auto& u : cand) {
    const Rational nu = plane_norm2(u);
    for (const auto& v : cand) {
      if (cross(u, v) != area) continue;
      if (nu > plane_norm2(v)) continue;
      if (Rational(2) * plane_dot(u, v).abs() > nu) continue;
      if (!best || lex_less4(u, v, best->first, best->second)) best = {u, v};
    }
  }
  if (!best) throw Error(ErrorKind::Invariant, "lattice reduction failed");
  return {best->first, best->second};
}

bool lattice_contains(const LatticeBasis& lattice, const Vec2q& v) {
  Vec2q c = inverse2(lattice.matrix()) * v;
  return c.x().is_integer() && c.y().is_integer();
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  return lattice_contains(a, b.b1) && lattice_contains(a, b.b2) && lattice_contains(b, a.b1) &&
         lattice_contains(b, a.b2);
}

LatticeBasis lattice_from_generators(const std::vector<Vec2q>& gens) {
  MatXq g(2, static_cast<Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) g.col(static_cast<Index>(i)) = gens[i];
  std::int64_t D = common_denominator(g);
  MatXi gi(2, g.cols());
  for (Index j = 0; j < g.cols(); ++j)
    for (Index i = 0; i < 2; ++i) gi(i, j) = (g(i, j) * Rational(D)).num();
  MatXi B = lattice_basis(gi);
  if (B.cols() != 2) throw Error(ErrorKind::Domain, "generators do not span the plane");
  LatticeBasis out{Vec2q(Rational(B(0, 0), D), Rational(B(1, 0), D)),
                   Vec2q(Rational(B(0, 1), D), Rational(B(1, 1), D))};
  return canonical_basis(out);
}

std::int64_t denominator_bound(const ZebraPolynomial& poly) {
  std::int64_t K = 1;
  const MatXi& V = poly.V;
  for (Index i = 0; i < V.cols(); ++i)
    for (Index j = i + 1; j < V.cols(); ++j) {
      std::int64_t det = V(0, i) * V(1, j) - V(1, i) * V(0, j);
      if (det == 0) continue;
      std::int64_t g = std::gcd(std::gcd(V(0, i), V(1, i)), std::gcd(V(0, j), V(1, j)));
      K = checked::lcm(K, 2 * std::abs(det) / g);
    }
  return K;
}

int direction_rank(const ZebraPolynomial& poly) { return static_cast<int>(integer_rank(poly.V)); }

namespace {

// Parallel lines of one direction: n . x = a / (2k) for k in `mults`.
struct LineClass {
  Vec2i n;
  std::vector<std::int64_t> mults;
};

std::vector<LineClass> line_classes(const ZebraPolynomial& poly) {
  std::vector<LineClass> out;
  for (const Frequency& f : poly.frequencies) {
    Vec2i n = base_directions()[f.direction - 1];
    auto it = std::find_if(out.begin(), out.end(), [&](const LineClass& c) { return c.n == n; });
    if (it == out.end()) {
      out.push_back({n, {}});
      it = out.end() - 1;
    }
    it->mults.push_back(f.multiplier);
  }
  return out;
}

Rational dot(const Vec2i& n, const Vec2q& x) { return Rational(n.x()) * x.x() + Rational(n.y()) * x.y(); }

std::vector<Rational> offsets(const LineClass& c, const Rational& lo, const Rational& hi) {
  std::set<Rational> s;
  for (std::int64_t k : c.mults) {
    std::int64_t den = 2 * k;
    std::int64_t a0 = (lo * Rational(den)).ceil(), a1 = (hi * Rational(den)).floor();
    for (std::int64_t a = a0; a <= a1; ++a) s.insert(Rational(a, den));
  }
  return {s.begin(), s.end()};
}

// Zebra bit of frequency column i at x + eps * r for infinitesimal eps > 0.
int zebra_bit_beside(const ZebraPolynomial& poly, Index i, const Vec2q& x, const Vec2i& r) {
  Vec2i w = poly.V.col(i);
  Rational s = Rational(2) * dot(w, x);
  std::int64_t delta = w.dot(r);
  std::int64_t fl = s.floor();
  if (s.is_integer() && delta < 0) fl -= 1;
  return static_cast<int>(checked::floor_mod(fl, 2));
}

int color_beside(const ZebraPolynomial& poly, const Vec2q& x, const Vec2i& r) {
  VecXi bits(poly.frequency_count());
  for (Index i = 0; i < bits.size(); ++i) bits(i) = zebra_bit_beside(poly, i, x, r);
  return combine_zebras(poly, bits);
}

void range_of(const Vec2i& n, const Box& box, Rational& lo, Rational& hi) {
  Rational c[4] = {dot(n, box.lo), dot(n, Vec2q(box.hi.x(), box.lo.y())), dot(n, Vec2q(box.lo.x(), box.hi.y())),
                   dot(n, box.hi)};
  lo = *std::min_element(c, c + 4);
  hi = *std::max_element(c, c + 4);
}

}  // namespace

std::vector<EdgeSegment> extract_edges(const ZebraPolynomial& poly, std::int64_t N) {
  if (N <= 0) throw Error(ErrorKind::Precondition, "N must be positive");
  Rational side(N, denominator_bound(poly));
  return extract_edges(poly, Box{Vec2q(Rational(0), Rational(0)), Vec2q(side, side)});
}

std::vector<EdgeSegment> extract_edges(const ZebraPolynomial& poly, const Box& box) {
  if (poly.frequency_count() == 0) throw Error(ErrorKind::Domain, "constant polynomial");
  const auto classes = line_classes(poly);
  const bool single_direction = classes.size() == 1;
  std::vector<EdgeSegment> out;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Vec2i n = classes[ci].n;
    const Vec2i d(-n.y(), n.x());
    const Rational n2(n.squaredNorm());
    Rational clo, chi;
    range_of(n, box, clo, chi);
    for (const Rational& c : offsets(classes[ci], clo, chi)) {
      const Vec2q x0 = (c / n2) * Vec2q(Rational(n.x()), Rational(n.y()));
      // clip x0 + t d to the box
      std::optional<Rational> tmin, tmax;
      bool empty = false;
      for (int k = 0; k < 2; ++k) {
        if (d(k) == 0) {
          if (x0(k) < box.lo(k) || x0(k) > box.hi(k)) empty = true;
          continue;
        }
        Rational ta = (box.lo(k) - x0(k)) / Rational(d(k)), tb = (box.hi(k) - x0(k)) / Rational(d(k));
        if (tb < ta) std::swap(ta, tb);
        if (!tmin || ta > *tmin) tmin = ta;
        if (!tmax || tb < *tmax) tmax = tb;
      }
      if (empty || !tmin || *tmin > *tmax) continue;

      std::set<Rational> ts;
      if (single_direction) {
        ts = {*tmin, *tmax};
      } else {
        for (std::size_t cj = 0; cj < classes.size(); ++cj) {
          if (cj == ci) continue;
          const Vec2i& m = classes[cj].n;
          const Rational base = dot(m, x0);
          const Rational nd(m.dot(d));
          Rational a = base + nd * *tmin, b = base + nd * *tmax;
          if (b < a) std::swap(a, b);
          for (const Rational& c2 : offsets(classes[cj], a, b)) ts.insert((c2 - base) / nd);
        }
      }
      std::vector<Rational> tv(ts.begin(), ts.end());
      for (std::size_t k = 0; k + 1 < tv.size(); ++k) {
        const Vec2q dq(Rational(d.x()), Rational(d.y()));
        const Vec2q p = x0 + tv[k] * dq, q = x0 + tv[k + 1] * dq;
        const Vec2q mid = (p + q) / Rational(2);
        // the right normal of d is n
        const int right = color_beside(poly, mid, n);
        const int left = color_beside(poly, mid, Vec2i(-n));
        if (right == left) continue;
        EdgeSegment s;
        s.midpoint = mid;
        s.source = right == 1 ? p : q;
        s.target = right == 1 ? q : p;
        s.vector = s.target - s.source;
        out.push_back(s);
      }
    }
  }
  return out;
}

Rational segment_length_bound(const ZebraPolynomial& poly) {
  const auto classes = line_classes(poly);
  if (classes.size() < 2) return Rational(0);
  Rational best(0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Vec2i n = classes[i].n;
    const Vec2i d(-n.y(), n.x());
    std::optional<Rational> shortest;
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (j == i) continue;
      Rational gap = Rational(1, 2 * std::abs(classes[j].n.dot(d)));
      if (!shortest || gap < *shortest) shortest = gap;
    }
    Rational len = *shortest * Rational(std::max(std::abs(d.x()), std::abs(d.y())));
    if (len > best) best = len;
  }
  return best;
}

LatticeBasis zebra_period_lattice(const ZebraPolynomial& poly) {
  MatXi B = lattice_basis(poly.V);
  if (B.cols() != 2) throw Error(ErrorKind::Domain, "tiling is not doubly periodic (single boundary direction)");
  Mat2q Bq;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) Bq(i, j) = Rational(B(i, j));
  Mat2q dual = inverse2(Bq).transpose();
  return canonical_basis({dual.col(0), dual.col(1)});
}

Box covering_box(const ZebraPolynomial& poly, const LatticeBasis& lattice, int layers) {
  Vec2q corners[4] = {Vec2q(Rational(0), Rational(0)), lattice.b1, lattice.b2, lattice.b1 + lattice.b2};
  Box b{corners[0], corners[0]};
  for (const auto& c : corners)
    for (int k = 0; k < 2; ++k) {
      if (c(k) < b.lo(k)) b.lo(k) = c(k);
      if (c(k) > b.hi(k)) b.hi(k) = c(k);
    }
  Rational m = segment_length_bound(poly) * Rational(layers);
  Vec2q mm(m, m);
  b.lo -= mm;
  b.hi += mm;
  return b;
}

SegmentKey segment_key(const Mat2q& inverse_basis, const Vec2q& midpoint, const Vec2q& vector) {
  Vec2q f = inverse_basis * midpoint;
  return {f.x().frac(), f.y().frac(), vector.x(), vector.y()};
}

TilingClasses::TilingClasses(const ZebraPolynomial& poly, const std::vector<EdgeSegment>& segments) {
  build(poly, segments);
}

TilingClasses::TilingClasses(const ZebraPolynomial& poly) {
  LatticeBasis l0 = zebra_period_lattice(poly);
  build(poly, extract_edges(poly, covering_box(poly, l0, 2)));
}

void TilingClasses::build(const ZebraPolynomial& poly, const std::vector<EdgeSegment>& segments) {
  l0_ = zebra_period_lattice(poly);
  l0_inverse_ = inverse2(l0_.matrix());
  if (segments.empty()) throw Error(ErrorKind::PatchTooSmall, "no boundary segments in patch");
  Vec2q lo = segments[0].source, hi = lo;
  for (const auto& s : segments)
    for (const Vec2q& p : {s.source, s.target})
      for (int k = 0; k < 2; ++k) {
        if (p(k) < lo(k)) lo(k) = p(k);
        if (p(k) > hi(k)) hi(k) = p(k);
      }
  // A translate of one period plus a margin must fit inside the patch, so
  // every class has a complete representative.
  Box need = covering_box(poly, l0_, 1);
  for (int k = 0; k < 2; ++k)
    if (hi(k) - lo(k) < need.hi(k) - need.lo(k))
      throw Error(ErrorKind::PatchTooSmall, "patch does not cover a full period of the tiling");
  for (const auto& s : segments) classes_.emplace(segment_key(l0_inverse_, s.midpoint, s.vector), s.midpoint);
}

bool TilingClasses::preserves(const Vec2q& tau) const {
  for (const auto& [key, mid] : classes_) {
    Vec2q vec(key[2], key[3]);
    if (!classes_.count(segment_key(l0_inverse_, mid + tau, vec))) return false;
  }
  return true;
}

std::vector<Vec2q> TilingClasses::candidates() const {
  std::vector<Vec2q> out;
  if (classes_.empty()) return out;
  const auto& [k1, m1] = *classes_.begin();
  for (const auto& [key, mid] : classes_)
    if (key[2] == k1[2] && key[3] == k1[3]) out.push_back(mid - m1);
  return out;
}

LatticeBasis automorphism_lattice(const ZebraPolynomial& poly, const std::vector<EdgeSegment>& segments) {
  TilingClasses tc(poly, segments);
  std::vector<Vec2q> gens = {tc.period_lattice().b1, tc.period_lattice().b2};
  for (const Vec2q& tau : tc.candidates())
    if (tc.preserves(tau)) gens.push_back(tau);
  return lattice_from_generators(gens);
}

LatticeBasis automorphism_lattice(const ZebraPolynomial& poly) {
  const std::int64_t K = denominator_bound(poly);
  for (std::int64_t N = 8 * K; N <= 128 * K; N *= 2) {
    try {
      return automorphism_lattice(poly, extract_edges(poly, N));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PatchTooSmall) throw;
    }
  }
  throw Error(ErrorKind::PatchTooSmall, "no complete period within N = 128K");
}

bool is_automorphism(const ZebraPolynomial& poly, const Vec2q& tau) { return TilingClasses(poly).preserves(tau); }

namespace {

int half_of(const Vec2q& v) { return (v.y() > Rational(0) || (v.y().is_zero() && v.x() > Rational(0))) ? 0 : 1; }

// Angle order on [0, 2 pi).
bool angle_less(const Vec2q& a, const Vec2q& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > Rational(0);
}

std::string cycle_text(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i] + 1);
  return s + ")";
}

void check_faces(const Permutation& sigma, const std::vector<Vec2q>& omega, bool white, ConvexityReport& rep) {
  const char* name = white ? "white" : "black";
  for (const auto& c : sigma.cycles()) {
    Vec2q sum(Rational(0), Rational(0));
    int wraps = 0;
    bool strict = true;
    for (int e : c) {
      const Vec2q& a = omega[e];
      const Vec2q& b = omega[sigma(e)];
      sum += a;
      Rational turn = cross(a, b);
      if (white ? turn <= Rational(0) : turn >= Rational(0)) strict = false;
      if (white ? angle_less(b, a) : angle_less(a, b)) ++wraps;
    }
    if (!sum.isZero(Rational(0))) {
      rep.convex = false;
      rep.diagnostics.push_back(std::string(name) + " face " + cycle_text(c) + " does not close (unbounded faces)");
    } else if (!strict) {
      rep.convex = false;
      rep.diagnostics.push_back(std::string(name) + " face " + cycle_text(c) + " is not strictly convex");
    } else if (wraps != 1) {
      rep.convex = false;
      rep.diagnostics.push_back(std::string(name) + " face " + cycle_text(c) + " winds " + std::to_string(wraps) +
                                " times");
    }
  }
}

}  // namespace

ConvexityReport check_convexity(const Permutation& sigma0, const Permutation& sigma1,
                                const std::vector<Vec2q>& omega, const std::vector<int>& bent) {
  ConvexityReport rep;
  if (sigma0.size() != sigma1.size() || static_cast<int>(omega.size()) != sigma0.size())
    throw Error(ErrorKind::Precondition, "face data sizes differ");
  for (int e : bent) {
    rep.convex = false;
    rep.diagnostics.push_back("edge " + std::to_string(e + 1) + " joins pieces that bend at a two-valent vertex");
  }
  check_faces(sigma0, omega, true, rep);
  check_faces(sigma1, omega, false, rep);
  return rep;
}

}  // namespace zzm
