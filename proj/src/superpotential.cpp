#include "zzm/superpotential.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "zzm/error.hpp"

namespace zzm {

void Superpotential::finalize() {
  const int n = edge_count();
  if (sigma1.size() != n) throw Error(ErrorKind::Precondition, "sigma0 and sigma1 act on different sets");
  if (!genus_identity(sigma0, sigma1)) throw Error(ErrorKind::Invariant, "genus identity fails");
  Permutation sigma2 = sigma1.inverse() * sigma0;
  target = sigma2.cycle_index();
  Permutation inv0 = sigma0.inverse();
  source.assign(n, 0);
  for (int e = 0; e < n; ++e) source[e] = target[inv0(e)];
  white = sigma0.cycle_index();
  black = sigma1.cycle_index();
  vertex_count = sigma2.cycle_count();
  white_count = sigma0.cycle_count();
  black_count = sigma1.cycle_count();
}

bool genus_identity(const Permutation& sigma0, const Permutation& sigma1) {
  Permutation sigma2 = sigma1.inverse() * sigma0;
  return sigma0.cycle_count() + sigma1.cycle_count() + sigma2.cycle_count() == sigma0.size();
}

DerivedCycles derived_cycles(const Superpotential& S) {
  if (!genus_identity(S.sigma0, S.sigma1)) throw Error(ErrorKind::Invariant, "genus identity fails");
  return {(S.sigma1.inverse() * S.sigma0).cycles(), (S.sigma0 * S.sigma1).cycles()};
}

namespace {

// Order of the turning angle from `ref` to `v` in (-pi, pi).
// Returns <0, 0, >0 like a comparison of psi(a) and psi(b).
int turn_group(const Vec2q& ref, const Vec2q& v) {
  int c = cross(ref, v).sign();
  if (c > 0) return 2;
  if (c < 0) return 0;
  if ((ref.x() * v.x() + ref.y() * v.y()).sign() > 0) return 1;
  throw Error(ErrorKind::Invariant, "edge continues straight back along itself");
}

bool turn_less(const Vec2q& ref, const Vec2q& a, const Vec2q& b) {
  int ga = turn_group(ref, a), gb = turn_group(ref, b);
  if (ga != gb) return ga < gb;
  return cross(a, b) > Rational(0);
}

using PointKey = std::array<Rational, 2>;

PointKey point_key(const Mat2q& inv, const Vec2q& p) {
  Vec2q f = inv * p;
  return {f.x().frac(), f.y().frac()};
}

}  // namespace

Superpotential build_superpotential(const ZebraPolynomial& poly, const LatticeBasis& aut, const Mat2i& lambda) {
  if (det2(lambda) == 0) throw Error(ErrorKind::Domain, "Lambda is singular");
  Mat2q L = aut.matrix() * lambda.unaryExpr([](std::int64_t v) { return Rational(v); });
  return build_superpotential(poly, extract_edges(poly, covering_box(poly, {L.col(0), L.col(1)}, 3)), aut, lambda);
}

Superpotential build_superpotential(const ZebraPolynomial& poly, const std::vector<EdgeSegment>& segments,
                                    const LatticeBasis& aut, const Mat2i& lambda) {
  if (det2(lambda) == 0) throw Error(ErrorKind::Domain, "Lambda is singular");
  Mat2q lq = lambda.unaryExpr([](std::int64_t v) { return Rational(v); });
  Mat2q L = aut.matrix() * lq;
  const LatticeBasis lb{L.col(0), L.col(1)};
  {
    TilingClasses tc(poly);
    if (!tc.preserves(aut.b1) || !tc.preserves(aut.b2))
      throw Error(ErrorKind::NotInLattice, "Lambda is not contained in Aut(F)");
  }
  if (segments.empty()) throw Error(ErrorKind::PatchTooSmall, "empty patch");
  {
    Vec2q lo = segments[0].source, hi = lo;
    for (const auto& s : segments)
      for (const Vec2q& p : {s.source, s.target})
        for (int k = 0; k < 2; ++k) {
          lo(k) = std::min(lo(k), p(k));
          hi(k) = std::max(hi(k), p(k));
        }
    Box need = covering_box(poly, lb, 2);
    for (int k = 0; k < 2; ++k)
      if (hi(k) - lo(k) < need.hi(k) - need.lo(k))
        throw Error(ErrorKind::PatchTooSmall, "patch does not cover a period of Lambda");
  }
  const Mat2q Linv = inverse2(L);

  // Classes of unfused segments; ids follow key order.
  std::map<SegmentKey, const EdgeSegment*> reps;
  for (const auto& s : segments) reps.emplace(segment_key(Linv, s.midpoint, s.vector), &s);
  std::map<SegmentKey, int> id_of;
  std::vector<const EdgeSegment*> piece;
  for (const auto& [k, s] : reps) {
    id_of.emplace(k, static_cast<int>(piece.size()));
    piece.push_back(s);
  }
  const int n = static_cast<int>(piece.size());

  std::map<PointKey, std::vector<int>> outgoing;
  for (const auto& s : segments) {
    auto& v = outgoing[point_key(Linv, s.source)];
    int id = id_of.at(segment_key(Linv, s.midpoint, s.vector));
    if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
  }

  std::vector<int> s0(n), s1(n);
  std::vector<Vec2q> vec(n);
  for (int e = 0; e < n; ++e) vec[e] = piece[e]->vector;
  for (int e = 0; e < n; ++e) {
    auto it = outgoing.find(point_key(Linv, piece[e]->target));
    if (it == outgoing.end() || it->second.empty())
      throw Error(ErrorKind::PatchTooSmall, "edge without a successor in the patch");
    const auto& cand = it->second;
    int best0 = cand[0], best1 = cand[0];
    for (int f : cand) {
      if (turn_less(vec[e], vec[best0], vec[f])) best0 = f;
      if (turn_less(vec[e], vec[f], vec[best1])) best1 = f;
    }
    s0[e] = best0;
    s1[e] = best1;
  }
  {
    std::vector<int> c0(n, 0), c1(n, 0);
    for (int e = 0; e < n; ++e) {
      ++c0[s0[e]];
      ++c1[s1[e]];
    }
    for (int e = 0; e < n; ++e)
      if (c0[e] != 1 || c1[e] != 1) throw Error(ErrorKind::Invariant, "face successors do not form a permutation");
  }

  // Fuse two-valent vertices: e absorbs f = sigma0(e) = sigma1(e).
  std::vector<bool> alive(n, true), bent(n, false);
  for (;;) {
    int e = -1;
    for (int i = 0; i < n; ++i)
      if (alive[i] && s0[i] == s1[i]) {
        e = i;
        break;
      }
    if (e < 0) break;
    int f = s0[e];
    if (f == e) throw Error(ErrorKind::Invariant, "edge closes on itself after fusion");
    if (!cross(vec[e], vec[f]).is_zero() || bent[f]) bent[e] = true;
    vec[e] += vec[f];
    s0[e] = s0[f];
    s1[e] = s1[f];
    alive[f] = false;
  }

  std::vector<int> newid(n, -1);
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (alive[i]) newid[i] = m++;
  Superpotential S;
  std::vector<int> img0(m), img1(m);
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    img0[newid[i]] = newid[s0[i]];
    img1[newid[i]] = newid[s1[i]];
    S.omega.push_back(vec[i]);
    S.anchors.push_back(point_key(Linv, piece[i]->midpoint));
    if (bent[i]) S.bent.push_back(newid[i]);
  }
  S.sigma0 = Permutation(std::move(img0));
  S.sigma1 = Permutation(std::move(img1));
  S.lattice = lb;
  S.lambda = lambda;
  S.finalize();
  return S;
}

std::optional<std::vector<int>> isomorphism(const Permutation& a0, const Permutation& a1, const Permutation& b0,
                                            const Permutation& b1) {
  const int n = a0.size();
  if (b0.size() != n || a1.size() != n || b1.size() != n) return std::nullopt;
  if (a0.cycle_count() != b0.cycle_count() || a1.cycle_count() != b1.cycle_count()) return std::nullopt;

  // Components of <a0, a1>, each represented by its least element.
  std::vector<int> comp(n, -1), anchors;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    int c = static_cast<int>(anchors.size());
    anchors.push_back(i);
    std::deque<int> q{i};
    comp[i] = c;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : {a0(x), a1(x)})
        if (comp[y] < 0) {
          comp[y] = c;
          q.push_back(y);
        }
    }
  }

  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);

  // Extend phi from anchor -> image over the anchor's component.
  auto propagate = [&](int anchor, int image, std::vector<int>& touched) {
    std::deque<int> q{anchor};
    phi[anchor] = image;
    used[image] = true;
    touched.push_back(anchor);
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      const std::pair<int, int> steps[2] = {{a0(x), b0(phi[x])}, {a1(x), b1(phi[x])}};
      for (auto [y, img] : steps) {
        if (phi[y] >= 0) {
          if (phi[y] != img) return false;
          continue;
        }
        if (used[img]) return false;
        phi[y] = img;
        used[img] = true;
        touched.push_back(y);
        q.push_back(y);
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> solve = [&](std::size_t k) {
    if (k == anchors.size()) return true;
    for (int image = 0; image < n; ++image) {
      if (used[image]) continue;
      std::vector<int> touched;
      bool ok = propagate(anchors[k], image, touched) && solve(k + 1);
      if (ok) return true;
      for (int x : touched) {
        used[phi[x]] = false;
        phi[x] = -1;
      }
    }
    return false;
  };
  if (!solve(0)) return std::nullopt;
  return phi;
}

std::optional<std::vector<int>> isomorphic(const Superpotential& S, const Superpotential& T) {
  return isomorphism(S.sigma0, S.sigma1, T.sigma0, T.sigma1);
}

Permutation deck_action(const Superpotential& S, const Vec2q& tau) {
  if (S.anchors.size() != static_cast<std::size_t>(S.edge_count()))
    throw Error(ErrorKind::Precondition, "superpotential carries no edge anchors");
  Mat2q lq = S.lambda.unaryExpr([](std::int64_t v) { return Rational(v); });
  Vec2q shift = inverse2(lq) * tau;
  std::map<PointKey, int> by_anchor;
  for (int e = 0; e < S.edge_count(); ++e) by_anchor.emplace(S.anchors[e], e);
  std::vector<int> img(S.edge_count());
  for (int e = 0; e < S.edge_count(); ++e) {
    PointKey k = {(S.anchors[e][0] + shift.x()).frac(), (S.anchors[e][1] + shift.y()).frac()};
    auto it = by_anchor.find(k);
    if (it == by_anchor.end() || S.omega[it->second] != S.omega[e])
      throw Error(ErrorKind::NotInLattice, "translation is not in Aut(F)");
    img[e] = it->second;
  }
  return Permutation(std::move(img));
}

ConvexityReport check_convexity(const Superpotential& S) {
  return check_convexity(S.sigma0, S.sigma1, S.omega, S.bent);
}

ConvexityReport check_convexity(const ZebraPolynomial& poly) {
  if (direction_rank(poly) < 2) return {false, {"single boundary direction: unbounded faces"}};
  try {
    LatticeBasis aut = automorphism_lattice(poly);
    return check_convexity(build_superpotential(poly, aut, Mat2i::Identity()));
  } catch (const Error& e) {
    return {false, {e.what()}};
  }
}

}  // namespace zzm
