#include "zzm/realization.hpp"

#include <deque>

#include "zzm/error.hpp"
#include "zzm/homology_forms.hpp"
#include "zzm/linalg.hpp"
#include "zzm/matchings.hpp"

namespace zzm {

namespace {

const Rational kHalf(1, 2);

std::string edge_name(int e) { return "edge " + std::to_string(e + 1); }

Vec2q zero2() { return Vec2q(Rational(0), Rational(0)); }

// theta-combination of the midpoints of cycle c rotated to start at c[k],
// relative to the source of c[k].
Vec2q marked_offset(const std::vector<int>& c, std::size_t k, const std::vector<Vec2q>& omega, const VecXq& theta) {
  Vec2q partial = zero2(), out = zero2();
  for (std::size_t h = 0; h < c.size(); ++h) {
    int e = c[(k + h) % c.size()];
    out += theta(e) * (partial + kHalf * omega[e]);
    partial += omega[e];
  }
  return out;
}

void finish(Quadrangle& q, const Vec2q& om) {
  q.st = om;
  q.qt = kHalf * om;
  q.qb = q.sb - q.qt;
  q.qw = q.sw - q.qt;
}

}  // namespace

std::vector<Vec2q> realization_omega(const WeightRealization& wr) {
  std::vector<Vec2q> om;
  for (Index e = 0; e < wr.nu3.size(); ++e)
    om.emplace_back(Rational(wr.nu1(e) - wr.nu3(e)), Rational(wr.nu2(e) - wr.nu3(e)));
  return om;
}

VecXq realization_theta(const Superpotential& S, const WeightRealization& wr) {
  auto d = weight_degree(S, wr.nu3);
  if (!d || *d <= 0) throw Error(ErrorKind::Precondition, "nu3 is not a weight function of positive degree");
  VecXq th(wr.nu3.size());
  for (Index e = 0; e < th.size(); ++e) th(e) = Rational(wr.nu3(e), *d);
  return th;
}

ValidationReport validate_weight_realization(const Superpotential& S, const WeightRealization& wr) {
  ValidationReport r;
  auto fail = [&](std::string s) {
    r.valid = false;
    r.failures.push_back(std::move(s));
  };
  const int n = S.edge_count();
  const VecXi* nus[3] = {&wr.nu1, &wr.nu2, &wr.nu3};
  for (int j = 0; j < 3; ++j)
    if (nus[j]->size() != n) fail("nu" + std::to_string(j + 1) + " has the wrong length");
  if (!r.valid) return r;

  std::optional<std::int64_t> deg[3];
  for (int j = 0; j < 3; ++j) {
    const std::string name = "nu" + std::to_string(j + 1);
    for (int e = 0; e < n; ++e)
      if ((*nus[j])(e) <= 0) fail(name + " is not positive on " + edge_name(e));
    deg[j] = weight_degree(S, *nus[j]);
    if (!deg[j] && (nus[j]->array() >= 0).all()) fail(name + " does not have equal face sums");
  }
  if (!r.valid) return r;
  if (*deg[0] != *deg[2] || *deg[1] != *deg[2])
    fail("faces do not close: degrees " + std::to_string(*deg[0]) + ", " + std::to_string(*deg[1]) + ", " +
         std::to_string(*deg[2]));
  if (!r.valid) return r;

  auto om = realization_omega(wr);
  auto faces = check_convexity(S.sigma0, S.sigma1, om);
  for (auto& d : faces.diagnostics) fail(d);
  if (!r.valid) return r;

  auto th = realization_theta(S, wr);
  auto qs = quadrangles(S, om, th, th);
  for (int e = 0; e < n; ++e)
    if (!strictly_convex(qs[e])) fail("quadrangle of " + edge_name(e) + " is not strictly convex");
  return r;
}

std::vector<Quadrangle> quadrangles(const Superpotential& S, const std::vector<Vec2q>& omega,
                                    const VecXq& theta_black, const VecXq& theta_white) {
  std::vector<Quadrangle> qs(S.edge_count());
  for (const auto& c : S.sigma1.cycles())
    for (std::size_t k = 0; k < c.size(); ++k) qs[c[k]].sb = marked_offset(c, k, omega, theta_black);
  for (const auto& c : S.sigma0.cycles())
    for (std::size_t k = 0; k < c.size(); ++k) qs[c[k]].sw = marked_offset(c, k, omega, theta_white);
  for (int e = 0; e < S.edge_count(); ++e) finish(qs[e], omega[e]);
  return qs;
}

std::vector<Quadrangle> quadrangles(const Superpotential& S, const WeightRealization& wr, const VecXi& m) {
  auto v = validate_weight_realization(S, wr);
  if (!v.valid) throw Error(ErrorKind::Precondition, "invalid weight realization: " + v.failures.front());
  const int n = S.edge_count();
  auto om = realization_omega(wr);
  auto th = realization_theta(S, wr);
  auto rho = rho_matrices(S, m);

  MatXq Om(n, 2);
  for (int e = 0; e < n; ++e) Om.row(e) = om[e].transpose();
  // row e: theta^t diag(beta_face(e)) (-1/2 I + rho) plus I - rho
  auto offsets = [&](const MatXi& rhoj, const std::vector<int>& face) {
    MatXq R = to_rational(rhoj), I = MatXq::Identity(n, n);
    MatXq H = R - kHalf * I;
    MatXq M = I - R;
    for (int e = 0; e < n; ++e)
      for (int i = 0; i < n; ++i)
        if (face[i] == face[e]) M.row(e) += th(i) * H.row(i);
    return MatXq(M * Om);
  };
  MatXq sb = offsets(rho.rho1, S.black), sw = offsets(rho.rho0, S.white);
  std::vector<Quadrangle> qs(n);
  for (int e = 0; e < n; ++e) {
    qs[e].sb = sb.row(e).transpose();
    qs[e].sw = sw.row(e).transpose();
    finish(qs[e], om[e]);
  }
  return qs;
}

std::array<VecXq, 2> barycentric_theta(const Superpotential& S) {
  std::array<VecXq, 2> th{VecXq(S.edge_count()), VecXq(S.edge_count())};
  for (int k = 0; k < 2; ++k) {
    const Permutation& p = k == 0 ? S.sigma1 : S.sigma0;
    for (const auto& c : p.cycles())
      for (int e : c) th[k](e) = Rational(1, static_cast<std::int64_t>(c.size()));
  }
  return th;
}

bool strictly_convex(const Quadrangle& q) {
  const Vec2q p[4] = {zero2(), q.sb, q.st, q.sw};
  for (int i = 0; i < 4; ++i) {
    Vec2q a = p[(i + 1) % 4] - p[i], b = p[(i + 2) % 4] - p[(i + 1) % 4];
    if (cross(a, b) <= Rational(0)) return false;
  }
  return true;
}

Rational area(const Quadrangle& q) { return abs(kHalf * cross(q.st, Vec2q(q.sw - q.sb))); }

std::vector<std::string> marked_point_mismatches(const Superpotential& S, const std::vector<Vec2q>& omega,
                                                 const std::vector<Quadrangle>& quads) {
  std::vector<std::string> out;
  auto scan = [&](const Permutation& p, bool black) {
    for (const auto& c : p.cycles()) {
      Vec2q partial = zero2(), first = zero2();
      for (std::size_t k = 0; k < c.size(); ++k) {
        Vec2q here = partial + (black ? quads[c[k]].sb : quads[c[k]].sw);
        if (k == 0) {
          first = here;
        } else if (here != first) {
          out.push_back(std::string(black ? "black" : "white") + " face of " + edge_name(c[0]) + " disagrees at " +
                        edge_name(c[k]));
          break;
        }
        partial += omega[c[k]];
      }
    }
  };
  scan(S.sigma1, true);
  scan(S.sigma0, false);
  return out;
}

LatticeBasis realization_lattice(const Superpotential& S, const std::vector<Vec2q>& omega_F,
                                 const LatticeBasis& lattice_F, const std::vector<Vec2q>& omega) {
  const int n = S.edge_count(), V = S.vertex_count;
  MatXi A = vertex_matrix(S);
  auto big = [&](const std::vector<Vec2q>& om) {
    MatXq M(n, V + 1);
    for (int e = 0; e < n; ++e) {
      M(e, 0) = om[e].x();
      M(e, 1) = om[e].y();
      for (int v = 1; v < V; ++v) M(e, v + 1) = Rational(A(e, v));
    }
    return M;
  };
  MatXq F = big(omega_F), W = big(omega);
  if (exact_rank(F) != V + 1 || exact_rank(W) != V + 1)
    throw Error(ErrorKind::Precondition, "degenerate realization: [omega | A] lacks full column rank");
  auto G = exact_solve(F, W);
  if (!G) throw Error(ErrorKind::Invariant, "realizations are not related by a linear change of columns");
  Mat2q g = G->topLeftCorner(2, 2);
  LatticeBasis out{g.transpose() * lattice_F.b1, g.transpose() * lattice_F.b2};
  if (det2(out.matrix()).is_zero()) throw Error(ErrorKind::Precondition, "degenerate realization lattice");
  return out;
}

LatticeBasis realization_lattice(const Superpotential& S, const std::vector<Vec2q>& omega) {
  return realization_lattice(S, S.omega, S.lattice, omega);
}

std::vector<Vec2q> lifted_vertices(const Superpotential& S, const std::vector<Vec2q>& omega) {
  std::vector<Vec2q> z(S.vertex_count, zero2());
  std::vector<bool> seen(S.vertex_count, false);
  std::vector<std::vector<int>> at(S.vertex_count);
  for (int e = 0; e < S.edge_count(); ++e) {
    at[S.source[e]].push_back(e);
    at[S.target[e]].push_back(e);
  }
  std::deque<int> queue;
  if (S.vertex_count > 0) {
    seen[0] = true;
    queue.push_back(0);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : at[v]) {
      int w = S.source[e] == v ? S.target[e] : S.source[e];
      if (seen[w]) continue;
      seen[w] = true;
      z[w] = S.source[e] == v ? Vec2q(z[v] + omega[e]) : Vec2q(z[v] - omega[e]);
      queue.push_back(w);
    }
  }
  for (bool s : seen)
    if (!s) throw Error(ErrorKind::Invariant, "quiver is not connected");
  return z;
}

Vec2q newton_point(const Superpotential& S, const WeightRealization& wr, const VecXi& m, const VecXi& m_prime) {
  auto rho = rho_matrices(S, m);
  auto th = realization_theta(S, wr);
  VecXq d = th;
  for (Index e = 0; e < d.size(); ++e) d(e) -= Rational(m_prime(e));
  return evaluate_form(MatXi(rho.rho0 - rho.rho1), d, realization_omega(wr));
}

NewtonEmbedding newton_embedding(const Superpotential& S, const WeightRealization& wr,
                                 const std::vector<VecXi>& matchings) {
  if (matchings.empty()) throw Error(ErrorKind::Precondition, "no perfect matchings");
  NewtonEmbedding ne;
  ne.class_of = equivalence_classes(S, matchings);
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    Vec2q p = newton_point(S, wr, matchings[0], matchings[i]);
    int c = ne.class_of[i];
    if (c == static_cast<int>(ne.points.size())) {
      for (const auto& q : ne.points)
        if (q == p) throw Error(ErrorKind::Invariant, "two classes share a Newton point");
      ne.points.push_back(p);
      ne.fiber.push_back(0);
      ne.representative.push_back(static_cast<int>(i));
    } else if (ne.points[c] != p) {
      throw Error(ErrorKind::Invariant, "Newton point is not constant on a class");
    }
    ++ne.fiber[c];
  }
  return ne;
}

int affine_dimension(const std::vector<Vec2q>& points) {
  if (points.empty()) return -1;
  int dim = 0;
  Vec2q dir = zero2();
  for (const auto& p : points) {
    Vec2q d = p - points[0];
    if (d == zero2()) continue;
    if (dim == 0) {
      dir = d;
      dim = 1;
    } else if (!cross(dir, d).is_zero()) {
      return 2;
    }
  }
  return dim;
}

Deformation deform(const Superpotential& S, const WeightRealization& wr,
                   const std::array<std::array<VecXi, 2>, 3>& nu_prime, std::int64_t N) {
  if (N < 1) throw Error(ErrorKind::Precondition, "N must be positive");
  for (int j = 0; j < 3; ++j) {
    auto a = weight_degree(S, nu_prime[j][0]), b = weight_degree(S, nu_prime[j][1]);
    if (!a || !b || *a != *b)
      throw Error(ErrorKind::Precondition, "deformation pair " + std::to_string(j + 1) + " has unequal degrees");
  }
  const std::int64_t limit = N << 16;
  for (std::int64_t k = N; k <= limit; k *= 2) {
    Deformation d{{k * wr.nu1 + nu_prime[0][0] - nu_prime[0][1], k * wr.nu2 + nu_prime[1][0] - nu_prime[1][1],
                   k * wr.nu3 + nu_prime[2][0] - nu_prime[2][1]},
                  k};
    if (validate_weight_realization(S, d.wr).valid) return d;
  }
  throw Error(ErrorKind::Limit, "no valid deformation with N <= " + std::to_string(limit));
}

namespace {

// nu_j = omega_j + N nu, nu3 = N nu with N the least making everything positive.
std::optional<WeightRealization> lift(const Superpotential& S, const MatXi& om, const VecXi& nu) {
  std::int64_t N = 1;
  for (Index e = 0; e < nu.size(); ++e) {
    if (nu(e) <= 0) return std::nullopt;
    for (int j = 0; j < 2; ++j)
      if (om(e, j) + N * nu(e) <= 0) N = checked::floor_div(-om(e, j), nu(e)) + 1;
  }
  WeightRealization wr{VecXi(om.col(0) + N * nu), VecXi(om.col(1) + N * nu), VecXi(N * nu)};
  if (validate_weight_realization(S, wr).valid) return wr;
  return std::nullopt;
}

// Advance c through {0..hi}^k (or {lo..hi}) lexicographically; false at the end.
bool next_coefficients(std::vector<int>& c, int lo, int hi) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] < hi) {
      ++c[i];
      return true;
    }
    c[i] = lo;
  }
  return false;
}

VecXi combine(const std::vector<VecXi>& ms, const int* c) {
  VecXi v = VecXi::Zero(ms[0].size());
  for (std::size_t i = 0; i < ms.size(); ++i) v += c[i] * ms[i];
  return v;
}

}  // namespace

std::optional<WeightRealization> search_weight_realization(const Superpotential& S,
                                                           const std::vector<VecXi>& matchings,
                                                           const SearchOptions& options) {
  if (matchings.empty() || static_cast<int>(S.omega.size()) != S.edge_count()) return std::nullopt;
  const int n = S.edge_count();
  const std::size_t M = matchings.size();
  std::int64_t budget = options.max_candidates;

  MatXq omq(n, 2);
  for (int e = 0; e < n; ++e) omq.row(e) = S.omega[e].transpose();
  const std::int64_t c = common_denominator(omq);
  MatXi om(n, 2);
  for (int e = 0; e < n; ++e)
    for (int j = 0; j < 2; ++j) om(e, j) = (omq(e, j) * Rational(c)).num();

  // the zebra's own shape with marks from sums of matchings
  std::vector<int> coeff(M, 1);
  do {
    if (budget-- <= 0) return std::nullopt;
    if (auto wr = lift(S, om, combine(matchings, coeff.data()))) return wr;
  } while (next_coefficients(coeff, 1, options.max_coefficient));

  // anything at all
  std::vector<int> all(3 * M, 0);
  while (next_coefficients(all, 0, options.max_coefficient)) {
    if (budget-- <= 0) return std::nullopt;
    std::int64_t d[3] = {0, 0, 0};
    for (int j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < M; ++i) d[j] += all[j * M + i];
    if (d[0] != d[2] || d[1] != d[2]) continue;
    WeightRealization wr{combine(matchings, all.data()), combine(matchings, all.data() + M),
                         combine(matchings, all.data() + 2 * M)};
    if ((wr.nu1.array() > 0).all() && (wr.nu2.array() > 0).all() && (wr.nu3.array() > 0).all() &&
        validate_weight_realization(S, wr).valid)
      return wr;
  }
  return std::nullopt;
}

}  // namespace zzm
