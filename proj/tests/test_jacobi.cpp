#include <algorithm>
#include <functional>

#include "doctest.h"
#include "instances.hpp"
#include "zzm/error.hpp"
#include "zzm/homology_forms.hpp"
#include "zzm/jacobi.hpp"
#include "zzm/linalg.hpp"
#include "zzm/matchings.hpp"

using namespace zzm;

namespace {

VecXi vec(std::initializer_list<std::int64_t> xs) {
  VecXi v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

Monomial3 u(std::int64_t a, std::int64_t b, std::int64_t c) { return {{a, b, c}}; }

MonomialBag bag(std::vector<Monomial3> ms) {
  std::sort(ms.begin(), ms.end());
  return ms;
}

WeightRealization f3_weights() { return {vec({3, 4, 2}), vec({1, 4, 4}), vec({3, 3, 3})}; }
WeightRealization f2_weights() { return {vec({3, 1, 1, 3}), vec({3, 3, 1, 1}), vec({2, 2, 2, 2})}; }

// Paths of length j from vertex a to vertex b, by depth-first search.
std::int64_t count_paths(const Superpotential& S, int a, int b, int j) {
  std::function<std::int64_t(int, int)> go = [&](int v, int left) -> std::int64_t {
    if (left == 0) return v == b ? 1 : 0;
    std::int64_t n = 0;
    for (int e = 0; e < S.edge_count(); ++e)
      if (S.source[e] == v) n += go(S.target[e], left - 1);
    return n;
  };
  return go(a, j);
}

// s_j with (sigma(e), e) = 1 - m(sigma(e)).
MatXi varsigma(const Permutation& sigma, const VecXi& m) {
  MatXi s = MatXi::Zero(sigma.size(), sigma.size());
  for (int e = 0; e < sigma.size(); ++e) s(sigma(e), e) = 1 - m(sigma(e));
  return s;
}

}  // namespace

TEST_CASE("monomial text") {
  CHECK(to_string(u(3, 1, 2)) == "u1^3*u2*u3^2");
  CHECK(to_string(u(0, 0, 0)) == "1");
  CHECK(to_string(bag({u(1, 1, 0), u(2, 2, 0), u(1, 1, 0)})) == "2*u1*u2 + u1^2*u2^2");
  CHECK(to_string(MonomialBag{}) == "0");
}

TEST_CASE("astar on the reference tori") {
  auto S3 = instances::reference(instances::get("F3"));
  auto a3 = astar_matrix(S3, f3_weights());
  REQUIRE(a3.matrix.size == 1);
  CHECK(a3.matrix.at(0, 0) == bag({u(3, 1, 3), u(4, 4, 3), u(2, 4, 3)}));

  auto S2 = instances::reference(instances::get("F2"));
  auto a2 = astar_matrix(S2, f2_weights());
  REQUIRE(a2.matrix.size == 2);
  MonomialBag one = bag({u(3, 1, 2), u(1, 3, 2)}), other = bag({u(1, 1, 2), u(3, 3, 2)});
  CHECK(a2.matrix.at(0, 0).empty());
  CHECK(a2.matrix.at(1, 1).empty());
  bool direct = a2.matrix.at(0, 1) == one && a2.matrix.at(1, 0) == other;
  bool swapped = a2.matrix.at(1, 0) == one && a2.matrix.at(0, 1) == other;
  CHECK((direct || swapped));

  // every monomial divisible by u1 u2 u3
  for (const auto& entry : a2.matrix.entries)
    for (const auto& m : entry) CHECK(std::min({m.exp[0], m.exp[1], m.exp[2]}) >= 1);

  auto zero = f3_weights();
  zero.nu1(0) = 0;
  CHECK_THROWS_AS(astar_matrix(S3, zero), Error);
}

TEST_CASE("summands add up") {
  auto S2 = instances::reference(instances::get("F2"));
  auto a = astar_matrix(S2, f2_weights());
  MonomialMatrix sum = MonomialMatrix::zero(2);
  for (const auto& x : a.phi) sum = sum + as_matrix(x, 2);
  CHECK(sum == a.matrix);
  CHECK(phi_of_path(a, {0, 1}).monomial_count() == 1);
  CHECK(phi_of_path(a, {0, 2}).monomial_count() == 0);  // does not compose
}

TEST_CASE("jacobi relations") {
  auto S3 = instances::reference(instances::get("F3"));
  auto p = jacobi_paths(S3, 0);
  CHECK(p.white == std::vector<int>{1, 2});
  CHECK(p.black == std::vector<int>{2, 1});
  auto a3 = astar_matrix(S3, f3_weights());
  CHECK(phi_of_path(a3, p.white).at(0, 0) == MonomialBag{u(6, 8, 6)});
  CHECK(phi_of_path(a3, p.black).at(0, 0) == MonomialBag{u(6, 8, 6)});
  CHECK(check_jacobi_relations(S3, f3_weights()).ok);

  auto S2 = instances::reference(instances::get("F2"));
  auto a2 = astar_matrix(S2, f2_weights());
  for (int e = 0; e < 4; ++e) {
    auto q = jacobi_paths(S2, e);
    auto w = phi_of_path(a2, q.white);
    REQUIRE(w.at(S2.target[e], S2.source[e]).size() == 1);
    const auto& m = w.at(S2.target[e], S2.source[e])[0];
    CHECK(m.exp[2] == 6);  // deg nu3 minus nu3(e)
    CHECK(w == phi_of_path(a2, q.black));
  }
  CHECK(check_jacobi_relations(S2, f2_weights()).ok);

  for (const char* name : {"F4", "F6", "mixed"}) {
    CAPTURE(name);
    auto& S = instances::built(name);
    auto wr = search_weight_realization(S, enumerate_matchings(S));
    REQUIRE(wr.has_value());
    auto rep = check_jacobi_relations(S, *wr);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
  }

  // a weight that is not a weight function breaks some relation; on the
  // one-face tori both paths always cover the same edges, so use F4
  auto& S4 = instances::built("F4");
  auto bad = *search_weight_realization(S4, enumerate_matchings(S4));
  bad.nu1(0) += 1;
  CHECK_FALSE(check_jacobi_relations(S4, bad).ok);
}

TEST_CASE("path series") {
  auto S3 = instances::reference(instances::get("F3"));
  auto ps = path_series(S3, f3_weights(), 2);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0] == MonomialMatrix::identity(1));
  CHECK(ps[2].monomial_count() == 9);

  auto S2 = instances::reference(instances::get("F2"));
  auto p2 = path_series(S2, f2_weights(), 2);
  CHECK(p2[2].at(0, 0).size() == 4);
  CHECK(p2[2].at(1, 1).size() == 4);

  for (const char* name : {"F2", "F3", "F4", "F6", "mixed"}) {
    CAPTURE(name);
    auto& S = instances::built(name);
    auto wr = search_weight_realization(S, enumerate_matchings(S));
    REQUIRE(wr.has_value());
    auto series = path_series(S, *wr, 4);
    for (int j = 0; j <= 4; ++j)
      for (int a = 0; a < S.vertex_count; ++a)
        for (int b = 0; b < S.vertex_count; ++b)
          CHECK(static_cast<std::int64_t>(series[j].at(a, b).size()) == count_paths(S, a, b, j));
  }
  CHECK_THROWS_AS(path_series(S3, f3_weights(), 5, 100), Error);
}

TEST_CASE("master binomials") {
  auto S3 = instances::reference(instances::get("F3"));
  auto b3 = master_binomials(S3);
  CHECK(b3[0].white == std::vector<int>{1, 2});
  CHECK(b3[0].black == std::vector<int>{2, 1});
  CHECK(b3[0].vanishes());
  CHECK(b3[0].str() == "X2*X3 - X3*X2");
  auto b2 = master_binomials(instances::reference(instances::get("F2")));
  CHECK(b2[0].str() == "X2*X3*X4 - X4*X3*X2");
  CHECK(b2[0].vanishes());
  auto bk = master_binomials(instances::reference(instances::get("kagome")));
  CHECK(bk[0].str() == "X4*X5*X3*X2*X6 - X2*X5");
  CHECK_FALSE(bk[0].vanishes());
  CHECK(potential_polynomial(S3) == "X1*X2*X3 - X1*X3*X2");
}

TEST_CASE("tau matrices and duality pairing") {
  for (const auto& inst : instances::all()) {
    CAPTURE(inst.name);
    auto& S = instances::built(inst.name);
    const int n = S.edge_count();
    for (const auto& m : enumerate_matchings(S)) {
      auto t = tau_matrices(S, m);
      MatXi I = MatXi::Identity(n, n);
      MatXi s0 = varsigma(S.sigma0, m), s1 = varsigma(S.sigma1, m);
      CHECK(t.tau0 * (I - s0) == I + s0);
      CHECK(t.tau1 * (I - s1) == I + s1);
      CHECK((t.tau0.array() >= 0).all());
      CHECK(exact_determinant(to_rational(t.tau1)) == Rational(1));
      for (const auto& m2 : enumerate_matchings(S)) CHECK(duality_pairing(t.tau0, m, m2) >= 0);
    }
  }
  auto S3 = instances::reference(instances::get("F3"));
  auto t3 = tau_matrices(S3, vec({1, 0, 0}));
  MatXi rho0(3, 3);
  rho0 << 1, 0, 0, 1, 1, 0, 1, 1, 1;
  CHECK(t3.tau0 == 2 * rho0 - MatXi::Identity(3, 3));
  CHECK(duality_pairing(t3.tau0, vec({1, 0, 0}), vec({0, 1, 0})) == 2);
}

TEST_CASE("Q aggregates") {
  auto S3 = instances::reference(instances::get("F3"));
  auto ms = enumerate_matchings(S3);
  auto q = qbw_aggregates(S3, f3_weights(), ms[0]);
  CHECK(Vec2q(q.qw - q.qb) == Vec2q(Rational(2, 3), Rational(0)));
  auto z = qbw_aggregates(S3, f3_weights(), VecXi::Zero(3));
  CHECK(z.qb == Vec2q(Rational(0), Rational(0)));
  CHECK(z.qw == Vec2q(Rational(0), Rational(0)));

  for (const char* name : {"F2", "F3", "F4", "F6", "mixed"}) {
    CAPTURE(name);
    auto& S = instances::built(name);
    auto mm = enumerate_matchings(S);
    auto wr = search_weight_realization(S, mm);
    REQUIRE(wr.has_value());
    auto om = realization_omega(*wr);
    auto th = realization_theta(S, *wr);
    for (const auto& m : {mm.front(), mm.back()}) {
      auto rho = rho_matrices(S, m);
      auto f = poisson_forms(rho);
      for (const auto& mp : mm) {
        auto agg = qbw_aggregates(S, *wr, mp);
        VecXq d = th;
        for (Index e = 0; e < d.size(); ++e) d(e) -= Rational(mp(e));
        CHECK(Rational(2) * agg.qb == evaluate_form(f.black, d, om));
        CHECK(Rational(2) * agg.qw == evaluate_form(f.white, d, om));
        CHECK(Vec2q(agg.qw - agg.qb) == newton_point(S, *wr, m, mp));
      }
    }
  }
}

TEST_CASE("equivalent weights give conjugate matrices") {
  for (const char* name : {"F2", "F4", "mixed"}) {
    CAPTURE(name);
    auto& S = instances::built(name);
    auto mm = enumerate_matchings(S);
    auto wr = search_weight_realization(S, mm);
    REQUIRE(wr.has_value());
    WeightRealization big{3 * wr->nu1, 3 * wr->nu2, 3 * wr->nu3};
    auto alpha = vertex_matrix(S);
    WeightRealization moved{big.nu1 + alpha.col(0), big.nu2 - alpha.col(S.vertex_count - 1),
                            big.nu3 + alpha.col(0) + alpha.col(S.vertex_count - 1)};
    auto r = diagonal_conjugator(S, big, moved);
    REQUIRE(r.has_value());
    auto A = astar_matrix(S, big), B = astar_matrix(S, moved);
    for (int e = 0; e < S.edge_count(); ++e) {
      const auto& x = A.phi[e];
      const auto& y = B.phi[e];
      for (int j = 0; j < 3; ++j) CHECK(y.mono.exp[j] == x.mono.exp[j] - (*r)(x.s, j) + (*r)(x.t, j));
    }
    // not equivalent: add a matching to nu1 only
    WeightRealization off{big.nu1 + mm[0], big.nu2, big.nu3};
    if (!equivalent(S, mm[0], VecXi::Zero(S.edge_count()))) CHECK_FALSE(diagonal_conjugator(S, big, off).has_value());
  }
}
