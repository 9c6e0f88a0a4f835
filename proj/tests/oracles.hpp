#pragma once
// Independent reference implementations used only by the tests.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "zzm/superpotential.hpp"
#include "zzm/zebra.hpp"

namespace oracle {

/// Per-point evaluation straight from the definition: sum over monomials of
/// the product of floor(2 x . (k v_j)) mod 2.
inline int naive_value(const zzm::ZebraPolynomial& p, const zzm::Vec2q& x) {
  int total = 0;
  for (zzm::Index m = 0; m < p.M.cols(); ++m) {
    int prod = 1;
    for (zzm::Index f = 0; f < p.M.rows(); ++f) {
      if (p.M(f, m) == 0) continue;
      zzm::Vec2i v = p.frequencies[f].rescaled();
      zzm::Rational t = zzm::Rational(2) * (x.x() * v.x() + x.y() * v.y());
      std::int64_t fl = t.floor();
      prod *= static_cast<int>(((fl % 2) + 2) % 2);
    }
    total += prod;
  }
  return total % 2;
}

/// Random polynomial text with small multipliers.
inline std::string random_polynomial(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms), nfac(1, 2), dir(1, 6), mult(1, 2);
  std::string s;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    if (t) s += "+";
    int k = nfac(rng);
    for (int f = 0; f < k; ++f) {
      if (f) s += "*";
      s += "z" + std::to_string(dir(rng)) + std::to_string(mult(rng));
    }
  }
  return s;
}

/// Ryser's formula for the permanent of a small square integer matrix.
inline std::int64_t permanent(const zzm::MatXi& A) {
  const int n = static_cast<int>(A.rows());
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::int64_t prod = 1;
    for (int i = 0; i < n; ++i) {
      std::int64_t row = 0;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) row += A(i, j);
      prod *= row;
    }
    total += (__builtin_popcount(mask) % 2 == n % 2) ? prod : -prod;
  }
  return total;
}

/// White x black count matrix: entry (w, b) = number of edges on both.
inline zzm::MatXi biadjacency(const zzm::Superpotential& S) {
  zzm::MatXi A = zzm::MatXi::Zero(S.white_count, S.black_count);
  for (int e = 0; e < S.edge_count(); ++e) A(S.white[e], S.black[e]) += 1;
  return A;
}

/// Sum of values over every face cycle, both colours.
inline std::vector<std::int64_t> face_sums(const zzm::Superpotential& S, const std::vector<std::int64_t>& nu) {
  std::vector<std::int64_t> out;
  for (const auto* p : {&S.sigma0, &S.sigma1})
    for (const auto& c : p->cycles()) {
      std::int64_t s = 0;
      for (int e : c) s += nu[e];
      out.push_back(s);
    }
  return out;
}

/// Perfect matchings by trying every edge subset.
inline std::vector<std::vector<int>> brute_matchings(const zzm::Superpotential& S) {
  const int n = S.edge_count();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::int64_t> nu(n);
    for (int e = 0; e < n; ++e) nu[e] = (mask >> e) & 1u;
    bool ok = true;
    for (auto s : face_sums(S, nu)) ok = ok && s == 1;
    if (!ok) continue;
    std::vector<int> sup;
    for (int e = 0; e < n; ++e)
      if (nu[e]) sup.push_back(e);
    out.push_back(sup);
  }
  return out;
}

/// Every weight function of exactly degree d, by depth-first assignment with
/// face-sum pruning.
inline std::vector<zzm::VecXi> weight_functions(const zzm::Superpotential& S, std::int64_t d) {
  const int n = S.edge_count();
  const int nf = S.white_count + S.black_count;
  std::vector<std::int64_t> sum(nf, 0), nu(n, 0);
  std::vector<zzm::VecXi> out;
  std::function<void(int)> go = [&](int e) {
    if (e == n) {
      for (auto s : sum)
        if (s != d) return;
      zzm::VecXi v(n);
      for (int i = 0; i < n; ++i) v(i) = nu[i];
      out.push_back(v);
      return;
    }
    int a = S.white[e], b = S.white_count + S.black[e];
    for (std::int64_t k = 0; sum[a] + k <= d && sum[b] + k <= d; ++k) {
      nu[e] = k;
      sum[a] += k;
      sum[b] += k;
      go(e + 1);
      sum[a] -= k;
      sum[b] -= k;
    }
    nu[e] = 0;
  };
  go(0);
  return out;
}

}  // namespace oracle
