#pragma once
// Reference polynomials with their face permutations and lattices.

#include <map>
#include <string>
#include <vector>

#include "zzm/arrangement.hpp"
#include "zzm/superpotential.hpp"

namespace instances {

struct Instance {
  std::string name;
  std::string text;
  int edges;
  std::vector<std::vector<int>> sigma0, sigma1;
  // Aut(F) as c1 * v_{j1}, c2 * v_{j2} in the original plane; j1 = 0 if not given.
  int j1 = 0;
  zzm::Rational c1;
  int j2 = 0;
  zzm::Rational c2;

  zzm::LatticeBasis aut() const { return {c1 * zzm::direction_vector(j1), c2 * zzm::direction_vector(j2)}; }
};

inline const std::vector<Instance>& all() {
  using zzm::Rational;
  static const std::vector<Instance> v = {
      {"F2", "z21+z41", 4, {{1, 2, 3, 4}}, {{1, 4, 3, 2}}, 6, Rational(1), 3, Rational(1, 3)},
      {"F3", "z21+z41+z61", 3, {{1, 2, 3}}, {{1, 3, 2}}, 6, Rational(1), 5, Rational(1, 3)},
      {"F4",
       "z21+z31+z41+z61",
       12,
       {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}},
       {{1, 11, 9}, {4, 8, 12}, {7, 2, 6}, {10, 5, 3}},
       6,
       Rational(1),
       3,
       Rational(1, 3)},
      {"F6",
       "z11+z21+z31+z41+z51+z61",
       18,
       {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}, {13, 14, 15}, {16, 17, 18}},
       {{1, 8, 18}, {4, 11, 3}, {7, 14, 6}, {10, 17, 9}, {13, 2, 12}, {16, 5, 15}},
       1,
       Rational(1, 3),
       3,
       Rational(1, 3)},
      {"kagome", "z21+z41+z61+z62", 6, {{1, 4, 5, 3, 2, 6}}, {{1, 2, 5}, {3, 4, 6}}, 0, Rational(0), 0, Rational(0)},
      {"mixed",
       "z21+z31+z41+z61+z31*z42*z61",
       13,
       {{1, 3, 13}, {4, 6, 2}, {7, 10, 11}, {9, 5, 8, 12}},
       {{1, 5, 2}, {4, 3, 11, 12}, {7, 6, 8}, {9, 10, 13}},
       3,
       Rational(1, 3),
       6,
       Rational(1)},
  };
  return v;
}

inline const Instance& get(const std::string& name) {
  for (const auto& i : all())
    if (i.name == name) return i;
  throw std::out_of_range(name);
}

/// Superpotential straight from the reference cycles (no geometry).
inline zzm::Superpotential reference(const Instance& inst) {
  zzm::Superpotential S;
  S.sigma0 = zzm::Permutation::from_cycles(inst.edges, inst.sigma0);
  S.sigma1 = zzm::Permutation::from_cycles(inst.edges, inst.sigma1);
  S.finalize();
  return S;
}

/// Superpotential computed from the polynomial with Lambda = Aut(F); cached.
inline const zzm::Superpotential& built(const std::string& name) {
  static std::map<std::string, zzm::Superpotential> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto p = zzm::parse_polynomial(get(name).text);
  auto S = zzm::build_superpotential(p, zzm::automorphism_lattice(p), zzm::Mat2i::Identity());
  return cache.emplace(name, std::move(S)).first->second;
}

}  // namespace instances
