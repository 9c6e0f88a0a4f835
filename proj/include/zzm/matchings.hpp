#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zzm/superpotential.hpp"

namespace zzm {

// Weight functions are integer vectors over the edges. A perfect matching is
// a 0/1 weight function of degree 1.

/// Degree of nu if every sigma0- and sigma1-cycle sums to the same value and
/// all entries are non-negative.
std::optional<std::int64_t> weight_degree(const Superpotential& S, const VecXi& nu);
bool is_perfect_matching(const Superpotential& S, const VecXi& m);

/// Edge ids (0-based, ascending) with m(e) = 1.
std::vector<int> support(const VecXi& m);

/// ZZM_MAX_MATCHINGS or 10^6.
std::int64_t default_matching_cap();

/// All perfect matchings, sorted by their edge-id sets. Throws Limit when
/// there are more than `cap`.
std::vector<VecXi> enumerate_matchings(const Superpotential& S, std::int64_t cap = default_matching_cap());

/// Edges as columns, one matching per column.
MatXi matching_matrix(const std::vector<VecXi>& matchings, int edge_count);

struct Completeness {
  bool complete = false;
  /// Sum of all matchings divided by their number; empty unless complete.
  VecXq theta;
};
Completeness dimer_completeness(const Superpotential& S, const std::vector<VecXi>& matchings);

/// Indices into `matchings` (a multiset of size deg nu) summing to nu.
/// Greedy: always peel the first matching that fits. Throws Invariant when
/// nothing fits.
std::vector<int> decompose_weight(const Superpotential& S, const VecXi& nu, const std::vector<VecXi>& matchings);

struct RelationLattice {
  /// Kernel basis of the matching matrix; columns indexed by matching.
  MatXi basis;
  /// "Xm1*Xm3 - Xm2^2" per basis column, matchings numbered from 1.
  std::vector<std::string> binomials;
};
RelationLattice relation_lattice(const std::vector<VecXi>& matchings, int edge_count);

/// Class index per matching for m ~ m' iff m - m' is an integer combination
/// of vertex vectors. Classes are numbered by first occurrence.
std::vector<int> equivalence_classes(const Superpotential& S, const std::vector<VecXi>& matchings);
bool equivalent(const Superpotential& S, const VecXi& a, const VecXi& b);

/// Rank of the span of the matchings; throws Invariant unless it equals
/// vertex_count + 2 (checked only for dimer complete S).
int weight_rank(const Superpotential& S, const std::vector<VecXi>& matchings);

}  // namespace zzm
