#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "zzm/types.hpp"

namespace zzm {

/// Rescaled integer directions v~1..v~6 (index 0..5).
const std::array<Vec2i, 6>& base_directions();

/// Zebra frequency k * v~_j.
struct Frequency {
  int direction = 1;  // 1..6
  std::int64_t multiplier = 1;

  Vec2i rescaled() const { return multiplier * base_directions()[direction - 1]; }
  friend bool operator==(const Frequency&, const Frequency&) = default;
};

/// Polynomial in zebras over F2.
///
/// Column i of V is frequency i; column j of M marks the factors of monomial j.
/// Columns of V follow first appearance in the source text, unused frequencies
/// dropped.
struct ZebraPolynomial {
  MatXi V;  // 2 x n
  MatXi M;  // n x m, entries 0/1
  std::vector<Frequency> frequencies;
  std::string source_text;

  Index frequency_count() const { return V.cols(); }
  Index monomial_count() const { return M.cols(); }

  /// Normalized text, e.g. "z21+z31*z42".
  std::string str() const;
};

ZebraPolynomial parse_polynomial(std::string_view text);

/// Value of the polynomial given the zebra values (one 0/1 entry per frequency).
int combine_zebras(const ZebraPolynomial& poly, const VecXi& zebra_bits);

/// F(X/scale) for each row of the integer k x 2 matrix X. 1 = black.
VecXi evaluate(const ZebraPolynomial& poly, const MatXi& X, std::int64_t scale);

/// F at a single rational point.
int evaluate(const ZebraPolynomial& poly, const Vec2q& x);

}  // namespace zzm
