#pragma once

#include <string>
#include <vector>

#include "zzm/types.hpp"

namespace zzm {

/// Permutation of {0..n-1}. Composition reads right to left: (f*g)(e) = f(g(e)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Cycles are given 1-based; missing points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int e) const { return image_[e]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& f, const Permutation& g);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }

  /// All cycles (fixed points included), 0-based, each starting at its least
  /// element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const { return static_cast<int>(cycles().size()); }
  /// e -> index into cycles().
  std::vector<int> cycle_index() const;
  /// "(1,2,3)(4,5)" with 1-based labels; fixed points shown as "(k)".
  std::string str() const;

  /// Column e holds a single 1 in row image(e).
  MatXi matrix() const;

 private:
  std::vector<int> image_;
};

}  // namespace zzm
