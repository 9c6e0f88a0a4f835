#pragma once

#include <string>
#include <vector>

#include "zzm/realization.hpp"

namespace zzm {

enum class SceneKind { Tiling, Quiver, Quadrangles, Newton };

struct Style {
  double scale = 40;  // pixels per unit
  double stroke_width = 1;
  std::string black = "#000000";
  std::string white = "#ffffff";
  std::string stroke = "#808080";
  bool labels = false;
};

/// p x q copies of the fundamental domain; p, q >= 1 and p q <= 400.
struct Window {
  int p = 1, q = 1;
};

struct Scene {
  SceneKind kind = SceneKind::Tiling;
  const Superpotential* S = nullptr;
  /// Edge vectors and period lattice; empty omega means S->omega, S->lattice.
  std::vector<Vec2q> omega;
  LatticeBasis lattice;
  /// Map working-frame coordinates to the Euclidean plane. Off for weight
  /// realizations, which are drawn as given.
  bool plane_frame = true;
  std::vector<Quadrangle> quads;  // Quadrangles
  std::vector<Vec2q> points;      // Newton
  std::vector<int> fiber;         // Newton, optional
  Window window;
  Style style;
};

/// SVG 1.1 text. Throws Precondition for an oversized window or a payload
/// that does not fit the kind.
std::string render(const Scene& scene);

/// Vertices of the convex hull, counterclockwise from the lexicographically
/// least point.
std::vector<Vec2q> convex_hull(std::vector<Vec2q> points);

}  // namespace zzm
