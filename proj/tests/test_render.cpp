#include <regex>

#include "doctest.h"
#include "instances.hpp"
#include "zzm/error.hpp"
#include "zzm/matchings.hpp"
#include "zzm/render.hpp"

using namespace zzm;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::vector<std::string> point_lists(const std::string& svg, const std::string& cls) {
  std::vector<std::string> out;
  std::regex re("<polygon class=\"" + cls + "\" points=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
    out.push_back((*it)[1]);
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t a = 0;
  while (a < s.size()) {
    auto b = s.find(' ', a);
    if (b == std::string::npos) b = s.size();
    out.push_back(s.substr(a, b - a));
    a = b + 1;
  }
  return out;
}

Vec2q q2(Rational x, Rational y) { return Vec2q(x, y); }

}  // namespace

TEST_CASE("tiling face counts") {
  Scene sc;
  sc.S = &instances::built("F2");
  sc.window = {3, 3};
  auto svg = render(sc);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(point_lists(svg, "black").size() == 9);
  CHECK(point_lists(svg, "white").size() == 9);
  for (const auto& pts : point_lists(svg, "black")) {
    auto p = split(pts);
    CHECK(p.size() == 5);  // quadrilateral, closed
    CHECK(p.front() == p.back());
  }

  sc.S = &instances::built("F3");
  sc.window = {1, 1};
  svg = render(sc);
  auto b = point_lists(svg, "black"), w = point_lists(svg, "white");
  REQUIRE(b.size() == 1);
  REQUIRE(w.size() == 1);
  CHECK(split(b[0]).size() == 4);
  CHECK(split(w[0]).size() == 4);
}

TEST_CASE("window bounds") {
  Scene sc;
  sc.S = &instances::built("F3");
  sc.window = {20, 20};
  CHECK_NOTHROW(render(sc));
  sc.window = {21, 20};
  CHECK_THROWS_AS(render(sc), Error);
  sc.window = {0, 3};
  CHECK_THROWS_AS(render(sc), Error);
  Scene empty;
  CHECK_THROWS_AS(render(empty), Error);
}

TEST_CASE("deterministic") {
  for (auto kind : {SceneKind::Tiling, SceneKind::Quiver}) {
    Scene sc;
    sc.kind = kind;
    sc.S = &instances::built("mixed");
    sc.window = {2, 2};
    sc.style.labels = true;
    CHECK(render(sc) == render(sc));
  }
}

TEST_CASE("quiver arrows") {
  Scene sc;
  sc.kind = SceneKind::Quiver;
  sc.S = &instances::built("F4");
  auto svg = render(sc);
  CHECK(svg.find("<marker") != std::string::npos);
  CHECK(count(svg, "class=\"arrow\"") == 12);
}

TEST_CASE("quadrangles with dashed diagonals") {
  auto& S = instances::built("F3");
  auto wr = search_weight_realization(S, enumerate_matchings(S));
  REQUIRE(wr.has_value());
  Scene sc;
  sc.kind = SceneKind::Quadrangles;
  sc.S = &S;
  sc.omega = realization_omega(*wr);
  auto th = realization_theta(S, *wr);
  sc.quads = quadrangles(S, sc.omega, th, th);
  sc.lattice = realization_lattice(S, sc.omega);
  sc.plane_frame = false;
  sc.window = {2, 1};
  auto svg = render(sc);
  CHECK(point_lists(svg, "quad").size() == 6);
  CHECK(count(svg, "stroke-dasharray") >= 1);
  CHECK(count(svg, "class=\"diagonal\"") == 12);

  sc.quads.clear();
  CHECK_THROWS_AS(render(sc), Error);
}

TEST_CASE("newton polygon") {
  Scene sc;
  sc.kind = SceneKind::Newton;
  sc.points = {q2(Rational(2, 3), 0), q2(Rational(-1, 3), 1), q2(Rational(-1, 3), -1)};
  sc.fiber = {1, 1, 1};
  sc.plane_frame = false;
  auto svg = render(sc);
  auto poly = point_lists(svg, "newton");
  REQUIRE(poly.size() == 1);
  CHECK(split(poly[0]).size() == 4);
  CHECK(count(svg, "<circle") == 3);
  // y is flipped
  CHECK(svg.find("26.666667,0.000000") != std::string::npos);
  CHECK(svg.find("-13.333333,-40.000000") != std::string::npos);
}

TEST_CASE("convex hull") {
  auto h = convex_hull({q2(0, 0), q2(2, 0), q2(1, 1), q2(2, 2), q2(0, 2), q2(1, 0), q2(0, 0)});
  REQUIRE(h.size() == 4);
  CHECK(h[0] == q2(0, 0));
  CHECK(h[1] == q2(2, 0));
  CHECK(h[2] == q2(2, 2));
  CHECK(h[3] == q2(0, 2));
  CHECK(convex_hull({q2(1, 1)}).size() == 1);
}
