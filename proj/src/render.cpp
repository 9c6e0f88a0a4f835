#include "zzm/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "zzm/error.hpp"

namespace zzm {

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Canvas {
  explicit Canvas(const Scene& s) : sc(s) {}
  const Scene& sc;
  std::string body;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;

  // pixel coordinates, y down
  std::pair<double, double> px(const Vec2q& v) {
    double x = v.x().to_double(), y = v.y().to_double();
    if (sc.plane_frame) {
      x *= 2;
      y *= 2 / std::sqrt(3.0);
    }
    x *= sc.style.scale;
    y *= -sc.style.scale;
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
    return {x, y};
  }
  std::string pt(const Vec2q& v) {
    auto [x, y] = px(v);
    return fixed(x) + "," + fixed(y);
  }

  void polygon(const std::string& cls, const std::vector<Vec2q>& pts) {
    std::string s;
    for (const auto& p : pts) s += (s.empty() ? "" : " ") + pt(p);
    s += " " + pt(pts.front());
    body += "<polygon class=\"" + cls + "\" points=\"" + s + "\"/>\n";
  }
  void line(const std::string& cls, const Vec2q& a, const Vec2q& b) {
    auto [x1, y1] = px(a);
    auto [x2, y2] = px(b);
    body += "<line class=\"" + cls + "\" x1=\"" + fixed(x1) + "\" y1=\"" + fixed(y1) + "\" x2=\"" + fixed(x2) +
            "\" y2=\"" + fixed(y2) + "\"/>\n";
  }
  void text(const Vec2q& at, const std::string& s) {
    auto [x, y] = px(at);
    body += "<text x=\"" + fixed(x) + "\" y=\"" + fixed(y) + "\">" + s + "</text>\n";
  }
  void circle(const Vec2q& at) {
    auto [x, y] = px(at);
    body += "<circle cx=\"" + fixed(x) + "\" cy=\"" + fixed(y) + "\" r=\"" + fixed(3 * sc.style.stroke_width) +
            "\"/>\n";
  }

  std::string finish(const std::string& defs) const {
    double m = sc.style.scale / 2;
    double x0 = xmin - m, y0 = ymin - m, w = xmax - xmin + 2 * m, h = ymax - ymin + 2 * m;
    if (!std::isfinite(x0)) x0 = y0 = 0, w = h = 2 * m;
    const auto& st = sc.style;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(w) + "\" height=\"" +
           fixed(h) + "\" viewBox=\"" + fixed(x0) + " " + fixed(y0) + " " + fixed(w) + " " + fixed(h) + "\">\n";
    out += "<defs>\n<style>\n";
    out += "polygon, line { stroke: " + st.stroke + "; stroke-width: " + fixed(st.stroke_width) +
           "; stroke-linejoin: round; }\n";
    out += ".black { fill: " + st.black + "; }\n";
    out += ".white { fill: " + st.white + "; }\n";
    out += ".quad { fill: " + st.white + "; fill-opacity: 0.5; }\n";
    out += ".diagonal { stroke-dasharray: " + fixed(3 * st.stroke_width) + " " + fixed(2 * st.stroke_width) +
           "; }\n";
    out += ".newton { fill: none; }\n";
    out += ".arrow { stroke: #c03030; marker-end: url(#head); }\n";
    out += "circle { fill: " + st.stroke + "; }\n";
    out += "text { font: " + fixed(st.scale / 4) + "px sans-serif; fill: #303030; }\n";
    out += "</style>\n" + defs + "</defs>\n";
    out += body;
    out += "</svg>\n";
    return out;
  }
};

std::vector<Vec2q> offsets(const LatticeBasis& L, const Window& w) {
  std::vector<Vec2q> out;
  for (int i = 0; i < w.p; ++i)
    for (int j = 0; j < w.q; ++j) out.push_back(Rational(i) * L.b1 + Rational(j) * L.b2);
  return out;
}

void draw_faces(Canvas& cv, const Superpotential& S, const std::vector<Vec2q>& omega, const std::vector<Vec2q>& z,
                const Vec2q& shift) {
  for (auto [p, cls] : {std::pair{&S.sigma1, "black"}, std::pair{&S.sigma0, "white"}}) {
    for (const auto& c : p->cycles()) {
      std::vector<Vec2q> pts{z[S.source[c[0]]] + shift};
      for (std::size_t i = 0; i + 1 < c.size(); ++i) pts.push_back(pts.back() + omega[c[i]]);
      cv.polygon(cls, pts);
    }
  }
}

}  // namespace

std::vector<Vec2q> convex_hull(std::vector<Vec2q> pts) {
  auto less = [](const Vec2q& a, const Vec2q& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Vec2q& o, const Vec2q& a, const Vec2q& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Vec2q> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::string render(const Scene& sc) {
  const Window& w = sc.window;
  if (w.p < 1 || w.q < 1 || w.p * w.q > 400)
    throw Error(ErrorKind::Precondition, "window must be p x q with p, q >= 1 and p q <= 400");
  Canvas cv(sc);
  std::string defs;

  if (sc.kind == SceneKind::Newton) {
    if (sc.points.empty()) throw Error(ErrorKind::Precondition, "newton scene has no points");
    if (!sc.fiber.empty() && sc.fiber.size() != sc.points.size())
      throw Error(ErrorKind::Precondition, "one fiber size per point");
    auto hull = convex_hull(sc.points);
    if (hull.size() >= 2) cv.polygon("newton", hull);
    for (std::size_t i = 0; i < sc.points.size(); ++i) {
      cv.circle(sc.points[i]);
      if (!sc.fiber.empty() && (sc.style.labels || sc.fiber[i] > 1))
        cv.text(sc.points[i], std::to_string(sc.fiber[i]));
    }
    return cv.finish(defs);
  }

  if (!sc.S) throw Error(ErrorKind::Precondition, "scene has no superpotential");
  const Superpotential& S = *sc.S;
  const auto& omega = sc.omega.empty() ? S.omega : sc.omega;
  const auto& L = sc.omega.empty() ? S.lattice : sc.lattice;
  if (static_cast<int>(omega.size()) != S.edge_count())
    throw Error(ErrorKind::Precondition, "scene needs one edge vector per edge");
  auto z = lifted_vertices(S, omega);
  auto shifts = offsets(L, w);

  switch (sc.kind) {
    case SceneKind::Tiling:
      for (const auto& sh : shifts) draw_faces(cv, S, omega, z, sh);
      if (sc.style.labels)
        for (const auto& sh : shifts)
          for (int e = 0; e < S.edge_count(); ++e)
            cv.text(z[S.source[e]] + sh + Rational(1, 2) * omega[e], std::to_string(e + 1));
      break;
    case SceneKind::Quiver:
      defs =
          "<marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
          "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c03030\"/></marker>\n";
      for (const auto& sh : shifts) draw_faces(cv, S, omega, z, sh);
      for (const auto& sh : shifts)
        for (int e = 0; e < S.edge_count(); ++e) {
          Vec2q a = z[S.source[e]] + sh;
          cv.line("arrow", a + Rational(1, 8) * omega[e], a + Rational(7, 8) * omega[e]);
          if (sc.style.labels) cv.text(a + Rational(1, 2) * omega[e], std::to_string(e + 1));
        }
      break;
    case SceneKind::Quadrangles:
      if (static_cast<int>(sc.quads.size()) != S.edge_count())
        throw Error(ErrorKind::Precondition, "quadrangle scene needs one quadrangle per edge");
      for (const auto& sh : shifts)
        for (int e = 0; e < S.edge_count(); ++e) {
          const auto& q = sc.quads[e];
          Vec2q s = z[S.source[e]] + sh;
          cv.polygon("quad", {s, s + q.sb, s + q.st, s + q.sw});
          cv.line("diagonal", s, s + q.st);
          cv.line("diagonal", s + q.sb, s + q.sw);
          if (sc.style.labels) cv.text(s + Rational(1, 2) * q.st, std::to_string(e + 1));
        }
      break;
    case SceneKind::Newton:
      break;
  }
  return cv.finish(defs);
}

}  // namespace zzm
