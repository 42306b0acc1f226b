#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "pierce/config_space.hpp"
#include "pierce/errors.hpp"
#include "pierce/family.hpp"

namespace pierce {

struct RenderOptions {
  double pad = 0.12;    // margin, as a fraction of the world span
  double width = 720;   // output pixel width
};

namespace detail {

inline const char* kPalette[12] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};

inline std::string fnum(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// keeps the side of (a, b) that sgn_keep points to; doubles are fine here,
// rendering only.
inline std::vector<PointD> clip_side(const std::vector<PointD>& poly, const PointD& a,
                                     const PointD& b, int sgn_keep) {
  std::vector<PointD> out;
  const std::size_t n = poly.size();
  const PointD e = b - a;
  for (std::size_t i = 0; i < n; ++i) {
    const PointD& cur = poly[i];
    const PointD& nxt = poly[(i + 1) % n];
    double sc = sgn_keep * cross(e, cur - a);
    double sn = sgn_keep * cross(e, nxt - a);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      double t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

inline std::string polygon_points(const std::vector<PointD>& poly) {
  std::string s;
  for (const auto& p : poly) {
    if (!s.empty()) s += " ";
    s += fnum(p.x) + "," + fnum(p.y);
  }
  return s;
}

}  // namespace detail

// Deterministic SVG: same inputs give byte-identical output. Shows the unit
// circle, the family (filled), and optionally a chord system with its regions
// tinted by index, plus transversal lines/points.
inline void render_svg(const FamilyD& family, const std::optional<ChordSystem<double>>& chords,
                       const std::vector<LineD>& lines, const std::vector<PointD>& points,
                       const std::string& path, const RenderOptions& opt = {}) {
  using detail::fnum;

  double xlo = -1, xhi = 1, ylo = -1, yhi = 1;  // always frame the unit disk
  for (const auto& s : family.sets)
    for (const auto& v : s.vertices) {
      xlo = std::min(xlo, v.x), xhi = std::max(xhi, v.x);
      ylo = std::min(ylo, v.y), yhi = std::max(yhi, v.y);
    }
  for (const auto& p : points) {
    xlo = std::min(xlo, p.x), xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y), yhi = std::max(yhi, p.y);
  }
  const double span = std::max(xhi - xlo, yhi - ylo);
  const double m = opt.pad * span;
  xlo -= m, xhi += m, ylo -= m, yhi += m;
  const double w = xhi - xlo, h = yhi - ylo;
  const double sw = 0.004 * std::max(w, h);  // base stroke width, world units

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fnum(opt.width) +
         "\" height=\"" + fnum(opt.width * h / w) + "\" viewBox=\"" + fnum(xlo) + " " +
         fnum(-yhi) + " " + fnum(w) + " " + fnum(h) + "\">\n";
  // flip y so the picture uses math orientation
  out += "<g transform=\"scale(1,-1)\">\n";

  std::vector<PointD> disk;
  for (int i = 0; i < 256; ++i) {
    double a = 2.0 * 3.14159265358979323846 * i / 256;
    disk.push_back({std::cos(a), std::sin(a)});
  }
  out += "<polygon points=\"" + detail::polygon_points(disk) +
         "\" fill=\"#f6f6f4\" stroke=\"none\"/>\n";

  if (chords) {
    const auto& cs = *chords;
    const int half = cs.m / 2;
    // paint in descending index order: overwrites realize the min-index rule
    for (int i = cs.m; i >= 1; --i) {
      if (!(cs.x[i - 1] > 0)) continue;
      const PointD g = circle_point((cs.t[i - 1] + cs.t[i]) / 2.0);
      std::vector<PointD> poly = disk;
      bool dead = false;
      for (int ci : {(i - 1) % half, i % half}) {
        const LineD& c = cs.chords[ci];
        if (c.degenerate()) continue;
        int sg = side_of(c, g);
        if (sg == 0) { dead = true; break; }
        poly = detail::clip_side(poly, c.a, c.b, sg);
      }
      if (dead || poly.size() < 3) continue;
      out += "<polygon points=\"" + detail::polygon_points(poly) + "\" fill=\"" +
             detail::kPalette[(i - 1) % 12] + "\" fill-opacity=\"0.28\" stroke=\"none\"/>\n";
    }
  }

  out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#555555\" stroke-width=\"" +
         fnum(sw) + "\"/>\n";

  int si = 0;
  for (const auto& s : family.sets) {
    const char* col = detail::kPalette[si++ % 12];
    if (s.is_point()) {
      out += "<circle cx=\"" + fnum(s.vertices[0].x) + "\" cy=\"" + fnum(s.vertices[0].y) +
             "\" r=\"" + fnum(2.2 * sw) + "\" fill=\"" + col + "\" stroke=\"#333333\" " +
             "stroke-width=\"" + fnum(0.4 * sw) + "\"/>\n";
    } else if (s.is_segment()) {
      out += "<line x1=\"" + fnum(s.vertices[0].x) + "\" y1=\"" + fnum(s.vertices[0].y) +
             "\" x2=\"" + fnum(s.vertices[1].x) + "\" y2=\"" + fnum(s.vertices[1].y) +
             "\" stroke=\"" + col + "\" stroke-width=\"" + fnum(1.6 * sw) + "\"/>\n";
    } else {
      out += "<polygon points=\"" + detail::polygon_points(s.vertices) + "\" fill=\"" + col +
             "\" fill-opacity=\"0.55\" stroke=\"#333333\" stroke-width=\"" + fnum(0.5 * sw) +
             "\"/>\n";
    }
  }

  if (chords) {
    for (const auto& c : chords->chords) {
      if (c.degenerate()) {
        out += "<circle cx=\"" + fnum(c.a.x) + "\" cy=\"" + fnum(c.a.y) + "\" r=\"" +
               fnum(1.5 * sw) + "\" fill=\"#1f3a93\"/>\n";
        continue;
      }
      out += "<line x1=\"" + fnum(c.a.x) + "\" y1=\"" + fnum(c.a.y) + "\" x2=\"" +
             fnum(c.b.x) + "\" y2=\"" + fnum(c.b.y) +
             "\" stroke=\"#1f3a93\" stroke-width=\"" + fnum(1.2 * sw) + "\"/>\n";
    }
    for (const auto& f : chords->f)
      out += "<circle cx=\"" + fnum(f.x) + "\" cy=\"" + fnum(f.y) + "\" r=\"" + fnum(sw) +
             "\" fill=\"#1f3a93\"/>\n";
  }

  for (const auto& l : lines) {
    if (l.degenerate()) continue;
    // clip the infinite line to the frame
    const PointD d = l.b - l.a;
    double tlo = -1e18, thi = 1e18;
    bool ok = true;
    auto slab = [&](double p0, double dir, double lo, double hi) {
      if (std::abs(dir) < 1e-300) { ok = ok && p0 >= lo && p0 <= hi; return; }
      double t0 = (lo - p0) / dir, t1 = (hi - p0) / dir;
      if (t0 > t1) std::swap(t0, t1);
      tlo = std::max(tlo, t0), thi = std::min(thi, t1);
    };
    slab(l.a.x, d.x, xlo, xhi);
    slab(l.a.y, d.y, ylo, yhi);
    if (!ok || tlo > thi) continue;
    const PointD u = l.a + tlo * d, v = l.a + thi * d;
    out += "<line x1=\"" + fnum(u.x) + "\" y1=\"" + fnum(u.y) + "\" x2=\"" + fnum(v.x) +
           "\" y2=\"" + fnum(v.y) + "\" stroke=\"#c0392b\" stroke-width=\"" +
           fnum(1.4 * sw) + "\"/>\n";
  }

  for (const auto& p : points)
    out += "<circle cx=\"" + fnum(p.x) + "\" cy=\"" + fnum(p.y) + "\" r=\"" + fnum(2.0 * sw) +
           "\" fill=\"#c0392b\" stroke=\"#7b241c\" stroke-width=\"" + fnum(0.5 * sw) +
           "\"/>\n";

  out += "</g>\n</svg>\n";

  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot write '" + path + "'");
  f << out;
  if (!f) throw io_error("write failed on '" + path + "'");
}

}  // namespace pierce
