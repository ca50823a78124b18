#include "prelam/render.hpp"

#include <cmath>
#include <cstdio>

#include "prelam/plane.hpp"
#include "prelam/regions.hpp"

namespace prelam {

namespace {

constexpr double kSize = 1000.0;
constexpr double kCx = 500.0, kCy = 500.0, kR = 470.0;
constexpr double kPi = 3.14159265358979323846;

struct Pt {
  double x, y;
};

Pt on_circle(const CirclePoint& p) {
  double theta = 2.0 * kPi * p.t.to_double();
  return {kCx + kR * std::cos(theta), kCy - kR * std::sin(theta)};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Continuation command from the current point at `pa` to `pb`: straight, or
// the circular geodesic orthogonal to the boundary circle.
std::string chord_cmd(const CirclePoint& pa, const CirclePoint& pb, bool poincare) {
  Pt a = on_circle(pa), b = on_circle(pb);
  if (poincare) {
    double t1 = 2.0 * kPi * pa.t.to_double();
    double t2 = 2.0 * kPi * pb.t.to_double();
    double dot = std::cos(t1) * std::cos(t2) + std::sin(t1) * std::sin(t2);
    if (dot > -0.999) {
      double denom = 1.0 + dot;
      double ux = (std::cos(t1) + std::cos(t2)) / denom;
      double uy = (std::sin(t1) + std::sin(t2)) / denom;
      double rad = std::sqrt(std::max(ux * ux + uy * uy - 1.0, 1e-12)) * kR;
      Pt center{kCx + kR * ux, kCy - kR * uy};
      double cross = (a.x - center.x) * (b.y - center.y) - (a.y - center.y) * (b.x - center.x);
      int sweep = cross > 0 ? 1 : 0;
      return "A " + num(rad) + " " + num(rad) + " 0 0 " + std::to_string(sweep) + " " + num(b.x) +
             " " + num(b.y);
    }
  }
  return "L " + num(b.x) + " " + num(b.y);
}

// Counterclockwise boundary-circle arc from `from` to `to` as a
// continuation command.
std::string arc_cmd(const CirclePoint& from, const CirclePoint& to) {
  Pt b = on_circle(to);
  double span = (to.t - from.t).mod1().to_double();
  int large = span > 0.5 ? 1 : 0;
  // Counterclockwise in disc coordinates is sweep 0 on the flipped y axis.
  return "A " + num(kR) + " " + num(kR) + " 0 " + std::to_string(large) + " 0 " + num(b.x) + " " +
         num(b.y);
}

Pt lerp(const Pt& a, const Pt& b, double t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

Pt intersection(const Chord& p, const Chord& q) {
  Pt a = on_circle(p.a), b = on_circle(p.b), c = on_circle(q.a), d = on_circle(q.b);
  double rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  double denom = rx * sy - ry * sx;
  if (std::abs(denom) < 1e-12) return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
  double t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
  return {a.x + t * rx, a.y + t * ry};
}

// Directed boundary walk of a region as one closed SVG path.
std::string region_path(const Region& region, const std::vector<Chord>& own, bool poincare) {
  if (region.boundary.empty()) return "";
  // Resolve the start: direct the first side so it meets the next piece.
  std::string path;
  CirclePoint cursor;
  bool started = false;
  const std::size_t n = region.boundary.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& item = region.boundary[i];
    if (item.kind == BoundaryItem::Kind::arc) {
      if (!started) {
        Pt s = on_circle(item.from);
        path += "M " + num(s.x) + " " + num(s.y) + " ";
        started = true;
      }
      path += arc_cmd(item.from, item.to) + " ";
      cursor = item.to;
    } else {
      const Chord& c = own[static_cast<std::size_t>(item.chord)];
      CirclePoint from = c.a, to = c.b;
      if (started) {
        if (cursor == c.b) {
          from = c.b;
          to = c.a;
        }
      } else {
        const auto& next = region.boundary[(i + 1) % n];
        CirclePoint next_start = next.kind == BoundaryItem::Kind::arc
                                     ? next.from
                                     : own[static_cast<std::size_t>(next.chord)].a;
        if (c.a == next_start) {
          from = c.b;
          to = c.a;
        }
        Pt s = on_circle(from);
        path += "M " + num(s.x) + " " + num(s.y) + " ";
        started = true;
      }
      path += chord_cmd(from, to, poincare) + " ";
      cursor = to;
    }
  }
  return path + "Z";
}

}  // namespace

std::string render_svg(const LamInstance& instance, const RenderSpec& spec) {
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" +
         num(kSize) + "\" viewBox=\"0 0 " + num(kSize) + " " + num(kSize) + "\">\n";
  svg +=
      "<style>\n"
      ".disc{fill:none;stroke:#333;stroke-width:2}\n"
      ".chord{fill:none;stroke-width:2.5}\n"
      ".plus{stroke:#1f6fb2}\n"
      ".minus{stroke:#c2571f}\n"
      ".phantom{stroke-dasharray:9 6}\n"
      ".acc{fill:none;stroke-width:1.2;stroke-dasharray:2 4;opacity:0.7}\n"
      ".region{fill:#ffd54d;opacity:0.35;stroke:none}\n"
      ".lk-vertex{fill:#222;stroke:#fff;stroke-width:1}\n"
      ".lk-edge{stroke:#222;stroke-width:1.5;stroke-dasharray:4 3;fill:none}\n"
      ".crossing{fill:#444}\n"
      ".singular-marker{fill:#d21f3c;stroke:#70101f;stroke-width:1.5}\n"
      "</style>\n";
  svg += "<circle class=\"disc\" cx=\"" + num(kCx) + "\" cy=\"" + num(kCy) + "\" r=\"" + num(kR) +
         "\"/>\n";

  auto region_lookup = [&](const std::string& id) -> std::pair<Sign, int> {
    if (id.empty()) return {Sign::plus, -1};
    Sign sign = id[0] == 'p' ? Sign::plus : Sign::minus;
    return {sign, std::atoi(id.c_str() + 1)};
  };

  if (!spec.highlight_regions.empty()) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      RegionSet set = complementary_regions(instance, sign);
      for (const Region& region : set.regions) {
        for (const auto& id : spec.highlight_regions) {
          if (id != region.id()) continue;
          std::string path = region_path(region, instance.family(sign), spec.poincare);
          if (!path.empty()) svg += "<path class=\"region\" d=\"" + path + "\"/>\n";
        }
      }
    }
  }

  if (spec.show_chords) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      for (const auto& c : instance.family(sign)) {
        Pt a = on_circle(c.a);
        std::string cls = std::string("chord ") + (sign == Sign::plus ? "plus" : "minus");
        if (c.is_phantom()) cls += " phantom";
        svg += "<path class=\"" + cls + "\" d=\"M " + num(a.x) + " " + num(a.y) + " " +
               chord_cmd(c.a, c.b, spec.poincare) + "\"/>\n";
        if (spec.show_acc) {
          // A faint offset stroke on each accumulated side.
          for (int side = 0; side < 2; ++side) {
            bool flag = side == 0 ? c.acc_ab : c.acc_ba;
            if (!flag) continue;
            CirclePoint arc_mid = side == 0 ? arc_midpoint(c.a, c.b) : arc_midpoint(c.b, c.a);
            Pt toward = on_circle(arc_mid);
            Pt pa = on_circle(c.a), pb = on_circle(c.b);
            Pt mid = lerp(pa, pb, 0.5);
            Pt offset_mid = lerp(mid, toward, 0.06);
            double dx = offset_mid.x - mid.x, dy = offset_mid.y - mid.y;
            Pt qa = {lerp(pa, pb, 0.25).x + dx, lerp(pa, pb, 0.25).y + dy};
            Pt qb = {lerp(pa, pb, 0.75).x + dx, lerp(pa, pb, 0.75).y + dy};
            std::string cls2 = std::string("acc ") + (sign == Sign::plus ? "plus" : "minus");
            svg += "<path class=\"" + cls2 + "\" d=\"M " + num(qa.x) + " " + num(qa.y) + " L " +
                   num(qb.x) + " " + num(qb.y) + "\"/>\n";
          }
        }
      }
    }
  }

  if (!spec.linkage_region.empty()) {
    auto [sign, index] = region_lookup(spec.linkage_region);
    RegionSet set = complementary_regions(instance, sign);
    if (index < 0 || index >= static_cast<int>(set.regions.size())) {
      throw Error("render: unknown region id " + spec.linkage_region);
    }
    const Region& region = set.regions[static_cast<std::size_t>(index)];
    LinkageGraph graph = linkage_graph(region, instance);
    const auto& own = instance.family(sign);
    std::vector<Pt> glyph(graph.vertices.size());
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
      if (graph.vertices[v].kind == LinkageVertex::Kind::geodesic) {
        const Chord& c = own[static_cast<std::size_t>(graph.vertices[v].chord)];
        glyph[v] = lerp(on_circle(c.a), on_circle(c.b), 0.5);
      } else {
        const auto& seg = graph.segments[static_cast<std::size_t>(graph.vertices[v].segment)];
        CirclePoint mid = seg.first == seg.last ? seg.first : arc_midpoint(seg.first, seg.last);
        Pt p = on_circle(mid);
        glyph[v] = lerp(p, {kCx, kCy}, 0.08);
      }
    }
    for (const auto& e : graph.edges) {
      const Pt& a = glyph[static_cast<std::size_t>(e.u)];
      const Pt& b = glyph[static_cast<std::size_t>(e.v)];
      svg += "<path class=\"lk-edge\" d=\"M " + num(a.x) + " " + num(a.y) + " L " + num(b.x) +
             " " + num(b.y) + "\"/>\n";
    }
    for (const auto& g : glyph) {
      svg += "<circle class=\"lk-vertex\" cx=\"" + num(g.x) + "\" cy=\"" + num(g.y) +
             "\" r=\"7\"/>\n";
    }
  }

  if (spec.show_crossings || spec.show_singular) {
    CrossingSpace space = crossing_space(instance);
    if (spec.show_crossings) {
      for (const auto& [i, j] : space.points) {
        Pt p = intersection(instance.plus[static_cast<std::size_t>(i)],
                            instance.minus[static_cast<std::size_t>(j)]);
        svg += "<circle class=\"crossing\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
               "\" r=\"4\"/>\n";
      }
    }
    if (spec.show_singular) {
      for (int cls : space.singular_classes) {
        double sx = 0.0, sy = 0.0;
        const auto& members = space.classes[static_cast<std::size_t>(cls)].points;
        for (const auto& [i, j] : members) {
          Pt p = intersection(instance.plus[static_cast<std::size_t>(i)],
                              instance.minus[static_cast<std::size_t>(j)]);
          sx += p.x;
          sy += p.y;
        }
        sx /= static_cast<double>(members.size());
        sy /= static_cast<double>(members.size());
        svg += "<path class=\"singular-marker\" d=\"M " + num(sx) + " " + num(sy - 10) + " L " +
               num(sx + 9) + " " + num(sy + 7) + " L " + num(sx - 9) + " " + num(sy + 7) +
               " Z\"/>\n";
      }
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace prelam
