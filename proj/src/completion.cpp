#include "prelam/completion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prelam {

namespace {

std::vector<int> component_vertices(const LinkageGraph& graph, int start,
                                    const std::set<int>& removed_edges) {
  std::vector<int> out;
  std::vector<char> seen(graph.vertices.size(), 0);
  std::vector<int> queue = {start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    out.push_back(v);
    for (int e : graph.adjacency[static_cast<std::size_t>(v)]) {
      if (removed_edges.count(e)) continue;
      const auto& edge = graph.edges[static_cast<std::size_t>(e)];
      int w = edge.u == v ? edge.v : edge.u;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string Disconnector::describe(const LinkageGraph& graph, const LamInstance& instance) const {
  auto edge_text = [&](int e) {
    const auto& edge = graph.edges[static_cast<std::size_t>(e)];
    return vertex_label(graph, edge.u, instance) + "--" + vertex_label(graph, edge.v, instance);
  };
  std::string out = kind == Kind::edge ? "edge " + edge_text(e1)
                                       : "pair " + edge_text(e1) + " / " + edge_text(e2);
  out += is_cut ? " [cut]" : " [not cut]";
  return out;
}

std::vector<Disconnector> disconnectors(const LinkageGraph& graph) {
  GraphAnalysis analysis = analyze_graph(graph);
  if (!analysis.simple_cycle_ok) {
    throw Error("disconnectors: graph fails the simple cycle condition");
  }

  std::vector<Disconnector> out;

  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (analysis.edge_on_cycle(static_cast<int>(e))) continue;
    Disconnector d;
    d.kind = Disconnector::Kind::edge;
    d.sign = graph.sign;
    d.region = graph.region;
    d.e1 = static_cast<int>(e);
    d.component_a = component_vertices(graph, graph.edges[e].u, {static_cast<int>(e)});
    d.component_b = component_vertices(graph, graph.edges[e].v, {static_cast<int>(e)});
    d.is_cut = d.component_a.size() >= 2 && d.component_b.size() >= 2;
    out.push_back(std::move(d));
  }

  // Successive edge pairs of each simple cycle.
  std::map<int, std::vector<int>> cycle_edges;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    int b = analysis.edge_bcc[e];
    if (b >= 0 && analysis.bcc_is_simple_cycle(b)) cycle_edges[b].push_back(static_cast<int>(e));
  }
  for (const auto& [bcc, edges] : cycle_edges) {
    // Pairs are indexed by their shared vertex: each cycle vertex joins its
    // two incident cycle edges.
    std::map<int, std::vector<int>> at_vertex;
    for (int e : edges) {
      at_vertex[graph.edges[static_cast<std::size_t>(e)].u].push_back(e);
      at_vertex[graph.edges[static_cast<std::size_t>(e)].v].push_back(e);
    }
    for (const auto& [v, incident] : at_vertex) {
      if (incident.size() != 2) throw Error("disconnectors: malformed cycle component");
      Disconnector d;
      d.kind = Disconnector::Kind::pair;
      d.sign = graph.sign;
      d.region = graph.region;
      d.e1 = incident[0];
      d.e2 = incident[1];
      d.shared_vertex = v;
      d.component_a = component_vertices(graph, v, {d.e1, d.e2});
      int other = graph.edges[static_cast<std::size_t>(d.e1)].u == v
                      ? graph.edges[static_cast<std::size_t>(d.e1)].v
                      : graph.edges[static_cast<std::size_t>(d.e1)].u;
      d.component_b = component_vertices(graph, other, {d.e1, d.e2});
      d.is_cut = d.component_a.size() >= 2 && d.component_b.size() >= 2;
      out.push_back(std::move(d));
    }
  }
  return out;
}

namespace {

// Circle points carried by a set of linkage vertices: geodesic vertices
// contribute their chord endpoints, ideal vertices their member endpoints.
std::vector<CirclePoint> vertex_points(const LinkageGraph& graph, const LamInstance& instance,
                                       const std::vector<int>& vertices) {
  const auto& own = instance.family(graph.sign);
  std::vector<CirclePoint> out;
  for (int v : vertices) {
    const auto& vertex = graph.vertices[static_cast<std::size_t>(v)];
    if (vertex.kind == LinkageVertex::Kind::geodesic) {
      out.push_back(own[static_cast<std::size_t>(vertex.chord)].a);
      out.push_back(own[static_cast<std::size_t>(vertex.chord)].b);
    } else {
      for (const auto& m : graph.segments[static_cast<std::size_t>(vertex.segment)].members) {
        out.push_back(m.point);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CrossingGeodesic crossing_geodesic(const Disconnector& d, const LinkageGraph& graph,
                                   const LamInstance& instance) {
  const auto& own = instance.family(graph.sign);
  const auto& opp = instance.family(opposite(graph.sign));

  CrossingGeodesic result;
  result.witnesses = graph.edges[static_cast<std::size_t>(d.e1)].witnesses;
  if (d.kind == Disconnector::Kind::pair) {
    const auto& w2 = graph.edges[static_cast<std::size_t>(d.e2)].witnesses;
    result.witnesses.insert(result.witnesses.end(), w2.begin(), w2.end());
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  result.witnesses.erase(std::unique(result.witnesses.begin(), result.witnesses.end()),
                         result.witnesses.end());

  auto existing_side = [&](int vertex) {
    int chord = graph.vertices[static_cast<std::size_t>(vertex)].chord;
    CrossingGeodesic out = result;
    out.chord = own[static_cast<std::size_t>(chord)];
    out.existing = true;
    out.existing_chord = chord;
    return out;
  };

  // Low-valence cases: the crossing geodesic is an existing side.
  if (d.kind == Disconnector::Kind::edge) {
    const auto& edge = graph.edges[static_cast<std::size_t>(d.e1)];
    for (int v : {edge.u, edge.v}) {
      if (graph.degree(v) == 1 &&
          graph.vertices[static_cast<std::size_t>(v)].kind == LinkageVertex::Kind::geodesic) {
        return existing_side(v);
      }
    }
  } else if (graph.degree(d.shared_vertex) == 2) {
    return existing_side(d.shared_vertex);
  }

  // Canonical chord through the midpoints of the two gap arcs between the
  // component spans.
  std::vector<CirclePoint> pa = vertex_points(graph, instance, d.component_a);
  std::vector<CirclePoint> pb = vertex_points(graph, instance, d.component_b);
  if (pa.empty() || pb.empty()) throw Error("crossing geodesic: empty component");

  struct Tagged {
    CirclePoint p;
    int mask;  // 1 = component a, 2 = component b
  };
  std::map<std::string, Tagged> merged;
  for (const auto& p : pa) {
    auto& t = merged.emplace(p.str(), Tagged{p, 0}).first->second;
    t.mask |= 1;
  }
  for (const auto& p : pb) {
    auto& t = merged.emplace(p.str(), Tagged{p, 0}).first->second;
    t.mask |= 2;
  }
  std::vector<Tagged> points;
  for (auto& [_, t] : merged) points.push_back(t);
  std::sort(points.begin(), points.end(),
            [](const Tagged& x, const Tagged& y) { return x.p < y.p; });

  // The two components must occupy disjoint cyclic blocks, meeting in at
  // most one shared corner per boundary.
  const int k = static_cast<int>(points.size());
  auto mask_at = [&](int i) { return points[static_cast<std::size_t>(((i % k) + k) % k)].mask; };
  int transitions = 0;
  for (int i = 0; i < k; ++i) {
    int cur = mask_at(i), next = mask_at(i + 1);
    if (cur == 3 || next == 3) continue;
    if (cur != next) ++transitions;
  }
  int shared = 0;
  for (int i = 0; i < k; ++i) {
    if (mask_at(i) == 3) ++shared;
  }
  if (shared > 2 || transitions + shared > 2 || transitions + shared < 2) {
    throw Error("crossing geodesic: components are not separated on the circle");
  }

  // Walk the cyclic sequence to find the two boundary gaps.
  std::vector<CirclePoint> endpoints;
  std::vector<std::pair<CirclePoint, CirclePoint>> gaps;
  for (int i = 0; i < k; ++i) {
    int cur = mask_at(i);
    int next = mask_at(i + 1);
    if (cur == 3) {
      // Shared corner: degenerate gap at this point.
      gaps.push_back({points[static_cast<std::size_t>(i)].p, points[static_cast<std::size_t>(i)].p});
      endpoints.push_back(points[static_cast<std::size_t>(i)].p);
    } else if (next != 3 && next != cur) {
      const CirclePoint& from = points[static_cast<std::size_t>(i)].p;
      const CirclePoint& to = points[static_cast<std::size_t>((i + 1) % k)].p;
      gaps.push_back({from, to});
      endpoints.push_back(arc_midpoint(from, to));
    }
  }
  if (endpoints.size() != 2) {
    throw Error("crossing geodesic: could not isolate two boundary gaps");
  }

  result.chord = Chord(endpoints[0], endpoints[1], graph.sign, ChordStatus::leaf, false, false);
  result.gap1_from = gaps[0].first;
  result.gap1_to = gaps[0].second;
  result.gap2_from = gaps[1].first;
  result.gap2_to = gaps[1].second;

  // The result may coincide with an existing chord (root sides, repeated
  // runs); callers drop those rather than re-adding them.
  for (std::size_t c = 0; c < own.size(); ++c) {
    if (own[c].same_endpoints(result.chord)) {
      result.existing = true;
      result.existing_chord = static_cast<int>(c);
      return result;
    }
  }

  // Characterization check: the chord crosses exactly its witness set.
  std::set<int> witness_set(result.witnesses.begin(), result.witnesses.end());
  for (std::size_t j = 0; j < opp.size(); ++j) {
    bool does_cross = crosses(result.chord, opp[j]);
    bool should_cross = witness_set.count(static_cast<int>(j)) > 0;
    if (does_cross != should_cross) {
      throw Error("crossing geodesic " + result.chord.str() +
                  " fails its characterization against " + opp[j].str());
    }
  }
  return result;
}

namespace {

std::string gap_text(const CrossingGeodesic& g) {
  auto one = [](const CirclePoint& a, const CirclePoint& b) {
    if (a == b) return "{" + a.str() + "}";
    return "(" + a.str() + "," + b.str() + ")";
  };
  return one(g.gap1_from, g.gap1_to) + " " + one(g.gap2_from, g.gap2_to);
}

}  // namespace

CompletionResult complete(const LamInstance& instance) {
  require_valid(instance);
  CompletionResult result;
  result.precheck = check_completable(instance);
  if (!result.precheck.overall) {
    throw Error("complete: instance fails the completability conditions");
  }
  result.notes =
      "trivial complementary regions do not occur on finite data; their "
      "geodesics enter through phantom upgrades";

  LamInstance work = instance;

  // Declared closure leaves that are not high-valence sides belong to the
  // completion as genuine leaves.
  SideFlags flags = high_valence_side_flags(instance);
  for (Sign sign : {Sign::plus, Sign::minus}) {
    auto& fam = work.family(sign);
    const auto& hv = flags.of(sign);
    for (std::size_t c = 0; c < fam.size(); ++c) {
      if (fam[c].is_phantom() && !hv[c]) {
        fam[c].status = ChordStatus::leaf;
        result.log.push_back({CompletionLogEntry::Action::upgraded_phantom, sign, "", "",
                              fam[c].str(), ""});
      }
    }
  }

  std::vector<Chord> added;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    RegionSet set = complementary_regions(work, sign);
    for (const Region& region : set.regions) {
      if (!region.genuine) continue;
      LinkageGraph graph = linkage_graph(region, work);
      for (const Disconnector& d : disconnectors(graph)) {
        if (d.kind == Disconnector::Kind::edge) {
          const auto& edge = graph.edges[static_cast<std::size_t>(d.e1)];
          if (graph.vertices[static_cast<std::size_t>(edge.u)].kind != LinkageVertex::Kind::geodesic ||
              graph.vertices[static_cast<std::size_t>(edge.v)].kind != LinkageVertex::Kind::geodesic) {
            continue;  // edges with an ideal vertex contribute nothing
          }
        }
        CrossingGeodesic g = crossing_geodesic(d, graph, work);
        if (g.existing) {
          result.log.push_back({CompletionLogEntry::Action::skipped_existing, sign, region.id(),
                                d.describe(graph, work), g.chord.str(), ""});
          continue;
        }
        bool duplicate = false;
        for (const auto& prev : added) {
          if (prev.sign == sign && prev.same_endpoints(g.chord)) duplicate = true;
        }
        if (duplicate) continue;
        added.push_back(g.chord);
        result.log.push_back({CompletionLogEntry::Action::added, sign, region.id(),
                              d.describe(graph, work), g.chord.str(), gap_text(g)});
      }
    }
  }

  for (const auto& c : added) work.family(c.sign).push_back(c);
  result.instance = work.canonicalized();
  return result;
}

LamInstance alternative_extension(const LamInstance& instance, const Region& region,
                                  const IdealSegment& segment, const CirclePoint& pivot, int k) {
  if (k < 0) throw Error("alternative_extension: k must be nonnegative");
  if (!region.genuine) throw Error("alternative_extension: region is not genuine");
  bool pivot_is_member = false;
  for (const auto& m : segment.members) {
    if (m.point == pivot) pivot_is_member = true;
  }
  if (!pivot_is_member) throw Error("alternative_extension: pivot is not a member endpoint");
  if (k == 0) return instance;

  const auto& arc_item = region.boundary[static_cast<std::size_t>(segment.arc_item)];
  if (arc_item.kind != BoundaryItem::Kind::arc) throw Error("alternative_extension: bad segment");
  Arc arc(arc_item.from, arc_item.to);

  // Nearest constraints around the pivot inside the arc: other opposite
  // endpoints and the arc corners.
  auto seg_result = ideal_segments(region, instance);
  CirclePoint left = arc.from;
  CirclePoint right = arc.to;
  for (const auto& seg : seg_result.segments) {
    if (seg.arc_item != segment.arc_item) continue;
    for (const auto& m : seg.members) {
      if (m.point == pivot) continue;
      if (cyclic_between(arc.from, m.point, pivot) &&
          (left == arc.from || cyclic_between(left, m.point, pivot))) {
        left = m.point;
      }
      if (cyclic_between(pivot, m.point, arc.to) &&
          (right == arc.to || cyclic_between(pivot, m.point, right))) {
        right = m.point;
      }
    }
  }
  if (left == pivot || right == pivot) {
    throw Error("alternative_extension: no room around the pivot");
  }

  // Arc lengths from the pivot to its nearest constraints.
  Rational gl = (pivot.t - left.t).mod1();
  Rational gr = (right.t - pivot.t).mod1();
  Rational delta = (gl < gr ? gl : gr) / Rational::of(2);

  LamInstance out = instance;
  for (int i = 0; i < k; ++i) {
    CirclePoint l((pivot.t - delta).mod1());
    CirclePoint r((pivot.t + delta).mod1());
    // Accumulated toward the pivot: the side whose arc is (l, r).
    out.family(region.sign).push_back(
        Chord(l, r, region.sign, ChordStatus::leaf, true, false));
    delta = delta / Rational::of(2);
  }
  out = out.canonicalized();
  require_valid(out);
  return out;
}

}  // namespace prelam
