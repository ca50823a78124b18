#include "prelam/conditions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace prelam {

GraphAnalysis analyze_graph(const LinkageGraph& graph) {
  const int n = static_cast<int>(graph.vertices.size());
  const int m = static_cast<int>(graph.edges.size());
  GraphAnalysis out;
  out.edge_bcc.assign(static_cast<std::size_t>(m), -1);
  out.vertex_on_cycle.assign(static_cast<std::size_t>(n), 0);

  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> estack;
  int timer = 0;

  struct Frame {
    int v;
    int parent_edge;  // tree edge into v, -1 at roots
    std::size_t next;
  };

  auto other_end = [&](int e, int v) {
    const auto& edge = graph.edges[static_cast<std::size_t>(e)];
    return edge.u == v ? edge.v : edge.u;
  };

  auto close_component = [&](int sentinel_edge) {
    int b = out.bcc_count++;
    std::set<int> verts;
    int edges_in = 0;
    while (true) {
      int e = estack.back();
      estack.pop_back();
      out.edge_bcc[static_cast<std::size_t>(e)] = b;
      verts.insert(graph.edges[static_cast<std::size_t>(e)].u);
      verts.insert(graph.edges[static_cast<std::size_t>(e)].v);
      ++edges_in;
      if (e == sentinel_edge) break;
    }
    out.bcc_edges.push_back(edges_in);
    out.bcc_vertices.push_back(static_cast<int>(verts.size()));
  };

  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    ++components;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      int v = frame.v;
      if (frame.next < graph.adjacency[static_cast<std::size_t>(v)].size()) {
        int e = graph.adjacency[static_cast<std::size_t>(v)][frame.next++];
        if (e == frame.parent_edge) continue;
        int w = other_end(e, v);
        if (disc[w] == -1) {
          estack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          estack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        int child_edge = frame.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) close_component(child_edge);
        }
      }
    }
  }
  out.connected = components <= 1;

  for (int b = 0; b < out.bcc_count; ++b) {
    if (out.bcc_edges[static_cast<std::size_t>(b)] > 1 && !out.bcc_is_simple_cycle(b)) {
      out.simple_cycle_ok = false;
    }
  }
  for (int e = 0; e < m; ++e) {
    int b = out.edge_bcc[static_cast<std::size_t>(e)];
    if (b >= 0 && out.bcc_edges[static_cast<std::size_t>(b)] > 1) {
      out.vertex_on_cycle[static_cast<std::size_t>(graph.edges[static_cast<std::size_t>(e)].u)] = 1;
      out.vertex_on_cycle[static_cast<std::size_t>(graph.edges[static_cast<std::size_t>(e)].v)] = 1;
      if (!out.bcc_is_simple_cycle(b) && out.offending_edge < 0) out.offending_edge = e;
    }
  }
  return out;
}

namespace {

// Shortest vertex path between the endpoints of `edge`, avoiding that edge
// and any edges in `banned`.  Returns the vertex sequence u..v, or empty.
std::vector<int> path_avoiding(const LinkageGraph& graph, int edge, const std::set<int>& banned) {
  int src = graph.edges[static_cast<std::size_t>(edge)].u;
  int dst = graph.edges[static_cast<std::size_t>(edge)].v;
  std::vector<int> pred(graph.vertices.size(), -1);
  std::vector<int> pred_edge(graph.vertices.size(), -1);
  std::deque<int> queue;
  queue.push_back(src);
  pred[static_cast<std::size_t>(src)] = src;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == dst) break;
    for (int e : graph.adjacency[static_cast<std::size_t>(v)]) {
      if (e == edge || banned.count(e)) continue;
      int w = graph.edges[static_cast<std::size_t>(e)].u == v
                  ? graph.edges[static_cast<std::size_t>(e)].v
                  : graph.edges[static_cast<std::size_t>(e)].u;
      if (pred[static_cast<std::size_t>(w)] != -1) continue;
      pred[static_cast<std::size_t>(w)] = v;
      pred_edge[static_cast<std::size_t>(w)] = e;
      queue.push_back(w);
    }
  }
  if (pred[static_cast<std::size_t>(dst)] == -1) return {};
  std::vector<int> path;
  for (int v = dst; v != src; v = pred[static_cast<std::size_t>(v)]) path.push_back(v);
  path.push_back(src);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> path_edges(const LinkageGraph& graph, const std::vector<int>& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out.push_back(graph.find_edge(path[i], path[i + 1]));
  }
  return out;
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> two_cycles_through(
    const LinkageGraph& graph, int edge) {
  std::vector<int> first = path_avoiding(graph, edge, {});
  if (first.empty()) return std::nullopt;
  for (int banned : path_edges(graph, first)) {
    if (banned < 0) continue;
    std::vector<int> second = path_avoiding(graph, edge, {banned});
    if (!second.empty() && second != first) return std::make_pair(first, second);
  }
  return std::nullopt;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
};

// Point-location over one family's laminar forest: the innermost chord
// whose open interval strictly contains a query point.
class ContainmentIndex {
public:
  ContainmentIndex(const std::vector<Chord>& chords, const std::vector<int>& parents)
      : chords_(chords) {
    depth_.assign(chords.size(), 0);
    for (std::size_t i = 0; i < chords.size(); ++i) depth_[i] = compute_depth(parents, static_cast<int>(i));

    struct Ev {
      Rational pos;
      bool close;
      int chord;
    };
    std::vector<Ev> events;
    for (std::size_t i = 0; i < chords.size(); ++i) {
      events.push_back({chords[i].a.t, false, static_cast<int>(i)});
      events.push_back({chords[i].b.t, true, static_cast<int>(i)});
    }
    std::sort(events.begin(), events.end(), [&](const Ev& x, const Ev& y) {
      if (x.pos != y.pos) return x.pos < y.pos;
      if (x.close != y.close) return x.close;
      if (!x.close) return chords_[y.chord].b < chords_[x.chord].b;
      return false;
    });

    std::vector<int> stack;
    std::size_t i = 0;
    while (i < events.size()) {
      std::size_t j = i;
      while (j < events.size() && events[j].pos == events[i].pos) ++j;
      positions_.push_back(events[i].pos);
      for (std::size_t k = i; k < j; ++k) {
        if (events[k].close) stack.pop_back();
      }
      at_.push_back(stack.empty() ? -1 : stack.back());
      for (std::size_t k = i; k < j; ++k) {
        if (!events[k].close) stack.push_back(events[k].chord);
      }
      after_.push_back(stack.empty() ? -1 : stack.back());
      i = j;
    }
  }

  int container(const CirclePoint& p) const {
    auto it = std::upper_bound(positions_.begin(), positions_.end(), p.t,
                               [](const Rational& a, const Rational& b) { return a < b; });
    if (it == positions_.begin()) return -1;
    std::size_t idx = static_cast<std::size_t>(it - positions_.begin()) - 1;
    if (positions_[idx] == p.t) return at_[idx];
    return after_[idx];
  }

  int depth(int chord) const { return chord < 0 ? -1 : depth_[static_cast<std::size_t>(chord)]; }

private:
  int compute_depth(const std::vector<int>& parents, int i) {
    int d = 0;
    for (int p = parents[static_cast<std::size_t>(i)]; p >= 0; p = parents[static_cast<std::size_t>(p)]) ++d;
    return d;
  }

  const std::vector<Chord>& chords_;
  std::vector<int> depth_;
  std::vector<Rational> positions_;
  std::vector<int> at_, after_;
};

}  // namespace

ConnectednessResult check_connectedness(const LamInstance& instance) {
  const auto& plus = instance.plus;
  const auto& minus = instance.minus;
  const int np = static_cast<int>(plus.size());
  const int nm = static_cast<int>(minus.size());
  ConnectednessResult result;
  if (np + nm == 0) return result;

  std::vector<int> plus_parents = laminar_parents(plus);
  std::vector<int> minus_parents = laminar_parents(minus);
  ContainmentIndex plus_index(plus, plus_parents);
  Dsu dsu(static_cast<std::size_t>(np + nm));

  // A chord crosses exactly the opposite chords on the symmetric difference
  // of the containment chains of its two endpoints; climb and merge.
  for (int j = 0; j < nm; ++j) {
    int u = plus_index.container(minus[static_cast<std::size_t>(j)].a);
    int v = plus_index.container(minus[static_cast<std::size_t>(j)].b);
    while (u != v) {
      int* deeper = plus_index.depth(u) >= plus_index.depth(v) ? &u : &v;
      dsu.unite(np + j, *deeper);
      *deeper = plus_parents[static_cast<std::size_t>(*deeper)];
    }
  }

  std::map<int, std::vector<ChordRef>> groups;
  for (int i = 0; i < np; ++i) groups[dsu.find(i)].push_back({Sign::plus, i});
  for (int j = 0; j < nm; ++j) groups[dsu.find(np + j)].push_back({Sign::minus, j});
  for (auto& [root, members] : groups) result.components.push_back(std::move(members));
  result.pass = result.components.size() <= 1;
  return result;
}

namespace {

std::vector<std::string> cycle_labels(const LinkageGraph& graph, const LamInstance& instance,
                                      const std::vector<int>& cycle) {
  std::vector<std::string> out;
  for (int v : cycle) out.push_back(vertex_label(graph, v, instance));
  return out;
}

// Runs `fn` on the linkage graph of every genuine region of both signs.
template <typename Fn>
void for_genuine_graphs(const LamInstance& instance, Fn&& fn) {
  for (Sign sign : {Sign::plus, Sign::minus}) {
    RegionSet set = complementary_regions(instance, sign);
    for (const Region& region : set.regions) {
      if (!region.genuine) continue;
      LinkageGraph graph = linkage_graph(region, instance);
      fn(region, graph, set);
    }
  }
}

}  // namespace

SimpleCycleResult check_simple_cycle(const LamInstance& instance) {
  SimpleCycleResult result;
  for_genuine_graphs(instance, [&](const Region& region, const LinkageGraph& graph, const RegionSet&) {
    if (result.offenses.size() >= 8) return;
    GraphAnalysis analysis = analyze_graph(graph);
    if (analysis.simple_cycle_ok) return;
    result.pass = false;
    CycleOffense offense;
    offense.region_id = region.id();
    int e = analysis.offending_edge;
    offense.edge_label = vertex_label(graph, graph.edges[static_cast<std::size_t>(e)].u, instance) +
                         "--" +
                         vertex_label(graph, graph.edges[static_cast<std::size_t>(e)].v, instance);
    if (auto cycles = two_cycles_through(graph, e)) {
      offense.cycle1 = cycle_labels(graph, instance, cycles->first);
      offense.cycle2 = cycle_labels(graph, instance, cycles->second);
    }
    result.offenses.push_back(std::move(offense));
  });
  return result;
}

const char* clause_label(HighValenceClause c) {
  switch (c) {
    case HighValenceClause::i: return "(i)";
    case HighValenceClause::ii: return "(ii)";
    case HighValenceClause::iii: return "(iii)";
    case HighValenceClause::iv: return "(iv)";
  }
  return "?";
}

SideFlags high_valence_side_flags(const LamInstance& instance) {
  SideFlags flags;
  flags.plus.assign(instance.plus.size(), 0);
  flags.minus.assign(instance.minus.size(), 0);
  std::vector<std::map<int, std::map<int, int>>> degs(2);  // chord -> region -> degree

  for_genuine_graphs(instance, [&](const Region& region, const LinkageGraph& graph, const RegionSet&) {
    GraphAnalysis analysis = analyze_graph(graph);
    std::size_t sign_idx = region.sign == Sign::plus ? 0 : 1;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
      if (graph.vertices[v].kind != LinkageVertex::Kind::geodesic) continue;
      int chord = graph.vertices[v].chord;
      int deg = graph.degree(static_cast<int>(v));
      bool on_cycle = analysis.vertex_on_cycle[v] != 0;
      bool hv = (deg >= 3 && on_cycle) || (deg >= 2 && !on_cycle) || graph.vertices.size() == 2;
      if (hv) {
        (sign_idx == 0 ? flags.plus : flags.minus)[static_cast<std::size_t>(chord)] = 1;
      }
      degs[sign_idx][chord][region.index] = deg;
    }
  });

  for (std::size_t s = 0; s < 2; ++s) {
    auto& fam_flags = s == 0 ? flags.plus : flags.minus;
    for (const auto& [chord, by_region] : degs[s]) {
      int high = 0;
      for (const auto& [region, deg] : by_region) {
        if (deg >= 2) ++high;
      }
      if (by_region.size() == 2 && high == 2) fam_flags[static_cast<std::size_t>(chord)] = 1;
    }
  }
  return flags;
}

std::vector<HighValenceViolation> check_high_valence(const LamInstance& instance) {
  std::vector<HighValenceViolation> violations;
  std::vector<std::map<int, std::map<int, std::pair<std::string, int>>>> degs(2);

  for_genuine_graphs(instance, [&](const Region& region, const LinkageGraph& graph, const RegionSet&) {
    GraphAnalysis analysis = analyze_graph(graph);
    std::size_t sign_idx = region.sign == Sign::plus ? 0 : 1;
    Sign sign = region.sign;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
      if (graph.vertices[v].kind != LinkageVertex::Kind::geodesic) continue;
      int chord = graph.vertices[v].chord;
      const Chord& c = instance.family(sign)[static_cast<std::size_t>(chord)];
      int deg = graph.degree(static_cast<int>(v));
      degs[sign_idx][chord][region.index] = {region.id(), deg};
      if (!c.is_leaf()) continue;
      bool on_cycle = analysis.vertex_on_cycle[v] != 0;
      if (deg >= 3 && on_cycle) {
        violations.push_back({{sign, chord}, HighValenceClause::i, {region.id()}});
      }
      if (deg >= 2 && !on_cycle) {
        violations.push_back({{sign, chord}, HighValenceClause::ii, {region.id()}});
      }
      if (graph.vertices.size() == 2) {
        violations.push_back({{sign, chord}, HighValenceClause::iii, {region.id()}});
      }
    }
  });

  for (std::size_t s = 0; s < 2; ++s) {
    Sign sign = s == 0 ? Sign::plus : Sign::minus;
    for (const auto& [chord, by_region] : degs[s]) {
      const Chord& c = instance.family(sign)[static_cast<std::size_t>(chord)];
      if (!c.is_leaf() || by_region.size() != 2) continue;
      std::vector<std::string> ids;
      int high = 0;
      for (const auto& [region, info] : by_region) {
        ids.push_back(info.first);
        if (info.second >= 2) ++high;
      }
      if (high == 2) violations.push_back({{sign, chord}, HighValenceClause::iv, ids});
    }
  }
  return violations;
}

std::vector<SharedEndpointViolation> check_shared_endpoint(const LamInstance& instance) {
  std::vector<SharedEndpointViolation> violations;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    const auto& fam = instance.family(sign);
    const auto& opp = instance.family(opposite(sign));
    std::map<std::string, std::vector<int>> at_point;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (!fam[i].is_leaf()) continue;
      at_point[fam[i].a.str()].push_back(static_cast<int>(i));
      at_point[fam[i].b.str()].push_back(static_cast<int>(i));
    }
    for (const auto& [point, chords] : at_point) {
      if (chords.size() < 3 || violations.size() >= 32) continue;
      std::vector<std::vector<int>> crossers(chords.size());
      for (std::size_t k = 0; k < chords.size(); ++k) {
        for (std::size_t j = 0; j < opp.size(); ++j) {
          if (opp[j].is_leaf() && crosses(fam[static_cast<std::size_t>(chords[k])], opp[j])) {
            crossers[k].push_back(static_cast<int>(j));
          }
        }
      }
      for (std::size_t x = 0; x < chords.size() && violations.size() < 32; ++x) {
        for (std::size_t y = x + 1; y < chords.size(); ++y) {
          for (std::size_t z = y + 1; z < chords.size(); ++z) {
            std::vector<int> xy, xyz;
            std::set_intersection(crossers[x].begin(), crossers[x].end(), crossers[y].begin(),
                                  crossers[y].end(), std::back_inserter(xy));
            std::set_intersection(xy.begin(), xy.end(), crossers[z].begin(), crossers[z].end(),
                                  std::back_inserter(xyz));
            if (!xyz.empty()) {
              violations.push_back({CirclePoint::parse(point),
                                    {ChordRef{sign, chords[x]}, ChordRef{sign, chords[y]},
                                     ChordRef{sign, chords[z]}},
                                    ChordRef{opposite(sign), xyz.front()}});
            }
          }
        }
      }
    }
  }
  return violations;
}

ConditionReport check_completable(const LamInstance& instance) {
  ConditionReport report;
  report.header =
      "completability check; endpoint density on the circle is an assumed "
      "modeling premise and is not finitely checkable";
  report.connectedness = check_connectedness(instance);
  report.simple_cycle = check_simple_cycle(instance);
  report.high_valence = check_high_valence(instance);
  report.shared_endpoint = check_shared_endpoint(instance);
  report.overall = report.connectedness.pass && report.simple_cycle.pass &&
                   report.high_valence.empty() && report.shared_endpoint.empty();
  return report;
}

namespace {

bool chord_intersects_region(const Region& region, const LamInstance& instance, const Chord& beta) {
  const auto& own = instance.family(region.sign);
  for (const auto& item : region.boundary) {
    if (item.kind == BoundaryItem::Kind::side) {
      if (crosses(beta, own[static_cast<std::size_t>(item.chord)])) return true;
    } else {
      Arc arc(item.from, item.to);
      if (arc.contains(beta.a) || arc.contains(beta.b)) return true;
    }
  }
  return false;
}

std::vector<CirclePoint> polygon_corners(const Region& region, const LamInstance& instance) {
  const auto& own = instance.family(region.sign);
  std::vector<CirclePoint> corners;
  for (const auto& item : region.boundary) {
    if (item.kind != BoundaryItem::Kind::side) continue;
    corners.push_back(own[static_cast<std::size_t>(item.chord)].a);
    corners.push_back(own[static_cast<std::size_t>(item.chord)].b);
  }
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  return corners;
}

// Coupled-pair test: corner sets disjoint and strictly alternating around
// the circle.
bool corners_interleave(const std::vector<CirclePoint>& plus_corners,
                        const std::vector<CirclePoint>& minus_corners) {
  if (plus_corners.size() != minus_corners.size() || plus_corners.empty()) return false;
  struct Tagged {
    CirclePoint p;
    bool is_plus;
  };
  std::vector<Tagged> all;
  for (const auto& p : plus_corners) all.push_back({p, true});
  for (const auto& p : minus_corners) all.push_back({p, false});
  std::sort(all.begin(), all.end(), [](const Tagged& x, const Tagged& y) { return x.p < y.p; });
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i].p == all[i + 1].p) return false;  // shared vertex
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].is_plus == all[(i + 1) % all.size()].is_plus) return false;
  }
  return true;
}

}  // namespace

RealizationReport check_realization(const LamInstance& instance) {
  RealizationReport report;
  std::vector<std::pair<const Region*, std::vector<CirclePoint>>> polygons[2];
  std::vector<RegionSet> sets;
  sets.push_back(complementary_regions(instance, Sign::plus));
  sets.push_back(complementary_regions(instance, Sign::minus));
  std::map<std::pair<int, int>, RegionDiagnosis::Kind> diag_by_region;

  for (std::size_t s = 0; s < 2; ++s) {
    Sign sign = s == 0 ? Sign::plus : Sign::minus;
    const auto& own = instance.family(sign);
    const auto& opp = instance.family(opposite(sign));
    for (const Region& region : sets[s].regions) {
      if (!region.genuine) continue;
      LinkageGraph graph = linkage_graph(region, instance);
      GraphAnalysis analysis = analyze_graph(graph);
      RegionDiagnosis diag;
      diag.region_id = region.id();

      bool has_ideal = false;
      for (const auto& v : graph.vertices) {
        if (v.kind == LinkageVertex::Kind::ideal) has_ideal = true;
      }
      bool is_cycle = analysis.connected && !has_ideal && graph.vertices.size() >= 3;
      if (is_cycle) {
        for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
          if (graph.degree(static_cast<int>(v)) != 2) is_cycle = false;
        }
      }

      if (is_cycle) {
        bool all_leaf = true;
        for (const auto& v : graph.vertices) {
          if (!own[static_cast<std::size_t>(v.chord)].is_leaf()) all_leaf = false;
        }
        if (all_leaf) {
          diag.kind = RegionDiagnosis::Kind::ideal_polygon;
          diag.detail = "cycle of " + std::to_string(graph.vertices.size()) + " leaf sides";
          polygons[s].push_back({&region, polygon_corners(region, instance)});
        } else {
          diag.kind = RegionDiagnosis::Kind::failure;
          diag.detail = "cycle linkage graph with a non-leaf side";
        }
      } else {
        // Star candidates: the unique vertex of degree >= 2, or any geodesic
        // vertex when every vertex has degree <= 1.
        std::vector<int> candidates;
        for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
          if (graph.degree(static_cast<int>(v)) >= 2) candidates.push_back(static_cast<int>(v));
        }
        bool too_many_centers = candidates.size() > 1;
        if (candidates.empty()) {
          for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
            if (graph.vertices[v].kind == LinkageVertex::Kind::geodesic) {
              candidates.push_back(static_cast<int>(v));
            }
          }
        }
        bool is_tree = analysis.connected &&
                       graph.edges.size() + 1 == graph.vertices.size();
        diag.kind = RegionDiagnosis::Kind::failure;
        diag.detail = "linkage graph is neither a star nor a cycle";
        if (!too_many_centers && is_tree) {
          for (int center : candidates) {
            if (graph.vertices[static_cast<std::size_t>(center)].kind !=
                LinkageVertex::Kind::geodesic) {
              continue;
            }
            int root_chord = graph.vertices[static_cast<std::size_t>(center)].chord;
            const Chord& root = own[static_cast<std::size_t>(root_chord)];
            if (!root.is_phantom()) {
              diag.detail = "star center " + root.str() + " is not a phantom root";
              continue;
            }
            bool others_leaf = true;
            for (const auto& v : graph.vertices) {
              if (v.kind == LinkageVertex::Kind::geodesic && v.chord != root_chord &&
                  !own[static_cast<std::size_t>(v.chord)].is_leaf()) {
                others_leaf = false;
              }
            }
            if (!others_leaf) {
              diag.detail = "one-root region has a non-leaf non-root side";
              continue;
            }
            bool root_property = true;
            for (const auto& beta : opp) {
              if (chord_intersects_region(region, instance, beta) && !crosses(beta, root)) {
                root_property = false;
                break;
              }
            }
            if (!root_property) {
              diag.detail = "a traversing opposite leaf misses the root " + root.str();
              continue;
            }
            diag.kind = RegionDiagnosis::Kind::one_root;
            diag.detail = "star rooted at phantom " + root.str();
            diag.root_chord = root_chord;
            break;
          }
        }
      }

      if (diag.kind == RegionDiagnosis::Kind::failure) {
        report.pass = false;
        report.failures.push_back(region.id() + ": " + diag.detail);
      }
      diag_by_region[{static_cast<int>(s), region.index}] = diag.kind;
      report.regions.push_back(std::move(diag));
    }
  }

  // Ideal polygons pair bijectively across signs with interleaved corners.
  std::vector<int> partner_of_plus(polygons[0].size(), -1);
  std::vector<int> partner_of_minus(polygons[1].size(), -1);
  for (std::size_t i = 0; i < polygons[0].size(); ++i) {
    for (std::size_t j = 0; j < polygons[1].size(); ++j) {
      if (corners_interleave(polygons[0][i].second, polygons[1][j].second)) {
        if (partner_of_plus[i] != -1 || partner_of_minus[j] != -1) {
          report.pass = false;
          report.failures.push_back("polygon pairing is not bijective");
        }
        partner_of_plus[i] = static_cast<int>(j);
        partner_of_minus[j] = static_cast<int>(i);
      }
    }
  }
  for (std::size_t i = 0; i < polygons[0].size(); ++i) {
    if (partner_of_plus[i] == -1) {
      report.pass = false;
      report.failures.push_back("unpaired ideal polygon " + polygons[0][i].first->id());
    } else {
      report.coupled.push_back({polygons[0][i].first->id(),
                                polygons[1][static_cast<std::size_t>(partner_of_plus[i])].first->id()});
    }
  }
  for (std::size_t j = 0; j < polygons[1].size(); ++j) {
    if (partner_of_minus[j] == -1) {
      report.pass = false;
      report.failures.push_back("unpaired ideal polygon " + polygons[1][j].first->id());
    }
  }

  // No leaf bounds two ideal polygons.
  for (std::size_t s = 0; s < 2; ++s) {
    Sign sign = s == 0 ? Sign::plus : Sign::minus;
    const auto& set = sets[s];
    for (std::size_t c = 0; c < instance.family(sign).size(); ++c) {
      auto side0 = diag_by_region.find({static_cast<int>(s), set.chord_region[c][0]});
      auto side1 = diag_by_region.find({static_cast<int>(s), set.chord_region[c][1]});
      if (side0 != diag_by_region.end() && side1 != diag_by_region.end() &&
          side0->second == RegionDiagnosis::Kind::ideal_polygon &&
          side1->second == RegionDiagnosis::Kind::ideal_polygon) {
        report.pass = false;
        report.failures.push_back("leaf " + instance.family(sign)[c].str() +
                                  " bounds two ideal polygons");
      }
    }
  }

  return report;
}

bool classify_nonsingular(const LamInstance& instance) {
  bool nonsingular = true;
  for_genuine_graphs(instance, [&](const Region&, const LinkageGraph& graph, const RegionSet&) {
    GraphAnalysis analysis = analyze_graph(graph);
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      if (analysis.edge_on_cycle(static_cast<int>(e))) nonsingular = false;
    }
  });
  return nonsingular;
}

}  // namespace prelam
