#include "prelam/plane.hpp"

#include <algorithm>
#include <set>

#include "prelam/conditions.hpp"

namespace prelam {

std::vector<IdealPolygon> find_ideal_polygons(const LamInstance& instance, Sign sign) {
  std::vector<IdealPolygon> polygons;
  const auto& own = instance.family(sign);
  RegionSet set = complementary_regions(instance, sign);
  std::vector<int> polygon_of_chord(own.size(), -1);

  for (const Region& region : set.regions) {
    if (!region.genuine) continue;
    LinkageGraph graph = linkage_graph(region, instance);
    if (graph.vertices.size() < 3) continue;
    bool cycle = true;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
      if (graph.vertices[v].kind != LinkageVertex::Kind::geodesic ||
          graph.degree(static_cast<int>(v)) != 2 ||
          !own[static_cast<std::size_t>(graph.vertices[v].chord)].is_leaf()) {
        cycle = false;
      }
    }
    if (!cycle || !analyze_graph(graph).connected) continue;

    IdealPolygon polygon;
    polygon.sign = sign;
    polygon.region = region.index;
    polygon.region_id = region.id();
    std::set<std::string> corner_set;
    for (const auto& v : graph.vertices) {
      polygon.side_chords.push_back(v.chord);
      corner_set.insert(own[static_cast<std::size_t>(v.chord)].a.str());
      corner_set.insert(own[static_cast<std::size_t>(v.chord)].b.str());
      if (polygon_of_chord[static_cast<std::size_t>(v.chord)] != -1) {
        throw Error("adjacent ideal polygons share leaf " +
                    own[static_cast<std::size_t>(v.chord)].str());
      }
      polygon_of_chord[static_cast<std::size_t>(v.chord)] = static_cast<int>(polygons.size());
    }
    for (const auto& s : corner_set) polygon.corners.push_back(CirclePoint::parse(s));
    std::sort(polygon.corners.begin(), polygon.corners.end());
    polygons.push_back(std::move(polygon));
  }
  return polygons;
}

namespace {

bool polygons_interleave(const IdealPolygon& p, const IdealPolygon& q) {
  if (p.corners.size() != q.corners.size() || p.corners.empty()) return false;
  struct Tagged {
    CirclePoint point;
    bool in_p;
  };
  std::vector<Tagged> all;
  for (const auto& c : p.corners) all.push_back({c, true});
  for (const auto& c : q.corners) all.push_back({c, false});
  std::sort(all.begin(), all.end(),
            [](const Tagged& x, const Tagged& y) { return x.point < y.point; });
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i].point == all[i + 1].point) return false;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].in_p == all[(i + 1) % all.size()].in_p) return false;
  }
  return true;
}

}  // namespace

CrossingSpace crossing_space(const LamInstance& instance) {
  CrossingSpace space;
  space.plus_polygons = find_ideal_polygons(instance, Sign::plus);
  space.minus_polygons = find_ideal_polygons(instance, Sign::minus);

  std::vector<int> plus_poly(instance.plus.size(), -1);
  std::vector<int> minus_poly(instance.minus.size(), -1);
  for (std::size_t p = 0; p < space.plus_polygons.size(); ++p) {
    for (int c : space.plus_polygons[p].side_chords) plus_poly[static_cast<std::size_t>(c)] = static_cast<int>(p);
  }
  for (std::size_t p = 0; p < space.minus_polygons.size(); ++p) {
    for (int c : space.minus_polygons[p].side_chords) minus_poly[static_cast<std::size_t>(c)] = static_cast<int>(p);
  }

  // Class key: each factor is its polygon when it has one, else itself.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> grouped;
  for (std::size_t i = 0; i < instance.plus.size(); ++i) {
    if (!instance.plus[i].is_leaf()) continue;
    for (std::size_t j = 0; j < instance.minus.size(); ++j) {
      if (!instance.minus[j].is_leaf()) continue;
      if (!crosses(instance.plus[i], instance.minus[j])) continue;
      space.points.push_back({static_cast<int>(i), static_cast<int>(j)});
      int pk = plus_poly[i] >= 0 ? -(plus_poly[i] + 1) : static_cast<int>(i) + 1;
      int mk = minus_poly[j] >= 0 ? -(minus_poly[j] + 1) : static_cast<int>(j) + 1;
      grouped[{pk, mk}].push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }

  for (auto& [key, members] : grouped) {
    CrossingClass cls;
    cls.points = members;
    bool plus_is_poly = key.first < 0;
    bool minus_is_poly = key.second < 0;
    if (plus_is_poly) cls.plus_polygon = -key.first - 1;
    if (minus_is_poly) cls.minus_polygon = -key.second - 1;
    if (!plus_is_poly && !minus_is_poly) {
      cls.kind = ClassKind::singleton;
      cls.size_consistent = members.size() == 1;
    } else if (plus_is_poly != minus_is_poly) {
      cls.kind = ClassKind::polygon_side;
      cls.size_consistent = members.size() == 2;
    } else {
      const auto& pp = space.plus_polygons[static_cast<std::size_t>(cls.plus_polygon)];
      const auto& mp = space.minus_polygons[static_cast<std::size_t>(cls.minus_polygon)];
      if (polygons_interleave(pp, mp)) {
        cls.kind = ClassKind::singular;
        cls.size_consistent = members.size() == 2 * pp.side_chords.size() &&
                              pp.side_chords.size() > 2;
      } else {
        cls.kind = ClassKind::uncoupled_pair;
        cls.size_consistent = members.size() == 4;
      }
    }
    int id = static_cast<int>(space.classes.size());
    for (const auto& pt : members) space.class_of[pt] = id;
    if (cls.kind == ClassKind::singular) space.singular_classes.push_back(id);
    space.classes.push_back(std::move(cls));
  }
  return space;
}

std::vector<int> leaf_order(const LamInstance& instance, const CrossingSpace& space, Sign sign,
                            int chord_index) {
  std::vector<int> crossed = traversal(instance, sign, chord_index);
  std::vector<int> order;
  for (int other : crossed) {
    std::pair<int, int> point = sign == Sign::plus ? std::pair<int, int>{chord_index, other}
                                                   : std::pair<int, int>{other, chord_index};
    auto it = space.class_of.find(point);
    if (it == space.class_of.end()) continue;  // phantom factor: not a crossing-space point
    int cls = it->second;
    if (!order.empty() && order.back() == cls) continue;
    order.push_back(cls);
  }
  std::set<int> seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (seen.count(order[i])) {
      throw Error("leaf order: a class meets the leaf in non-adjacent crossings");
    }
    seen.insert(order[i]);
  }
  return order;
}

CoupledPolygonsResult coupled_polygons(const LamInstance& instance) {
  CoupledPolygonsResult result;
  CrossingSpace space = crossing_space(instance);
  std::vector<int> partner_plus(space.plus_polygons.size(), -1);
  std::vector<int> partner_minus(space.minus_polygons.size(), -1);

  for (std::size_t i = 0; i < space.plus_polygons.size(); ++i) {
    for (std::size_t j = 0; j < space.minus_polygons.size(); ++j) {
      if (!polygons_interleave(space.plus_polygons[i], space.minus_polygons[j])) continue;
      if (partner_plus[i] != -1 || partner_minus[j] != -1) {
        result.failures.push_back("polygon pairing is not bijective");
        continue;
      }
      partner_plus[i] = static_cast<int>(j);
      partner_minus[j] = static_cast<int>(i);
      result.pairs.push_back({space.plus_polygons[i].region_id, space.minus_polygons[j].region_id,
                              static_cast<int>(space.plus_polygons[i].side_chords.size())});
    }
  }
  for (std::size_t i = 0; i < space.plus_polygons.size(); ++i) {
    if (partner_plus[i] == -1) {
      result.failures.push_back("unpaired ideal polygon " + space.plus_polygons[i].region_id);
    }
  }
  for (std::size_t j = 0; j < space.minus_polygons.size(); ++j) {
    if (partner_minus[j] == -1) {
      result.failures.push_back("unpaired ideal polygon " + space.minus_polygons[j].region_id);
    }
  }
  // Each coupled pair must be one singular class.
  if (result.failures.empty() && result.pairs.size() != space.singular_classes.size()) {
    result.failures.push_back("coupled pairs do not match singular classes");
  }
  return result;
}

CirclePoint MapTable::apply(const CirclePoint& p) const {
  for (const auto& [from, to] : entries) {
    if (from == p) return to;
  }
  throw Error("map table undefined at " + p.str());
}

bool MapTable::defined_at(const CirclePoint& p) const {
  for (const auto& [from, to] : entries) {
    if (from == p) return true;
  }
  return false;
}

namespace {

std::vector<CirclePoint> instance_endpoints(const LamInstance& instance) {
  std::vector<CirclePoint> points;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (const auto& c : instance.family(sign)) {
      points.push_back(c.a);
      points.push_back(c.b);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

LamInstance transport(const LamInstance& instance, const MapTable& map) {
  std::vector<CirclePoint> domain = instance_endpoints(instance);
  std::vector<CirclePoint> images;
  for (const auto& p : domain) {
    if (!map.defined_at(p)) throw Error("transport: map undefined at endpoint " + p.str());
    images.push_back(map.apply(p));
  }
  // Injective and cyclic-order-preserving: the image of the sorted domain
  // must be strictly increasing up to one cyclic wrap.
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) throw Error("transport: map is not injective");
    }
  }
  if (images.size() >= 3) {
    // The image of the ascending domain must be cyclically sorted: exactly
    // one descent around the circle.
    int descents = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[(i + 1) % images.size()] < images[i]) ++descents;
    }
    if (descents != 1) throw Error("transport: map does not preserve cyclic order");
  }

  LamInstance out;
  out.mode = instance.mode;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (const auto& c : instance.family(sign)) {
      out.family(sign).push_back(Chord(map.apply(c.a), map.apply(c.b), sign, c.status,
                                       c.acc_ab, c.acc_ba));
    }
  }
  out = out.canonicalized();
  require_valid(out);
  return out;
}

namespace {

std::set<std::pair<std::string, std::string>> endpoint_pairs(const std::vector<Chord>& fam) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& c : fam) out.insert({c.a.str(), c.b.str()});
  return out;
}

}  // namespace

InvarianceResult check_invariance(const LamInstance& instance, const MapTable& map) {
  LamInstance moved = transport(instance, map);
  InvarianceResult result;
  auto p0 = endpoint_pairs(instance.plus);
  auto m0 = endpoint_pairs(instance.minus);
  auto p1 = endpoint_pairs(moved.plus);
  auto m1 = endpoint_pairs(moved.minus);
  if (p0 == p1 && m0 == m1) {
    result.invariant = true;
  } else if (p0 == m1 && m0 == p1) {
    result.invariant = true;
    result.sign_swapped = true;
  }
  return result;
}

}  // namespace prelam
