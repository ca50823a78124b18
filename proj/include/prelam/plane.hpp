#pragma once

#include <map>
#include <string>
#include <vector>

#include "prelam/regions.hpp"

namespace prelam {

/// An ideal polygon: a genuine region whose linkage graph is a cycle with
/// every side a leaf.
struct IdealPolygon {
  Sign sign = Sign::plus;
  int region = 0;
  std::string region_id;
  std::vector<int> side_chords;
  std::vector<CirclePoint> corners;
};

/// Ideal polygons of one sign; throws when a leaf bounds two of them.
std::vector<IdealPolygon> find_ideal_polygons(const LamInstance& instance, Sign sign);

enum class ClassKind {
  singleton,       // neither chord bounds an ideal polygon
  polygon_side,    // one factor runs over two sides of one polygon
  uncoupled_pair,  // four points from two uncoupled polygons
  singular         // 2k points from a coupled pair, k > 2
};

struct CrossingClass {
  std::vector<std::pair<int, int>> points;  // (plus chord, minus chord)
  ClassKind kind = ClassKind::singleton;
  int plus_polygon = -1;  // index into the polygon list, when applicable
  int minus_polygon = -1;
  bool size_consistent = true;  // class size matches the taxonomy for its kind
};

/// The combinatorial skeleton of the bifoliated plane: all crossing pairs
/// of leaves, identified when their factors are sides of a common ideal
/// polygon.
struct CrossingSpace {
  std::vector<std::pair<int, int>> points;
  std::map<std::pair<int, int>, int> class_of;
  std::vector<CrossingClass> classes;
  std::vector<int> singular_classes;
  std::vector<IdealPolygon> plus_polygons, minus_polygons;
};

CrossingSpace crossing_space(const LamInstance& instance);

/// The quotient of the leaf's traversal under the crossing-space classes,
/// with the induced total order.  Throws if a class meets the leaf in
/// non-adjacent crossings.
std::vector<int> leaf_order(const LamInstance& instance, const CrossingSpace& space, Sign sign,
                            int chord_index);

struct CoupledPair {
  std::string plus_region, minus_region;
  int sides = 0;  // prong order k
};

struct CoupledPolygonsResult {
  std::vector<CoupledPair> pairs;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Bijective interleaved pairing of plus and minus ideal polygons; each
/// pair corresponds to one singular class of the crossing space.
CoupledPolygonsResult coupled_polygons(const LamInstance& instance);

/// A cyclic-order-preserving endpoint bijection, given as a finite table.
struct MapTable {
  std::vector<std::pair<CirclePoint, CirclePoint>> entries;

  CirclePoint apply(const CirclePoint& p) const;
  bool defined_at(const CirclePoint& p) const;
};

/// Relabels all chord endpoints through the table.  Fails if the table is
/// not defined on every endpoint or does not preserve cyclic order.
LamInstance transport(const LamInstance& instance, const MapTable& map);

struct InvarianceResult {
  bool invariant = false;   // equal up to the global sign swap
  bool sign_swapped = false;
};

/// Whether transport(instance, map) equals the instance as sets of signed
/// endpoint pairs, allowing the global sign swap (reported separately).
InvarianceResult check_invariance(const LamInstance& instance, const MapTable& map);

}  // namespace prelam
