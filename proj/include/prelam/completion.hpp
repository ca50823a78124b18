#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prelam/conditions.hpp"
#include "prelam/regions.hpp"

namespace prelam {

/// A disconnecting edge (a bridge) or disconnecting pair (two successive
/// edges of a simple cycle) of a linkage graph, with the two components its
/// removal leaves.
struct Disconnector {
  enum class Kind { edge, pair };
  Kind kind = Kind::edge;
  Sign sign = Sign::plus;
  int region = 0;
  int e1 = -1;
  int e2 = -1;            // pair kind only
  int shared_vertex = -1; // pair kind only
  std::vector<int> component_a;  // vertex ids; for pairs, the side with the shared vertex
  std::vector<int> component_b;
  bool is_cut = false;  // both components have >= 2 vertices

  std::string describe(const LinkageGraph& graph, const LamInstance& instance) const;
};

/// All bridges (edge kind) and all successive edge pairs of each simple
/// cycle (pair kind).  Refuses graphs that fail the simple cycle condition,
/// where pairs are ill-defined.
std::vector<Disconnector> disconnectors(const LinkageGraph& graph);

/// The crossing geodesic of a disconnector.  Low-valence cases return an
/// existing boundary side verbatim; otherwise the chord through the
/// midpoints of the two gap arcs separating the component spans.  The
/// result is always checked against its witness set: it must cross exactly
/// the opposite-sign chords defining the disconnector's edge(s).
struct CrossingGeodesic {
  Chord chord;
  bool existing = false;  // coincides with a boundary side already present
  int existing_chord = -1;
  std::vector<int> witnesses;
  // Gap arcs used by the canonical rule (degenerate when components share a
  // corner point); meaningful when !existing.
  CirclePoint gap1_from, gap1_to, gap2_from, gap2_to;
};

CrossingGeodesic crossing_geodesic(const Disconnector& d, const LinkageGraph& graph,
                                   const LamInstance& instance);

struct CompletionLogEntry {
  enum class Action { added, skipped_existing, upgraded_phantom };
  Action action;
  Sign sign = Sign::plus;
  std::string region_id;
  std::string disconnector;
  std::string chord;
  std::string gaps;
};

struct CompletionResult {
  LamInstance instance;
  std::vector<CompletionLogEntry> log;
  ConditionReport precheck;
  std::string notes;
};

/// The completion operator: upgrades every phantom that is not a
/// high-valence side to a leaf (declared closure leaves join the
/// completion), then adds the crossing geodesic of every disconnecting pair
/// and of every disconnecting edge with two geodesic vertices, over all
/// genuine regions of both signs, skipping results identical to existing
/// chords.  Edges with an ideal vertex contribute nothing.
CompletionResult complete(const LamInstance& instance);

/// Inserts k nested leaf chords straddling `pivot` inside the segment's
/// arc, each accumulated on its pivot side: a finite representative of an
/// alternative extension that the completion does not contain.
LamInstance alternative_extension(const LamInstance& instance, const Region& region,
                                  const IdealSegment& segment, const CirclePoint& pivot, int k);

}  // namespace prelam
