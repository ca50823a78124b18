#pragma once

#include <array>
#include <string>
#include <vector>

#include "prelam/instance.hpp"

namespace prelam {

/// One entry of a region boundary: a chord side (with the flag telling
/// which side faces the region) or a circle arc between consecutive
/// corner points.  Degenerate arcs are omitted.
struct BoundaryItem {
  enum class Kind { side, arc };
  Kind kind = Kind::arc;
  int chord = -1;             // side: index into the sign's chord family
  bool region_on_ab = false;  // side: region faces the (a,b) arc of the chord
  CirclePoint from, to;       // arc endpoints, counterclockwise
};

/// A complementary region of one sign's chord family: a face of the disc
/// cut along those chords.  The boundary is listed in counterclockwise
/// cyclic order.  An empty boundary denotes the whole disc (no chords).
struct Region {
  Sign sign = Sign::plus;
  int index = 0;
  std::vector<BoundaryItem> boundary;
  bool genuine = true;
  int inner_chord = -1;  // region lies on the (a,b) side of this chord; -1 for the root face

  std::string id() const { return (sign == Sign::plus ? "p" : "m") + std::to_string(index); }
};

struct RegionSet {
  Sign sign = Sign::plus;
  std::vector<Region> regions;
  // Per chord of the family: region index on the (a,b) side, then the (b,a) side.
  std::vector<std::array<int, 2>> chord_region;
};

/// All faces of the disc cut along the chords of the given sign.  The count
/// is always (number of chords) + 1.  Genuineness honors the instance mode.
RegionSet complementary_regions(const LamInstance& instance, Sign sign);

/// Nesting forest of one family's endpoint intervals [a,b]: parent[i] is
/// the innermost chord strictly containing chord i, or -1.  Well defined
/// because same-sign chords never cross.
std::vector<int> laminar_parents(const std::vector<Chord>& chords);

struct IdealMember {
  int chord;           // opposite-sign chord index
  CirclePoint point;   // its endpoint inside the region's arc
  int crossing_chord;  // boundary side crossed by the member
};

/// A maximal run of opposite-sign endpoints inside one region arc, all of
/// whose chords cross the same boundary side.  The span is closed and may
/// degenerate to a single point.
struct IdealSegment {
  int region = 0;
  int arc_item = 0;  // boundary item index of the containing arc
  CirclePoint first, last;
  std::vector<IdealMember> members;
  int crossing_chord = -1;
};

struct IdealSegmentsResult {
  std::vector<IdealSegment> segments;
  std::vector<Violation> defects;  // opposite chords inside the region crossing no side
};

IdealSegmentsResult ideal_segments(const Region& region, const LamInstance& instance);

struct LinkageVertex {
  enum class Kind { geodesic, ideal };
  Kind kind = Kind::geodesic;
  int boundary_item = -1;  // side item (geodesic) or arc item (ideal)
  int chord = -1;          // geodesic: chord index
  int segment = -1;        // ideal: index into LinkageGraph::segments
};

struct LinkageEdge {
  int u = 0, v = 0;
  std::vector<int> witnesses;  // opposite-sign chord indices
};

/// The linkage graph of a region against the opposite family: vertices are
/// the region's chord sides and ideal segments in boundary cyclic order;
/// two vertices are joined when some opposite-sign chord intersects both.
struct LinkageGraph {
  Sign sign = Sign::plus;
  int region = 0;
  std::vector<LinkageVertex> vertices;
  std::vector<LinkageEdge> edges;
  std::vector<std::vector<int>> adjacency;  // vertex -> incident edge indices
  std::vector<IdealSegment> segments;
  std::vector<Violation> defects;

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  int find_edge(int u, int v) const;
};

LinkageGraph linkage_graph(const Region& region, const LamInstance& instance);

/// Stable label of a linkage vertex, independent of construction order:
/// geodesic vertices by chord endpoints, ideal vertices by containing arc
/// and crossed side.
std::string vertex_label(const LinkageGraph& graph, int v, const LamInstance& instance);

/// Canonical text form of a linkage graph (labelled vertices in cyclic
/// order normalized, plus the sorted labelled edge set).  Two graphs are
/// isomorphic as labelled graphs iff their forms match.
std::string canonical_graph_form(const LinkageGraph& graph, const LamInstance& instance);

/// Opposite-sign chords crossing the given leaf, sorted along the leaf
/// oriented from its smaller endpoint.  The comparator is the separation
/// order: a chord precedes another when it separates the start endpoint
/// from it, with the forced tie-break for chords sharing their near
/// endpoint.
std::vector<int> traversal(const LamInstance& instance, Sign sign, int chord_index);

/// The separation comparator itself (exposed for property tests).
bool traversal_precedes(const LamInstance& instance, const Chord& leaf, int beta, int gamma);

}  // namespace prelam
