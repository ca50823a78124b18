#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prelam/regions.hpp"

namespace prelam {

/// Biconnected-component decomposition of a linkage graph, with the
/// derived facts the condition checks need.
struct GraphAnalysis {
  std::vector<int> edge_bcc;
  int bcc_count = 0;
  std::vector<int> bcc_edges;
  std::vector<int> bcc_vertices;
  std::vector<char> vertex_on_cycle;
  bool connected = true;
  bool simple_cycle_ok = true;  // every component a bridge or a simple cycle
  int offending_edge = -1;      // an edge on two cycles, when !simple_cycle_ok

  bool edge_on_cycle(int e) const { return bcc_edges[edge_bcc[e]] > 1; }
  bool bcc_is_simple_cycle(int b) const { return bcc_edges[b] > 1 && bcc_edges[b] == bcc_vertices[b]; }
};

GraphAnalysis analyze_graph(const LinkageGraph& graph);

/// Two vertex-disjoint simple cycles through the given edge, as vertex index
/// sequences.  Defined when the edge lies on at least two cycles.
std::optional<std::pair<std::vector<int>, std::vector<int>>> two_cycles_through(
    const LinkageGraph& graph, int edge);

struct ConnectednessResult {
  bool pass = true;
  std::vector<std::vector<ChordRef>> components;
};

/// Crossing-graph connectivity over all chords of both signs (leaves and
/// phantoms; phantoms proxy for omitted accumulating leaves).
ConnectednessResult check_connectedness(const LamInstance& instance);

struct CycleOffense {
  std::string region_id;
  std::string edge_label;
  std::vector<std::string> cycle1, cycle2;
};

struct SimpleCycleResult {
  bool pass = true;
  std::vector<CycleOffense> offenses;
};

SimpleCycleResult check_simple_cycle(const LamInstance& instance);

enum class HighValenceClause { i, ii, iii, iv };
const char* clause_label(HighValenceClause c);

struct HighValenceViolation {
  ChordRef chord;
  HighValenceClause clause;
  std::vector<std::string> regions;
};

/// Leaves triggering any of the four forbidden valence patterns over
/// genuine regions.  Phantoms are never flagged.
std::vector<HighValenceViolation> check_high_valence(const LamInstance& instance);

struct SharedEndpointViolation {
  CirclePoint endpoint;
  std::array<ChordRef, 3> leaves;
  ChordRef crosser;
};

std::vector<SharedEndpointViolation> check_shared_endpoint(const LamInstance& instance);

struct ConditionReport {
  std::string header;
  ConnectednessResult connectedness;
  SimpleCycleResult simple_cycle;
  std::vector<HighValenceViolation> high_valence;
  std::vector<SharedEndpointViolation> shared_endpoint;
  bool overall = false;
};

/// The four completability hypotheses aggregated.  Density of endpoints is
/// an assumed modeling premise (stated in the report header), not a check.
ConditionReport check_completable(const LamInstance& instance);

struct RegionDiagnosis {
  std::string region_id;
  enum class Kind { ideal_polygon, one_root, failure } kind = Kind::failure;
  std::string detail;
  int root_chord = -1;  // one_root: the root side
};

struct RealizationReport {
  bool pass = true;
  std::vector<RegionDiagnosis> regions;
  std::vector<std::pair<std::string, std::string>> coupled;  // plus/minus region ids
  std::vector<std::string> failures;
};

/// Realization conditions: every genuine region is an ideal polygon (cycle
/// graph, all sides leaves) or a one-root region (star rooted at a phantom
/// crossed by every traversing opposite leaf); ideal polygons pair up across
/// signs with interleaved vertices and no leaf bounds two of them.
RealizationReport check_realization(const LamInstance& instance);

/// True iff no genuine region's linkage graph contains a cycle; predicts a
/// nonsingular completion.
bool classify_nonsingular(const LamInstance& instance);

/// Internal shared machinery, exposed for the completion operator: the
/// high-valence clauses evaluated for every side (phantoms included),
/// over genuine regions.
struct SideFlags {
  std::vector<char> plus;
  std::vector<char> minus;
  const std::vector<char>& of(Sign s) const { return s == Sign::plus ? plus : minus; }
};
SideFlags high_valence_side_flags(const LamInstance& instance);

}  // namespace prelam
