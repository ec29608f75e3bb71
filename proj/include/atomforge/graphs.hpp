#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atomforge/atoms.hpp"
#include "atomforge/ball.hpp"
#include "atomforge/metrics.hpp"

namespace atomforge {

// Constants entering the edge thresholds; negative means not computed.
struct GraphConstants {
  int lambda_inf = -1;
  double delta = -1;
  int lambda_a = 0;
  bool complete() const { return lambda_inf >= 0 && delta >= 0; }
  int delta4() const;  // ceil(4 delta)
};

struct AugmentedGraph {
  int levels = 0;
  int threshold = 0;
  std::string provenance;  // formula | override
  bool on_tips = false;
  std::vector<std::pair<int, int>> vertical;    // (parent, child)
  std::vector<std::pair<int, int>> horizontal;  // a < b, same level
  int uncertified = 0;  // horizontal edges whose distance is only an upper bound
  std::vector<std::vector<int>> adjacency;  // over atom ids, both kinds
};

// 2(lambda_inf + ceil(4 delta) + lambda_a) + 7
int atoms_threshold(const GraphConstants& c);
// 2 lambda_e + ceil(4 delta) + 2 lambda_a
int tips_threshold(const GraphConstants& c, int lambda_e);

// Horizontal edges join same-level atoms with d_gamma <= lambda_e, or the
// formula threshold when lambda_e is not given.
AugmentedGraph graph_of_atoms(const Ball& b, const AtomTree& t, std::optional<int> lambda_e, const GraphConstants& c);
// Horizontal edges join same-level atoms whose tips are within tips_threshold.
AugmentedGraph graph_of_tips(const Ball& b, const AtomTree& t, int lambda_e, const GraphConstants& c);

struct Slice {
  int level = 0;
  std::vector<int> vertices;  // atom ids
  std::vector<std::pair<int, int>> edges;
};
Slice horizontal_slice(const AtomTree& t, const AugmentedGraph& g, int k);

struct StructureReport {
  bool spanning_tree = false;
  bool level_bijection = false;
  bool augmented = false;
  int max_horizontal_degree = 0;
  std::vector<std::string> violations;
  bool ok() const { return spanning_tree && level_bijection && augmented; }
};
StructureReport check_structure(const AtomTree& t, const AugmentedGraph& g);
// Every edge of sub is an edge of super.
bool is_subgraph(const AugmentedGraph& sub, const AugmentedGraph& super);

struct QiReport {
  std::size_t pairs = 0;
  bool sampled = false;
  uint64_t seed = 0;
  // graph distance against d(x_a, x_b) for the least tip points
  double ratio_lo = 0, ratio_hi = 0;  // over pairs with both distances positive
  int additive = 0;                   // max |d_graph - d_ball|
  // same comparison for tips under the Hausdorff distance
  int hausdorff_gap = 0;  // max |t_hausdorff - d(x_a, x_b)|
  int uncertified = 0;
};
QiReport qi_distortion_report(const Ball& b, const AtomTree& t, const AugmentedGraph& g, std::size_t samples,
                              uint64_t seed);

struct QuasiDensity {
  int max_distance = -1;  // farthest scanned vertex from the nearest tip
  int witness = -1;       // a vertex realizing it
  int domain_depth = 0;   // vertices with depth <= domain_depth are scanned
  std::size_t scanned = 0;
  double bound = 0;
  bool holds() const { return max_distance >= 0 && max_distance <= bound; }
};
// lambda_inf + 4 delta + 3 + lambda_a against the distance to tips of all levels.
QuasiDensity quasi_density(const Ball& b, const AtomTree& t, const GraphConstants& c);

struct GhRow {
  int level = 0;
  std::size_t pairs = 0;
  double median_gap = 0;  // median |(u_k|v_k) - (u_deep|v_deep)|
  double max_gap = 0;
  double band = 0;  // beta^max_gap, multiplicative band of the visual value
};
struct GhReport {
  int deep = 0;
  double beta = 2;
  uint64_t seed = 0;
  bool sampled = false;
  std::vector<GhRow> rows;
};
GhReport gh_distortion_report(const Ball& b, const AtomTree& t, int deep, double beta, std::size_t samples,
                              uint64_t seed);

void write_slice_dot(const Ball& b, const AtomTree& t, const Slice& s, std::ostream& out);
// Whole augmented graph, ranked by level.
void write_graph_dot(const Ball& b, const AtomTree& t, const AugmentedGraph& g, std::ostream& out);
void write_graph_json(const Ball& b, const AtomTree& t, const AugmentedGraph& g, std::ostream& out);
void write_reports_json(const QiReport& qi, const QuasiDensity& qd, const GhReport& gh, const StructureReport& st,
                        std::ostream& out);

}  // namespace atomforge
