#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "atomforge/ball.hpp"

namespace atomforge {

enum class SignatureMethod {
  Translation,   // isometry walk inside the ball, certified for depth(x) <= R-k
  CoxeterWalls,  // reflection walls through B_k, exact for every ball vertex
  Bfs,           // BFS from each point of B_k, certified for depth(x) <= R-k
};

const char* to_string(SignatureMethod m);
SignatureMethod default_signature_method(const Ball& b);

// f_x(p) = d(p,x) - d(x0,x) for p in B_k, indexed by vertex id.
std::vector<int> f_signature(const Ball& b, int x, int k);

struct AtomOptions {
  int levels = 5;
  // A class is infinite when it has members within `margin` of each of the
  // last three certification horizons.
  int margin = 0;
  // Proximal tolerance; negative means 4*delta + 2.
  double proximal_tolerance = -1;
  double delta = 1;
  SignatureMethod method = SignatureMethod::Translation;
  bool method_set = false;
};

struct LevelClass {
  std::vector<int8_t> signature;  // f on B_k
  std::vector<int32_t> members;   // sorted, up to the horizon
  int min_depth = 0;
  int max_depth = 0;
  bool infinite = false;
};

struct Partition {
  int level = 0;
  int horizon = 0;  // deepest certified depth
  std::vector<LevelClass> classes;
  std::vector<int32_t> class_of;  // per vertex id below ball_end(horizon)
};

// Groups certified vertices by their level-k signature.
Partition partition_level(const Ball& b, int k, const AtomOptions& opt = {});
// All levels 0..K at once; shares work across levels where the method allows.
std::vector<Partition> partition_levels(const Ball& b, int K, const AtomOptions& opt = {});

struct BoundarySets {
  std::vector<int32_t> tip, nearest, visible, proximal;
};

struct AtomNode {
  int id = 0;
  int level = 0;
  int parent = -1;
  std::vector<int> children;
  std::vector<int32_t> members;
  std::vector<int8_t> signature;
  BoundarySets sets;
  int hook = 0;  // d(B_k, a)
  int type = -1;
  int symbol = -1;  // index among the children of the type representative
};

struct AtomTree {
  int radius = 0;
  int levels = 0;
  SignatureMethod method = SignatureMethod::Translation;
  std::vector<int> horizon;  // per level
  std::vector<AtomNode> nodes;
  std::vector<std::vector<int>> level_nodes;      // atom ids per level
  std::vector<std::vector<LevelClass>> finite;    // finite classes per level
  std::vector<std::vector<int32_t>> atom_of;      // per level: vertex -> atom id or -1
  int lambda_a = 0;
  int lambda_a_level = 0;
  double proximal_tolerance = 0;
  int margin = 0;

  const AtomNode& node(int id) const { return nodes[id]; }
  const std::vector<int>& level(int k) const { return level_nodes[k]; }
  // Atom of vertex v at level k, -1 if none or uncertified.
  int atom_at(int k, int v) const {
    const auto& a = atom_of[k];
    return v < static_cast<int>(a.size()) ? a[v] : -1;
  }
};

// Distances between the points of B_k (exact by translation or BFS).
std::vector<int8_t> ball_distance_matrix(const Ball& b, int k);

BoundarySets boundary_sets(const Ball& b, int k, const std::vector<int8_t>& signature,
                           const std::vector<int32_t>& members, const std::vector<int8_t>& dk, double tolerance);

AtomTree build_tree(const Ball& b, const AtomOptions& opt = {});

struct HookingConstant {
  int value = 0;
  int level = 0;  // level at which the running maximum last increased
};
HookingConstant hooking_constant(const AtomTree& t);

void write_tree_json(const Ball& b, const AtomTree& t, std::ostream& out);
void write_tree_dot(const Ball& b, const AtomTree& t, std::ostream& out);
// Binary cache; the key is checked on load.
void save_tree(const AtomTree& t, const std::string& key, std::ostream& out);
AtomTree load_tree(const std::string& key, std::istream& in);

}  // namespace atomforge
