#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "atomforge/atoms.hpp"
#include "atomforge/ball.hpp"

namespace atomforge {

// Exact distance between ball vertices: the isometry walk first, then word
// length on Cayley balls, then the ball BFS with its guard.
Distance vertex_distance(const Ball& b, int x, int y);

enum class Infinity {
  None,        // finite value
  Structural,  // no path exists, proven inside the ball
  Truncation,  // unknown beyond the ball or the last built level
  Absent,      // not computed
};
const char* to_string(Infinity i);

struct Extended {
  int value = -1;
  bool exact = false;
  Infinity infinity = Infinity::Absent;
  bool finite() const { return infinity == Infinity::None; }
};

// Minimum over member pairs (or tip pairs) of the graph distance. Members
// are cut at a depth small enough to certify the value; exact=false means
// the value is only an upper bound.
Distance d_gamma(const Ball& b, const AtomTree& t, int a, int c, bool on_tips = false);
// d_F approximated from below by the least d_gamma over descendant pairs at
// the deepest built level; exact only when that level is deep enough for the
// value to bound d_B. Truncation when a has no built children.
Extended d_f(const Ball& b, const AtomTree& t, int a, int c);
// Distance in the subgraph induced on the complement of B_{k-1}.
Extended d_b(const Ball& b, const AtomTree& t, int a, int c, bool on_tips = false);
// Sup norm of the signature difference on B_k.
int d_h(const AtomTree& t, int a, int c);
// Hausdorff distance between the tip sets.
Distance t_hausdorff(const Ball& b, const AtomTree& t, int a, int c);

struct Product {
  double value = 0;
  bool exact = false;
};
// Largest Gromov product over tip pairs.
Product gromov_product_atoms(const Ball& b, const AtomTree& t, int a, int c);
double visual_value(const Product& p, double beta);

struct NearPair {
  int a = 0, b = 0;
  int d = 0;
  bool exact = false;
};
// Ordered pairs of level-k atoms with d_gamma <= cap (tip d_gamma with
// on_tips), diagonal included, sorted by (a, b).
std::vector<NearPair> near_pairs(const Ball& b, const AtomTree& t, int k, int cap, bool on_tips = false);
// Delta_k for the gluing constant lambda.
std::vector<NearPair> gluing_pairs(const Ball& b, const AtomTree& t, int k, int lambda);

struct LevelTrace {
  int level = 0;
  int u = 0, v = 0;  // atom ids
  Distance d_gamma, tip_gamma;
  Extended tip_b;
  Product product;
};

struct DivergenceProfile {
  std::vector<LevelTrace> levels;
  int onset = -1;  // first level with tip d_gamma > lambda, -1 if none
  double slope = 0;  // least-squares slope of log tip d_B after onset
  int fit_points = 0;
  int product_level = -1;  // last level with tip d_gamma <= threshold
  bool glued_through = false;
};

// Root paths of two codings given by their deepest atoms.
DivergenceProfile divergence_profile(const Ball& b, const AtomTree& t, int u, int v, int lambda, int threshold);
// Atom ids from level 1 down to the given atom.
std::vector<int> root_path(const AtomTree& t, int id);

// C' = C + 2(lambda_a + 4 delta + 2): product lower bound offset for tip traces bounded by C.
double sconj_constant(double c, int lambda_a, double delta);

void write_pairs_json(const Ball& b, const AtomTree& t, const std::vector<std::vector<NearPair>>& levels, int lambda,
                      double beta, std::ostream& out);
void write_profile_csv(const Ball& b, const AtomTree& t, const DivergenceProfile& p, std::ostream& out);

}  // namespace atomforge
