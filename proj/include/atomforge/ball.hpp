#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomforge/rewriting.hpp"

namespace atomforge {

struct TilingSpec {
  int p = 4;  // polygon size
  int q = 5;  // polygons per vertex
};

// Parses "tiling p=4 q=5".
TilingSpec parse_tiling_spec(std::string_view text);

// A frame is a vertex together with a reference port. Walking a fixed port
// sequence from two frames follows two paths related by an isometry, so a
// frame stands for the isometry sending the basepoint frame to it.
struct Frame {
  int32_t v = -1;
  int32_t r = 0;
  bool valid() const { return v >= 0; }
};

enum class Transport {
  None,      // plain graph, no isometry transport
  Label,     // generator-labeled Cayley graph, ports are generators
  Rotation,  // planar rotation system, ports are counted from the reference
};

class Ball {
 public:
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(depth_.size()); }
  int degree() const { return degree_; }
  int basepoint() const { return 0; }
  Transport transport() const { return transport_; }
  bool framed() const { return transport_ != Transport::None; }
  bool labeled() const { return transport_ == Transport::Label; }
  // Cayley ball of a presentation: word lengths in group() are distances.
  bool cayley() const { return labeled() && given_names_.empty(); }
  const std::vector<std::string>& port_names() const { return port_names_; }

  int depth(int v) const { return depth_[v]; }
  // Physical port; -1 when the neighbor lies outside the ball.
  int neighbor(int v, int port) const { return adj_[static_cast<std::size_t>(v) * degree_ + port]; }
  int back_port(int v, int port) const;
  int sphere_begin(int k) const { return k > radius_ ? size() : sphere_[k]; }
  int sphere_end(int k) const { return k >= radius_ ? size() : sphere_[k + 1]; }
  int ball_end(int k) const { return sphere_end(std::min(k, radius_)); }

  std::string name(int v) const;
  std::optional<int> find(std::string_view name) const;

  // Canonical (shortlex least) geodesic code: parent and the logical port
  // taken from the parent's canonical frame.
  int parent(int v) const { return parent_[v]; }
  int parent_port(int v) const { return parent_port_[v]; }
  Frame canonical_frame(int v) const { return {v, frame_[v]}; }
  Frame base_frame() const { return {0, 0}; }

  // One step along a logical port; invalid frame if it leaves the ball.
  Frame step(Frame f, int port) const;
  // Follows the canonical code of y starting at f.
  Frame replay(Frame f, int y) const;
  // Frame g with image-of(g) composed with image-of(f) equal to the base frame.
  Frame inverse(Frame f) const;
  // Isometry composition: first apply b, then a.
  Frame compose(Frame a, Frame b) const;
  // Image of vertex y under the isometry of frame f; -1 outside the ball.
  int apply(Frame f, int y) const { return replay(f, y).v; }
  int rotations() const { return transport_ == Transport::Rotation ? degree_ : 1; }

  // Group acting simply transitively on frames: the source group for Cayley
  // balls, the rotation triangle group <g,h> for tilings, the free group on
  // the labels for labeled graph files. Null for unframed balls.
  const RewritingSystem* group() const { return group_.get(); }
  // Group element of a frame, in normal form.
  Word frame_word(Frame f) const;
  // Frame reached by reading w from the base frame; invalid if the walk leaves the ball.
  Frame word_frame(const Word& w) const;
  // Image of y under the group element w; -1 when not reachable inside the ball.
  int act(const Word& w, int y) const;

  struct Builder;

 private:
  friend struct Builder;
  int radius_ = 0;
  int degree_ = 0;
  Transport transport_ = Transport::None;
  std::vector<std::string> port_names_;
  std::vector<int32_t> adj_;
  std::vector<uint8_t> back_;
  std::vector<uint8_t> depth_;
  std::vector<int32_t> sphere_;
  std::vector<int32_t> parent_;
  std::vector<uint8_t> parent_port_;
  std::vector<uint8_t> frame_;
  // Names of graph-file vertices; Cayley and tiling names are derived codes.
  std::vector<std::string> given_names_;
  std::shared_ptr<const RewritingSystem> group_;
};

struct BallLimits {
  std::size_t max_vertices = 60'000'000;
};

Ball build_ball(const RewritingSystem& rs, int radius, const BallLimits& limits = {});
Ball build_ball(const TilingSpec& spec, int radius, const BallLimits& limits = {});
// Rotation group <g,h> of the tiling with its completed rewriting system.
std::shared_ptr<const RewritingSystem> tiling_group(const TilingSpec& spec);

struct GraphFile {
  std::string basepoint;
  std::vector<std::string> vertices;
  struct Edge {
    std::string a, b, label;
  };
  std::vector<Edge> edges;
  std::vector<std::string> involutions;
};

GraphFile parse_graph_file(std::istream& in);
GraphFile load_graph_file(const std::string& path);
Ball build_ball(const GraphFile& g, int radius, const BallLimits& limits = {});

struct Distance {
  int value = -1;
  bool exact = false;
};

// Ball BFS distance; exact iff depth(x)+depth(y) <= R.
Distance dist(const Ball& b, int x, int y);
// Distance through the isometry carrying x to the basepoint; exact whenever
// it returns a value. Falls back to dist() on unframed balls.
Distance translated_dist(const Ball& b, int x, int y);
// Truncated BFS inside the ball from one source, -1 beyond max_d.
std::vector<int> bfs(const Ball& b, int source, int max_d);
std::vector<int> multi_bfs(const Ball& b, const std::vector<int>& sources, int max_d);

struct Cone {
  std::vector<int> members;
  bool truncated = false;  // reaches the ball frontier
};
Cone cone(const Ball& b, int p);

struct ConeTypeTable {
  int truncation = 0;
  std::vector<int32_t> type;  // -1 where the profile is not computable
  std::vector<std::vector<int>> successors;  // type -> successor types
  std::vector<bool> infinite;
  std::vector<int> representative;
  int type_count() const { return static_cast<int>(infinite.size()); }
};

// Types from N-truncated profiles |xz| - |x|, z in B_N.
ConeTypeTable cone_types(const Ball& b, int truncation);
// Smallest N whose type count equals the counts at N+1 and N+2.
ConeTypeTable cone_types_auto(const Ball& b, int max_truncation = 6);
int lambda_infinity(const Ball& b, const ConeTypeTable& ct);

struct DeltaEstimate {
  double delta = 0;
  std::size_t samples = 0;
  std::size_t certified = 0;
};
DeltaEstimate estimate_delta(const Ball& b, std::size_t samples, uint64_t seed, int max_depth = -1);
// Slimness of the triangle built from canonical geodesics; -1 if uncertified.
int triangle_slimness(const Ball& b, int x, int y, int z);

void write_dot(const Ball& b, std::ostream& out, int max_depth = -1);
// Binary cache; the key is checked on load and the group is supplied by the caller.
void save_ball(const Ball& b, const std::string& key, std::ostream& out);
Ball load_ball(const std::string& key, std::istream& in, std::shared_ptr<const RewritingSystem> group);

}  // namespace atomforge
