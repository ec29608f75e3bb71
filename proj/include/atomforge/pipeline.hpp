#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atomforge/ball.hpp"

namespace atomforge {

struct RunConfig {
  std::string source_kind;  // presentation | tiling | graph
  std::string source;       // resolved path, or "p q" for tilings
  int radius = -1;
  int levels = 5;
  int lambda = 1;
  std::optional<int> lambda_e;  // formula threshold when unset
  double beta = 2;
  int truncation = -1;  // cone-type truncation, -1 picks it automatically
  int margin = 0;
  std::string method = "auto";  // auto | translation | walls | bfs
  bool automorphisms = true;
  bool tips_graph = true;
  int delta_samples = 2000;
  int qi_samples = 10000;
  int gh_samples = 500;
  uint64_t seed = 1;
  std::string output;
  std::vector<std::string> exports;
  // per key: default | override, with where the override came from
  std::map<std::string, std::string> provenance;
};

// Line-oriented "key: value" text; relative paths resolve against base_dir.
RunConfig parse_config(std::istream& in, const std::string& base_dir);
RunConfig load_config(const std::string& path);
// Marks a command-line override and revalidates.
void set_override(RunConfig& cfg, const std::string& key, long long value);
void validate_config(const RunConfig& cfg);

// Stable 64-bit content hash (FNV-1a) in hex.
std::string content_hash(const std::string& data);

struct RunSummary {
  std::vector<std::string> artifacts;  // relative to the output directory
  std::string manifest;                // path
};

// Runs every stage, writing caches, exports and manifest.json into cfg.output.
RunSummary run_pipeline(const RunConfig& cfg, std::ostream& log);

// Regenerates one export family from the cached stages.
// what: tree | slice | type-automaton | gluing-automaton | metrics
std::vector<std::string> export_artifacts(const RunConfig& cfg, const std::string& what, std::ostream& log);

// Accept/reject one coding pair against an automata JSON file.
struct GlueResult {
  bool accepted = false;
  int reject_level = -1;
  bool by_cycle = false;
  std::string text;
};
GlueResult glue(const std::string& automaton_path, const std::string& u, const std::string& v);

}  // namespace atomforge
