#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxmaxflow/bounds.hpp"

namespace maxmaxflow {

struct HuntConfig {
  std::string conjecture;  // "5.6", "5.7", "7.9", "7.10" or "7.11"
  long trials = 1000;
  int M = 6;
  std::uint64_t seed = 1;
  int jobs = 1;
  int leaderboard_size = 10;
  int max_vertices = 6;
  int max_edges = 9;
  int max_multiplicity = 4;
  EnumerationOptions enumeration;
};

struct ConjectureFinding {
  std::string conjecture;
  long trial = 0;
  std::uint64_t trial_seed = 0;
  std::string family;  // "simple", "multi", or the name of a tightness family
  bool tightness_family = false;
  WeightedMultigraph graph;
  BoundContext anchors;
  BoundVerdict verdict;
  Rational margin;  // bound - S_M (upper end of S_M when irrational)
};

struct HuntResult {
  HuntConfig config;
  long trials = 0;
  long violations = 0;
  std::vector<ConjectureFinding> leaderboard;  // best ratio first, one row per distinct (graph, anchors)
  std::map<std::string, ConjectureFinding> family_best;  // highest-ranked finding per family
  std::vector<ConjectureFinding> violating;
};

// The bound id for a conjecture number, e.g. "5.7" -> "conj5.7".
std::string conjecture_bound_id(const std::string& conjecture);

// One trial, fully determined by (conjecture, seed, trial index, generator limits).
ConjectureFinding run_trial(const HuntConfig& config, long trial);

// Leaderboard order: larger ratio, then fewer vertices, then fewer edges, then trial index.
bool ranks_before(const ConjectureFinding& a, const ConjectureFinding& b);

// Identifies the instance: serialized graph plus anchors.
std::string instance_key(const ConjectureFinding& f);

HuntResult hunt(const HuntConfig& config);

}  // namespace maxmaxflow
