#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxmaxflow/graph.hpp"

namespace maxmaxflow {

enum class ClassKind { W, FPW, SAW, FPSAW, T, F, H, Hp, Hpr, C, BT, BF, BFstar, B, BlockPath };

std::string class_kind_name(ClassKind k);
ClassKind parse_class_kind(const std::string& name);
bool is_walk_kind(ClassKind k);

struct SubgraphClassSpec {
  ClassKind kind = ClassKind::T;
  VertexSet X;
  VertexSet Y;
  int p = 1;
  int r = 1;
  Vertex x = -1;  // start vertex for W/FPW/SAW/FPSAW; first end for BlockPath
  Vertex y = -1;  // target for W/SAW; second end for BlockPath

  // Throws std::invalid_argument when anchors or parameters do not fit the kind.
  void validate(const WeightedMultigraph& g) const;
  std::string describe() const;
};

struct CountSeries {
  SubgraphClassSpec spec;
  std::vector<Rational> values;  // a_0..a_M
  int M() const { return static_cast<int>(values.size()) - 1; }
};

class WorkCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultWorkCap = 50'000'000;

struct EnumerationOptions {
  std::uint64_t work_cap = kDefaultWorkCap;  // candidate edge subsets per series
};

// w_m(x,y) by the first-step recursion.
CountSeries walk_counts(const WeightedMultigraph& g, Vertex x, Vertex y, int M);
// Σ_y w_m(x,y).
std::vector<Rational> walk_totals(const WeightedMultigraph& g, Vertex x, int M);
CountSeries fpw_counts(const WeightedMultigraph& g, Vertex x, const VertexSet& Y, int M);
CountSeries saw_counts(const WeightedMultigraph& g, Vertex x, Vertex y, int M);
CountSeries fpsaw_counts(const WeightedMultigraph& g, Vertex x, const VertexSet& Y, int M);

// Membership of the canonical subgraph (V(edges) ∪ anchors, edges). SAW/FPSAW test for
// a path; W/FPW are not edge-set classes and throw std::invalid_argument.
bool is_in_class(const WeightedMultigraph& g, const EdgeSet& edges, const SubgraphClassSpec& spec);

// Exact weighted counts by edge-subset enumeration (walk kinds use their recursions).
CountSeries class_count_series(const WeightedMultigraph& g, const SubgraphClassSpec& spec, int M,
                               const EnumerationOptions& options = {});
// Several edge-subset classes over one shared enumeration.
std::vector<CountSeries> class_count_series_batch(const WeightedMultigraph& g,
                                                  const std::vector<SubgraphClassSpec>& specs, int M,
                                                  const EnumerationOptions& options = {});

// Calls visit(edges) for every member with at most M edges, in enumeration order.
void for_each_member(const WeightedMultigraph& g, const SubgraphClassSpec& spec, int M,
                     const std::function<void(const EdgeSet&)>& visit, const EnumerationOptions& options = {});

// a_m = Σ w(H - e) over 2-connected m-edge subgraphs H ∋ e (non-separable with at least two edges).
// The weight of e itself is left out; see bounds for the matching inequalities.
std::vector<Rational> block_through_edge_counts(const WeightedMultigraph& g, EdgeId e, int M,
                                                const EnumerationOptions& options = {});

// Audit of the forest split F -> (F1, P) or the block-forest split H -> (H1, H2) at vertex x ∈ X \ Y.
struct DecompositionAudit {
  std::vector<Rational> direct;      // f_m (resp. bf_m)
  std::vector<Rational> recombined;  // Σ_i Σ_{F1} w(F1) · fpsaw_{m-i}(x, V(F1))  (resp. bf analogue)
  bool parts_valid = true;           // every split lands in the claimed classes, edge-disjointly
  bool injective = true;
  long members = 0;
};

DecompositionAudit audit_forest_split(const WeightedMultigraph& g, const VertexSet& X, const VertexSet& Y, Vertex x,
                                      int M, const EnumerationOptions& options = {});
DecompositionAudit audit_blockforest_split(const WeightedMultigraph& g, const VertexSet& X, const VertexSet& Y,
                                           Vertex x, int M, const EnumerationOptions& options = {});

}  // namespace maxmaxflow
