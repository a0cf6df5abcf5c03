#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "hudg/graph.hpp"
#include "hudg/repr.hpp"

namespace hudg {

enum class RootStrategy { kRadiallyIncreasing, kDegreeDecreasing, kIdOrder };

std::string_view strategy_name(RootStrategy s);
std::optional<RootStrategy> parse_strategy(std::string_view name);

struct ProtonParams {
  double a = 2.0;  // tree depth factor: trees reach (1 + a) b^i
  double b = 2.0;  // radius base: phase i deletes balls of radius b^i
  RootStrategy strategy = RootStrategy::kDegreeDecreasing;

  // Throws std::invalid_argument unless a > 0 and b > 1.
  void validate() const;

  // Guaranteed multiplicative stretch 1 + 2b/a (additive bound 2).
  double stretch() const { return 1.0 + 2.0 * b / a; }
};

// Partial shortest-path tree recorded by one PROTON step. Vertices are stored
// in BFS order with the root first, so the vertices deleted by the step form
// a prefix of `vertices`.
class RootedTree {
 public:
  static constexpr std::uint32_t kNoParent = static_cast<std::uint32_t>(-1);

  std::uint32_t graph_id = 0;  // 1-based, creation order
  std::uint32_t phase = 0;
  std::uint32_t deleted = 0;  // length of the deleted prefix (0 when unknown)
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> parent;  // local index of the parent
  std::vector<std::uint32_t> depth;

  Vertex root() const { return vertices.front(); }
  std::size_t size() const { return vertices.size(); }

  // Rebuilds the vertex -> local index lookup; call after filling vertices.
  void index();
  std::optional<std::uint32_t> local(Vertex v) const;
  bool contains(Vertex v) const { return local(v).has_value(); }

  // Hop distance inside the tree by walking up from both ends.
  std::uint32_t distance(std::uint32_t local_u, std::uint32_t local_v) const;

 private:
  std::vector<std::pair<Vertex, std::uint32_t>> lookup_;
};

struct TreeCover {
  ProtonParams params;
  std::size_t num_vertices = 0;
  std::vector<RootedTree> trees;                     // trees[id - 1] has graph_id id
  std::vector<std::vector<std::uint32_t>> membership;  // per vertex, sorted graph-IDs

  const RootedTree& tree(std::uint32_t graph_id) const { return trees.at(graph_id - 1); }

  // Recomputes membership from the trees.
  void rebuild_membership();
};

// PROTON: phase i uses radius b^i. Until the working copy is empty, pick a
// root by strategy, record its partial BFS tree up to depth floor((1+a) b^i)
// and delete everything within floor(b^i). The graph is restored after each
// phase; a component is finished once the first tree of a phase deletes it
// entirely. `rep` is required for the radially-increasing strategy.
TreeCover compute_tree_cover(const Graph& g, const DiskRepresentation* rep,
                             const ProtonParams& params);

struct StretchViolation {
  Vertex s = 0;
  Vertex t = 0;
  std::uint32_t graph_distance = 0;
  std::uint32_t best_tree_distance = kUnreachable;  // kUnreachable: no shared tree
};

struct CoverStretchReport {
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  std::vector<StretchViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every pair (n <= exhaustive_limit) or `samples` random pairs: some
// tree must contain both ends with d_T <= (1 + 2b/a) d_G or d_T <= d_G + 2.
CoverStretchReport verify_cover_stretch(const Graph& g, const TreeCover& cover,
                                        std::size_t exhaustive_limit = 500,
                                        std::size_t samples = 10000, std::uint64_t seed = 1);

// Membership bound for the radially-increasing strategy on strongly
// hyperbolic unit disk graphs:
//   pi e ((1 + a)/(b - 1) (b^2 diam - 1) R + 2 (log_b diam + 2)).
double k_bound(double R, double a, double b, double diam);

// Per-phase bound on how many roots' trees contain a fixed vertex:
//   pi e (R (1 + a) b^i + 2).
double phase_root_bound(double R, double a, double b, std::uint32_t phase);

struct CoverStats {
  std::size_t num_trees = 0;
  std::size_t k_max = 0;
  double k_mean = 0.0;
  std::vector<std::size_t> trees_per_phase;
  std::vector<std::size_t> k_max_per_phase;
};

CoverStats cover_stats(const TreeCover& cover);

// Text export:
//   hudgcover 1 <n> <num_trees> <a> <b> <strategy>
//   tree <graph-id> root <v> phase <i>
//   <child> <parent>                 (BFS order)
void write_tree_cover(std::ostream& out, const TreeCover& cover);
TreeCover read_tree_cover(std::istream& in);

}  // namespace hudg
