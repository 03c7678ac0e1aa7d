#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowkit/network.hpp"
#include "flowkit/solvers.hpp"

namespace flowkit {

/// Directed graph with vertex weights of any sign and arc capacities; the
/// input of the maximum blocking cut problem.
struct WeightedGraph {
  std::vector<Rational> weights;  // one per vertex
  std::vector<ArcSpec> arcs;

  int vertex_count() const { return static_cast<int>(weights.size()); }
};

/// surplus(S) = sum of weights in S minus capacities of arcs leaving S.
Rational surplus(const WeightedGraph& g, const std::vector<int>& set);

/// G_st: vertex v becomes v + 1, source 0, sink n + 1; arcs (s, v) with
/// capacity w_v for positive weights and (v, t) with -w_v for negative ones.
/// Antiparallel arcs of g are subdivided.
Network build_gst(const WeightedGraph& g);

/// Rooted spanning tree of the extended network in which source and sink
/// are merged into the root r.
///
/// `parent[v]` is a vertex id, kRoot for a branch root (child of r), or
/// kMerged for the source and sink themselves. Only branch roots carry
/// nonzero excess; a branch root is strong iff its excess is positive.
struct NormalizedTree {
  static constexpr int kRoot = -1;
  static constexpr int kMerged = -2;

  std::vector<int> parent;
  std::vector<int> parent_arc;  // network arc joining v to parent[v], or -1
  std::vector<Rational> excess;

  bool is_branch_root(int v) const { return parent[static_cast<std::size_t>(v)] == kRoot; }
  int branch_root(int v) const;
  bool is_strong(int v) const;
  /// Vertices (not source or sink) whose branch root is strong.
  std::vector<int> strong_vertices() const;
  std::vector<int> branch_roots() const;
};

/// Hochbaum's pseudoflow algorithm on a network read as G_st.
///
/// Starts from the simple normalized tree (every internal vertex its own
/// branch, source and sink arcs saturated) and repeatedly merges a strong
/// branch into a weak one along a residual merger arc until none remains.
/// Merger selection: lowest-id strong branch root, then lowest arc id, forward
/// traversal before backward.
class PseudoflowSolver {
 public:
  PseudoflowSolver(const Network& gst, const SolverOptions& options = {});

  const Network& network() const { return net_; }
  const NormalizedTree& tree() const { return tree_; }
  const FlowAssignment& pseudoflow() const { return flow_; }
  long iterations() const { return iterations_; }

  /// One merger iteration. Returns false, changing nothing, when the tree is
  /// already optimal.
  bool step();
  void run();

  /// Human-readable failures of the normalized-tree conditions; empty when the
  /// current state is a normalized tree.
  std::vector<std::string> check_invariants() const;

 private:
  struct Merger {
    int tail;
    int head;
    int arc;
    bool forward;
  };

  std::optional<Merger> find_merger() const;
  void merge(const Merger& m);

  Network net_;
  SolverOptions options_;
  FlowAssignment flow_;
  NormalizedTree tree_;
  long iterations_ = 0;
};

/// Checks the normalized-tree conditions for a pseudoflow on gst.
std::vector<std::string> normalized_tree_violations(const Network& gst, const FlowAssignment& f,
                                                    const NormalizedTree& tree);

/// True when no residual arc leads from a strong vertex to a weak one.
bool is_optimal_tree(const Network& gst, const FlowAssignment& f, const NormalizedTree& tree);

struct BlockingCutResult {
  std::vector<int> set;  // maximum surplus set, ids of g
  Rational surplus;
  Network gst;
  NormalizedTree tree;
  FlowAssignment pseudoflow;
  long iterations = 0;
};

BlockingCutResult max_blocking_cut(const WeightedGraph& g, const SolverOptions& options = {});

struct HochbaumResult {
  FlowAssignment flow;
  Rational value;
  long iterations = 0;
  /// The run used the reversed network (sink capacity was the smaller side).
  bool reversed = false;
};

/// Maximum flow by pseudoflow + flow recovery. Runs on whichever of the
/// network and its reversal has the smaller total source-side capacity.
HochbaumResult hochbaum_maxflow(const Network& net, const SolverOptions& options = {});

}  // namespace flowkit
