#include "flowkit/pseudoflow.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flowkit/decompose.hpp"
#include "solver_common.hpp"

namespace flowkit {

Rational surplus(const WeightedGraph& g, const std::vector<int>& set) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  Rational total = 0;
  for (int v : set) {
    if (in[static_cast<std::size_t>(v)]) continue;
    in[static_cast<std::size_t>(v)] = true;
    total += g.weights[static_cast<std::size_t>(v)];
  }
  for (const auto& a : g.arcs)
    if (in[static_cast<std::size_t>(a.tail)] && !in[static_cast<std::size_t>(a.head)]) total -= a.capacity.value();
  return total;
}

Network build_gst(const WeightedGraph& g) {
  const int n = g.vertex_count();
  const int s = 0;
  const int t = n + 1;
  std::vector<ArcSpec> arcs;
  for (int v = 0; v < n; ++v) {
    const Rational& w = g.weights[static_cast<std::size_t>(v)];
    if (w > 0) arcs.push_back({s, v + 1, Capacity(w)});
  }
  for (const auto& a : g.arcs) arcs.push_back({a.tail + 1, a.head + 1, a.capacity});
  for (int v = 0; v < n; ++v) {
    const Rational& w = g.weights[static_cast<std::size_t>(v)];
    if (w < 0) arcs.push_back({v + 1, t, Capacity(Rational(-w))});
  }
  return Network::build(n + 2, s, t, arcs, /*allow_antiparallel=*/true);
}

int NormalizedTree::branch_root(int v) const {
  while (parent[static_cast<std::size_t>(v)] >= 0) v = parent[static_cast<std::size_t>(v)];
  return parent[static_cast<std::size_t>(v)] == kRoot ? v : -1;
}

bool NormalizedTree::is_strong(int v) const {
  const int r = branch_root(v);
  return r >= 0 && excess[static_cast<std::size_t>(r)] > 0;
}

std::vector<int> NormalizedTree::strong_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(parent.size()); ++v)
    if (parent[static_cast<std::size_t>(v)] != kMerged && is_strong(v)) out.push_back(v);
  return out;
}

std::vector<int> NormalizedTree::branch_roots() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(parent.size()); ++v)
    if (is_branch_root(v)) out.push_back(v);
  return out;
}

namespace {

bool internal(const Network& net, int v) { return v != net.source() && v != net.sink(); }

/// Strong flag per vertex, computed once per query in O(n).
std::vector<char> strong_mask(const NormalizedTree& tree) {
  const std::size_t n = tree.parent.size();
  std::vector<int> root(n, -2);
  std::vector<char> strong(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (tree.parent[v] == NormalizedTree::kMerged) continue;
    std::vector<int> chain;
    int u = static_cast<int>(v);
    while (root[static_cast<std::size_t>(u)] == -2 && tree.parent[static_cast<std::size_t>(u)] >= 0) {
      chain.push_back(u);
      u = tree.parent[static_cast<std::size_t>(u)];
    }
    const int r = root[static_cast<std::size_t>(u)] != -2 ? root[static_cast<std::size_t>(u)] : u;
    root[static_cast<std::size_t>(u)] = r;
    for (int x : chain) root[static_cast<std::size_t>(x)] = r;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (root[v] >= 0) strong[v] = tree.excess[static_cast<std::size_t>(root[v])] > 0;
  return strong;
}

}  // namespace

PseudoflowSolver::PseudoflowSolver(const Network& gst, const SolverOptions& options)
    : net_(gst), options_(options), flow_(FlowAssignment::zero(gst, FlowRole::kPseudoflow)) {
  detail::require_finite(net_, "pseudoflow");
  const auto n = static_cast<std::size_t>(net_.vertex_count());
  tree_.parent.assign(n, NormalizedTree::kRoot);
  tree_.parent_arc.assign(n, -1);
  tree_.excess.assign(n, Rational(0));
  tree_.parent[static_cast<std::size_t>(net_.source())] = NormalizedTree::kMerged;
  tree_.parent[static_cast<std::size_t>(net_.sink())] = NormalizedTree::kMerged;
  for (int e = 0; e < net_.arc_count(); ++e) {
    const Arc& a = net_.arc(e);
    if (a.tail == net_.source() || a.head == net_.sink()) {
      flow_.arc_flow[static_cast<std::size_t>(e)] = a.capacity.value();
      if (internal(net_, a.head)) tree_.excess[static_cast<std::size_t>(a.head)] += a.capacity.value();
      if (internal(net_, a.tail)) tree_.excess[static_cast<std::size_t>(a.tail)] -= a.capacity.value();
    }
  }
  if (options_.instrumented) {
    auto problems = check_invariants();
    if (!problems.empty()) throw std::logic_error("pseudoflow init: " + problems.front());
  }
}

std::optional<PseudoflowSolver::Merger> PseudoflowSolver::find_merger() const {
  const auto strong = strong_mask(tree_);
  std::optional<Merger> best;
  int best_root = -1;
  auto consider = [&](int tail, int head, int e, bool forward) {
    if (!strong[static_cast<std::size_t>(tail)] || strong[static_cast<std::size_t>(head)]) return;
    if (detail::residual(net_, flow_.arc_flow, e, forward) <= 0) return;
    const int r = tree_.branch_root(tail);
    if (!best || r < best_root) {
      best = Merger{tail, head, e, forward};
      best_root = r;
    }
  };
  for (int e = 0; e < net_.arc_count(); ++e) {
    const Arc& a = net_.arc(e);
    if (!internal(net_, a.tail) || !internal(net_, a.head)) continue;
    consider(a.tail, a.head, e, true);
    consider(a.head, a.tail, e, false);
  }
  return best;
}

bool PseudoflowSolver::step() {
  auto m = find_merger();
  if (!m) return false;
  merge(*m);
  ++iterations_;
  if (options_.instrumented) {
    auto problems = check_invariants();
    if (!problems.empty()) throw std::logic_error("pseudoflow iteration: " + problems.front());
  }
  return true;
}

void PseudoflowSolver::run() {
  while (step()) {
  }
}

void PseudoflowSolver::merge(const Merger& m) {
  auto& parent = tree_.parent;
  auto& parent_arc = tree_.parent_arc;
  auto& excess = tree_.excess;
  auto at = [](int v) { return static_cast<std::size_t>(v); };

  // Path from the strong root down to the merger tail, strong root first.
  std::vector<int> strong_path{m.tail};
  while (parent[at(strong_path.back())] >= 0) strong_path.push_back(parent[at(strong_path.back())]);
  std::reverse(strong_path.begin(), strong_path.end());
  const int strong_root = strong_path.front();

  // Re-root the strong branch at the merger tail and hang it from the head.
  for (std::size_t i = 0; i + 1 < strong_path.size(); ++i) {
    const int upper = strong_path[i];
    const int lower = strong_path[i + 1];
    parent[at(upper)] = lower;
    parent_arc[at(upper)] = parent_arc[at(lower)];
  }
  parent[at(m.tail)] = m.head;
  parent_arc[at(m.tail)] = m.arc;

  // Push the strong root's excess upward to the weak root, splitting every
  // tree edge whose residual capacity is smaller than the amount in transit.
  Rational amount = excess[at(strong_root)];
  excess[at(strong_root)] = 0;
  int v = strong_root;
  while (amount > 0 && parent[at(v)] >= 0) {
    const int up = parent[at(v)];
    const int e = parent_arc[at(v)];
    const bool forward = net_.arc(e).tail == v;
    const Rational cf = detail::residual(net_, flow_.arc_flow, e, forward);
    if (cf < amount) {
      parent[at(v)] = NormalizedTree::kRoot;
      parent_arc[at(v)] = -1;
      excess[at(v)] = amount - cf;
      amount = cf;
    }
    detail::push_along(flow_.arc_flow, e, forward, amount);
    v = up;
  }
  // v is now either the weak root or a vertex whose parent edge was split
  // with nothing left in transit.
  if (amount > 0) excess[at(v)] += amount;
}

std::vector<std::string> normalized_tree_violations(const Network& gst, const FlowAssignment& f,
                                                    const NormalizedTree& tree) {
  std::vector<std::string> out;
  auto at = [](int v) { return static_cast<std::size_t>(v); };
  const auto n = static_cast<std::size_t>(gst.vertex_count());
  if (tree.parent.size() != n || tree.excess.size() != n || tree.parent_arc.size() != n) {
    out.push_back("tree arrays do not match the vertex count");
    return out;
  }
  std::set<int> tree_arcs;
  for (int v = 0; v < gst.vertex_count(); ++v) {
    const int p = tree.parent[at(v)];
    if (!internal(gst, v)) {
      if (p != NormalizedTree::kMerged) out.push_back("source/sink must be merged into the root");
      continue;
    }
    if (tree.branch_root(v) < 0) out.push_back("vertex " + std::to_string(v) + " does not reach the root");
    if (p >= 0) {
      const int e = tree.parent_arc[at(v)];
      if (e < 0 || e >= gst.arc_count()) {
        out.push_back("missing tree arc at " + std::to_string(v));
        continue;
      }
      const Arc& a = gst.arc(e);
      if (!((a.tail == v && a.head == p) || (a.tail == p && a.head == v)))
        out.push_back("tree arc does not join " + std::to_string(v) + " to its parent");
      tree_arcs.insert(e);
      // Downward residual capacity, parent -> child, must be positive.
      const bool forward = a.tail == p;
      if (detail::residual(gst, f.arc_flow, e, forward) <= 0)
        out.push_back("downward residual capacity not positive on edge to " + std::to_string(v));
    }
    const Rational actual = excess(gst, f, v);
    if (actual != tree.excess[at(v)]) out.push_back("stored excess differs from flow at " + std::to_string(v));
    if (p != NormalizedTree::kRoot && actual != 0)
      out.push_back("non-root vertex " + std::to_string(v) + " has nonzero excess");
  }
  for (int e = 0; e < gst.arc_count(); ++e) {
    const Arc& a = gst.arc(e);
    const Rational& x = f.arc_flow[at(e)];
    if (x < 0 || x > a.capacity.value()) out.push_back("capacity violated on arc " + std::to_string(e));
    if (a.tail == gst.source() || a.head == gst.sink()) {
      if (x != a.capacity.value()) out.push_back("source/sink arc " + std::to_string(e) + " not saturated");
    } else if (!tree_arcs.contains(e) && x != 0 && x != a.capacity.value()) {
      out.push_back("non-tree arc " + std::to_string(e) + " neither empty nor saturated");
    }
  }
  return out;
}

std::vector<std::string> PseudoflowSolver::check_invariants() const {
  return normalized_tree_violations(net_, flow_, tree_);
}

bool is_optimal_tree(const Network& gst, const FlowAssignment& f, const NormalizedTree& tree) {
  const auto strong = strong_mask(tree);
  for (int e = 0; e < gst.arc_count(); ++e) {
    const Arc& a = gst.arc(e);
    if (!internal(gst, a.tail) || !internal(gst, a.head)) continue;
    const bool st = strong[static_cast<std::size_t>(a.tail)];
    const bool sh = strong[static_cast<std::size_t>(a.head)];
    if (st && !sh && detail::residual(gst, f.arc_flow, e, true) > 0) return false;
    if (sh && !st && detail::residual(gst, f.arc_flow, e, false) > 0) return false;
  }
  return true;
}

BlockingCutResult max_blocking_cut(const WeightedGraph& g, const SolverOptions& options) {
  for (const auto& a : g.arcs)
    if (a.capacity.is_unbounded()) throw FlowError(ErrorCode::kUnboundedCapacity, "blocking cut needs finite capacities");
  Network gst = build_gst(g);
  PseudoflowSolver solver(gst, options);
  solver.run();
  BlockingCutResult result{{}, Rational(0), gst, solver.tree(), solver.pseudoflow(), solver.iterations()};
  for (int v : solver.tree().strong_vertices())
    if (v >= 1 && v <= g.vertex_count()) result.set.push_back(v - 1);
  result.surplus = surplus(g, result.set);
  return result;
}

HochbaumResult hochbaum_maxflow(const Network& net, const SolverOptions& options) {
  detail::require_finite(net, "hochbaum_maxflow");
  HochbaumResult result;
  // Reversing arcs and exchanging source and sink is an equivalent problem;
  // pick the side with the smaller total so iterations stay O(n min{M+, M-}).
  result.reversed = net.sink_capacity() < net.source_capacity();
  const Network work = result.reversed ? net.reversed() : net;
  PseudoflowSolver solver(work, options);
  solver.run();
  result.iterations = solver.iterations();
  result.flow = recover_flow(work, solver.pseudoflow(), solver.tree());
  result.value = source_outflow(net, result.flow);
  return result;
}

}  // namespace flowkit
