#pragma once

#include <limits>
#include <vector>

#include "flowkit/network.hpp"

namespace flowkit {

struct SolverOptions {
  /// Re-check the algorithm's invariants after every step and throw
  /// std::logic_error on the first failure. Slow; meant for tests.
  bool instrumented = false;
};

struct EdmondsKarpResult {
  FlowAssignment flow;
  Rational value;
  long augmentations = 0;
};

/// Ford-Fulkerson with breadth-first (shortest) augmenting paths.
/// Requires finite capacities.
EdmondsKarpResult edmonds_karp(const Network& net, const SolverOptions& options = {});

/// Distance labels d: V -> Z>=0 ∪ {∞}.
struct LabelFunction {
  static constexpr long kInfinite = std::numeric_limits<long>::max();
  std::vector<long> d;
};

/// d(s) = n, d(t) = 0 and d(u) <= d(v) + 1 on every residual arc (u, v).
bool is_valid_labeling(const Network& net, const FlowAssignment& f, const LabelFunction& labels);

struct PushRelabelResult {
  FlowAssignment flow;
  Rational value;
  long pushes = 0;
  long relabels = 0;
  LabelFunction labels;
};

/// Goldberg-Tarjan push-relabel with FIFO selection of active vertices
/// (positive excess, not source or sink). Requires finite capacities.
PushRelabelResult push_relabel(const Network& net, const SolverOptions& options = {});

}  // namespace flowkit
