#pragma once

#include <iosfwd>
#include <vector>

#include "flowkit/network.hpp"
#include "flowkit/pseudoflow.hpp"

namespace flowkit {

struct FlowComponent {
  enum class Kind { kPath, kCycle };
  Kind kind = Kind::kPath;
  /// Path: s ... t. Cycle: v1 ... vk v1 (closed, first vertex repeated).
  std::vector<int> vertices;
  Rational amount;
};

/// Splits a valid flow into s-t path flows followed by cycle flows. Every
/// extraction zeroes at least one arc, so there are at most m components.
/// Throws InvalidFlow.
std::vector<FlowComponent> decompose(const Network& net, const FlowAssignment& f);

/// Sum of the components as a per-arc assignment.
FlowAssignment recompose(const Network& net, const std::vector<FlowComponent>& components);

/// Source side = vertices reachable from s in the residual graph. Throws
/// NotMaximal with the augmenting path as witness if t is reachable, and
/// InvalidFlow if f is not a flow.
Cut min_cut_from_flow(const Network& net, const FlowAssignment& f);

/// Turns the pseudoflow of an optimal normalized tree into a maximum flow:
/// strong excesses are returned to the source along flow-carrying paths inside
/// the strong side, weak deficits are cleared toward the sink inside the weak
/// side. Throws NotOptimal if a strong->weak residual arc exists.
FlowAssignment recover_flow(const Network& gst, const FlowAssignment& pseudoflow, const NormalizedTree& tree);

/// `path a v1 ... vk` / `cycle a v1 ... vk v1`, 1-based ids.
void write_components(std::ostream& out, const std::vector<FlowComponent>& components);

}  // namespace flowkit
