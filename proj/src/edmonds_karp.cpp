#include <deque>
#include <optional>
#include <stdexcept>

#include "flowkit/solvers.hpp"
#include "solver_common.hpp"

namespace flowkit {

namespace {

struct Step {
  int arc = -1;
  bool forward = true;
};

/// BFS over residual arcs; returns the arc used to reach each vertex.
std::optional<std::vector<Step>> shortest_augmenting_path(const Network& net, const std::vector<Rational>& flow) {
  std::vector<Step> via(static_cast<std::size_t>(net.vertex_count()));
  std::vector<bool> seen(static_cast<std::size_t>(net.vertex_count()), false);
  std::deque<int> queue{net.source()};
  seen[static_cast<std::size_t>(net.source())] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    auto visit = [&](int e, bool forward, int v) {
      if (seen[static_cast<std::size_t>(v)] || detail::residual(net, flow, e, forward) <= 0) return;
      seen[static_cast<std::size_t>(v)] = true;
      via[static_cast<std::size_t>(v)] = {e, forward};
      queue.push_back(v);
    };
    for (int e : net.out_arcs(u)) visit(e, true, net.arc(e).head);
    for (int e : net.in_arcs(u)) visit(e, false, net.arc(e).tail);
    if (seen[static_cast<std::size_t>(net.sink())]) return via;
  }
  return std::nullopt;
}

}  // namespace

EdmondsKarpResult edmonds_karp(const Network& net, const SolverOptions& options) {
  detail::require_finite(net, "edmonds_karp");
  EdmondsKarpResult result;
  result.flow = FlowAssignment::zero(net);
  auto& flow = result.flow.arc_flow;
  while (auto via = shortest_augmenting_path(net, flow)) {
    // Bottleneck, then augment by walking back from the sink.
    std::optional<Rational> bottleneck;
    for (int v = net.sink(); v != net.source();) {
      const Step& st = (*via)[static_cast<std::size_t>(v)];
      Rational r = detail::residual(net, flow, st.arc, st.forward);
      if (!bottleneck || r < *bottleneck) bottleneck = r;
      v = st.forward ? net.arc(st.arc).tail : net.arc(st.arc).head;
    }
    for (int v = net.sink(); v != net.source();) {
      const Step& st = (*via)[static_cast<std::size_t>(v)];
      detail::push_along(flow, st.arc, st.forward, *bottleneck);
      v = st.forward ? net.arc(st.arc).tail : net.arc(st.arc).head;
    }
    ++result.augmentations;
    if (options.instrumented && !validate(net, result.flow, FlowRole::kFlow).empty())
      throw std::logic_error("edmonds_karp: augmentation produced an invalid flow");
  }
  result.value = source_outflow(net, result.flow);
  return result;
}

}  // namespace flowkit
