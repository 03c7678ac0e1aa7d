#include "flowkit/decompose.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "flowkit/error.hpp"
#include "solver_common.hpp"

namespace flowkit {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

/// Depth-first s-t path over arcs with positive remaining flow.
std::vector<int> find_flow_path(const Network& net, const std::vector<Rational>& g) {
  std::vector<bool> visited(at(net.vertex_count()), false);
  std::vector<int> arcs;
  std::vector<int> stack{net.source()};
  std::vector<std::size_t> next(at(net.vertex_count()), 0);
  visited[at(net.source())] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    if (x == net.sink()) return arcs;
    const auto& out = net.out_arcs(x);
    bool advanced = false;
    while (next[at(x)] < out.size()) {
      const int e = out[next[at(x)]++];
      const int y = net.arc(e).head;
      if (g[at(e)] > 0 && !visited[at(y)]) {
        visited[at(y)] = true;
        stack.push_back(y);
        arcs.push_back(e);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      stack.pop_back();
      if (!arcs.empty()) arcs.pop_back();
    }
  }
  return {};
}

Rational min_on(const std::vector<Rational>& g, const std::vector<int>& arcs) {
  Rational m = g[at(arcs.front())];
  for (int e : arcs) m = std::min(m, g[at(e)]);
  return m;
}

}  // namespace

std::vector<FlowComponent> decompose(const Network& net, const FlowAssignment& f) {
  if (auto v = validate(net, f, FlowRole::kFlow); !v.empty())
    throw FlowError(ErrorCode::kInvalidFlow, v.front().describe());
  std::vector<Rational> g = f.arc_flow;
  std::vector<FlowComponent> out;

  auto source_out = [&] {
    Rational total = 0;
    for (int e : net.out_arcs(net.source())) total += g[at(e)];
    return total;
  };

  while (source_out() > 0) {
    const auto arcs = find_flow_path(net, g);
    const Rational amount = min_on(g, arcs);
    FlowComponent c{FlowComponent::Kind::kPath, {net.source()}, amount};
    for (int e : arcs) {
      g[at(e)] -= amount;
      c.vertices.push_back(net.arc(e).head);
    }
    out.push_back(std::move(c));
  }

  // What remains has zero net flow; peel off cycles.
  for (int start = 0; start < net.arc_count(); ++start) {
    while (g[at(start)] > 0) {
      std::vector<int> walk_vertices{net.arc(start).tail, net.arc(start).head};
      std::vector<int> walk_arcs{start};
      std::vector<int> position(at(net.vertex_count()), -1);
      position[at(walk_vertices[0])] = 0;
      int x = walk_vertices[1];
      while (position[at(x)] < 0) {
        position[at(x)] = static_cast<int>(walk_vertices.size()) - 1;
        const auto& outs = net.out_arcs(x);
        auto it = std::find_if(outs.begin(), outs.end(), [&](int e) { return g[at(e)] > 0; });
        // Conservation guarantees an outgoing arc with flow.
        const int e = *it;
        walk_arcs.push_back(e);
        x = net.arc(e).head;
        walk_vertices.push_back(x);
      }
      const auto from = static_cast<std::size_t>(position[at(x)]);
      std::vector<int> cycle_arcs(walk_arcs.begin() + static_cast<std::ptrdiff_t>(from), walk_arcs.end());
      std::vector<int> cycle_vertices(walk_vertices.begin() + static_cast<std::ptrdiff_t>(from), walk_vertices.end());
      const Rational amount = min_on(g, cycle_arcs);
      for (int e : cycle_arcs) g[at(e)] -= amount;
      out.push_back({FlowComponent::Kind::kCycle, std::move(cycle_vertices), amount});
    }
  }
  return out;
}

FlowAssignment recompose(const Network& net, const std::vector<FlowComponent>& components) {
  FlowAssignment f = FlowAssignment::zero(net);
  for (const auto& c : components) {
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
      auto e = net.find_arc(c.vertices[i], c.vertices[i + 1]);
      if (!e) throw FlowError(ErrorCode::kMalformed, "component uses a pair that is not an arc");
      f.arc_flow[at(*e)] += c.amount;
    }
  }
  return f;
}

Cut min_cut_from_flow(const Network& net, const FlowAssignment& f) {
  if (auto v = validate(net, f, FlowRole::kFlow); !v.empty())
    throw FlowError(ErrorCode::kInvalidFlow, v.front().describe());
  std::vector<int> pred(at(net.vertex_count()), -1);
  std::vector<bool> seen(at(net.vertex_count()), false);
  std::deque<int> queue{net.source()};
  seen[at(net.source())] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    auto visit = [&](int v, bool residual) {
      if (!residual || seen[at(v)]) return;
      seen[at(v)] = true;
      pred[at(v)] = u;
      queue.push_back(v);
    };
    for (int e : net.out_arcs(u)) {
      const Arc& a = net.arc(e);
      visit(a.head, a.capacity.is_unbounded() || a.capacity.value() > f.arc_flow[at(e)]);
    }
    for (int e : net.in_arcs(u)) visit(net.arc(e).tail, f.arc_flow[at(e)] > 0);
  }
  if (seen[at(net.sink())]) {
    std::vector<int> path;
    for (int v = net.sink(); v != -1; v = pred[at(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    throw FlowError(ErrorCode::kNotMaximal, "augmenting path exists", path);
  }
  return Cut::from_mask(net, std::move(seen));
}

FlowAssignment recover_flow(const Network& gst, const FlowAssignment& pseudoflow, const NormalizedTree& tree) {
  detail::require_finite(gst, "recover_flow");
  if (auto v = validate(gst, pseudoflow, FlowRole::kPseudoflow); !v.empty())
    throw FlowError(ErrorCode::kInvalidFlow, v.front().describe());
  if (!is_optimal_tree(gst, pseudoflow, tree))
    throw FlowError(ErrorCode::kNotOptimal, "a residual arc leads from a strong to a weak vertex");

  FlowAssignment f = pseudoflow;
  f.role = FlowRole::kFlow;
  auto& g = f.arc_flow;
  const int s = gst.source();
  const int t = gst.sink();
  std::vector<Rational> ex(at(gst.vertex_count()));
  for (int v = 0; v < gst.vertex_count(); ++v) ex[at(v)] = excess(gst, f, v);
  auto internal = [&](int v) { return v != s && v != t; };

  // Walks flow-carrying arcs from v, backward (toward the source) or forward
  // (toward the sink), until a vertex that can absorb the imbalance. Cycles
  // met on the way are cancelled; returns false in that case so the caller
  // retries.
  auto dispose = [&](int v, bool backward) -> bool {
    std::vector<int> walk{v};
    std::vector<int> arcs;
    std::vector<int> position(at(gst.vertex_count()), -1);
    position[at(v)] = 0;
    int x = v;
    while (true) {
      const auto& incident = backward ? gst.in_arcs(x) : gst.out_arcs(x);
      auto it = std::find_if(incident.begin(), incident.end(), [&](int e) { return g[at(e)] > 0; });
      if (it == incident.end()) throw std::logic_error("recover_flow: imbalance with no flow-carrying arc");
      const int e = *it;
      const int y = backward ? gst.arc(e).tail : gst.arc(e).head;
      arcs.push_back(e);
      if (position[at(y)] >= 0) {
        std::vector<int> cycle(arcs.begin() + position[at(y)], arcs.end());
        const Rational amount = min_on(g, cycle);
        for (int c : cycle) g[at(c)] -= amount;
        return false;
      }
      position[at(y)] = static_cast<int>(walk.size());
      walk.push_back(y);
      const bool absorbs = !internal(y) || (backward ? ex[at(y)] < 0 : ex[at(y)] > 0);
      if (absorbs) {
        Rational amount = min_on(g, arcs);
        amount = std::min(amount, backward ? ex[at(v)] : Rational(-ex[at(v)]));
        if (internal(y)) amount = std::min(amount, backward ? Rational(-ex[at(y)]) : ex[at(y)]);
        for (int c : arcs) g[at(c)] -= amount;
        if (backward) {
          ex[at(v)] -= amount;
          if (internal(y)) ex[at(y)] += amount;
        } else {
          ex[at(v)] += amount;
          if (internal(y)) ex[at(y)] -= amount;
        }
        return true;
      }
      x = y;
    }
  };

  // Excesses (strong side) go back toward the source first, then deficits
  // (weak side) are cleared toward the sink.
  for (int v = 0; v < gst.vertex_count(); ++v)
    while (internal(v) && ex[at(v)] > 0) dispose(v, true);
  for (int v = 0; v < gst.vertex_count(); ++v)
    while (internal(v) && ex[at(v)] < 0) dispose(v, false);
  return f;
}

void write_components(std::ostream& out, const std::vector<FlowComponent>& components) {
  for (const auto& c : components) {
    out << (c.kind == FlowComponent::Kind::kPath ? "path " : "cycle ") << to_string(c.amount);
    for (int v : c.vertices) out << ' ' << v + 1;
    out << '\n';
  }
}

}  // namespace flowkit
