#include "flowkit/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flowkit/error.hpp"

namespace flowkit {

Network Network::build(int vertex_count, int source, int sink, const std::vector<ArcSpec>& arcs,
                       bool allow_antiparallel) {
  if (vertex_count < 2) throw FlowError(ErrorCode::kInvalidVertex, "a network needs at least two vertices");
  auto in_range = [&](int v) { return v >= 0 && v < vertex_count; };
  if (!in_range(source) || !in_range(sink)) throw FlowError(ErrorCode::kInvalidVertex, "source or sink out of range");
  if (source == sink) throw FlowError(ErrorCode::kInvalidVertex, "source and sink coincide");

  std::set<std::pair<int, int>> seen;
  for (const auto& a : arcs) {
    if (!in_range(a.tail) || !in_range(a.head))
      throw FlowError(ErrorCode::kInvalidVertex, "arc endpoint out of range", {a.tail, a.head});
    if (a.tail == a.head) throw FlowError(ErrorCode::kInvalidVertex, "self-loop", {a.tail, a.head});
    if (a.head == source) throw FlowError(ErrorCode::kSourceSinkViolation, "arc enters the source", {a.tail, a.head});
    if (a.tail == sink) throw FlowError(ErrorCode::kSourceSinkViolation, "arc leaves the sink", {a.tail, a.head});
    if (a.capacity.is_finite() && a.capacity.value() < 0)
      throw FlowError(ErrorCode::kNegativeCapacity, "negative capacity", {a.tail, a.head});
    if (!seen.emplace(a.tail, a.head).second)
      throw FlowError(ErrorCode::kDuplicateArc, "duplicate arc", {a.tail, a.head});
  }

  Network net;
  net.source_ = source;
  net.sink_ = sink;
  net.original_vertex_count_ = vertex_count;
  int next_vertex = vertex_count;
  std::vector<Arc> stored;
  for (const auto& a : arcs) {
    if (!seen.contains({a.head, a.tail})) {
      stored.push_back({a.tail, a.head, a.capacity});
      continue;
    }
    if (!allow_antiparallel)
      throw FlowError(ErrorCode::kAntiparallelArc, "antiparallel arcs in simple mode", {a.tail, a.head});
    const int middle = next_vertex++;
    net.subdivisions_.push_back({a.tail, a.head, middle});
    stored.push_back({a.tail, middle, a.capacity});
    stored.push_back({middle, a.head, a.capacity});
  }

  net.vertex_count_ = next_vertex;
  net.arcs_ = std::move(stored);
  net.out_.assign(static_cast<std::size_t>(next_vertex), {});
  net.in_.assign(static_cast<std::size_t>(next_vertex), {});
  for (int e = 0; e < net.arc_count(); ++e) {
    const Arc& a = net.arcs_[static_cast<std::size_t>(e)];
    net.out_[static_cast<std::size_t>(a.tail)].push_back(e);
    net.in_[static_cast<std::size_t>(a.head)].push_back(e);
    net.index_.emplace(std::make_pair(a.tail, a.head), e);
  }
  return net;
}

std::optional<int> Network::find_arc(int tail, int head) const {
  auto it = index_.find({tail, head});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Network::vertex_order() const {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(vertex_count_));
  order.push_back(source_);
  for (int v = 0; v < vertex_count_; ++v)
    if (v != source_ && v != sink_) order.push_back(v);
  order.push_back(sink_);
  return order;
}

bool Network::all_capacities_finite() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.capacity.is_finite(); });
}

Capacity Network::source_capacity() const {
  Capacity total;
  for (int e : out_arcs(source_)) total += arc(e).capacity;
  return total;
}

Capacity Network::sink_capacity() const {
  Capacity total;
  for (int e : in_arcs(sink_)) total += arc(e).capacity;
  return total;
}

Network Network::reversed() const {
  Network rev = *this;
  std::swap(rev.source_, rev.sink_);
  rev.index_.clear();
  for (auto& a : rev.arcs_) std::swap(a.tail, a.head);
  std::swap(rev.out_, rev.in_);
  for (int e = 0; e < rev.arc_count(); ++e) {
    const Arc& a = rev.arcs_[static_cast<std::size_t>(e)];
    rev.index_.emplace(std::make_pair(a.tail, a.head), e);
  }
  for (auto& s : rev.subdivisions_) std::swap(s.tail, s.head);
  return rev;
}

IntMatrix incidence_matrix(const Network& net) {
  const auto order = net.vertex_order();
  std::vector<int> row_of(static_cast<std::size_t>(net.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) row_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  IntMatrix phi(static_cast<std::size_t>(net.vertex_count()), static_cast<std::size_t>(net.arc_count()), 0);
  for (int e = 0; e < net.arc_count(); ++e) {
    const Arc& a = net.arc(e);
    phi(static_cast<std::size_t>(row_of[static_cast<std::size_t>(a.tail)]), static_cast<std::size_t>(e)) = 1;
    phi(static_cast<std::size_t>(row_of[static_cast<std::size_t>(a.head)]), static_cast<std::size_t>(e)) = -1;
  }
  return phi;
}

const char* role_name(FlowRole role) {
  switch (role) {
    case FlowRole::kFlow: return "flow";
    case FlowRole::kPreflow: return "preflow";
    case FlowRole::kPseudoflow: return "pseudoflow";
  }
  return "?";
}

FlowAssignment FlowAssignment::zero(const Network& net, FlowRole role) {
  return FlowAssignment{role, std::vector<Rational>(static_cast<std::size_t>(net.arc_count()), Rational(0))};
}

Rational flow_between(const Network& net, const FlowAssignment& f, int u, int v) {
  if (auto e = net.find_arc(u, v)) return f.arc_flow[static_cast<std::size_t>(*e)];
  if (auto e = net.find_arc(v, u)) return -f.arc_flow[static_cast<std::size_t>(*e)];
  return 0;
}

Capacity capacity_between(const Network& net, int u, int v) {
  if (auto e = net.find_arc(u, v)) return net.arc(*e).capacity;
  return Capacity(0);
}

Rational excess(const Network& net, const FlowAssignment& f, int v) {
  Rational total = 0;
  for (int e : net.in_arcs(v)) total += f.arc_flow[static_cast<std::size_t>(e)];
  for (int e : net.out_arcs(v)) total -= f.arc_flow[static_cast<std::size_t>(e)];
  return total;
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kSizeMismatch: os << "assignment size does not match arc count"; break;
    case Kind::kCapacity: os << "capacity exceeded on (" << tail << "," << head << ") by " << amount; break;
    case Kind::kConservation: os << "conservation fails at " << vertex << ", excess " << amount; break;
    case Kind::kNegativeExcess: os << "negative excess at " << vertex << ": " << amount; break;
  }
  return os.str();
}

std::vector<Violation> validate(const Network& net, const FlowAssignment& f, FlowRole role) {
  std::vector<Violation> out;
  if (f.arc_flow.size() != static_cast<std::size_t>(net.arc_count())) {
    out.push_back({Violation::Kind::kSizeMismatch, -1, -1, -1, Rational(0)});
    return out;
  }
  for (int e = 0; e < net.arc_count(); ++e) {
    const Arc& a = net.arc(e);
    const Rational& x = f.arc_flow[static_cast<std::size_t>(e)];
    if (a.capacity.is_finite() && x > a.capacity.value())
      out.push_back({Violation::Kind::kCapacity, a.tail, a.head, -1, Rational(x - a.capacity.value())});
    // f(head, tail) = -x must not exceed c̄(head, tail) = 0.
    if (x < 0) out.push_back({Violation::Kind::kCapacity, a.head, a.tail, -1, Rational(-x)});
  }
  if (role == FlowRole::kPseudoflow) return out;
  for (int v = 0; v < net.vertex_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    const Rational e = excess(net, f, v);
    if (role == FlowRole::kFlow && e != 0) out.push_back({Violation::Kind::kConservation, -1, -1, v, e});
    if (role == FlowRole::kPreflow && e < 0) out.push_back({Violation::Kind::kNegativeExcess, -1, -1, v, e});
  }
  if (role == FlowRole::kPreflow) {
    const Rational e = excess(net, f, net.sink());
    if (e < 0) out.push_back({Violation::Kind::kNegativeExcess, -1, -1, net.sink(), e});
  }
  return out;
}

Rational source_outflow(const Network& net, const FlowAssignment& f) {
  Rational total = 0;
  for (int e : net.out_arcs(net.source())) total += f.arc_flow[static_cast<std::size_t>(e)];
  return total;
}

namespace {

void require_flow(const Network& net, const FlowAssignment& f) {
  auto violations = validate(net, f, FlowRole::kFlow);
  if (!violations.empty()) throw FlowError(ErrorCode::kInvalidFlow, violations.front().describe());
}

}  // namespace

Rational net_flow(const Network& net, const FlowAssignment& f) {
  require_flow(net, f);
  return source_outflow(net, f);
}

bool is_integral(const FlowAssignment& f) {
  return std::all_of(f.arc_flow.begin(), f.arc_flow.end(), [](const Rational& x) { return is_integer(x); });
}

Cut Cut::from_mask(const Network& net, std::vector<bool> in_source_side) {
  if (in_source_side.size() != static_cast<std::size_t>(net.vertex_count()))
    throw FlowError(ErrorCode::kMalformed, "cut mask size does not match vertex count");
  if (!in_source_side[static_cast<std::size_t>(net.source())] || in_source_side[static_cast<std::size_t>(net.sink())])
    throw FlowError(ErrorCode::kMalformed, "cut must contain the source and exclude the sink");
  return Cut(std::move(in_source_side));
}

Cut Cut::from_source_side(const Network& net, const std::vector<int>& source_side) {
  std::vector<bool> mask(static_cast<std::size_t>(net.vertex_count()), false);
  for (int v : source_side) {
    if (v < 0 || v >= net.vertex_count()) throw FlowError(ErrorCode::kInvalidVertex, "cut vertex out of range", {v});
    mask[static_cast<std::size_t>(v)] = true;
  }
  return from_mask(net, std::move(mask));
}

std::vector<int> Cut::source_side() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < side_.size(); ++v)
    if (side_[v]) out.push_back(static_cast<int>(v));
  return out;
}

Rational flow_across_cut(const Network& net, const FlowAssignment& f, const Cut& cut) {
  require_flow(net, f);
  Rational total = 0;
  for (int e = 0; e < net.arc_count(); ++e) {
    const Arc& a = net.arc(e);
    const bool from_s = cut.contains(a.tail);
    const bool to_s = cut.contains(a.head);
    if (from_s && !to_s) total += f.arc_flow[static_cast<std::size_t>(e)];
    if (!from_s && to_s) total -= f.arc_flow[static_cast<std::size_t>(e)];
  }
  return total;
}

Capacity cut_capacity(const Network& net, const Cut& cut) {
  Capacity total;
  for (const Arc& a : net.arcs())
    if (cut.contains(a.tail) && !cut.contains(a.head)) total += a.capacity;
  return total;
}

std::optional<Capacity> ResidualGraph::residual(int u, int v) const {
  for (const auto& a : arcs)
    if (a.tail == u && a.head == v) return a.residual;
  return std::nullopt;
}

ResidualGraph residual_graph(const Network& net, const FlowAssignment& f) {
  ResidualGraph g;
  g.vertex_count = net.vertex_count();
  for (int e = 0; e < net.arc_count(); ++e) {
    const Arc& a = net.arc(e);
    const Rational& x = f.arc_flow[static_cast<std::size_t>(e)];
    if (a.capacity.is_unbounded()) {
      g.arcs.push_back({a.tail, a.head, Capacity::unbounded(), e, true});
    } else if (a.capacity.value() - x > 0) {
      g.arcs.push_back({a.tail, a.head, Capacity(Rational(a.capacity.value() - x)), e, true});
    }
    if (x > 0) g.arcs.push_back({a.head, a.tail, Capacity(x), e, false});
  }
  return g;
}

}  // namespace flowkit
