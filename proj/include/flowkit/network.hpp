#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowkit/matrix.hpp"
#include "flowkit/rational.hpp"

namespace flowkit {

/// Arc as supplied to Network::build. Vertex ids are 0-based.
struct ArcSpec {
  int tail = 0;
  int head = 0;
  Capacity capacity;
};

struct Arc {
  int tail = 0;
  int head = 0;
  Capacity capacity;
};

/// Record of one input arc that was part of an antiparallel pair and got
/// replaced by tail -> middle -> head.
struct Subdivision {
  int tail = 0;
  int head = 0;
  int middle = 0;
};

/// Directed simple graph with a source, a sink and capacities.
///
/// No arc enters the source, no arc leaves the sink, and no two arcs are
/// antiparallel. When built with `allow_antiparallel`, each antiparallel pair
/// (v,w),(w,v) is subdivided with two fresh vertices appended after the input
/// ids, so the stored graph is always simple and the maximum flow value is
/// unchanged.
class Network {
 public:
  static Network build(int vertex_count, int source, int sink, const std::vector<ArcSpec>& arcs,
                       bool allow_antiparallel = false);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const { return arcs_[static_cast<std::size_t>(id)]; }

  std::optional<int> find_arc(int tail, int head) const;
  const std::vector<int>& out_arcs(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in_arcs(int v) const { return in_[static_cast<std::size_t>(v)]; }

  /// Row order used by incidence matrices: source, internal vertices by id, sink.
  std::vector<int> vertex_order() const;

  /// Vertex count before any subdivision vertices were appended.
  int original_vertex_count() const { return original_vertex_count_; }
  const std::vector<Subdivision>& subdivisions() const { return subdivisions_; }

  bool all_capacities_finite() const;

  /// Sum of capacities leaving the source (M+) and entering the sink (M-).
  Capacity source_capacity() const;
  Capacity sink_capacity() const;

  /// Same graph with every arc reversed and source/sink exchanged.
  Network reversed() const;

 private:
  Network() = default;

  int vertex_count_ = 0;
  int original_vertex_count_ = 0;
  int source_ = 0;
  int sink_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::map<std::pair<int, int>, int> index_;
  std::vector<Subdivision> subdivisions_;
};

/// Incidence matrix with rows in `vertex_order()` and columns in arc order:
/// +1 where the arc leaves the vertex, -1 where it enters.
IntMatrix incidence_matrix(const Network& net);

enum class FlowRole { kFlow, kPreflow, kPseudoflow };

const char* role_name(FlowRole role);

/// Antisymmetric assignment on vertex pairs, stored once per arc:
/// f(tail, head) = arc_flow[e], f(head, tail) = -arc_flow[e], and zero on
/// pairs with no arc in either direction.
struct FlowAssignment {
  FlowRole role = FlowRole::kFlow;
  std::vector<Rational> arc_flow;

  static FlowAssignment zero(const Network& net, FlowRole role = FlowRole::kFlow);
};

/// f(u, v) under the antisymmetric extension.
Rational flow_between(const Network& net, const FlowAssignment& f, int u, int v);

/// c̄(u, v): arc capacity, or zero when (u, v) is not an arc.
Capacity capacity_between(const Network& net, int u, int v);

/// Inflow minus outflow at v.
Rational excess(const Network& net, const FlowAssignment& f, int v);

struct Violation {
  enum class Kind { kSizeMismatch, kCapacity, kConservation, kNegativeExcess };
  Kind kind = Kind::kCapacity;
  int tail = -1;  // pair (tail, head) for capacity violations
  int head = -1;
  int vertex = -1;  // vertex for conservation / excess violations
  Rational amount;  // by how much the constraint is violated
  std::string describe() const;
};

/// Every violated constraint of the requested role; empty iff valid.
std::vector<Violation> validate(const Network& net, const FlowAssignment& f, FlowRole role);

/// |f|: flow leaving the source. Throws InvalidFlow unless f is a valid flow.
Rational net_flow(const Network& net, const FlowAssignment& f);

/// Flow out of the source without validating f.
Rational source_outflow(const Network& net, const FlowAssignment& f);

bool is_integral(const FlowAssignment& f);

/// Two-block vertex partition with the source on the source side.
class Cut {
 public:
  /// Throws Malformed unless the source is in and the sink is out.
  static Cut from_source_side(const Network& net, const std::vector<int>& source_side);
  static Cut from_mask(const Network& net, std::vector<bool> in_source_side);

  bool contains(int v) const { return side_[static_cast<std::size_t>(v)]; }
  const std::vector<bool>& mask() const { return side_; }
  std::vector<int> source_side() const;

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  explicit Cut(std::vector<bool> side) : side_(std::move(side)) {}
  std::vector<bool> side_;
};

/// f(S, S̄) - f(S̄, S). Throws InvalidFlow unless f is a valid flow.
Rational flow_across_cut(const Network& net, const FlowAssignment& f, const Cut& cut);

/// Sum of capacities of arcs directed from the source side to the sink side.
Capacity cut_capacity(const Network& net, const Cut& cut);

struct ResidualArc {
  int tail = 0;
  int head = 0;
  Capacity residual;
  int arc = 0;          // underlying network arc
  bool forward = true;  // same direction as the network arc
};

/// Pairs with strictly positive residual capacity c_f = c̄ - f.
struct ResidualGraph {
  int vertex_count = 0;
  std::vector<ResidualArc> arcs;

  /// c_f(u, v) if (u, v) is a residual arc.
  std::optional<Capacity> residual(int u, int v) const;
};

ResidualGraph residual_graph(const Network& net, const FlowAssignment& f);

}  // namespace flowkit
