#include <algorithm>
#include <set>

#include "flowkit/error.hpp"
#include "flowkit/lp.hpp"

namespace flowkit {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

/// Internal vertices in vertex order, and each vertex's position among them.
std::vector<int> internal_positions(const Network& net) {
  std::vector<int> pos(at(net.vertex_count()), -1);
  int next = 0;
  for (int v : net.vertex_order())
    if (v != net.source() && v != net.sink()) pos[at(v)] = next++;
  return pos;
}

}  // namespace

LinearProgram build_primal(const Network& net) {
  const IntMatrix phi = incidence_matrix(net);
  const std::size_t m = at(net.arc_count());
  const std::size_t inner = at(net.vertex_count()) - 2;
  std::vector<int> finite;
  for (int e = 0; e < net.arc_count(); ++e)
    if (net.arc(e).capacity.is_finite()) finite.push_back(e);

  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.objective.resize(m);
  for (std::size_t j = 0; j < m; ++j) lp.objective[j] = phi(0, j);
  lp.constraints = Matrix<Rational>(2 * inner + finite.size(), m);
  lp.bounds.assign(2 * inner + finite.size(), Rational(0));
  for (std::size_t i = 0; i < inner; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      lp.constraints(i, j) = phi(i + 1, j);
      lp.constraints(inner + i, j) = -phi(i + 1, j);
    }
  }
  for (std::size_t k = 0; k < finite.size(); ++k) {
    lp.constraints(2 * inner + k, at(finite[k])) = 1;
    lp.bounds[2 * inner + k] = net.arc(finite[k]).capacity.value();
  }
  lp.nonnegative.assign(m, true);
  return lp;
}

LinearProgram build_cut_dual(const Network& net) {
  if (!net.all_capacities_finite())
    throw FlowError(ErrorCode::kUnboundedCapacity, "reduced dual needs finite capacities");
  const auto pos = internal_positions(net);
  const std::size_t inner = at(net.vertex_count()) - 2;
  const std::size_t m = at(net.arc_count());

  LinearProgram lp;
  lp.sense = Sense::kMinimize;
  lp.objective.assign(inner + m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) lp.objective[inner + k] = net.arc(static_cast<int>(k)).capacity.value();
  lp.constraints = Matrix<Rational>(m, inner + m);
  lp.bounds.assign(m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    const Arc& a = net.arc(static_cast<int>(k));
    // v_tail - v_head + e_k >= 0 with v_s = -1 and v_t = 0 moved right.
    if (a.tail == net.source())
      lp.bounds[k] += 1;
    else if (a.tail != net.sink())
      lp.constraints(k, at(pos[at(a.tail)])) += 1;
    if (a.head != net.sink() && a.head != net.source()) lp.constraints(k, at(pos[at(a.head)])) -= 1;
    lp.constraints(k, inner + k) = 1;
  }
  lp.nonnegative.assign(inner + m, false);
  for (std::size_t k = 0; k < m; ++k) lp.nonnegative[inner + k] = true;
  return lp;
}

std::vector<Rational> to_lp_vector(const Network& net, const CutDualPoint& point) {
  std::vector<Rational> x;
  for (int v : net.vertex_order())
    if (v != net.source() && v != net.sink()) x.push_back(point.potential[at(v)]);
  x.insert(x.end(), point.arc.begin(), point.arc.end());
  return x;
}

CutDualPoint from_lp_vector(const Network& net, const std::vector<Rational>& x) {
  CutDualPoint p;
  p.potential.assign(at(net.vertex_count()), Rational(0));
  p.potential[at(net.source())] = -1;
  std::size_t i = 0;
  for (int v : net.vertex_order())
    if (v != net.source() && v != net.sink()) p.potential[at(v)] = x[i++];
  p.arc.assign(x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
  return p;
}

bool is_dual_feasible(const Network& net, const CutDualPoint& point) {
  if (point.potential.size() != at(net.vertex_count()) || point.arc.size() != at(net.arc_count())) return false;
  if (point.potential[at(net.source())] != -1 || point.potential[at(net.sink())] != 0) return false;
  for (int k = 0; k < net.arc_count(); ++k) {
    const Arc& a = net.arc(k);
    const Rational& e = point.arc[at(k)];
    if (e < 0) return false;
    if (point.potential[at(a.tail)] - point.potential[at(a.head)] + e < 0) return false;
  }
  return true;
}

Rational dual_objective(const Network& net, const CutDualPoint& point) {
  Rational total = 0;
  for (int k = 0; k < net.arc_count(); ++k) total += net.arc(k).capacity.value() * point.arc[at(k)];
  return total;
}

CutDualPoint dual_from_cut(const Network& net, const Cut& cut) {
  CutDualPoint p;
  p.potential.assign(at(net.vertex_count()), Rational(0));
  for (int v = 0; v < net.vertex_count(); ++v)
    if (cut.contains(v)) p.potential[at(v)] = -1;
  p.arc.assign(at(net.arc_count()), Rational(0));
  for (int k = 0; k < net.arc_count(); ++k)
    if (cut.contains(net.arc(k).tail) && !cut.contains(net.arc(k).head)) p.arc[at(k)] = 1;
  return p;
}

Cut cut_from_dual(const Network& net, const CutDualPoint& point) {
  if (!is_dual_feasible(net, point)) throw FlowError(ErrorCode::kInfeasible, "point is not dual-feasible");
  std::set<Rational> thresholds;
  for (const auto& v : point.potential)
    if (v >= -1 && v < 0) thresholds.insert(v);
  std::optional<Cut> best;
  Capacity best_capacity;
  for (const auto& chi : thresholds) {
    std::vector<bool> side(at(net.vertex_count()));
    for (int v = 0; v < net.vertex_count(); ++v) side[at(v)] = point.potential[at(v)] <= chi;
    Cut cut = Cut::from_mask(net, std::move(side));
    Capacity c = cut_capacity(net, cut);
    if (!best || c < best_capacity) {
      best = cut;
      best_capacity = c;
    }
  }
  return *best;
}

}  // namespace flowkit
