#include <algorithm>
#include <deque>
#include <stdexcept>

#include "flowkit/solvers.hpp"
#include "solver_common.hpp"

namespace flowkit {

bool is_valid_labeling(const Network& net, const FlowAssignment& f, const LabelFunction& labels) {
  const auto& d = labels.d;
  if (d.size() != static_cast<std::size_t>(net.vertex_count())) return false;
  if (d[static_cast<std::size_t>(net.source())] != net.vertex_count()) return false;
  if (d[static_cast<std::size_t>(net.sink())] != 0) return false;
  for (const auto& r : residual_graph(net, f).arcs) {
    const long du = d[static_cast<std::size_t>(r.tail)];
    const long dv = d[static_cast<std::size_t>(r.head)];
    if (dv == LabelFunction::kInfinite) continue;
    if (du == LabelFunction::kInfinite || du > dv + 1) return false;
  }
  return true;
}

namespace {

class PushRelabel {
 public:
  PushRelabel(const Network& net, const SolverOptions& options)
      : net_(net),
        options_(options),
        n_(static_cast<std::size_t>(net.vertex_count())),
        excess_(n_, Rational(0)),
        current_(n_, 0),
        queued_(n_, false) {
    result_.flow = FlowAssignment::zero(net, FlowRole::kPreflow);
    result_.labels.d.assign(n_, 0);
    label(net.source()) = net.vertex_count();
    incident_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      for (int e : net.out_arcs(static_cast<int>(v))) incident_[v].push_back({e, true});
      for (int e : net.in_arcs(static_cast<int>(v))) incident_[v].push_back({e, false});
    }
  }

  PushRelabelResult run() {
    // Initial preflow saturates every arc leaving the source.
    for (int e : net_.out_arcs(net_.source())) {
      const Rational& c = net_.arc(e).capacity.value();
      flow()[static_cast<std::size_t>(e)] = c;
      excess_[static_cast<std::size_t>(net_.arc(e).head)] += c;
      excess_[static_cast<std::size_t>(net_.source())] -= c;
      enqueue(net_.arc(e).head);
    }
    check();
    while (!active_.empty()) {
      const int v = active_.front();
      active_.pop_front();
      queued_[static_cast<std::size_t>(v)] = false;
      discharge(v);
    }
    result_.flow.role = FlowRole::kFlow;
    result_.value = source_outflow(net_, result_.flow);
    return std::move(result_);
  }

 private:
  struct Incidence {
    int arc;
    bool forward;  // true when v is the arc's tail
  };

  std::vector<Rational>& flow() { return result_.flow.arc_flow; }
  long& label(int v) { return result_.labels.d[static_cast<std::size_t>(v)]; }

  int other_end(const Incidence& inc) const {
    return inc.forward ? net_.arc(inc.arc).head : net_.arc(inc.arc).tail;
  }

  void enqueue(int v) {
    if (v == net_.source() || v == net_.sink()) return;
    if (queued_[static_cast<std::size_t>(v)] || excess_[static_cast<std::size_t>(v)] <= 0) return;
    queued_[static_cast<std::size_t>(v)] = true;
    active_.push_back(v);
  }

  void discharge(int v) {
    const auto vi = static_cast<std::size_t>(v);
    while (excess_[vi] > 0) {
      if (current_[vi] == incident_[vi].size()) {
        relabel(v);
        current_[vi] = 0;
        continue;
      }
      const Incidence& inc = incident_[vi][current_[vi]];
      const int w = other_end(inc);
      Rational cf = detail::residual(net_, flow(), inc.arc, inc.forward);
      if (cf > 0 && label(v) == label(w) + 1) {
        push(v, w, inc, cf);
      } else {
        ++current_[vi];
      }
    }
  }

  void push(int v, int w, const Incidence& inc, const Rational& cf) {
    const Rational delta = std::min(excess_[static_cast<std::size_t>(v)], cf);
    detail::push_along(flow(), inc.arc, inc.forward, delta);
    excess_[static_cast<std::size_t>(v)] -= delta;
    excess_[static_cast<std::size_t>(w)] += delta;
    ++result_.pushes;
    enqueue(w);
    check();
  }

  void relabel(int v) {
    long best = LabelFunction::kInfinite;
    for (const Incidence& inc : incident_[static_cast<std::size_t>(v)]) {
      if (detail::residual(net_, flow(), inc.arc, inc.forward) > 0) best = std::min(best, label(other_end(inc)) + 1);
    }
    // A vertex with positive excess always has a residual arc back toward
    // the source, so best is finite.
    label(v) = best;
    ++result_.relabels;
    check();
  }

  void check() {
    if (!options_.instrumented) return;
    if (!validate(net_, result_.flow, FlowRole::kPreflow).empty())
      throw std::logic_error("push_relabel: preflow invariant broken");
    if (!is_valid_labeling(net_, result_.flow, result_.labels))
      throw std::logic_error("push_relabel: labeling invariant broken");
  }

  const Network& net_;
  SolverOptions options_;
  std::size_t n_;
  PushRelabelResult result_;
  std::vector<Rational> excess_;
  std::vector<std::vector<Incidence>> incident_;
  std::vector<std::size_t> current_;
  std::vector<bool> queued_;
  std::deque<int> active_;
};

}  // namespace

PushRelabelResult push_relabel(const Network& net, const SolverOptions& options) {
  detail::require_finite(net, "push_relabel");
  return PushRelabel(net, options).run();
}

}  // namespace flowkit
