#include <algorithm>

#include "flowkit/error.hpp"
#include "flowkit/simplicial.hpp"

namespace flowkit {

LinearProgram build_hmaxflow_lp(const HNetwork& net) {
  const IntMatrix b = net.boundary();
  const std::size_t n = net.face_count();
  const std::size_t m = net.facet_count();
  std::vector<std::size_t> bounded;
  for (std::size_t j = 0; j < m; ++j)
    if (j != net.source && net.capacity[j].is_finite()) bounded.push_back(j);

  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.objective.assign(m, Rational(0));
  lp.objective[net.source] = 1;
  lp.constraints = Matrix<Rational>(2 * n + bounded.size(), m);
  lp.bounds.assign(2 * n + bounded.size(), Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      lp.constraints(i, j) = b(i, j);
      lp.constraints(n + i, j) = -b(i, j);
    }
  }
  for (std::size_t k = 0; k < bounded.size(); ++k) {
    lp.constraints(2 * n + k, bounded[k]) = 1;
    lp.bounds[2 * n + k] = net.capacity[bounded[k]].value();
  }
  lp.nonnegative.assign(m, true);
  return lp;
}

HFlowResult hmaxflow_lp(const HNetwork& net) {
  const LPResult r = simplex_solve(build_hmaxflow_lp(net));
  HFlowResult out;
  out.status = r.status;
  if (r.status == LPStatus::kOptimal) {
    out.flow = r.point;
    out.value = r.value;
  }
  return out;
}

std::vector<ResidualFacet> residual_complex(const HNetwork& net, const std::vector<Rational>& f) {
  std::vector<ResidualFacet> out;
  for (std::size_t j = 0; j < net.facet_count(); ++j) {
    const Capacity& c = net.capacity[j];
    if (c.is_unbounded())
      out.push_back({j, true, Capacity::unbounded()});
    else if (c.value() - f[j] > 0)
      out.push_back({j, true, Capacity(Rational(c.value() - f[j]))});
    if (f[j] > 0) out.push_back({j, false, Capacity(f[j])});
  }
  return out;
}

std::optional<Augmentation> find_augmenting_cycle(const HNetwork& net, const std::vector<Rational>& f) {
  std::vector<ResidualFacet> support;
  for (auto& r : residual_complex(net, f))
    if (r.forward || r.facet != net.source) support.push_back(std::move(r));

  // min Σx  s.t.  ∂x >= 0, -∂x >= 0, x_T >= 1, x >= 0 over the residual facets.
  const IntMatrix b = net.boundary();
  const std::size_t n = net.face_count();
  const std::size_t k = support.size();
  LinearProgram lp;
  lp.sense = Sense::kMinimize;
  lp.objective.assign(k, Rational(1));
  lp.constraints = Matrix<Rational>(2 * n + 1, k);
  lp.bounds.assign(2 * n + 1, Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    const int sign = support[j].forward ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
      lp.constraints(i, j) = sign * b(i, support[j].facet);
      lp.constraints(n + i, j) = -sign * b(i, support[j].facet);
    }
    if (support[j].forward && support[j].facet == net.source) lp.constraints(2 * n, j) = 1;
  }
  lp.bounds[2 * n] = 1;
  lp.nonnegative.assign(k, true);
  const LPResult r = simplex_solve(lp);
  if (r.status != LPStatus::kOptimal) return std::nullopt;

  mpz_class scale = 1;
  for (const auto& x : r.point) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());

  Augmentation aug;
  aug.forward.assign(net.facet_count(), Rational(0));
  aug.backward.assign(net.facet_count(), Rational(0));
  aug.unbounded = true;
  for (std::size_t j = 0; j < k; ++j) {
    if (r.point[j] == 0) continue;
    const Rational coeff = r.point[j] * Rational(scale);
    (support[j].forward ? aug.forward : aug.backward)[support[j].facet] = coeff;
    if (support[j].residual.is_unbounded()) continue;
    const Rational room = support[j].residual.value() / coeff;
    if (aug.unbounded || room < aug.step) aug.step = room;
    aug.unbounded = false;
  }
  return aug;
}

AugmentResult hmaxflow_augment(const HNetwork& net, std::size_t max_iterations) {
  AugmentResult out;
  out.flow.assign(net.facet_count(), Rational(0));
  while (true) {
    auto aug = find_augmenting_cycle(net, out.flow);
    if (!aug) break;
    if (aug->unbounded) {
      out.status = LPStatus::kUnbounded;
      out.trace.push_back(std::move(*aug));
      break;
    }
    if (out.trace.size() == max_iterations) {
      out.capped = true;
      break;
    }
    for (std::size_t j = 0; j < net.facet_count(); ++j) out.flow[j] += aug->step * (aug->forward[j] - aug->backward[j]);
    aug->value_after = out.flow[net.source];
    out.trace.push_back(std::move(*aug));
  }
  out.value = out.flow[net.source];
  return out;
}

HCutResult hcut_capacity(const HNetwork& net, const std::vector<bool>& sink_side) {
  if (sink_side.size() != net.face_count()) throw FlowError(ErrorCode::kMalformed, "one side per face is required");
  const IntMatrix b = net.boundary();
  HCutResult out;
  for (bool side : sink_side) out.lambda.emplace_back(side ? 1 : 0);
  out.eta.assign(net.facet_count(), Rational(0));
  out.feasible = true;
  bool infinite = false;
  for (std::size_t j = 0; j < net.facet_count(); ++j) {
    Rational signed_sum = 0;
    for (std::size_t i = 0; i < net.face_count(); ++i) signed_sum += b(i, j) * out.lambda[i];
    const Rational rhs = j == net.source ? 1 : 0;
    if (signed_sum < rhs) out.eta[j] = rhs - signed_sum;
    if (signed_sum + out.eta[j] < rhs || out.eta[j] < 0) out.feasible = false;
    if (out.eta[j] == 0) continue;
    if (net.capacity[j].is_unbounded())
      infinite = true;
    else
      out.weighted_sum += out.eta[j] * net.capacity[j].value();
  }
  out.capacity = infinite ? Capacity::unbounded() : Capacity(out.weighted_sum);
  return out;
}

}  // namespace flowkit
