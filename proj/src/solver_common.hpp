#pragma once

#include "flowkit/error.hpp"
#include "flowkit/network.hpp"

namespace flowkit::detail {

inline void require_finite(const Network& net, const char* who) {
  if (!net.all_capacities_finite())
    throw FlowError(ErrorCode::kUnboundedCapacity, std::string(who) + " requires finite capacities");
}

/// Residual capacity of arc e traversed forward (tail->head) or backward.
inline Rational residual(const Network& net, const std::vector<Rational>& flow, int e, bool forward) {
  const auto idx = static_cast<std::size_t>(e);
  return forward ? Rational(net.arc(e).capacity.value() - flow[idx]) : flow[idx];
}

/// Adds `amount` of flow from the traversal origin to its end.
inline void push_along(std::vector<Rational>& flow, int e, bool forward, const Rational& amount) {
  const auto idx = static_cast<std::size_t>(e);
  if (forward)
    flow[idx] += amount;
  else
    flow[idx] -= amount;
}

}  // namespace flowkit::detail
