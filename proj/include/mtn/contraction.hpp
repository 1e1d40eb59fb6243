#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtn/network.hpp"
#include "mtn/statevector.hpp"

namespace mtn {

/// Deterministic node order plus a crude upper bound on the largest
/// intermediate (product of open alphabet sizes after each step).
struct ContractionPlan {
  std::vector<int> order;
  double log2_max_intermediate = 0.0;
};

ContractionPlan contraction_plan(const Network& net);

inline constexpr int kDefaultContractionCap = 12;

/// Exact full contraction: the represented state over the physical slots.
template <class S>
StateVector<S> contract_full(const Network& net, const S& t,
                             int cap = kDefaultContractionCap);

/// Contraction with every physical slot pinned to `config`.
template <class S>
S amplitude(const Network& net, const std::vector<int>& config, const S& t);

/// Same as contract_full but following an explicit node order; used to check
/// order independence.
template <class S>
StateVector<S> contract_full_with_order(const Network& net,
                                        const std::vector<int>& order, const S& t,
                                        int cap = kDefaultContractionCap);

/// Result of the deterministic forward sweep over a boundary-locked network.
template <class S>
struct LockedResult {
  S value = scalar_traits<S>::zero();
  bool locked = true;            // false when some node had several candidates
  std::string violation;         // first offending node, when not locked
};

/// Forward label propagation: every internal index is forced by the already
/// known ones, so the amplitude comes out in one pass over the nodes. Falls
/// over to the generic contraction when a node admits more than one
/// candidate, recording the violation.
template <class S>
LockedResult<S> locked_propagate(const Network& net, const std::vector<int>& config,
                                 const S& t);

/// Number of complete internal labelings with nonzero weight for the pinned
/// config, counted by backtracking and capped at `limit`.
int count_internal_labelings(const Network& net, const std::vector<int>& config,
                             int limit = 2);

std::map<std::string, int> count_tensors(const Network& net);

}  // namespace mtn
