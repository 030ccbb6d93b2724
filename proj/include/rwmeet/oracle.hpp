#pragma once

#include <optional>
#include <vector>

#include "rwmeet/graph.hpp"

namespace rwmeet {

/// Brute-force ground truth via absorbing-chain linear solves. Exact up to
/// linear-solver tolerance; intended for desk-scale graphs only.
namespace oracle {

inline constexpr int kHittingCap = 200;
inline constexpr int kMeetingCap = 60;

/// Expected steps from a to first reach i; empty when i is unreachable.
std::optional<double> exact_hitting_time(const WeightedGraph& g, int a, int i,
                                         int n_cap = kHittingCap);

/// Expected steps until two synchronous walkers from (a, b) co-locate,
/// solved on the product chain over unordered node pairs. Empty means the
/// diagonal is unreachable (bipartite parity deadlock).
std::optional<double> exact_first_meeting_time(const WeightedGraph& g, int a, int b,
                                               int n_cap = kMeetingCap);

/// Absorption probability into each node (c, c); sums to 1 when meeting is
/// certain. Empty when the walkers can never meet.
std::optional<std::vector<double>> exact_meeting_node_distribution(const WeightedGraph& g, int a,
                                                                   int b,
                                                                   int n_cap = kMeetingCap);

}  // namespace oracle
}  // namespace rwmeet
