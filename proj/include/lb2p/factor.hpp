#pragma once

#include "lb2p/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lb2p {

/// A spanning sub-multigraph given by the ids of its selected edges.
struct FactorResult {
    std::vector<std::size_t> edges;  // ascending edge ids

    std::vector<std::size_t> degrees(const MultiGraph& m) const;
};

/// A [k, k+1]-factor of an r-regular loopless multigraph, 1 <= k < r. Such a
/// factor always exists. When r = 2k+1 the factor comes from two Euler
/// splits in linear time; other (r, k) pairs use factor_by_search.
/// Throws std::invalid_argument if m is not regular or k is out of range.
FactorResult kk1_factor(const MultiGraph& m, std::size_t k);

/// Linear-time [k, k+1]-factor of a (2k+1)-regular loopless multigraph.
///
/// Every vertex is joined to a dummy vertex and the result is decomposed into
/// closed trails, which orients each real edge so that out- and in-degree
/// are k and k+1 in some order. Splitting every vertex into an out-copy and an
/// in-copy gives a bipartite multigraph; its edges are colored alternately
/// along trails that start and end at odd-degree copies, so each copy
/// receives half its edges rounded either way. One copy has even degree, so
/// the selected degree of every vertex lands in [k, k+1].
FactorResult factor_by_euler_split(const MultiGraph& m);

/// Exact degree-constrained subgraph search: lo <= deg_H(v) <= hi for all v.
/// Branches on edges in id order (selected first) with per-vertex bound
/// propagation. Returns nothing if no such subgraph exists; throws
/// BudgetExceeded past `node_budget` branch nodes.
std::optional<FactorResult> factor_by_search(const MultiGraph& m, std::size_t lo, std::size_t hi,
                                             std::uint64_t node_budget = 10'000'000);

}  // namespace lb2p
