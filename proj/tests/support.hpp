#pragma once

// Seeded generators and exhaustive oracles shared by the unit and acceptance
// tests.

#include "lb2p/graph.hpp"
#include "lb2p/nae.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace lb2p::testing {

using Rng = std::mt19937_64;

Graph cycle(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Replaces every edge of `m` by a path of length two through a new vertex.
/// Original vertices keep their indices; edge e gets vertex n + e.
Graph subdivide(const MultiGraph& m);
MultiGraph complete_multigraph(std::size_t n);
MultiGraph complete_bipartite_multigraph(std::size_t a, std::size_t b);

/// G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Uniform-ish r-regular loopless multigraph on n vertices by the pairing
/// model with rejection of loops. Requires n * r even and n >= 2.
MultiGraph random_regular_multigraph(std::size_t n, std::size_t r, Rng& rng);

/// Subdivision of a random (2k+1)-regular multigraph on `y` vertices: a
/// (2, 2k+1)-biregular bipartite graph.
Graph random_2odd_biregular(std::size_t y, std::size_t k, Rng& rng);

/// Random NAE-3-SAT-E4 instance; n must be a multiple of 3.
NaeInstance random_instance(std::size_t n, Rng& rng);

/// Every instance on n variables, as clause multisets listed in
/// non-decreasing clause order.
std::vector<NaeInstance> all_instances(std::size_t n);

/// The instance with four copies of the clause {x1, x2, x3}.
NaeInstance triple_instance();

/// Every edge subset of `m` whose degrees lie in [lo, hi], as sorted edge-id
/// lists. Requires at most 20 edges.
std::vector<std::vector<std::size_t>> all_degree_bounded_subsets(const MultiGraph& m, std::size_t lo,
                                                                  std::size_t hi);

}  // namespace lb2p::testing
