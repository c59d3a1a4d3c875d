#pragma once

#include "lb2p/balance.hpp"
#include "lb2p/factor.hpp"
#include "lb2p/graph.hpp"

#include <string>
#include <variant>
#include <vector>

namespace lb2p {

/// Validated (2, 2k+1)-biregular graph. parts.side_x holds the degree-2 side.
struct BiregularShape {
    Bipartition parts;
    std::size_t k = 0;
};

struct NotApplicable {
    std::string reason;
};

std::variant<BiregularShape, NotApplicable> validate_2odd_biregular(const Graph& g);

/// Multigraph on the odd-degree side: one edge per degree-2 vertex, joining its
/// two neighbors. It is (2k+1)-regular.
struct ReducedMultigraph {
    MultiGraph graph;
    /// local index -> vertex of the original graph
    std::vector<Vertex> y_vertices;
    /// vertex of the original graph -> local index (npos for degree-2 vertices)
    std::vector<std::size_t> local_index;
    /// edge id -> the degree-2 vertex it replaces
    std::vector<Vertex> provenance;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

ReducedMultigraph build_reduced(const Graph& g, const BiregularShape& shape);

/// A simple cycle given by its vertex sequence (the closing edge is implied).
struct CycleCertificate {
    std::vector<Vertex> cycle;
};

using BiregularResult = std::variant<TwoPartition, CycleCertificate, NotApplicable>;

/// Decides the open-neighborhood problem on a (2, 2k+1)-biregular graph.
/// A witness is returned when the reduced multigraph is bipartite, a cycle of
/// length 2 (mod 4) otherwise.
BiregularResult solve_biregular(const Graph& g);

/// True iff g has a cycle of length 2 (mod 4). Throws std::invalid_argument
/// when g is not (2, 2k+1)-biregular.
bool has_bad_cycle(const Graph& g);

/// Reduces a closed trail (no repeated edge) of length 2 (mod 4) in a
/// bipartite graph to a simple cycle of length 2 (mod 4). The trail is split at
/// its first repeated vertex into two shorter closed trails; both are even and
/// their lengths sum to 2 (mod 4), so exactly one keeps the residue.
std::vector<Vertex> extract_cycle_2mod4(const Graph& g, std::vector<Vertex> closed_trail);

/// True iff `cert` is a simple cycle of g whose length is 2 (mod 4).
bool is_valid_certificate(const Graph& g, const CycleCertificate& cert);

}  // namespace lb2p
