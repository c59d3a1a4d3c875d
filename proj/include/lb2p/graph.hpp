#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lb2p {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an edge-list document cannot be parsed. Carries the 1-based
/// line number of the offending line.
class GraphFormatError : public std::runtime_error {
public:
    enum class Kind { Malformed, OutOfRange, Loop, DuplicateEdge, EdgeCount };

    GraphFormatError(Kind kind, std::size_t line, const std::string& what);

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// Raised by the graph constructors when an edge would violate simplicity.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Builds a graph from an edge list; throws GraphError on a loop, an
    /// out-of-range endpoint or a repeated edge.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const noexcept;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (min, max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend class GraphBuilder;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Incremental construction of a simple graph. Used by every constructor that
/// composes graphs out of pieces.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(std::size_t n) : adjacency_(n) {}

    Vertex add_vertex();
    /// Appends `count` fresh vertices and returns the index of the first.
    Vertex add_vertices(std::size_t count);
    void add_edge(Vertex u, Vertex v);
    /// Disjoint union with `g`; returns the offset of g's vertex 0.
    Vertex append(const Graph& g);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    Graph build() const;

private:
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Undirected multigraph stored as an edge list. Parallel edges are allowed,
/// loops are not.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t id) const { return edges_.at(id); }
    std::vector<std::size_t> degrees() const;
    /// Per-vertex list of incident edge ids, in edge order.
    std::vector<std::vector<std::size_t>> incidence() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

struct Bipartition {
    std::vector<Vertex> side_x;
    std::vector<Vertex> side_y;
    /// side[v] == 0 for X, 1 for Y.
    std::vector<unsigned char> side;
};

struct ClassReport {
    bool is_even = false;
    bool is_odd = false;
    std::size_t max_degree = 0;
    /// (a, b) with a <= b when the graph is (a,b)-biregular.
    std::optional<std::pair<std::size_t, std::size_t>> biregular;
};

/// A closed walk in a multigraph: edges[i] joins vertices[i] and
/// vertices[(i + 1) % size].
struct MultiCycle {
    std::vector<Vertex> vertices;
    std::vector<std::size_t> edges;
};

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Two-colors every component, putting the lowest-index vertex of each
/// component on side X. Empty when the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

ClassReport classify(const Graph& g);

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);

/// Connected component index per vertex, numbered by lowest member.
std::vector<std::size_t> components(const Graph& g, std::size_t* count = nullptr);

/// Returns a simple odd cycle of `m`, or nothing when `m` is bipartite.
/// Parallel edges are even 2-cycles and never make `m` non-bipartite.
std::optional<MultiCycle> find_odd_cycle(const MultiGraph& m);

/// Two-coloring of a bipartite multigraph (lowest vertex of each component
/// gets color 0). Empty when an odd cycle exists.
std::optional<std::vector<unsigned char>> two_color(const MultiGraph& m);

class EmbedError : public std::invalid_argument {
public:
    enum class Kind { NonInputAttachment, DuplicateAttachment, HostOutOfRange };
    EmbedError(Kind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

struct Attachment {
    Vertex gadget_vertex;  // must be one of the gadget's inputs
    Vertex host_vertex;
};

struct Embedding {
    Graph graph;
    /// Index of the gadget's vertex 0 in the combined graph.
    Vertex offset = 0;
};

/// Disjoint union of `host` and `gadget` plus one edge per attachment, joining
/// a gadget input to a host vertex. Host vertices keep their indices.
Embedding embed_gadget(const Graph& host, const Graph& gadget,
                       std::span<const Vertex> inputs,
                       std::span<const Attachment> attachments);

}  // namespace lb2p
