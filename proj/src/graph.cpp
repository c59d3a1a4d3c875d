#include "lb2p/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace lb2p {

GraphFormatError::GraphFormatError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder builder(n);
    for (const auto& [u, v] : edges) builder.add_edge(u, v);
    return builder.build();
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, adj.size());
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Vertex GraphBuilder::add_vertex() {
    adjacency_.emplace_back();
    return adjacency_.size() - 1;
}

Vertex GraphBuilder::add_vertices(std::size_t count) {
    const Vertex first = adjacency_.size();
    adjacency_.resize(first + count);
    return first;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    const auto n = adjacency_.size();
    if (u >= n || v >= n)
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    auto& adj = adjacency_[u];
    if (std::find(adj.begin(), adj.end(), v) != adj.end())
        throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj.push_back(v);
    adjacency_[v].push_back(u);
}

Vertex GraphBuilder::append(const Graph& g) {
    const Vertex offset = add_vertices(g.vertex_count());
    for (const auto& [u, v] : g.edges()) add_edge(offset + u, offset + v);
    return offset;
}

Graph GraphBuilder::build() const {
    Graph out;
    out.adjacency_ = adjacency_;
    std::size_t ends = 0;
    for (auto& adj : out.adjacency_) {
        std::sort(adj.begin(), adj.end());
        ends += adj.size();
    }
    out.edge_count_ = ends / 2;
    return out;
}

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (const auto& [u, v] : edges_) {
        if (u >= n_ || v >= n_) throw GraphError("multigraph edge out of range");
        if (u == v) throw GraphError("multigraph loop at vertex " + std::to_string(u));
    }
}

std::vector<std::size_t> MultiGraph::degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<std::size_t>> MultiGraph::incidence() const {
    std::vector<std::vector<std::size_t>> inc(n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        inc[edges_[e].first].push_back(e);
        inc[edges_[e].second].push_back(e);
    }
    return inc;
}

namespace {

bool parse_count(std::string_view token, std::size_t& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    using Kind = GraphFormatError::Kind;
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    // Trailing blank lines are tolerated; blank lines elsewhere are not.
    while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw GraphFormatError(Kind::Malformed, 1, "missing header \"n m\"");

    std::size_t n = 0, m = 0;
    auto header = split_ws(lines[0]);
    if (header.size() != 2 || !parse_count(header[0], n) || !parse_count(header[1], m))
        throw GraphFormatError(Kind::Malformed, 1, "expected header \"n m\"");
    if (lines.size() - 1 != m)
        throw GraphFormatError(Kind::EdgeCount, lines.size(),
                               "header declares " + std::to_string(m) + " edges, found " +
                                   std::to_string(lines.size() - 1));

    std::vector<std::vector<Vertex>> adjacency(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        auto tokens = split_ws(lines[i]);
        std::size_t u = 0, v = 0;
        if (tokens.size() != 2 || !parse_count(tokens[0], u) || !parse_count(tokens[1], v))
            throw GraphFormatError(Kind::Malformed, line_no, "expected \"u v\"");
        if (u >= n || v >= n)
            throw GraphFormatError(Kind::OutOfRange, line_no,
                                   "vertex index out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw GraphFormatError(Kind::Loop, line_no, "loop at vertex " + std::to_string(u));
        if (std::find(adjacency[u].begin(), adjacency[u].end(), v) != adjacency[u].end())
            throw GraphFormatError(Kind::DuplicateEdge, line_no,
                                   "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    GraphBuilder builder(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adjacency[u])
            if (u < v) builder.add_edge(u, v);
    return builder.build();
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const auto n = g.vertex_count();
    constexpr unsigned char unseen = 2;
    std::vector<unsigned char> side(n, unseen);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (side[root] != unseen) continue;
        side[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (side[v] == unseen) {
                    side[v] = static_cast<unsigned char>(1 - side[u]);
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition result;
    result.side = side;
    for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? result.side_x : result.side_y).push_back(v);
    return result;
}

ClassReport classify(const Graph& g) {
    ClassReport report;
    const auto n = g.vertex_count();
    report.max_degree = g.max_degree();
    report.is_even = true;
    report.is_odd = true;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) % 2 == 0)
            report.is_odd = false;
        else
            report.is_even = false;
    }

    // (a,b)-biregular: the degree classes form a bipartition. With a single
    // degree class the graph is regular and only needs to be bipartite.
    if (g.edge_count() == 0) return report;
    std::vector<std::size_t> distinct;
    for (Vertex v = 0; v < n; ++v)
        if (std::find(distinct.begin(), distinct.end(), g.degree(v)) == distinct.end())
            distinct.push_back(g.degree(v));
    if (distinct.size() == 1) {
        if (bipartition(g)) report.biregular = std::pair{distinct[0], distinct[0]};
    } else if (distinct.size() == 2) {
        bool crosses = true;
        for (const auto& [u, v] : g.edges()) crosses = crosses && g.degree(u) != g.degree(v);
        if (crosses) report.biregular = std::minmax(distinct[0], distinct[1]);
    }
    return report;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
    if (source >= g.vertex_count()) throw std::out_of_range("bfs source out of range");
    std::vector<std::optional<std::size_t>> dist(g.vertex_count());
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (!dist[v]) {
                dist[v] = *dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<std::size_t> components(const Graph& g, std::size_t* count) {
    constexpr auto unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(g.vertex_count(), unseen);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (comp[root] != unseen) continue;
        comp[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : g.neighbors(u))
                if (comp[v] == unseen) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

namespace {

struct BfsForest {
    std::vector<std::size_t> depth;
    std::vector<std::size_t> parent_edge;  // npos at roots
    std::vector<Vertex> parent;
    std::optional<std::size_t> conflict_edge;
};

constexpr auto npos = static_cast<std::size_t>(-1);

BfsForest bfs_forest(const MultiGraph& m) {
    const auto n = m.vertex_count();
    const auto inc = m.incidence();
    BfsForest f{std::vector<std::size_t>(n, npos), std::vector<std::size_t>(n, npos),
                std::vector<Vertex>(n, npos), std::nullopt};
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (f.depth[root] != npos) continue;
        f.depth[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (std::size_t e : inc[u]) {
                const auto& [a, b] = m.edge(e);
                const Vertex v = a == u ? b : a;
                if (f.depth[v] == npos) {
                    f.depth[v] = f.depth[u] + 1;
                    f.parent[v] = u;
                    f.parent_edge[v] = e;
                    queue.push_back(v);
                } else if (f.depth[v] % 2 == f.depth[u] % 2 && !f.conflict_edge) {
                    f.conflict_edge = e;
                }
            }
        }
    }
    return f;
}

}  // namespace

std::optional<std::vector<unsigned char>> two_color(const MultiGraph& m) {
    auto f = bfs_forest(m);
    if (f.conflict_edge) return std::nullopt;
    std::vector<unsigned char> color(m.vertex_count());
    for (Vertex v = 0; v < m.vertex_count(); ++v) color[v] = static_cast<unsigned char>(f.depth[v] % 2);
    return color;
}

std::optional<MultiCycle> find_odd_cycle(const MultiGraph& m) {
    auto f = bfs_forest(m);
    if (!f.conflict_edge) return std::nullopt;
    const std::size_t closing = *f.conflict_edge;
    Vertex u = m.edge(closing).first;
    Vertex v = m.edge(closing).second;

    // Climb both endpoints to their lowest common ancestor. Equal depth parity
    // makes the tree path plus the closing edge odd.
    std::vector<Vertex> left{u}, right{v};
    std::vector<std::size_t> left_edges, right_edges;
    while (f.depth[u] > f.depth[v]) {
        left_edges.push_back(f.parent_edge[u]);
        u = f.parent[u];
        left.push_back(u);
    }
    while (f.depth[v] > f.depth[u]) {
        right_edges.push_back(f.parent_edge[v]);
        v = f.parent[v];
        right.push_back(v);
    }
    while (u != v) {
        left_edges.push_back(f.parent_edge[u]);
        u = f.parent[u];
        left.push_back(u);
        right_edges.push_back(f.parent_edge[v]);
        v = f.parent[v];
        right.push_back(v);
    }
    // Cycle: lca -> ... -> first endpoint, closing edge, second endpoint -> ... -> lca.
    MultiCycle cycle;
    for (auto it = left.rbegin(); it != left.rend(); ++it) cycle.vertices.push_back(*it);
    for (auto it = left_edges.rbegin(); it != left_edges.rend(); ++it) cycle.edges.push_back(*it);
    cycle.edges.push_back(closing);
    // right = [endpoint, ..., lca]; skip lca, it is the cycle's start.
    for (std::size_t i = 0; i + 1 < right.size(); ++i) cycle.vertices.push_back(right[i]);
    for (std::size_t e : right_edges) cycle.edges.push_back(e);
    return cycle;
}

Embedding embed_gadget(const Graph& host, const Graph& gadget, std::span<const Vertex> inputs,
                       std::span<const Attachment> attachments) {
    GraphBuilder builder;
    builder.append(host);
    const Vertex offset = builder.append(gadget);
    std::vector<Edge> seen;
    for (const auto& a : attachments) {
        if (std::find(inputs.begin(), inputs.end(), a.gadget_vertex) == inputs.end())
            throw EmbedError(EmbedError::Kind::NonInputAttachment,
                             "gadget vertex " + std::to_string(a.gadget_vertex) + " is not an input");
        if (a.host_vertex >= host.vertex_count())
            throw EmbedError(EmbedError::Kind::HostOutOfRange,
                             "host vertex " + std::to_string(a.host_vertex) + " out of range");
        const Edge key{a.gadget_vertex, a.host_vertex};
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw EmbedError(EmbedError::Kind::DuplicateAttachment,
                             "duplicate attachment of gadget vertex " + std::to_string(a.gadget_vertex) +
                                 " to host vertex " + std::to_string(a.host_vertex));
        seen.push_back(key);
        builder.add_edge(offset + a.gadget_vertex, a.host_vertex);
    }
    return {builder.build(), offset};
}

}  // namespace lb2p
