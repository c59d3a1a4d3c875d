#include "lb2p/biregular.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lb2p {

std::variant<BiregularShape, NotApplicable> validate_2odd_biregular(const Graph& g) {
    if (g.edge_count() == 0) return NotApplicable{"graph has no edges"};
    if (!bipartition(g)) return NotApplicable{"graph is not bipartite"};

    std::optional<std::size_t> odd_degree;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto d = g.degree(v);
        if (d == 2) continue;
        if (d < 3 || d % 2 == 0 || (odd_degree && *odd_degree != d))
            return NotApplicable{"degrees are not (2, 2k+1) with k >= 1"};
        odd_degree = d;
    }
    if (!odd_degree) return NotApplicable{"degrees are not (2, 2k+1) with k >= 1"};
    for (const auto& [u, v] : g.edges())
        if (g.degree(u) == g.degree(v)) return NotApplicable{"degrees are not (2, 2k+1) with k >= 1"};

    BiregularShape shape;
    shape.k = (*odd_degree - 1) / 2;
    shape.parts.side.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const bool x = g.degree(v) == 2;
        shape.parts.side[v] = x ? 0 : 1;
        (x ? shape.parts.side_x : shape.parts.side_y).push_back(v);
    }
    return shape;
}

ReducedMultigraph build_reduced(const Graph& g, const BiregularShape& shape) {
    ReducedMultigraph out;
    out.y_vertices = shape.parts.side_y;
    out.local_index.assign(g.vertex_count(), ReducedMultigraph::npos);
    for (std::size_t i = 0; i < out.y_vertices.size(); ++i) out.local_index[out.y_vertices[i]] = i;

    std::vector<Edge> edges;
    for (Vertex x : shape.parts.side_x) {
        const auto& nb = g.neighbors(x);
        if (nb.size() != 2) throw std::invalid_argument("degree-2 side has a vertex of another degree");
        edges.emplace_back(out.local_index.at(nb[0]), out.local_index.at(nb[1]));
        out.provenance.push_back(x);
    }
    out.graph = MultiGraph(out.y_vertices.size(), std::move(edges));
    for (auto d : out.graph.degrees())
        if (d != 2 * shape.k + 1) throw std::logic_error("reduced multigraph is not (2k+1)-regular");
    return out;
}

namespace {

bool is_closed_trail(const Graph& g, const std::vector<Vertex>& walk) {
    if (walk.size() < 3) return false;
    std::vector<Edge> used;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
        if (!g.has_edge(a, b)) return false;
        used.push_back(std::minmax(a, b));
    }
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

}  // namespace

std::vector<Vertex> extract_cycle_2mod4(const Graph& g, std::vector<Vertex> walk) {
    if (walk.size() % 4 != 2) throw std::invalid_argument("closed trail length is not 2 (mod 4)");
    if (!is_closed_trail(g, walk)) throw std::invalid_argument("input is not a closed trail of the graph");

    while (true) {
        std::unordered_map<Vertex, std::size_t> first_seen;
        std::optional<std::pair<std::size_t, std::size_t>> repeat;
        for (std::size_t j = 0; j < walk.size(); ++j) {
            auto [it, fresh] = first_seen.emplace(walk[j], j);
            if (!fresh) {
                repeat = std::pair{it->second, j};
                break;
            }
        }
        if (!repeat) return walk;
        const auto [i, j] = *repeat;
        const std::size_t inner = j - i;
        if (inner % 2 != 0) throw std::invalid_argument("graph is not bipartite along the trail");
        if (inner % 4 == 2) {
            walk = std::vector<Vertex>(walk.begin() + static_cast<std::ptrdiff_t>(i),
                                       walk.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
            std::vector<Vertex> rest(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            rest.insert(rest.end(), walk.begin() + static_cast<std::ptrdiff_t>(j) + 1, walk.end());
            walk = std::move(rest);
        }
    }
}

bool is_valid_certificate(const Graph& g, const CycleCertificate& cert) {
    const auto& c = cert.cycle;
    if (c.size() % 4 != 2 || c.size() < 6) return false;
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

BiregularResult solve_biregular(const Graph& g) {
    auto validated = validate_2odd_biregular(g);
    if (auto* na = std::get_if<NotApplicable>(&validated)) return *na;
    const auto& shape = std::get<BiregularShape>(validated);
    const auto reduced = build_reduced(g, shape);

    if (auto odd = find_odd_cycle(reduced.graph)) {
        // Each multigraph edge y-y' expands to y-x-y'. Distinct edges have
        // distinct x, so the lift is a closed trail of length 2 * (odd).
        std::vector<Vertex> walk;
        for (std::size_t i = 0; i < odd->vertices.size(); ++i) {
            walk.push_back(reduced.y_vertices[odd->vertices[i]]);
            walk.push_back(reduced.provenance[odd->edges[i]]);
        }
        CycleCertificate cert{extract_cycle_2mod4(g, std::move(walk))};
        if (!is_valid_certificate(g, cert)) throw std::logic_error("certificate failed verification");
        return cert;
    }

    const auto factor = kk1_factor(reduced.graph, shape.k);
    TwoPartition labels = TwoPartition::zeros(g.vertex_count());
    for (std::size_t e : factor.edges) labels.set(reduced.provenance[e], 1);

    // Odd-side labels follow the distance to the component's lowest odd-side
    // vertex: 0 (mod 4) -> 1, 2 (mod 4) -> 0.
    std::size_t count = 0;
    const auto comp = components(g, &count);
    std::vector<unsigned char> rooted(count, 0);
    for (Vertex root : shape.parts.side_y) {
        if (rooted[comp[root]]) continue;
        rooted[comp[root]] = 1;
        const auto dist = bfs_distances(g, root);
        for (Vertex y : shape.parts.side_y) {
            if (comp[y] != comp[root]) continue;
            if (*dist[y] % 2 != 0) throw std::logic_error("odd distance between odd-side vertices");
            labels.set(y, *dist[y] % 4 == 0 ? 1 : 0);
        }
    }
    if (!check(g, labels, Neighborhood::Open).empty())
        throw std::logic_error("biregular witness failed the open-neighborhood checker");
    return labels;
}

bool has_bad_cycle(const Graph& g) {
    auto validated = validate_2odd_biregular(g);
    if (auto* na = std::get_if<NotApplicable>(&validated))
        throw std::invalid_argument("not a (2, 2k+1)-biregular graph: " + na->reason);
    const auto reduced = build_reduced(g, std::get<BiregularShape>(validated));
    return find_odd_cycle(reduced.graph).has_value();
}

}  // namespace lb2p
