#include "support.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lb2p::testing {

Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

Graph subdivide(const MultiGraph& m) {
    std::vector<Edge> e;
    for (std::size_t id = 0; id < m.edge_count(); ++id) {
        const auto [u, v] = m.edge(id);
        e.emplace_back(u, m.vertex_count() + id);
        e.emplace_back(m.vertex_count() + id, v);
    }
    return Graph::from_edges(m.vertex_count() + m.edge_count(), e);
}

MultiGraph complete_multigraph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return MultiGraph(n, e);
}

MultiGraph complete_bipartite_multigraph(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return MultiGraph(a + b, e);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

MultiGraph random_regular_multigraph(std::size_t n, std::size_t r, Rng& rng) {
    if (n < 2 || (n * r) % 2 != 0) throw std::invalid_argument("no r-regular multigraph with these sizes");
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), r, v);
    while (true) {
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> e;
        bool loop = false;
        for (std::size_t i = 0; i < points.size(); i += 2) {
            if (points[i] == points[i + 1]) {
                loop = true;
                break;
            }
            e.emplace_back(points[i], points[i + 1]);
        }
        if (!loop) return MultiGraph(n, std::move(e));
    }
}

Graph random_2odd_biregular(std::size_t y, std::size_t k, Rng& rng) {
    return subdivide(random_regular_multigraph(y, 2 * k + 1, rng));
}

NaeInstance random_instance(std::size_t n, Rng& rng) {
    if (n % 3 != 0) throw std::invalid_argument("n must be a multiple of 3");
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < n; ++i) slots.insert(slots.end(), 4, i);
    while (true) {
        std::shuffle(slots.begin(), slots.end(), rng);
        std::vector<Clause> clauses;
        bool ok = true;
        for (std::size_t j = 0; ok && j < slots.size(); j += 3) {
            const Clause c{slots[j], slots[j + 1], slots[j + 2]};
            ok = c[0] != c[1] && c[1] != c[2] && c[0] != c[2];
            clauses.push_back(c);
        }
        if (ok) return NaeInstance(n, std::move(clauses));
    }
}

namespace {

void extend(std::size_t n, const std::vector<Clause>& triples, std::size_t from, std::vector<std::size_t>& load,
            std::vector<Clause>& chosen, std::vector<NaeInstance>& out) {
    if (chosen.size() * 3 == 4 * n) {
        out.emplace_back(n, chosen);
        return;
    }
    for (std::size_t t = from; t < triples.size(); ++t) {
        const auto& c = triples[t];
        if (load[c[0]] == 4 || load[c[1]] == 4 || load[c[2]] == 4) continue;
        // The lowest variable still short of four occurrences must be covered
        // by this or a later triple, and triples are ordered by first element.
        const auto first_open =
            static_cast<std::size_t>(std::find_if(load.begin(), load.end(), [](auto l) { return l < 4; }) -
                                     load.begin());
        if (c[0] > first_open) break;
        for (auto x : c) ++load[x];
        chosen.push_back(c);
        extend(n, triples, t, load, chosen, out);
        chosen.pop_back();
        for (auto x : c) --load[x];
    }
}

}  // namespace

std::vector<NaeInstance> all_instances(std::size_t n) {
    std::vector<NaeInstance> out;
    if ((4 * n) % 3 != 0) return out;
    std::vector<Clause> triples;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    std::vector<std::size_t> load(n, 0);
    std::vector<Clause> chosen;
    extend(n, triples, 0, load, chosen, out);
    return out;
}

NaeInstance triple_instance() { return NaeInstance(3, std::vector<Clause>(4, Clause{0, 1, 2})); }

std::vector<std::vector<std::size_t>> all_degree_bounded_subsets(const MultiGraph& m, std::size_t lo,
                                                                  std::size_t hi) {
    const auto edges = m.edge_count();
    if (edges > 20) throw std::invalid_argument("subset oracle is limited to 20 edges");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> deg(m.vertex_count());
    for (std::uint32_t mask = 0; mask < (1U << edges); ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        std::vector<std::size_t> chosen;
        for (std::size_t e = 0; e < edges; ++e)
            if (mask >> e & 1U) {
                ++deg[m.edge(e).first];
                ++deg[m.edge(e).second];
                chosen.push_back(e);
            }
        if (std::all_of(deg.begin(), deg.end(), [&](auto d) { return lo <= d && d <= hi; }))
            out.push_back(std::move(chosen));
    }
    return out;
}

}  // namespace lb2p::testing
