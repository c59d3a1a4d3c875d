#include "lb2p/factor.hpp"

#include "lb2p/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace lb2p {

std::vector<std::size_t> FactorResult::degrees(const MultiGraph& m) const {
    std::vector<std::size_t> deg(m.vertex_count(), 0);
    for (std::size_t e : edges) {
        ++deg[m.edge(e).first];
        ++deg[m.edge(e).second];
    }
    return deg;
}

namespace {

std::size_t regular_degree(const MultiGraph& m) {
    if (m.vertex_count() == 0) throw std::invalid_argument("factor of an empty multigraph");
    const auto deg = m.degrees();
    if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end())
        throw std::invalid_argument("multigraph is not regular");
    return deg.front();
}

/// Edge-list multigraph used for trail decompositions. Edges with id >=
/// `real_edges` are auxiliary.
struct TrailGraph {
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> incidence;

    explicit TrailGraph(std::size_t n) : incidence(n) {}

    std::size_t add(Vertex u, Vertex v) {
        edges.emplace_back(u, v);
        incidence[u].push_back(edges.size() - 1);
        incidence[v].push_back(edges.size() - 1);
        return edges.size() - 1;
    }
};

/// Walks closed trails (all degrees must be even) and reports every traversed
/// edge with its direction. Vertices in `first` are exhausted before the rest.
template <typename Visit>
void walk_trails(const TrailGraph& t, const std::vector<Vertex>& first, Visit&& visit) {
    std::vector<unsigned char> used(t.edges.size(), 0);
    std::vector<std::size_t> cursor(t.incidence.size(), 0);
    auto next_edge = [&](Vertex v) -> std::optional<std::size_t> {
        auto& c = cursor[v];
        while (c < t.incidence[v].size() && used[t.incidence[v][c]]) ++c;
        if (c == t.incidence[v].size()) return std::nullopt;
        return t.incidence[v][c];
    };
    auto walk_from = [&](Vertex start) {
        while (next_edge(start)) {
            visit.begin_trail();
            Vertex cur = start;
            while (auto e = next_edge(cur)) {
                used[*e] = 1;
                const auto& [a, b] = t.edges[*e];
                const Vertex other = a == cur ? b : a;
                visit.edge(*e, cur, other);
                cur = other;
            }
        }
    };
    for (Vertex v : first) walk_from(v);
    for (Vertex v = 0; v < t.incidence.size(); ++v) walk_from(v);
}

}  // namespace

FactorResult factor_by_euler_split(const MultiGraph& m) {
    const std::size_t r = regular_degree(m);
    if (r % 2 == 0) throw std::invalid_argument("euler split needs odd regularity");
    const std::size_t k = r / 2;
    const std::size_t n = m.vertex_count();
    const std::size_t real = m.edge_count();

    // Orientation: join every vertex to a dummy hub so all degrees are even.
    TrailGraph augmented(n + 1);
    for (const auto& [u, v] : m.edges()) augmented.add(u, v);
    for (Vertex v = 0; v < n; ++v) augmented.add(v, n);
    std::vector<Vertex> tail(real), head(real);
    struct Orient {
        std::vector<Vertex>& tail;
        std::vector<Vertex>& head;
        std::size_t real;
        void begin_trail() {}
        void edge(std::size_t e, Vertex from, Vertex to) {
            if (e < real) {
                tail[e] = from;
                head[e] = to;
            }
        }
    } orient{tail, head, real};
    walk_trails(augmented, {}, orient);

    // Split graph: out-copy v, in-copy n + v, hub 2n joined to odd copies.
    const Vertex hub = 2 * n;
    TrailGraph split(2 * n + 1);
    for (std::size_t e = 0; e < real; ++e) split.add(tail[e], n + head[e]);
    for (Vertex c = 0; c < 2 * n; ++c)
        if (split.incidence[c].size() % 2 == 1) split.add(c, hub);

    std::vector<unsigned char> selected(real, 0);
    struct Alternate {
        std::vector<unsigned char>& selected;
        std::size_t real;
        unsigned char color = 1;
        void begin_trail() { color = 1; }
        void edge(std::size_t e, Vertex, Vertex) {
            if (e >= real) {
                color = 1;  // passing through the hub starts a new open trail
                return;
            }
            selected[e] = color;
            color ^= 1;
        }
    } alternate{selected, real};
    walk_trails(split, {hub}, alternate);

    FactorResult result;
    for (std::size_t e = 0; e < real; ++e)
        if (selected[e]) result.edges.push_back(e);
    for (auto d : result.degrees(m))
        if (d < k || d > k + 1) throw std::logic_error("euler split produced a degree outside [k, k+1]");
    return result;
}

std::optional<FactorResult> factor_by_search(const MultiGraph& m, std::size_t lo, std::size_t hi,
                                             std::uint64_t node_budget) {
    const std::size_t n = m.vertex_count();
    const std::size_t edge_total = m.edge_count();
    const auto inc = m.incidence();
    std::vector<signed char> state(edge_total, -1);
    std::vector<std::size_t> chosen(n, 0), open(n, 0);
    for (Vertex v = 0; v < n; ++v) open[v] = inc[v].size();
    std::vector<std::size_t> trail;
    std::vector<Vertex> queue;

    auto set = [&](std::size_t e, signed char s) {
        state[e] = s;
        trail.push_back(e);
        for (Vertex v : {m.edge(e).first, m.edge(e).second}) {
            --open[v];
            if (s) ++chosen[v];
            queue.push_back(v);
        }
    };
    auto undo = [&](std::size_t mark) {
        while (trail.size() > mark) {
            const std::size_t e = trail.back();
            trail.pop_back();
            for (Vertex v : {m.edge(e).first, m.edge(e).second}) {
                ++open[v];
                if (state[e]) --chosen[v];
            }
            state[e] = -1;
        }
    };
    auto propagate = [&]() {
        while (!queue.empty()) {
            const Vertex v = queue.back();
            queue.pop_back();
            if (chosen[v] > hi || chosen[v] + open[v] < lo) {
                queue.clear();
                return false;
            }
            if (open[v] == 0) continue;
            signed char forced = -1;
            if (chosen[v] == hi)
                forced = 0;
            else if (chosen[v] + open[v] == lo)
                forced = 1;
            if (forced < 0) continue;
            for (std::size_t e : inc[v])
                if (state[e] < 0) set(e, forced);
        }
        return true;
    };

    for (Vertex v = 0; v < n; ++v) queue.push_back(v);
    if (!propagate()) return std::nullopt;

    struct Frame {
        std::size_t edge;
        std::size_t mark;
        int next;  // 1 = try selected, 0 = try excluded, -1 = exhausted
    };
    std::vector<Frame> stack;
    std::uint64_t nodes = 0;
    bool descend = true;
    while (true) {
        if (descend) {
            std::size_t e = stack.empty() ? 0 : stack.back().edge + 1;
            while (e < edge_total && state[e] >= 0) ++e;
            if (e == edge_total) {
                FactorResult result;
                for (std::size_t id = 0; id < edge_total; ++id)
                    if (state[id] == 1) result.edges.push_back(id);
                return result;
            }
            stack.push_back({e, trail.size(), 1});
        }
        if (stack.empty()) return std::nullopt;
        Frame& top = stack.back();
        undo(top.mark);
        if (top.next < 0) {
            stack.pop_back();
            descend = false;
            continue;
        }
        const auto s = static_cast<signed char>(top.next);
        --top.next;
        if (++nodes > node_budget) throw BudgetExceeded("factor search exceeded its node budget");
        set(top.edge, s);
        descend = propagate();
    }
}

FactorResult kk1_factor(const MultiGraph& m, std::size_t k) {
    const std::size_t r = regular_degree(m);
    if (k < 1 || k >= r)
        throw std::invalid_argument("kk1_factor needs 1 <= k < r (k = " + std::to_string(k) +
                                    ", r = " + std::to_string(r) + ")");
    if (r == 2 * k + 1) return factor_by_euler_split(m);
    auto found = factor_by_search(m, k, k + 1);
    if (!found) throw std::logic_error("no [k, k+1]-factor found in a regular multigraph");
    return *found;
}

}  // namespace lb2p
