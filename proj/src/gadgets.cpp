#include "lb2p/gadgets.hpp"

#include "lb2p/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace lb2p {

std::string_view to_string(GadgetId id) {
    switch (id) {
        case GadgetId::F1: return "f1";
        case GadgetId::F2: return "f2";
        case GadgetId::Forcing: return "forcing";
        case GadgetId::F4: return "f4";
    }
    return "?";
}

GadgetId parse_gadget_id(std::string_view name) {
    for (auto id : {GadgetId::F1, GadgetId::F2, GadgetId::Forcing, GadgetId::F4})
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown gadget \"" + std::string(name) + "\" (expected f1, f2, forcing or f4)");
}

namespace {

unsigned char flip(unsigned char b) { return static_cast<unsigned char>(1 - b); }

TwoPartition labeling_from(const std::vector<unsigned char>& pattern, unsigned char beta) {
    std::vector<unsigned char> out(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) out[i] = pattern[i] ? flip(beta) : beta;
    return TwoPartition(std::move(out));
}

}  // namespace

Gadget gadget_f1() {
    Gadget g{GadgetId::F1, {}, {0, 4, 8, 12}, Neighborhood::Open, GadgetContract::Forcing, {}, {}};
    GraphBuilder b(16);
    for (Vertex v = 0; v < 16; ++v) b.add_edge(v, (v + 1) % 16);
    g.graph = b.build();

    // Position 4(l-1) holds p_l, positions 4(l-1)+1..+3 hold u_{3l-2}, u_{3l-1}, u_{3l}.
    std::vector<unsigned char> pattern(16, 0);
    for (std::size_t l = 0; l < 4; ++l) {
        g.names.push_back("p" + std::to_string(l + 1));
        for (std::size_t s = 1; s <= 3; ++s) {
            g.names.push_back("u" + std::to_string(3 * l + s));
            pattern[4 * l + s] = s == 1 ? 0 : 1;
        }
    }
    g.completion = {labeling_from(pattern, 0), labeling_from(pattern, 1)};
    return g;
}

Gadget gadget_f2() {
    Gadget g{GadgetId::F2, {}, {0, 1}, Neighborhood::Closed, GadgetContract::Forcing, {}, {}};
    const std::vector<Edge> edges{{2, 0}, {2, 1}, {2, 3}, {3, 4}, {3, 5}};
    g.graph = Graph::from_edges(6, edges);
    for (int i = 1; i <= 6; ++i) g.names.push_back("v" + std::to_string(i));
    const std::vector<unsigned char> pattern{0, 0, 1, 1, 0, 0};
    g.completion = {labeling_from(pattern, 0), labeling_from(pattern, 1)};
    return g;
}

namespace forcing_layout {
constexpr Vertex p(std::size_t m) { return m; }  // m = 0..3
constexpr Vertex a(std::size_t m) { return 4 + 4 * m; }
constexpr Vertex b(std::size_t m) { return 5 + 4 * m; }
constexpr Vertex leaf(std::size_t m, std::size_t i) { return 6 + 4 * m + i; }
constexpr Vertex j(std::size_t h) { return 20 + 3 * h; }  // h = 0..1
constexpr Vertex r(std::size_t h) { return 21 + 3 * h; }
constexpr Vertex lr(std::size_t h) { return 22 + 3 * h; }
constexpr Vertex s = 26;
constexpr Vertex t = 27;
constexpr Vertex lt(std::size_t i) { return 28 + i; }
constexpr std::size_t size = 30;
}  // namespace forcing_layout

Gadget gadget_forcing() {
    using namespace forcing_layout;
    Gadget g{GadgetId::Forcing, {}, {p(0), p(1), p(2), p(3)}, Neighborhood::Closed,
             GadgetContract::Forcing, std::vector<std::string>(size), {}};
    std::vector<unsigned char> pattern(size, 0);  // 1 marks "opposite of the inputs"
    GraphBuilder bld(size);
    for (std::size_t m = 0; m < 4; ++m) {
        const auto idx = std::to_string(m + 1);
        bld.add_edge(a(m), b(m));
        bld.add_edge(b(m), leaf(m, 0));
        bld.add_edge(b(m), leaf(m, 1));
        bld.add_edge(a(m), p(m));
        bld.add_edge(a(m), j(m / 2));
        g.names[p(m)] = "p" + idx;
        g.names[a(m)] = "a" + idx;
        g.names[b(m)] = "b" + idx;
        g.names[leaf(m, 0)] = "l" + idx + "_1";
        g.names[leaf(m, 1)] = "l" + idx + "_2";
        pattern[a(m)] = pattern[b(m)] = 1;
    }
    for (std::size_t h = 0; h < 2; ++h) {
        const auto idx = std::to_string(h + 1);
        bld.add_edge(j(h), r(h));
        bld.add_edge(r(h), lr(h));
        bld.add_edge(r(h), s);
        g.names[j(h)] = "j" + idx;
        g.names[r(h)] = "r" + idx;
        g.names[lr(h)] = "lr" + idx;
        pattern[lr(h)] = 1;
    }
    bld.add_edge(s, t);
    bld.add_edge(t, lt(0));
    bld.add_edge(t, lt(1));
    g.names[s] = "s";
    g.names[t] = "t";
    g.names[lt(0)] = "lt1";
    g.names[lt(1)] = "lt2";
    pattern[s] = pattern[t] = 1;
    g.graph = bld.build();
    g.completion = {labeling_from(pattern, 0), labeling_from(pattern, 1)};
    return g;
}

Gadget gadget_f4() {
    Gadget g{GadgetId::F4, {}, {0, 3, 6}, Neighborhood::Closed, GadgetContract::ClauseCompletion, {}, {}};
    GraphBuilder bld(9);
    for (std::size_t t = 0; t < 3; ++t) {
        const Vertex y = 3 * t, z = y + 1, b = y + 2;
        bld.add_edge(z, y);
        bld.add_edge(y, b);
        bld.add_edge(b, 3 * ((t + 1) % 3) + 2);
        const auto idx = std::to_string(t + 1);
        g.names.insert(g.names.end(), {"y" + idx, "z" + idx, "b" + idx});
    }
    g.graph = bld.build();
    return g;
}

Gadget make_gadget(GadgetId id) {
    switch (id) {
        case GadgetId::F1: return gadget_f1();
        case GadgetId::F2: return gadget_f2();
        case GadgetId::Forcing: return gadget_forcing();
        case GadgetId::F4: return gadget_f4();
    }
    throw std::invalid_argument("unknown gadget id");
}

Gadget without_vertex(const Gadget& g, Vertex v) {
    const auto n = g.graph.vertex_count();
    if (v >= n) throw std::invalid_argument("vertex out of range");
    if (std::find(g.inputs.begin(), g.inputs.end(), v) != g.inputs.end())
        throw std::invalid_argument("cannot delete an input vertex");
    auto renumber = [v](Vertex u) { return u > v ? u - 1 : u; };

    Gadget out{g.id, {}, {}, g.mode, g.contract, {}, {}};
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.graph.edges())
        if (a != v && b != v) edges.emplace_back(renumber(a), renumber(b));
    out.graph = Graph::from_edges(n - 1, edges);
    for (Vertex in : g.inputs) out.inputs.push_back(renumber(in));
    for (Vertex u = 0; u < g.names.size(); ++u)
        if (u != v) out.names.push_back(g.names[u]);
    for (std::size_t beta = 0; beta < 2; ++beta) {
        const auto& old = g.completion[beta].labels();
        if (old.size() != n) continue;
        std::vector<unsigned char> labels;
        for (Vertex u = 0; u < n; ++u)
            if (u != v) labels.push_back(old[u]);
        out.completion[beta] = TwoPartition(std::move(labels));
    }
    return out;
}

Graph f4_harness(const Gadget& f4) {
    GraphBuilder bld(4);
    const Vertex offset = bld.append(f4.graph);
    for (std::size_t t = 0; t < 3; ++t) {
        bld.add_edge(0, 1 + t);
        bld.add_edge(1 + t, offset + f4.inputs.at(t));
    }
    return bld.build();
}

std::vector<unsigned char> f4_completion(unsigned char q, const std::array<unsigned char, 3>& p) {
    std::vector<unsigned char> out;
    for (std::size_t t = 0; t < 3; ++t) out.insert(out.end(), {flip(q), q, flip(p[t])});
    return out;
}

namespace {

bool all_zero(const std::vector<int>& balance, std::size_t from = 0) {
    return std::all_of(balance.begin() + static_cast<std::ptrdiff_t>(from), balance.end(),
                       [](int x) { return x == 0; });
}

const std::vector<int>& balances(const BalanceReport& r, Neighborhood mode) {
    return mode == Neighborhood::Open ? r.open_balance : r.closed_balance;
}

GadgetVerdict verify_forcing(const Gadget& g) {
    GadgetVerdict verdict;
    const auto sols = enumerate(g.graph, g.mode, g.inputs);
    verdict.valid_labelings = sols.size();

    for (const auto& sol : sols) {
        for (Vertex in : g.inputs) {
            if (sol[in] != sol[g.inputs.front()]) {
                verdict.detail = "inputs " + g.names[g.inputs.front()] + " and " + g.names[in] +
                                 " differ in an internally valid labeling";
                verdict.counterexample = sol;
                return verdict;
            }
        }
    }

    // Inside the gadget alone an input's balance is exactly its internal
    // contribution, so "balanced completion" means every balance is 0.
    for (unsigned char beta = 0; beta < 2; ++beta) {
        const bool exists = std::any_of(sols.begin(), sols.end(), [&](const TwoPartition& sol) {
            return sol[g.inputs.front()] == beta && all_zero(balances(balance_report(g.graph, sol), g.mode));
        });
        if (!exists) {
            verdict.detail = "no balanced completion for input value " + std::to_string(beta);
            verdict.missing_completion = beta;
            return verdict;
        }
        const auto& stored = g.completion[beta];
        const bool stored_ok =
            stored.size() == g.graph.vertex_count() &&
            std::all_of(g.inputs.begin(), g.inputs.end(), [&](Vertex in) { return stored[in] == beta; }) &&
            all_zero(balances(balance_report(g.graph, stored), g.mode));
        if (!stored_ok) {
            verdict.detail = "stored completion for input value " + std::to_string(beta) + " is not balanced";
            verdict.missing_completion = beta;
            if (stored.size() == g.graph.vertex_count()) verdict.counterexample = stored;
            return verdict;
        }
    }
    verdict.pass = true;
    verdict.detail = std::to_string(sols.size()) + " internally valid labelings, inputs always equal";
    return verdict;
}

// Harness layout: q = 0, p_t = 1 + t, gadget from 4.
GadgetVerdict verify_clause(const Gadget& g) {
    GadgetVerdict verdict;
    const Graph h = f4_harness(g);
    const std::vector<Vertex> literals{1, 2, 3};
    const auto sols = enumerate(h, Neighborhood::Closed, literals);
    verdict.valid_labelings = sols.size();

    for (unsigned mask = 0; mask < 8; ++mask) {
        const std::array<unsigned char, 3> p{static_cast<unsigned char>((mask >> 2) & 1U),
                                             static_cast<unsigned char>((mask >> 1) & 1U),
                                             static_cast<unsigned char>(mask & 1U)};
        const bool mono = p[0] == p[1] && p[1] == p[2];
        auto match = std::find_if(sols.begin(), sols.end(), [&](const TwoPartition& sol) {
            return sol[1] == p[0] && sol[2] == p[1] && sol[3] == p[2];
        });
        const std::string triple{static_cast<char>('0' + p[0]), static_cast<char>('0' + p[1]),
                                 static_cast<char>('0' + p[2])};
        if (mono) {
            if (match != sols.end()) {
                verdict.detail = "monochrome literals " + triple + " admit a valid labeling";
                verdict.counterexample = *match;
                return verdict;
            }
            continue;
        }
        const int sum = phi_star(p[0]) + phi_star(p[1]) + phi_star(p[2]);
        const unsigned char q = sum > 0 ? 0 : 1;
        std::vector<unsigned char> labels{q, p[0], p[1], p[2]};
        const auto inner = f4_completion(q, p);
        labels.insert(labels.end(), inner.begin(), inner.end());
        const TwoPartition lab(std::move(labels));
        const auto report = balance_report(h, lab);
        bool ok = report.closed_balance[0] == 0 && all_zero(report.closed_balance, 4);
        for (std::size_t t = 0; t < 3; ++t)
            ok = ok && phi_star(lab[0]) + phi_star(lab[4 + g.inputs[t]]) == 0;
        if (!ok) {
            verdict.detail = "completion for literals " + triple + " is not balanced";
            verdict.counterexample = lab;
            return verdict;
        }
    }
    verdict.pass = true;
    verdict.detail = std::to_string(sols.size()) +
                     " valid harness labelings, none with monochrome literals, every other literal pattern completes";
    return verdict;
}

}  // namespace

GadgetVerdict verify_gadget(const Gadget& g) {
    for (Vertex in : g.inputs)
        if (in >= g.graph.vertex_count()) throw std::invalid_argument("gadget input out of range");
    return g.contract == GadgetContract::Forcing ? verify_forcing(g) : verify_clause(g);
}

const Gadget& verified_gadget(GadgetId id) {
    static const std::array<Gadget, 4> cache = [] {
        std::array<Gadget, 4> out;
        for (auto gid : {GadgetId::F1, GadgetId::F2, GadgetId::Forcing, GadgetId::F4}) {
            auto g = make_gadget(gid);
            const auto verdict = verify_gadget(g);
            if (!verdict.pass)
                throw std::logic_error("gadget " + std::string(to_string(gid)) + " failed its contract: " +
                                       verdict.detail);
            out[static_cast<std::size_t>(gid)] = std::move(g);
        }
        return out;
    }();
    return cache[static_cast<std::size_t>(id)];
}

}  // namespace lb2p
