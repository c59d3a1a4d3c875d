#include "lb2p/reductions.hpp"

#include <stdexcept>

namespace lb2p {

std::string_view to_string(ReductionTarget t) {
    switch (t) {
        case ReductionTarget::Biregular: return "bireg";
        case ReductionTarget::Even: return "even";
        case ReductionTarget::Subcubic: return "subcubic";
        case ReductionTarget::Odd: return "odd";
    }
    return "?";
}

ReductionTarget parse_target(std::string_view text) {
    for (auto t : {ReductionTarget::Biregular, ReductionTarget::Even, ReductionTarget::Subcubic,
                   ReductionTarget::Odd})
        if (to_string(t) == text) return t;
    throw std::invalid_argument("unknown target \"" + std::string(text) +
                                "\" (expected bireg, even, subcubic or odd)");
}

Neighborhood mode_of(ReductionTarget t) {
    return t == ReductionTarget::Biregular || t == ReductionTarget::Even ? Neighborhood::Open
                                                                         : Neighborhood::Closed;
}

namespace {

using Kind = Role::Kind;

// occurrence_of[j][s]: which appearance (0..3) of its variable slot s of
// clause j is.
std::vector<std::array<std::size_t, 3>> occurrence_table(const NaeInstance& inst) {
    std::vector<std::array<std::size_t, 3>> out(inst.clause_count());
    for (std::size_t i = 0; i < inst.variable_count(); ++i) {
        const auto& occ = inst.occurrences(i);
        for (std::size_t t = 0; t < 4; ++t) out[occ[t].clause][occ[t].position] = t;
    }
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("reduction postcondition failed: ") + what);
}

// Appends one copy of the gadget per variable, recording roles. Returns the
// offsets of the copies.
std::vector<Vertex> place_gadgets(GraphBuilder& bld, std::vector<Role>& roles, const Gadget& g,
                                  std::size_t count) {
    std::vector<Vertex> offsets;
    for (std::size_t i = 0; i < count; ++i) {
        const Vertex off = bld.append(g.graph);
        offsets.push_back(off);
        for (Vertex local = 0; local < g.graph.vertex_count(); ++local) {
            std::optional<std::size_t> input;
            for (std::size_t t = 0; t < g.inputs.size(); ++t)
                if (g.inputs[t] == local) input = t;
            roles.push_back(input ? Role{Kind::P, i, *input} : Role{Kind::G, i, local});
        }
    }
    return offsets;
}

}  // namespace

ReductionArtifact reduce_open_biregular(const NaeInstance& inst, std::size_t r) {
    if (r == 0) throw std::invalid_argument("r must be at least 1");
    const auto n = inst.variable_count(), k = inst.clause_count();
    ReductionArtifact art{ReductionTarget::Biregular, r, inst, {}, {}};
    GraphBuilder bld(n + 2 * r * k);
    for (std::size_t i = 0; i < n; ++i) art.roles.push_back({Kind::P, i, std::nullopt});
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < 2 * r; ++l) {
            const Vertex q = n + 2 * r * j + l;
            art.roles.push_back({Kind::Q, j, l});
            for (std::size_t x : inst.clauses()[j]) bld.add_edge(x, q);
        }
    }
    art.graph = bld.build();

    require(art.graph.vertex_count() == n + 2 * r * k, "vertex count n + 2rk");
    if (n > 0) {
        const auto cls = classify(art.graph);
        require(cls.biregular && *cls.biregular == std::pair<std::size_t, std::size_t>{3, 8 * r},
                "(3,8r)-biregular");
    }
    return art;
}

ReductionArtifact reduce_open_even(const NaeInstance& inst) {
    const auto& f1 = verified_gadget(GadgetId::F1);
    const auto n = inst.variable_count(), k = inst.clause_count();
    ReductionArtifact art{ReductionTarget::Even, 0, inst, {}, {}};
    GraphBuilder bld;
    const auto offsets = place_gadgets(bld, art.roles, f1, n);
    const auto occ = occurrence_table(inst);
    for (std::size_t j = 0; j < k; ++j) {
        const Vertex q1 = bld.add_vertices(3), q2 = q1 + 1, v = q1 + 2;
        art.roles.push_back({Kind::Q, j, 0});
        art.roles.push_back({Kind::Q, j, 1});
        art.roles.push_back({Kind::V, j, std::nullopt});
        for (std::size_t s = 0; s < 3; ++s) {
            const auto i = inst.clauses()[j][s];
            const Vertex p = offsets[i] + f1.inputs[occ[j][s]];
            bld.add_edge(p, q1);
            bld.add_edge(p, q2);
        }
        bld.add_edge(q1, v);
        bld.add_edge(q2, v);
    }
    art.graph = bld.build();

    require(art.graph.vertex_count() == 16 * n + 3 * k, "vertex count 16n + 3k");
    if (n > 0) {
        const auto cls = classify(art.graph);
        require(cls.is_even, "even");
        require(bipartition(art.graph).has_value(), "bipartite");
        require(cls.max_degree == 4, "maximum degree 4");
    }
    return art;
}

namespace {

ReductionArtifact reduce_closed(const NaeInstance& inst, bool odd) {
    const auto& gamma = verified_gadget(GadgetId::Forcing);
    const Gadget* f4 = odd ? &verified_gadget(GadgetId::F4) : nullptr;
    const auto n = inst.variable_count(), k = inst.clause_count();
    const auto gsize = gamma.graph.vertex_count();
    ReductionArtifact art{odd ? ReductionTarget::Odd : ReductionTarget::Subcubic, 0, inst, {}, {}};
    GraphBuilder bld;
    const auto offsets = place_gadgets(bld, art.roles, gamma, n);
    const auto occ = occurrence_table(inst);
    for (std::size_t j = 0; j < k; ++j) {
        const Vertex q = bld.add_vertex();
        art.roles.push_back({Kind::Q, j, std::nullopt});
        Vertex f4_off = 0;
        if (f4) {
            f4_off = bld.append(f4->graph);
            for (std::size_t s = 0; s < 3; ++s) {
                art.roles.push_back({Kind::Y, j, s});
                art.roles.push_back({Kind::Z, j, s});
                art.roles.push_back({Kind::B, j, s});
            }
        }
        for (std::size_t s = 0; s < 3; ++s) {
            const auto i = inst.clauses()[j][s];
            const Vertex p = offsets[i] + gamma.inputs[occ[j][s]];
            bld.add_edge(p, q);
            if (f4) bld.add_edge(p, f4_off + f4->inputs[s]);
        }
    }
    art.graph = bld.build();

    const auto per_clause = odd ? 10 : 1;
    require(art.graph.vertex_count() == gsize * n + per_clause * k,
            odd ? "vertex count |gadget| n + 10k" : "vertex count |gadget| n + k");
    if (n > 0) {
        const auto cls = classify(art.graph);
        require(cls.max_degree == 3, "maximum degree 3");
        if (odd)
            require(cls.is_odd, "odd");
        else
            require(bipartition(art.graph).has_value(), "bipartite");
    }
    return art;
}

}  // namespace

ReductionArtifact reduce_closed_subcubic(const NaeInstance& inst) { return reduce_closed(inst, false); }

ReductionArtifact reduce_closed_odd(const NaeInstance& inst) { return reduce_closed(inst, true); }

ReductionArtifact reduce(const NaeInstance& inst, ReductionTarget target, std::size_t r) {
    switch (target) {
        case ReductionTarget::Biregular: return reduce_open_biregular(inst, r);
        case ReductionTarget::Even: return reduce_open_even(inst);
        case ReductionTarget::Subcubic: return reduce_closed_subcubic(inst);
        case ReductionTarget::Odd: return reduce_closed_odd(inst);
    }
    throw std::invalid_argument("unknown target");
}

std::vector<std::vector<Vertex>> occurrence_vertices(const ReductionArtifact& art) {
    const auto per = art.target == ReductionTarget::Biregular ? 1 : 4;
    std::vector<std::vector<Vertex>> out(art.instance.variable_count(), std::vector<Vertex>(per));
    for (Vertex v = 0; v < art.roles.size(); ++v) {
        const auto& role = art.roles[v];
        if (role.kind == Kind::P) out.at(role.first).at(role.second.value_or(0)) = v;
    }
    return out;
}

TwoPartition assignment_to_partition(const ReductionArtifact& art, const Assignment& a) {
    const auto& inst = art.instance;
    if (a.size() != inst.variable_count()) throw std::invalid_argument("assignment length mismatch");
    // The clause vertex takes the label opposite to the majority of its
    // literals, so its literal sum of +-1 is cancelled.
    std::vector<unsigned char> against_majority(inst.clause_count());
    for (std::size_t j = 0; j < inst.clause_count(); ++j) {
        const auto& c = inst.clauses()[j];
        const int sum = phi_star(a[c[0]]) + phi_star(a[c[1]]) + phi_star(a[c[2]]);
        if (sum == 3 || sum == -3) throw UnsatAssignment(j);
        against_majority[j] = sum < 0 ? 1 : 0;
    }

    const Gadget* gadget = nullptr;
    if (art.target == ReductionTarget::Even) gadget = &verified_gadget(GadgetId::F1);
    if (art.target == ReductionTarget::Subcubic || art.target == ReductionTarget::Odd)
        gadget = &verified_gadget(GadgetId::Forcing);

    TwoPartition p = TwoPartition::zeros(art.graph.vertex_count());
    for (Vertex v = 0; v < art.roles.size(); ++v) {
        const auto& role = art.roles[v];
        const auto second = role.second.value_or(0);
        unsigned char label = 0;
        switch (role.kind) {
            case Kind::P: label = a.at(role.first); break;
            case Kind::G: label = gadget->completion[a.at(role.first)][second]; break;
            case Kind::Q:
                if (art.target == ReductionTarget::Biregular)
                    label = static_cast<unsigned char>((second + 1) % 2);
                else if (art.target == ReductionTarget::Even)
                    label = second == 0 ? 1 : 0;
                else
                    label = against_majority[role.first];
                break;
            case Kind::V: label = against_majority[role.first]; break;
            case Kind::Y: label = static_cast<unsigned char>(1 - against_majority[role.first]); break;
            case Kind::Z: label = against_majority[role.first]; break;
            case Kind::B:
                label = static_cast<unsigned char>(1 - a.at(inst.clauses()[role.first][second]));
                break;
        }
        p.set(v, label);
    }
    if (!check(art.graph, p, art.mode()).empty())
        throw std::logic_error("lifted partition failed the checker");
    return p;
}

Assignment partition_to_assignment(const ReductionArtifact& art, const TwoPartition& p) {
    if (p.size() != art.graph.vertex_count()) throw std::invalid_argument("partition length mismatch");
    auto violations = check(art.graph, p, art.mode());
    if (!violations.empty()) throw InvalidPartition(std::move(violations));
    Assignment a;
    for (const auto& occ : occurrence_vertices(art)) a.push_back(p[occ.front()]);
    if (!nae_eval(art.instance, a)) throw std::logic_error("extracted assignment does not satisfy the instance");
    return a;
}

}  // namespace lb2p
