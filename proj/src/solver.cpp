#include "lb2p/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>

namespace lb2p {

ConstraintSystem::ConstraintSystem(const Graph& g, Neighborhood mode, std::vector<Vertex> waived)
    : mode_(mode), scopes_(g.vertex_count()), watchers_(g.vertex_count()),
      waived_(g.vertex_count(), 0) {
    for (Vertex w : waived) waived_.at(w) = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& scope = scopes_[v];
        scope = g.neighbors(v);
        if (mode == Neighborhood::Closed) scope.insert(std::upper_bound(scope.begin(), scope.end(), v), v);
        if (waived_[v]) continue;
        for (Vertex w : scope) watchers_[w].push_back(v);
    }
}

namespace {

/// Incremental propagation state with an undo trail.
class Engine {
public:
    explicit Engine(const ConstraintSystem& cs)
        : cs_(cs), value_(cs.variable_count(), unassigned), sum_(cs.variable_count(), 0),
          free_(cs.variable_count(), 0), queued_(cs.variable_count(), 0) {
        for (Vertex v = 0; v < cs.variable_count(); ++v) {
            free_[v] = static_cast<int>(cs.scope(v).size());
            if (!cs.is_waived(v)) enqueue(v);
        }
    }

    signed char value(Vertex v) const { return value_[v]; }
    const PartialAssignment& values() const noexcept { return value_; }
    std::size_t mark() const noexcept { return trail_.size(); }
    std::uint64_t propagations() const noexcept { return propagations_; }

    void assign(Vertex v, signed char label) {
        value_[v] = label;
        trail_.push_back(v);
        const int s = phi_star(static_cast<unsigned char>(label));
        for (Vertex c : cs_.watchers(v)) {
            sum_[c] += s;
            --free_[c];
            enqueue(c);
        }
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const Vertex v = trail_.back();
            trail_.pop_back();
            const int s = phi_star(static_cast<unsigned char>(value_[v]));
            for (Vertex c : cs_.watchers(v)) {
                sum_[c] -= s;
                ++free_[c];
            }
            value_[v] = unassigned;
        }
    }

    /// Returns the vertex of a violated constraint, if any.
    std::optional<Vertex> propagate() {
        while (head_ < queue_.size()) {
            const Vertex c = queue_[head_++];
            queued_[c] = 0;
            const int lo = sum_[c] - free_[c];
            const int hi = sum_[c] + free_[c];
            if (lo > 1 || hi < -1) {
                clear_queue();
                return c;
            }
            if (free_[c] == 0) continue;
            // Only the extreme total is admissible: every free variable must
            // take the value that reaches it.
            signed char forced = unassigned;
            if (hi <= 0)
                forced = 1;
            else if (lo >= 0)
                forced = 0;
            if (forced == unassigned) continue;
            for (Vertex w : cs_.scope(c)) {
                if (value_[w] != unassigned) continue;
                ++propagations_;
                assign(w, forced);
            }
        }
        clear_queue();
        return std::nullopt;
    }

private:
    void enqueue(Vertex c) {
        if (queued_[c]) return;
        queued_[c] = 1;
        queue_.push_back(c);
    }

    void clear_queue() {
        for (std::size_t i = head_; i < queue_.size(); ++i) queued_[queue_[i]] = 0;
        queue_.clear();
        head_ = 0;
    }

    const ConstraintSystem& cs_;
    PartialAssignment value_;
    std::vector<int> sum_;
    std::vector<int> free_;
    std::vector<unsigned char> queued_;
    std::vector<Vertex> queue_;
    std::size_t head_ = 0;
    std::vector<Vertex> trail_;
    std::uint64_t propagations_ = 0;
};

TwoPartition to_partition(const PartialAssignment& values) {
    std::vector<unsigned char> labels(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) labels[i] = static_cast<unsigned char>(values[i]);
    return TwoPartition(std::move(labels));
}

enum class SearchEnd { Exhausted, Stopped, OutOfBudget };

/// Depth-first search over the constraint system. `on_solution` returns false
/// to stop the search.
SearchEnd search(const ConstraintSystem& cs, const SolverOptions& options, SolveStats& stats,
                 const std::function<bool(const PartialAssignment&)>& on_solution) {
    Engine engine(cs);
    struct Frame {
        Vertex var;
        std::size_t mark;
        unsigned char next;
    };
    const std::size_t n = cs.variable_count();
    auto finish = [&](SearchEnd end) {
        stats.propagations = engine.propagations();
        return end;
    };
    if (engine.propagate()) return finish(SearchEnd::Exhausted);

    std::vector<Frame> stack;
    bool descend = true;
    while (true) {
        if (descend) {
            Vertex v = stack.empty() ? 0 : stack.back().var + 1;
            while (v < n && engine.value(v) != unassigned) ++v;
            if (v == n) {
                if (!on_solution(engine.values())) return finish(SearchEnd::Stopped);
                descend = false;
                continue;
            }
            stack.push_back({v, engine.mark(), 0});
        }
        if (stack.empty()) return finish(SearchEnd::Exhausted);
        Frame& top = stack.back();
        engine.undo(top.mark);
        if (top.next > 1) {
            stack.pop_back();
            descend = false;
            continue;
        }
        const auto label = static_cast<signed char>(top.next++);
        if (++stats.nodes > options.node_budget) return finish(SearchEnd::OutOfBudget);
        engine.assign(top.var, label);
        descend = !engine.propagate().has_value();
    }
}

void assert_witness(const Graph& g, const TwoPartition& p, Neighborhood mode,
                    const std::vector<Vertex>& waived) {
    if (!check_except(g, p, mode, waived).empty())
        throw std::logic_error("solver produced a labeling that fails the checker");
}

}  // namespace

PropagationResult propagate(const ConstraintSystem& cs, PartialAssignment partial) {
    if (partial.size() != cs.variable_count())
        throw std::invalid_argument("partial assignment length mismatch");
    Engine engine(cs);
    for (Vertex v = 0; v < partial.size(); ++v) {
        if (partial[v] == unassigned) continue;
        if (partial[v] != 0 && partial[v] != 1) throw std::invalid_argument("labels must be 0, 1 or -1");
        if (engine.value(v) == unassigned) {
            engine.assign(v, partial[v]);
        } else if (engine.value(v) != partial[v]) {
            return {engine.values(), v};
        }
        if (auto conflict = engine.propagate()) return {engine.values(), conflict};
    }
    auto conflict = engine.propagate();
    return {engine.values(), conflict};
}

SolveOutcome decide(const Graph& g, Neighborhood mode, const std::vector<Vertex>& waived,
                    const SolverOptions& options) {
    ConstraintSystem cs(g, mode, waived);
    SolveOutcome out;
    const auto end = search(cs, options, out.stats, [&](const PartialAssignment& values) {
        out.witness = to_partition(values);
        return false;
    });
    if (end == SearchEnd::OutOfBudget) {
        out.status = SolveStatus::Timeout;
        return out;
    }
    out.status = out.witness ? SolveStatus::Sat : SolveStatus::Unsat;
    if (out.witness) assert_witness(g, *out.witness, mode, waived);
    return out;
}

std::vector<TwoPartition> enumerate(const Graph& g, Neighborhood mode, const std::vector<Vertex>& waived,
                                    const SolverOptions& options) {
    ConstraintSystem cs(g, mode, waived);
    SolveStats stats;
    std::vector<TwoPartition> found;
    const auto end = search(cs, options, stats, [&](const PartialAssignment& values) {
        found.push_back(to_partition(values));
        return true;
    });
    if (end == SearchEnd::OutOfBudget)
        throw BudgetExceeded("enumeration exceeded the node budget of " +
                             std::to_string(options.node_budget));
    for (const auto& p : found) assert_witness(g, p, mode, waived);
    return found;
}

namespace {

/// Calls `visit` for each valid labeling mask (vertex 0 in the most
/// significant position) until it returns false.
void brute_scan(const Graph& g, Neighborhood mode, const std::vector<Vertex>& waived,
                const std::function<bool(std::uint32_t)>& visit) {
    const auto n = g.vertex_count();
    if (n > brute_force_cap)
        throw std::invalid_argument("brute force is capped at " + std::to_string(brute_force_cap) +
                                    " vertices");
    auto bit = [n](Vertex v) { return std::uint32_t{1} << (n - 1 - v); };
    std::vector<unsigned char> skip(n, 0);
    for (Vertex w : waived) skip.at(w) = 1;
    struct Row {
        std::uint32_t scope;
        int size;
    };
    std::vector<Row> rows;
    for (Vertex v = 0; v < n; ++v) {
        if (skip[v]) continue;
        std::uint32_t mask = mode == Neighborhood::Closed ? bit(v) : 0;
        for (Vertex u : g.neighbors(v)) mask |= bit(u);
        rows.push_back({mask, std::popcount(mask)});
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto labels = static_cast<std::uint32_t>(m);
        bool ok = true;
        for (const auto& row : rows) {
            const int ones = std::popcount(labels & row.scope);
            if (std::abs(2 * ones - row.size) > 1) {
                ok = false;
                break;
            }
        }
        if (ok && !visit(labels)) return;
    }
}

TwoPartition from_mask(std::uint32_t mask, std::size_t n) {
    std::vector<unsigned char> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<unsigned char>((mask >> (n - 1 - v)) & 1U);
    return TwoPartition(std::move(labels));
}

}  // namespace

SolveOutcome brute_force(const Graph& g, Neighborhood mode, const std::vector<Vertex>& waived) {
    SolveOutcome out;
    brute_scan(g, mode, waived, [&](std::uint32_t mask) {
        out.witness = from_mask(mask, g.vertex_count());
        return false;
    });
    out.status = out.witness ? SolveStatus::Sat : SolveStatus::Unsat;
    return out;
}

std::vector<TwoPartition> brute_enumerate(const Graph& g, Neighborhood mode,
                                          const std::vector<Vertex>& waived) {
    std::vector<TwoPartition> found;
    brute_scan(g, mode, waived, [&](std::uint32_t mask) {
        found.push_back(from_mask(mask, g.vertex_count()));
        return true;
    });
    return found;
}

std::vector<Vertex> check_except(const Graph& g, const TwoPartition& p, Neighborhood mode,
                                 const std::vector<Vertex>& waived) {
    auto violations = check(g, p, mode);
    std::erase_if(violations, [&](Vertex v) {
        return std::find(waived.begin(), waived.end(), v) != waived.end();
    });
    return violations;
}

}  // namespace lb2p
