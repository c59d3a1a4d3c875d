#pragma once

#include "lb2p/balance.hpp"
#include "lb2p/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lb2p {

/// Local-balance constraints of a graph: for every non-waived vertex v the
/// labels on its scope (N(v) or N[v]) must sum, in the +-1 recoding, to a value
/// of magnitude at most 1. Waived vertices keep their label variable but lose
/// their own constraint; gadget verification uses this to model inputs that
/// receive unknown external contributions.
class ConstraintSystem {
public:
    ConstraintSystem(const Graph& g, Neighborhood mode, std::vector<Vertex> waived = {});

    std::size_t variable_count() const noexcept { return scopes_.size(); }
    Neighborhood mode() const noexcept { return mode_; }
    bool is_waived(Vertex v) const { return waived_.at(v) != 0; }
    const std::vector<Vertex>& scope(Vertex v) const { return scopes_.at(v); }
    /// Non-waived constraints whose scope contains v.
    const std::vector<Vertex>& watchers(Vertex v) const { return watchers_.at(v); }

private:
    Neighborhood mode_;
    std::vector<std::vector<Vertex>> scopes_;
    std::vector<std::vector<Vertex>> watchers_;
    std::vector<unsigned char> waived_;
};

/// -1 marks an unassigned vertex; otherwise the label 0 or 1.
using PartialAssignment = std::vector<signed char>;
inline constexpr signed char unassigned = -1;

struct PropagationResult {
    /// Fixpoint assignment (meaningful only when no conflict occurred).
    PartialAssignment assignment;
    /// Vertex whose constraint cannot be met, if any.
    std::optional<Vertex> conflict;
};

/// Runs the sum-constraint forcing rule to a fixpoint. Whenever the assigned
/// part of a scope leaves exactly one admissible total reachable, every
/// unassigned scope variable is fixed; the degree-2 open rule and the leaf
/// closed rule are special cases.
PropagationResult propagate(const ConstraintSystem& cs, PartialAssignment partial);

enum class SolveStatus { Sat, Unsat, Timeout };

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unsat;
    std::optional<TwoPartition> witness;
    SolveStats stats;
};

struct SolverOptions {
    std::uint64_t node_budget = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Complete search with propagation. Branches on the lowest-index unassigned
/// vertex, value 0 first, so the witness is the lexicographically smallest
/// valid labeling.
SolveOutcome decide(const Graph& g, Neighborhood mode, const std::vector<Vertex>& waived = {},
                    const SolverOptions& options = {});

/// Every labeling satisfying all non-waived constraints, in lexicographic
/// order. Throws BudgetExceeded when the node budget runs out.
std::vector<TwoPartition> enumerate(const Graph& g, Neighborhood mode,
                                    const std::vector<Vertex>& waived = {},
                                    const SolverOptions& options = {});

inline constexpr std::size_t brute_force_cap = 25;

/// Oracle: scans all 2^n labelings in lexicographic order. Throws
/// std::invalid_argument above brute_force_cap vertices.
SolveOutcome brute_force(const Graph& g, Neighborhood mode, const std::vector<Vertex>& waived = {});

/// Oracle counterpart of enumerate.
std::vector<TwoPartition> brute_enumerate(const Graph& g, Neighborhood mode,
                                          const std::vector<Vertex>& waived = {});

/// Violations of `p` restricted to non-waived vertices.
std::vector<Vertex> check_except(const Graph& g, const TwoPartition& p, Neighborhood mode,
                                 const std::vector<Vertex>& waived);

}  // namespace lb2p
