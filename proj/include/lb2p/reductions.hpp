#pragma once

#include "lb2p/balance.hpp"
#include "lb2p/gadgets.hpp"
#include "lb2p/graph.hpp"
#include "lb2p/nae.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lb2p {

enum class ReductionTarget { Biregular, Even, Subcubic, Odd };

/// "bireg", "even", "subcubic", "odd".
std::string_view to_string(ReductionTarget t);
ReductionTarget parse_target(std::string_view text);
Neighborhood mode_of(ReductionTarget t);

/// What a vertex of a reduction output stands for. All indices are 0-based.
///
///   P  variable vertex: first = variable, second = occurrence (absent for the
///      biregular target, which has a single vertex per variable)
///   Q  clause vertex: first = clause, second = copy (absent when single)
///   V  clause hub of the even target: first = clause
///   G  gadget-internal vertex: first = variable, second = local index
///   Y, Z, B  clause-gadget vertices: first = clause, second = slot 0..2
struct Role {
    enum class Kind { P, Q, V, G, Y, Z, B };
    Kind kind;
    std::size_t first = 0;
    std::optional<std::size_t> second;

    friend bool operator==(const Role&, const Role&) = default;
};

struct ReductionArtifact {
    ReductionTarget target;
    std::size_t r = 0;  // biregular target only
    NaeInstance instance;
    Graph graph;
    std::vector<Role> roles;

    Neighborhood mode() const { return mode_of(target); }
};

class UnsatAssignment : public std::invalid_argument {
public:
    explicit UnsatAssignment(std::size_t clause)
        : std::invalid_argument("assignment leaves clause " + std::to_string(clause + 1) + " monochrome"),
          clause_(clause) {}
    std::size_t clause() const noexcept { return clause_; }

private:
    std::size_t clause_;
};

class InvalidPartition : public std::invalid_argument {
public:
    explicit InvalidPartition(std::vector<Vertex> violations)
        : std::invalid_argument("partition is not locally balanced"), violations_(std::move(violations)) {}
    const std::vector<Vertex>& violations() const noexcept { return violations_; }

private:
    std::vector<Vertex> violations_;
};

/// Variable vertices p_i and clause copies q_j^l (l = 1..2r); p_i ~ q_j^l iff
/// x_i lies in c_j. Output is (3, 8r)-biregular on n + 2rk vertices.
ReductionArtifact reduce_open_biregular(const NaeInstance& inst, std::size_t r);

/// One F1 cycle per variable, q_j^1, q_j^2, v_j per clause; the t-th
/// occurrence vertex of x_i joins both copies of its clause, and both copies
/// join v_j. Even, bipartite, maximum degree 4, 16n + 3k vertices.
ReductionArtifact reduce_open_even(const NaeInstance& inst);

/// One forcing gadget per variable and one q_j per clause, joined to the
/// occurrence vertices of its three variables. Bipartite, maximum degree 3,
/// 30n + k vertices.
ReductionArtifact reduce_closed_subcubic(const NaeInstance& inst);

/// As the subcubic target, plus one F4 per clause with y_t joined to the
/// t-th literal's occurrence vertex. Odd, maximum degree 3, 30n + 10k vertices.
ReductionArtifact reduce_closed_odd(const NaeInstance& inst);

ReductionArtifact reduce(const NaeInstance& inst, ReductionTarget target, std::size_t r = 1);

/// Partition built from a satisfying assignment; checked against the
/// artifact's mode before it is returned. Throws UnsatAssignment.
TwoPartition assignment_to_partition(const ReductionArtifact& art, const Assignment& a);

/// Reads x_i off the first occurrence vertex of each variable. Throws
/// InvalidPartition when the partition fails the checker.
Assignment partition_to_assignment(const ReductionArtifact& art, const TwoPartition& p);

/// Vertex of every P role: result[i][t] (t = 0 for the biregular target).
std::vector<std::vector<Vertex>> occurrence_vertices(const ReductionArtifact& art);

/// Rebuilds the expected edge set from the role map and the instance (gadget
/// templates supply internal edges) and compares it with the artifact's
/// graph. Returns a description of the first discrepancy, or nothing when
/// they agree.
std::optional<std::string> role_map_mismatch(const ReductionArtifact& art);

/// Human-readable class summary, e.g. "11 vertices (3,8)-biregular".
std::string summarize(const ReductionArtifact& art);

// Sidecar role-map document.
//
//   lb2p-roles 1
//   target <bireg|even|subcubic|odd> [r]
//   instance <n> <k>
//   clause <a> <b> <c>          (k lines, 1-based variables)
//   vertices <N>
//   <index> <tag> <i> [<j>]     (N lines, in vertex order; 1-based indices)
//
// Tags: p q v g y z b. For g the second number is the 0-based local index
// within the gadget.
std::string write_roles(const ReductionArtifact& art);

/// Parses a sidecar and binds it to `graph`. The role map must match the
/// graph exactly (see role_map_mismatch); throws std::runtime_error otherwise.
ReductionArtifact read_roles(std::string_view text, const Graph& graph);

}  // namespace lb2p
