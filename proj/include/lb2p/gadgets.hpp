#pragma once

#include "lb2p/balance.hpp"
#include "lb2p/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lb2p {

enum class GadgetId { F1, F2, Forcing, F4 };

std::string_view to_string(GadgetId id);
/// Accepts "f1", "f2", "forcing", "f4".
GadgetId parse_gadget_id(std::string_view name);

enum class GadgetContract {
    /// Every labeling valid on the non-input vertices gives all inputs the
    /// same label, and for each input value there is a completion with
    /// balance 0 at every gadget vertex (inputs measured inside the gadget).
    Forcing,
    /// Clause gadget: attached to the three literal vertices of a clause, it
    /// admits a balanced completion exactly when the clause vertex can be
    /// balanced. Checked in a harness.
    ClauseCompletion,
};

/// A reduction element: a graph with an ordered list of input vertices and the
/// contract the reductions rely on.
struct Gadget {
    GadgetId id;
    Graph graph;
    std::vector<Vertex> inputs;
    Neighborhood mode;
    GadgetContract contract;
    /// Human-readable name of each local vertex ("p1", "u7", "a3", ...).
    std::vector<std::string> names;
    /// Completion for input value 0 and 1 (Forcing gadgets only).
    std::array<TwoPartition, 2> completion;
};

/// Open-mode 16-cycle p1 u1 u2 u3 p2 u4 ... u12 with inputs p1..p4. Local
/// vertex index is the position on the cycle.
Gadget gadget_f1();

/// Closed-mode tree on v1..v6 with edges v3v1, v3v2, v3v4, v4v5, v4v6;
/// inputs v1, v2.
Gadget gadget_f2();

/// Closed-mode 30-vertex forcing tree: inputs p1..p4; four equality blocks
/// (a_m, b_m and two leaves on b_m) with a_m adjacent to p_m; a1, a2 meet at
/// junction j1 and a3, a4 at j2; each junction has a feeder r_h carrying a
/// leaf; both feeders meet at bridge s, whose partner t carries two leaves.
/// Every vertex has degree 1 or 3 and every input has internal degree 1.
Gadget gadget_forcing();

/// Closed-mode clause gadget on y_t, z_t, b_t (t = 1..3). Each y_t carries a
/// leaf z_t and joins b_t; the b vertices form a triangle. Inputs are the y_t.
Gadget gadget_f4();

Gadget make_gadget(GadgetId id);

/// Copy of `g` with vertex `v` deleted and the rest renumbered. Inputs and
/// completions follow the renumbering; deleting an input is an error.
Gadget without_vertex(const Gadget& g, Vertex v);

struct GadgetVerdict {
    bool pass = false;
    std::string detail;
    /// Labeling that breaks the contract, if one was found.
    std::optional<TwoPartition> counterexample;
    /// Input value with no valid completion, if any.
    std::optional<unsigned char> missing_completion;
    /// Number of labelings valid on the non-input vertices (or on the harness).
    std::size_t valid_labelings = 0;
};

/// Machine-checks the gadget's contract by exhaustive enumeration.
GadgetVerdict verify_gadget(const Gadget& g);

/// The clause harness used to verify F4: vertex 0 is the clause vertex q,
/// 1..3 are literal vertices p1..p3 (adjacent to q and to y_t), and F4 starts
/// at vertex 4.
Graph f4_harness(const Gadget& f4);

/// Labels of the F4 vertices (local order) given the clause vertex label and
/// the labels of the three literal vertices.
std::vector<unsigned char> f4_completion(unsigned char q, const std::array<unsigned char, 3>& p);

/// Returns the gadget after checking its contract once per process; throws
/// std::logic_error if the contract fails.
const Gadget& verified_gadget(GadgetId id);

}  // namespace lb2p
