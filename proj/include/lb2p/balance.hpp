#pragma once

#include "lb2p/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lb2p {

enum class Neighborhood { Open, Closed };

std::string_view to_string(Neighborhood mode);
/// Accepts "open" or "closed"; throws std::invalid_argument otherwise.
Neighborhood parse_neighborhood(std::string_view text);

/// A total labeling V -> {0,1}.
class TwoPartition {
public:
    TwoPartition() = default;
    explicit TwoPartition(std::vector<unsigned char> labels);
    /// All-zero labeling of n vertices.
    static TwoPartition zeros(std::size_t n);

    std::size_t size() const noexcept { return labels_.size(); }
    unsigned char operator[](Vertex v) const { return labels_.at(v); }
    void set(Vertex v, unsigned char label);
    const std::vector<unsigned char>& labels() const noexcept { return labels_; }

    friend auto operator<=>(const TwoPartition&, const TwoPartition&) = default;

private:
    std::vector<unsigned char> labels_;
};

/// Partition file: one line of 0/1 characters, newline-terminated.
TwoPartition parse_partition(std::string_view text);
std::string format_partition(const TwoPartition& p);

/// The +-1 recoding of a label: 0 -> -1, 1 -> +1.
constexpr int phi_star(unsigned char label) noexcept { return label ? 1 : -1; }

/// Neighborhood sums of phi_star. The balance value here is the negation of
/// the "zeros minus ones" count; validity only depends on its magnitude.
struct BalanceReport {
    std::vector<int> open_balance;
    std::vector<int> closed_balance;
    bool open_valid = true;
    bool closed_valid = true;

    bool valid(Neighborhood mode) const noexcept {
        return mode == Neighborhood::Open ? open_valid : closed_valid;
    }
};

/// Throws std::invalid_argument when the partition length differs from n.
BalanceReport balance_report(const Graph& g, const TwoPartition& p);

/// Vertices whose balance in `mode` exceeds 1 in magnitude, ascending.
/// Empty iff `p` is locally balanced in that mode.
std::vector<Vertex> check(const Graph& g, const TwoPartition& p, Neighborhood mode);

}  // namespace lb2p
