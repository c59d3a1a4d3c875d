#include "lb2p/balance.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lb2p {

std::string_view to_string(Neighborhood mode) {
    return mode == Neighborhood::Open ? "open" : "closed";
}

Neighborhood parse_neighborhood(std::string_view text) {
    if (text == "open") return Neighborhood::Open;
    if (text == "closed") return Neighborhood::Closed;
    throw std::invalid_argument("unknown neighborhood mode '" + std::string(text) + "'");
}

TwoPartition::TwoPartition(std::vector<unsigned char> labels) : labels_(std::move(labels)) {
    for (auto l : labels_)
        if (l > 1) throw std::invalid_argument("partition labels must be 0 or 1");
}

TwoPartition TwoPartition::zeros(std::size_t n) {
    return TwoPartition(std::vector<unsigned char>(n, 0));
}

void TwoPartition::set(Vertex v, unsigned char label) {
    if (label > 1) throw std::invalid_argument("partition labels must be 0 or 1");
    labels_.at(v) = label;
}

TwoPartition parse_partition(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    std::vector<unsigned char> labels;
    labels.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("partition: unexpected character at column " +
                                        std::to_string(i + 1));
        labels.push_back(static_cast<unsigned char>(c - '0'));
    }
    return TwoPartition(std::move(labels));
}

std::string format_partition(const TwoPartition& p) {
    std::string out;
    out.reserve(p.size() + 1);
    for (auto l : p.labels()) out.push_back(static_cast<char>('0' + l));
    out.push_back('\n');
    return out;
}

BalanceReport balance_report(const Graph& g, const TwoPartition& p) {
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("partition has " + std::to_string(p.size()) +
                                    " labels, graph has " + std::to_string(g.vertex_count()) +
                                    " vertices");
    const auto n = g.vertex_count();
    BalanceReport r;
    r.open_balance.resize(n);
    r.closed_balance.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        int sum = 0;
        for (Vertex u : g.neighbors(v)) sum += phi_star(p[u]);
        r.open_balance[v] = sum;
        r.closed_balance[v] = sum + phi_star(p[v]);
        r.open_valid = r.open_valid && std::abs(r.open_balance[v]) <= 1;
        r.closed_valid = r.closed_valid && std::abs(r.closed_balance[v]) <= 1;
    }
    return r;
}

std::vector<Vertex> check(const Graph& g, const TwoPartition& p, Neighborhood mode) {
    const auto r = balance_report(g, p);
    const auto& values = mode == Neighborhood::Open ? r.open_balance : r.closed_balance;
    std::vector<Vertex> violations;
    for (Vertex v = 0; v < values.size(); ++v)
        if (std::abs(values[v]) > 1) violations.push_back(v);
    return violations;
}

}  // namespace lb2p
