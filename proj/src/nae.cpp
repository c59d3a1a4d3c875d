#include "lb2p/nae.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

namespace lb2p {

NaeFormatError::NaeFormatError(Kind kind, std::size_t line, const std::string& what,
                               std::optional<std::size_t> variable)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), kind_(kind),
      line_(line), variable_(variable) {}

NaeInstance::NaeInstance(std::size_t variables, std::vector<Clause> clauses)
    : n_(variables), clauses_(std::move(clauses)) {
    using Kind = NaeFormatError::Kind;
    std::vector<std::size_t> count(n_, 0);
    std::vector<std::array<Occurrence, 4>> occ(n_);
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
        const auto& c = clauses_[j];
        for (std::size_t s = 0; s < 3; ++s) {
            if (c[s] >= n_)
                throw NaeFormatError(Kind::OutOfRange, 0,
                                     "clause " + std::to_string(j + 1) + " names an unknown variable");
            for (std::size_t t = 0; t < s; ++t)
                if (c[t] == c[s])
                    throw NaeFormatError(Kind::DuplicateVariable, 0,
                                         "clause " + std::to_string(j + 1) + " repeats variable " +
                                             std::to_string(c[s] + 1));
            if (count[c[s]] < 4) occ[c[s]][count[c[s]]] = {j, s};
            ++count[c[s]];
        }
    }
    for (std::size_t i = 0; i < n_; ++i)
        if (count[i] != 4)
            throw NaeFormatError(Kind::OccurrenceCount, 0,
                                 "variable " + std::to_string(i + 1) + " occurs " +
                                     std::to_string(count[i]) + " times, expected 4",
                                 i);
    occurrences_ = std::move(occ);
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool to_size(std::string_view token, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return !token.empty() && ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

NaeInstance parse_nae(std::string_view text) {
    using Kind = NaeFormatError::Kind;
    std::optional<std::size_t> n, k;
    std::vector<Clause> clauses;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        const auto tok = tokens_of(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (!n) {
            std::size_t vars = 0, count = 0;
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "nae3" || !to_size(tok[2], vars) ||
                !to_size(tok[3], count))
                throw NaeFormatError(Kind::Malformed, line_no, "expected header \"p nae3 n k\"");
            n = vars;
            k = count;
            continue;
        }
        Clause c{};
        if (tok.size() != 3) throw NaeFormatError(Kind::Malformed, line_no, "expected three variables");
        for (std::size_t s = 0; s < 3; ++s) {
            std::size_t idx = 0;
            if (!to_size(tok[s], idx)) throw NaeFormatError(Kind::Malformed, line_no, "bad variable index");
            if (idx == 0 || idx > *n)
                throw NaeFormatError(Kind::OutOfRange, line_no,
                                     "variable " + std::to_string(idx) + " outside 1.." + std::to_string(*n));
            c[s] = idx - 1;
        }
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t t = 0; t < s; ++t)
                if (c[s] == c[t])
                    throw NaeFormatError(Kind::DuplicateVariable, line_no,
                                         "variable " + std::to_string(c[s] + 1) + " repeated in clause");
        clauses.push_back(c);
    }
    if (!n) throw NaeFormatError(Kind::Malformed, 1, "missing header \"p nae3 n k\"");
    if (clauses.size() != *k)
        throw NaeFormatError(Kind::ClauseCount, 0,
                             "header declares " + std::to_string(*k) + " clauses, found " +
                                 std::to_string(clauses.size()));
    return NaeInstance(*n, std::move(clauses));
}

std::string format_nae(const NaeInstance& inst) {
    std::ostringstream out;
    out << "p nae3 " << inst.variable_count() << ' ' << inst.clause_count() << '\n';
    for (const auto& c : inst.clauses()) out << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << '\n';
    return out.str();
}

Assignment parse_assignment(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    Assignment a;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw std::invalid_argument("assignment: unexpected character at column " + std::to_string(i + 1));
        a.push_back(static_cast<unsigned char>(text[i] - '0'));
    }
    return a;
}

std::string format_assignment(const Assignment& a) {
    std::string out;
    for (auto v : a) out.push_back(static_cast<char>('0' + v));
    out.push_back('\n');
    return out;
}

bool nae_eval(const NaeInstance& inst, const Assignment& a) {
    if (a.size() != inst.variable_count()) throw std::invalid_argument("assignment length mismatch");
    for (const auto& c : inst.clauses())
        if (a[c[0]] == a[c[1]] && a[c[1]] == a[c[2]]) return false;
    return true;
}

std::optional<Assignment> brute_sat(const NaeInstance& inst) {
    const auto n = inst.variable_count();
    if (n > brute_sat_cap) throw std::invalid_argument("brute_sat is capped at 25 variables");
    Assignment a(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<unsigned char>((m >> (n - 1 - i)) & 1U);
        if (nae_eval(inst, a)) return a;
    }
    return std::nullopt;
}

}  // namespace lb2p
