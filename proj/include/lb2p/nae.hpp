#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lb2p {

using Clause = std::array<std::size_t, 3>;  // 0-based variable indices

class NaeFormatError : public std::runtime_error {
public:
    enum class Kind { Malformed, OutOfRange, DuplicateVariable, OccurrenceCount, ClauseCount };

    NaeFormatError(Kind kind, std::size_t line, const std::string& what,
                   std::optional<std::size_t> variable = std::nullopt);

    Kind kind() const noexcept { return kind_; }
    /// 1-based line, 0 when the error concerns the instance as a whole.
    std::size_t line() const noexcept { return line_; }
    /// 0-based offending variable for OccurrenceCount.
    std::optional<std::size_t> variable() const noexcept { return variable_; }

private:
    Kind kind_;
    std::size_t line_;
    std::optional<std::size_t> variable_;
};

/// Monotone 3-clauses in which every variable occurs exactly four times.
/// Clauses form a collection: the same clause may appear repeatedly.
class NaeInstance {
public:
    /// Validates both invariants; throws NaeFormatError (line 0).
    NaeInstance(std::size_t variables, std::vector<Clause> clauses);

    std::size_t variable_count() const noexcept { return n_; }
    std::size_t clause_count() const noexcept { return clauses_.size(); }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    struct Occurrence {
        std::size_t clause;
        std::size_t position;  // slot within the clause
    };
    /// The four occurrences of variable i in clause order ("t-th appearance").
    const std::array<Occurrence, 4>& occurrences(std::size_t variable) const {
        return occurrences_.at(variable);
    }

    friend bool operator==(const NaeInstance& a, const NaeInstance& b) {
        return a.n_ == b.n_ && a.clauses_ == b.clauses_;
    }

private:
    std::size_t n_;
    std::vector<Clause> clauses_;
    std::vector<std::array<Occurrence, 4>> occurrences_;
};

using Assignment = std::vector<unsigned char>;

/// "p nae3 n k" followed by k lines of three distinct 1-based indices. Lines
/// starting with 'c' are comments.
NaeInstance parse_nae(std::string_view text);
std::string format_nae(const NaeInstance& inst);

/// Assignment file: one line of n 0/1 characters.
Assignment parse_assignment(std::string_view text);
std::string format_assignment(const Assignment& a);

/// True iff no clause is monochrome under `a`.
bool nae_eval(const NaeInstance& inst, const Assignment& a);

inline constexpr std::size_t brute_sat_cap = 25;

/// Lexicographically first satisfying assignment (variable 0 most
/// significant), if any.
std::optional<Assignment> brute_sat(const NaeInstance& inst);

}  // namespace lb2p
