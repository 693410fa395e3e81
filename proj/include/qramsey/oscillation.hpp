#pragma once

// The recursive pair invariant i on Q-words, the oscillation map osc on
// finite subsets of omega, and the invariance check for structured
// substitutions z -> s_z.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qramsey/words.hpp"

namespace qramsey {

/// Which side(s) of the pair one recursion step shortens.
enum class Reduce : std::uint8_t { Done, T, Z, Both };

/// One recursion step: the case number (1..7), the pair it moves to and the
/// amount added to the result.
struct Step {
    int rule = 1;
    Reduce reduce = Reduce::Done;
    unsigned add = 0;
};

/// Order facts about the current pair (z, t) that decide the case.
struct StepFacts {
    std::size_t lz = 0, lt = 0;    // |z|, |t|
    std::size_t lzm = 0, ltm = 0;  // |z^-|, |t^-| (unused when the side is empty)
    bool equal = false;            // z = t
    bool perp_z_tm = false;        // (z, t^-) in perp_<
    bool perp_t_zm = false;        // (t, z^-) in perp_<
    int cmp_zm_tm = 0;             // lexicographic sign of z^- versus t^-
};

/// Selects the unique applicable case. Throws DefectError if zero or several
/// cases apply.
Step dispatch(const StepFacts& f);

/// i(z, t). Iterates the recursion chain; at most |z|+|t| steps.
std::size_t invariant_i(const QWord& z, const QWord& t);

/// i(z, t) together with the sequence of rules applied.
std::size_t invariant_i_trace(const QWord& z, const QWord& t, std::vector<int>* rules);

/// Exhaustive table of i over all Q-words of length <= max_len (at most 13).
/// Q-words are indexed by alpha_index, so the table is (2^max_len)^2 entries.
/// Construction runs the case dispatcher on every pair.
class InvariantTable {
public:
    explicit InvariantTable(std::size_t max_len);

    std::size_t max_len() const noexcept { return max_len_; }
    std::size_t count() const noexcept { return count_; }
    std::size_t at(std::size_t zid, std::size_t tid) const noexcept {
        return values_[zid * count_ + tid];
    }
    std::size_t at(const QWord& z, const QWord& t) const;

    /// Q-word with the given table index.
    static QWord word_of(std::size_t id);

private:
    std::size_t max_len_;
    std::size_t count_;
    std::vector<std::uint8_t> values_;
};

/// Shared cache of i on arbitrary Q-word pairs. Safe for concurrent use.
class InvariantMemo {
public:
    std::size_t get(const QWord& z, const QWord& t);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::size_t> cache_;
};

/// osc(z, t): the number of maximal same-side runs of the symmetric
/// difference, words read as characteristic functions of subsets of omega.
std::size_t osc(const Word& z, const Word& t);

/// Substitution t -> s_t on the Q-words of length <= depth.
struct SuffAssignment {
    std::size_t depth = 0;
    std::map<QWord, QWord> table;
};

/// Q-words of length <= depth in length-lex order.
std::vector<QWord> q_words_upto(std::size_t depth);

struct SuffVerdict {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::optional<std::pair<QWord, QWord>> counterexample;
    std::size_t expected = 0;  // i(z, t) at the counterexample
    std::size_t actual = 0;    // i(s_z, s_t) at the counterexample
};

/// Checks i(z,t) = i(s_z,s_t) on all pairs of the domain. Throws
/// PreconditionError with clause "domain", "a" or "b" when the table is
/// incomplete or violates a hypothesis.
SuffVerdict suff_check(const SuffAssignment& a);

}  // namespace qramsey
