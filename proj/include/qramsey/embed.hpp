#pragma once

// Finite-depth Cantor scheme embedding 2^omega into the closure of a set
// H of rationals so that P_f lands in H and the pair invariant is preserved.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qramsey/oscillation.hpp"
#include "qramsey/words.hpp"

namespace qramsey {

/// A set H of P_f points, given by a membership test on Q-words.
struct HSpec {
    std::string name;
    std::function<bool(const QWord&)> member;
};

/// "pf" (all of P_f), "cyl:<word>" (P_f inside a cylinder) or "double" (the
/// image of P_f under bit doubling).
HSpec hspec_preset(std::string_view name);

/// The length-lex least Q-word w in H with prefix a prefix of w0^infty, not in
/// `exclude`, after skipping `skip` admissible words. Throws SearchExhausted
/// once more than `bound` candidates have been examined.
QWord h_search(const HSpec& h, const Word& prefix, const std::set<QWord>& exclude, std::size_t bound,
               std::size_t skip = 0);

struct SchemeNode {
    Natural n;  // n_t >= 1
    Word z;     // U_t = N_{z_t} meets the closure of H
    QWord s;    // s_t, the word of alpha_{n_t}
};

struct EmbeddingScheme {
    std::size_t depth = 0;
    std::map<Word, SchemeNode, LengthLexLess> nodes;  // every t with |t| <= depth

    /// t -> s_t on the Q-words of the domain.
    SuffAssignment suff() const;
    std::string to_json() const;
};

struct EmbedOptions {
    std::size_t bound = 10000;
    /// Number of admissible words to pass over at node t before choosing. The
    /// default always takes the least one.
    std::function<std::size_t(const Word& t)> skip;
};

/// Builds the scheme level by level, always making the least admissible
/// choice unless options.skip says otherwise.
EmbeddingScheme build_embedding(const HSpec& h, std::size_t depth, const EmbedOptions& options = {});

struct ConditionResult {
    int id = 0;  // 1..9
    bool pass = true;
    std::string detail;
};

/// The nine scheme conditions, each checked over the whole domain. Condition
/// 9 is checked directly and through suff_check.
std::vector<ConditionResult> verify_conditions(const EmbeddingScheme& e, const HSpec& h);

struct PreservationVerdict {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::set<std::size_t> colors;  // colors attained on the image
    std::optional<std::pair<QWord, QWord>> counterexample;
};

/// c({z0^infty, t0^infty}) = c({s_z0^infty, s_t0^infty}) for distinct Q-words
/// of the domain. Throws PreconditionError if the s-table breaks condition 7
/// or 8.
PreservationVerdict check_color_preservation(const EmbeddingScheme& e);

}  // namespace qramsey
