#ifndef TDG_REALIZATION_HPP
#define TDG_REALIZATION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tdg/digraph.hpp"
#include "tdg/sequence.hpp"

namespace tdg {

/// Outcome of the prefix-inequality realizability test.
struct FcVerdict {
    bool digraphical = false;
    /// 1-based prefix length of the first violated inequality, set only
    /// when the per-k scan ran and failed.
    std::optional<std::size_t> failing_k;
    /// Total out-degree differs from total in-degree.
    bool sum_mismatch = false;
    /// Some degree is >= n, so no simple digraph can realize the
    /// sequence; the per-k scan is skipped.
    bool degree_out_of_range = false;
};

/// Number of ones in the first `row_bound` rows of `column`.
/// Throws std::out_of_range unless column < n and row_bound <= n.
std::size_t column_prefix_count(const Digraph& g, std::size_t column, std::size_t row_bound);

/// Realizability test: digraphical iff the degree totals agree and for
/// every 1 <= k < n
///   sum_{i<=k} min(in_i, k-1) + sum_{i>k} min(in_i, k) >= sum_{i<=k} out_i.
/// Requires s in positive lexicographic order (throws
/// std::invalid_argument); callers must sort first. Any degree >= n
/// yields an immediate non-digraphical verdict with
/// degree_out_of_range set.
FcVerdict check_fulkerson_chen(const DegreeSequence& s);

/// Same inequalities evaluated on s as given; sound whenever the
/// out-degrees are nonincreasing (throws std::invalid_argument
/// otherwise). Full positive lexicographic order is not required: the
/// verdict matches check_fulkerson_chen on the sorted sequence.
FcVerdict check_relaxed(const DegreeSequence& s);

/// One column move of the realizer: the one in (from_row, column)
/// moved down to (to_row, column).
struct RealizationStep {
    std::size_t from_row;
    std::size_t to_row;
    std::size_t column;
    friend bool operator==(const RealizationStep&, const RealizationStep&) = default;
};

struct RealizationTrace {
    /// Number of column moves performed; equals half the L1 distance
    /// between the target out-degrees and the initial row sums.
    std::size_t step_count = 0;
    std::vector<RealizationStep> steps;
    /// Row-sum sequence before every step and after the last, so
    /// step_count + 1 entries; populated only on request.
    std::optional<std::vector<std::vector<std::size_t>>> row_sum_history;
};

struct RealizationResult {
    Digraph graph;
    RealizationTrace trace;
};

class NotDigraphicalError : public std::runtime_error {
public:
    explicit NotDigraphicalError(FcVerdict verdict);
    const FcVerdict& verdict() const noexcept { return verdict_; }

private:
    FcVerdict verdict_;
};

struct RealizeOptions {
    bool keep_row_sum_history = false;
};

/// Constructs a digraph whose degree sequence equals s exactly.
///
/// Starts from the matrix construct_from_beta(in-degrees of s) and
/// repeatedly moves a one down within a column: from the first row
/// whose sum exceeds its target out-degree to the first later row
/// where the prefix sums of target and current row sums agree, using
/// the smallest admissible column. Ties are fixed so the output is
/// deterministic.
///
/// s should be in positive lexicographic order; a sequence whose
/// initial matrix already has the target row sums is accepted in any
/// order (zero steps). Throws NotDigraphicalError when the sequence is
/// not digraphical, std::invalid_argument when an unsorted sequence
/// would need column moves.
RealizationResult realize(const DegreeSequence& s, const RealizeOptions& options = {});

}  // namespace tdg

#endif
