#include "tdg/realization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tdg/threshold.hpp"

namespace tdg {

namespace {

std::string describe(const FcVerdict& v) {
    std::string msg = "sequence is not digraphical";
    if (v.degree_out_of_range) msg += "; a degree is at least the number of vertices";
    if (v.sum_mismatch) msg += "; out-degree total differs from in-degree total";
    if (v.failing_k) msg += "; prefix inequality fails at k = " + std::to_string(*v.failing_k);
    return msg;
}

/// Shared flag computation; both flags are always evaluated.
FcVerdict basic_flags(const DegreeSequence& s) {
    FcVerdict v;
    const std::size_t n = s.size();
    for (const auto& p : s)
        if (p.out_deg >= n || p.in_deg >= n) {
            v.degree_out_of_range = true;
            break;
        }
    v.sum_mismatch = s.total_out() != s.total_in();
    return v;
}

FcVerdict run_inequalities(const DegreeSequence& s) {
    FcVerdict v = basic_flags(s);
    if (v.degree_out_of_range || v.sum_mismatch) return v;
    const std::size_t n = s.size();
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t lhs = 0;
        for (std::size_t i = 1; i <= n; ++i)
            lhs += std::min(s[i - 1].in_deg, i <= k ? k - 1 : k);
        std::size_t rhs = 0;
        for (std::size_t i = 1; i <= k; ++i) rhs += s[i - 1].out_deg;
        if (lhs < rhs) {
            v.failing_k = k;
            return v;
        }
    }
    v.digraphical = true;
    return v;
}

}  // namespace

std::size_t column_prefix_count(const Digraph& g, std::size_t column, std::size_t row_bound) {
    if (column >= g.size()) throw std::out_of_range("column index out of range");
    if (row_bound > g.size()) throw std::out_of_range("row bound exceeds digraph order");
    std::size_t count = 0;
    for (std::size_t i = 0; i < row_bound; ++i)
        if (i != column && g.arc(i, column)) ++count;
    return count;
}

FcVerdict check_fulkerson_chen(const DegreeSequence& s) {
    if (!positive_lex_sorted(s))
        throw std::invalid_argument(
            "check_fulkerson_chen requires positive lexicographic order");
    return run_inequalities(s);
}

FcVerdict check_relaxed(const DegreeSequence& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i].out_deg < s[i + 1].out_deg)
            throw std::invalid_argument("check_relaxed requires nonincreasing out-degrees");
    return run_inequalities(s);
}

NotDigraphicalError::NotDigraphicalError(FcVerdict verdict)
    : std::runtime_error(describe(verdict)), verdict_(verdict) {}

RealizationResult realize(const DegreeSequence& s, const RealizeOptions& options) {
    const std::size_t n = s.size();

    {
        FcVerdict flags = basic_flags(s);
        if (flags.degree_out_of_range || flags.sum_mismatch) throw NotDigraphicalError(flags);
    }

    const std::vector<std::size_t> target = s.out_degrees();
    Digraph::Builder matrix(construct_from_beta(BetaSequence(s.in_degrees())));
    std::vector<std::size_t> row_sums(n);
    for (std::size_t i = 0; i < n; ++i) row_sums[i] = matrix.out_degree(i);

    RealizationResult result;
    if (options.keep_row_sum_history)
        result.trace.row_sum_history.emplace().push_back(row_sums);

    if (row_sums != target) {
        if (!positive_lex_sorted(s))
            throw std::invalid_argument(
                "realize requires positive lexicographic order");
        FcVerdict verdict = run_inequalities(s);
        if (!verdict.digraphical) throw NotDigraphicalError(verdict);

        while (row_sums != target) {
            // First row whose sum still exceeds its target.
            std::size_t r1 = 0;
            while (row_sums[r1] <= target[r1]) ++r1;
            // First later row where the prefix sums agree again; the
            // totals match, so it exists.
            std::size_t r2 = r1;
            std::size_t prefix_target = 0;
            std::size_t prefix_rows = 0;
            for (std::size_t i = 0; i < n; ++i) {
                prefix_target += target[i];
                prefix_rows += row_sums[i];
                if (i > r1 && prefix_target == prefix_rows) {
                    r2 = i;
                    break;
                }
            }
            // Smallest column holding a one in row r1 but not in row
            // r2; both diagonal cells stay empty, so skip them.
            std::size_t c = 0;
            while (c == r1 || c == r2 || !matrix.arc(r1, c) || matrix.arc(r2, c)) ++c;

            matrix.clear_arc(r1, c);
            matrix.set_arc(r2, c);
            --row_sums[r1];
            ++row_sums[r2];
            result.trace.steps.push_back({r1, r2, c});
            if (result.trace.row_sum_history) result.trace.row_sum_history->push_back(row_sums);
        }
    }

    result.trace.step_count = result.trace.steps.size();
    result.graph = std::move(matrix).build();
    return result;
}

}  // namespace tdg
