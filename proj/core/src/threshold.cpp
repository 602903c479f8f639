#include "tdg/threshold.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdg {

BetaSequence::BetaSequence(std::vector<std::size_t> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (values_[j] + 1 > n)
            throw std::invalid_argument("beta value " + std::to_string(values_[j]) +
                                        " at position " + std::to_string(j + 1) +
                                        " exceeds n-1 = " + std::to_string(n == 0 ? 0 : n - 1));
    }
}

BetaSequence::BetaSequence(std::initializer_list<std::size_t> values)
    : BetaSequence(std::vector<std::size_t>(values)) {}

BetaSequence BetaSequence::from_in_degrees(const DegreeSequence& s) {
    return BetaSequence(s.in_degrees());
}

std::optional<ForbiddenConfig> find_forbidden_configuration(const Digraph& g) {
    const std::size_t n = g.size();
    // 2-switch: arcs (w,x), (y,z) present, (w,z), (y,x) absent, all four distinct.
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t x = 0; x < n; ++x) {
            if (x == w || !g.arc(w, x)) continue;
            for (std::size_t y = 0; y < n; ++y) {
                if (y == w || y == x || g.arc(y, x)) continue;
                for (std::size_t z = 0; z < n; ++z) {
                    if (z == w || z == x || z == y) continue;
                    if (g.arc(y, z) && !g.arc(w, z)) return TwoSwitch{w, x, y, z};
                }
            }
        }
    // Induced directed 3-cycle: (x,y), (y,z), (z,x) present, reverses absent.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (y == x || !g.arc(x, y) || g.arc(y, x)) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (g.arc(y, z) && !g.arc(z, y) && g.arc(z, x) && !g.arc(x, z))
                    return InducedThreeCycle{x, y, z};
            }
        }
    return std::nullopt;
}

bool check_adjacency_condition(const Digraph& g) noexcept {
    const std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k) {
        bool seen_zero = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            if (g.arc(i, k)) {
                if (seen_zero) return false;
            } else {
                seen_zero = true;
            }
        }
    }
    return true;
}

bool check_fulkerson_chen_equality(const DegreeSequence& s) {
    if (!positive_lex_sorted(s))
        throw std::invalid_argument(
            "check_fulkerson_chen_equality requires positive lexicographic order");
    const std::size_t n = s.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t lhs = 0;
        for (std::size_t i = 1; i <= n; ++i)
            lhs += std::min(s[i - 1].in_deg, i <= k ? k - 1 : k);
        std::size_t rhs = 0;
        for (std::size_t i = 1; i <= k; ++i) rhs += s[i - 1].out_deg;
        if (lhs != rhs) return false;
    }
    return true;
}

bool is_threshold(const Digraph& g) {
    auto [sorted, perm] = positive_lex_sort(degree_sequence_of(g));
    (void)sorted;
    return check_adjacency_condition(apply_permutation(g, perm));
}

Digraph construct_from_beta(const BetaSequence& beta) {
    const std::size_t n = beta.size();
    Digraph::Builder b(n);
    for (std::size_t j = 0; j < n; ++j) {
        // 1-based rule: rows 1..beta_j above the diagonal, then shifted
        // by one below it, so column j sums to exactly beta_j.
        for (std::size_t i = 0; i < j && i + 1 <= beta[j]; ++i) b.set_arc(i, j);
        for (std::size_t i = j + 1; i < n && i + 1 <= beta[j] + 1; ++i) b.set_arc(i, j);
    }
    return std::move(b).build();
}

namespace {

enum class EditKind { Remove, Insert };

std::pair<Arc, Digraph> edit_arc(const Digraph& g, EditKind kind) {
    if (!is_threshold(g)) throw std::invalid_argument("digraph is not threshold");
    const bool removing = kind == EditKind::Remove;
    if (removing && g.arc_count() == 0)
        throw std::invalid_argument("digraph has no arcs to remove");
    if (!removing && g.is_complete())
        throw std::invalid_argument("digraph is complete; no arc can be added");
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || g.arc(i, j) != removing) continue;
            Digraph candidate = removing ? g.without_arc(i, j) : g.with_arc(i, j);
            if (is_threshold(candidate)) return {Arc{i, j}, std::move(candidate)};
        }
    // Unreachable: the class is closed downward one arc at a time and
    // upward toward the complete digraph.
    throw std::logic_error("no single-arc edit preserves thresholdness");
}

}  // namespace

std::pair<Arc, Digraph> shrink_arc(const Digraph& g) { return edit_arc(g, EditKind::Remove); }

std::pair<Arc, Digraph> grow_arc(const Digraph& g) { return edit_arc(g, EditKind::Insert); }

}  // namespace tdg
