#ifndef TDG_SEQUENCE_HPP
#define TDG_SEQUENCE_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace tdg {

/// One vertex's (out-degree, in-degree) pair.
struct DegreePair {
    std::size_t out_deg = 0;
    std::size_t in_deg = 0;

    friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

/// An ordered list of degree pairs, one per vertex.
///
/// The sequence itself carries no ordering guarantee; use
/// positive_lex_sorted() / positive_lex_sort() where an operation
/// requires positive lexicographic order.
class DegreeSequence {
public:
    DegreeSequence() = default;
    DegreeSequence(std::initializer_list<DegreePair> pairs) : pairs_(pairs) {}
    explicit DegreeSequence(std::vector<DegreePair> pairs) : pairs_(std::move(pairs)) {}

    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    const DegreePair& operator[](std::size_t i) const { return pairs_[i]; }

    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }

    const std::vector<DegreePair>& pairs() const noexcept { return pairs_; }

    std::vector<std::size_t> out_degrees() const;
    std::vector<std::size_t> in_degrees() const;
    std::size_t total_out() const noexcept;
    std::size_t total_in() const noexcept;

    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<DegreePair> pairs_;
};

/// A relabeling of vertices {0..n-1}; maps original index -> target index.
class VertexPermutation {
public:
    VertexPermutation() = default;

    /// Throws std::invalid_argument unless `targets` is a bijection.
    explicit VertexPermutation(std::vector<std::size_t> targets);

    static VertexPermutation identity(std::size_t n);

    std::size_t size() const noexcept { return targets_.size(); }
    std::size_t operator()(std::size_t i) const { return targets_[i]; }
    const std::vector<std::size_t>& targets() const noexcept { return targets_; }

    VertexPermutation inverse() const;

    friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

private:
    std::vector<std::size_t> targets_;
};

/// True iff out-degrees are nonincreasing and in-degrees are
/// nonincreasing within runs of equal out-degree.
bool positive_lex_sorted(const DegreeSequence& s) noexcept;

/// Stable sort into positive lexicographic order. The permutation maps
/// original positions to sorted positions, so
/// sorted[perm(i)] == s[i] for all i.
std::pair<DegreeSequence, VertexPermutation> positive_lex_sort(const DegreeSequence& s);

/// Prefix-sum dominance: a is dominated by b iff every proper prefix of
/// a sums to at most the corresponding prefix of b and the totals are
/// equal. Throws std::invalid_argument on length mismatch.
bool dominance_leq(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace tdg

#endif
