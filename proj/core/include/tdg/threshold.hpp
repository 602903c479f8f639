#ifndef TDG_THRESHOLD_HPP
#define TDG_THRESHOLD_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tdg/digraph.hpp"
#include "tdg/sequence.hpp"

namespace tdg {

/// Four distinct vertices with arcs (w,x) and (y,z) present while
/// (w,z) and (y,x) are absent. Swapping the present arcs for the
/// absent ones yields a different realization of the same degrees.
struct TwoSwitch {
    std::size_t w, x, y, z;
    friend bool operator==(const TwoSwitch&, const TwoSwitch&) = default;
};

/// Three vertices carrying exactly the cycle arcs (x,y), (y,z), (z,x);
/// all three reverse arcs are absent.
struct InducedThreeCycle {
    std::size_t x, y, z;
    friend bool operator==(const InducedThreeCycle&, const InducedThreeCycle&) = default;
};

using ForbiddenConfig = std::variant<TwoSwitch, InducedThreeCycle>;

/// Column recipe for building threshold digraphs: value j becomes the
/// in-degree of vertex j. Each value must lie in [0, n-1]; the
/// constructor throws std::invalid_argument otherwise.
class BetaSequence {
public:
    BetaSequence() = default;
    explicit BetaSequence(std::vector<std::size_t> values);
    BetaSequence(std::initializer_list<std::size_t> values);

    /// The in-degree column of s, range-checked against s.size().
    static BetaSequence from_in_degrees(const DegreeSequence& s);

    std::size_t size() const noexcept { return values_.size(); }
    std::size_t operator[](std::size_t i) const { return values_[i]; }
    const std::vector<std::size_t>& values() const noexcept { return values_; }

    friend bool operator==(const BetaSequence&, const BetaSequence&) = default;

private:
    std::vector<std::size_t> values_;
};

/// Deterministic witness search: all 2-switches in lexicographic
/// (w,x,y,z) order first, then all induced 3-cycles in lexicographic
/// (x,y,z) order; returns the first hit, or nullopt if the digraph is
/// threshold. O(n^4).
std::optional<ForbiddenConfig> find_forbidden_configuration(const Digraph& g);

/// Order-sensitive staircase test: for all distinct i < j and k,
/// arc (j,k) implies arc (i,k). Equivalently every column's ones form
/// a prefix of the rows once the diagonal position is skipped.
bool check_adjacency_condition(const Digraph& g) noexcept;

/// True iff every prefix inequality of the degree-sequence
/// realizability test holds with equality, for k = 1..n. Requires s in
/// positive lexicographic order (throws std::invalid_argument).
bool check_fulkerson_chen_equality(const DegreeSequence& s);

/// Order-free thresholdness: canonicalize by stable positive-lex sort,
/// relabel, and run check_adjacency_condition.
bool is_threshold(const Digraph& g);

/// Adjacency matrix with a[i][j] = 1 iff (i < j and i <= beta[j]) or
/// (i > j and i <= beta[j] + 1), in 1-based terms. Column sums equal
/// beta and the result satisfies check_adjacency_condition as given.
Digraph construct_from_beta(const BetaSequence& beta);

/// First arc in lexicographic order whose removal leaves a threshold
/// digraph, plus that digraph. Throws std::invalid_argument if g is
/// not threshold or has no arcs.
std::pair<Arc, Digraph> shrink_arc(const Digraph& g);

/// First absent arc in lexicographic order whose insertion yields a
/// threshold digraph, plus that digraph. Throws std::invalid_argument
/// if g is not threshold or is complete.
std::pair<Arc, Digraph> grow_arc(const Digraph& g);

}  // namespace tdg

#endif
