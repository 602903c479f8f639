#ifndef TDG_ORACLE_HPP
#define TDG_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "tdg/digraph.hpp"
#include "tdg/sequence.hpp"

// Exhaustive small-n ground truth. Everything here enumerates labeled
// digraphs or vertex permutations, so vertex counts are hard-capped.

namespace tdg::oracle {

inline constexpr std::size_t kMaxEnumerationVertices = 5;
inline constexpr std::size_t kMaxEquivalenceVertices = 4;

/// Yields every zero-diagonal 0/1 matrix on n vertices exactly once,
/// in increasing order of the packed off-diagonal bit pattern
/// (row-major, least significant bit first). Throws
/// std::invalid_argument when n > kMaxEnumerationVertices.
class DigraphEnumerator {
public:
    explicit DigraphEnumerator(std::size_t n);

    std::optional<Digraph> next();

    /// 2^(n(n-1))
    std::uint64_t total() const noexcept { return total_; }
    /// Pattern index of the digraph most recently returned by next().
    std::uint64_t index() const noexcept { return next_pattern_ - 1; }

private:
    std::size_t n_;
    std::uint64_t total_;
    std::uint64_t next_pattern_ = 0;
};

/// Calls fn(digraph, pattern_index) for the full enumeration.
void for_each_digraph(std::size_t n,
                      const std::function<void(const Digraph&, std::uint64_t)>& fn);

/// Packed off-diagonal bit pattern of g, the enumerator's inverse.
std::uint64_t pack_digraph(const Digraph& g);

/// Number of labeled digraphs whose degree sequence equals s exactly,
/// by exhaustive enumeration. Throws when s.size() > 5.
std::uint64_t count_realizations(const DegreeSequence& s);

/// count_realizations(s) == 1.
bool unique_realization(const DegreeSequence& s);

/// Census of the digraphs generated by all n^n column recipes.
struct CensusReport {
    std::size_t n = 0;
    /// Distinct labeled digraphs among the n^n generated matrices.
    std::uint64_t labeled_count = 0;
    /// Isomorphism classes among them.
    std::uint64_t class_count = 0;
    /// Exact rational n^n / n!.
    std::uint64_t lower_bound_num = 0;
    std::uint64_t lower_bound_den = 1;
    /// n^n
    std::uint64_t upper_bound = 0;
    /// lower_bound <= class_count <= labeled_count <= upper_bound.
    bool bounds_ok = false;
};

/// Builds the generated digraph for every recipe in [0, n-1]^n, dedupes
/// identical matrices and isomorphism classes (brute force over all n!
/// relabelings), and checks the count bounds. Throws when n > 5.
CensusReport census_threshold(std::size_t n);

std::string census_text(const CensusReport& report);
std::string census_json(const CensusReport& report);

struct EquivalencePredicates {
    bool unique_realization;
    bool no_forbidden_configuration;
    bool adjacency_condition;
    bool fulkerson_chen_equality;
};

struct EquivalenceWitness {
    std::uint64_t index;
    Digraph graph;
    EquivalencePredicates predicates;
};

struct EquivalenceResult {
    bool ok = false;
    std::uint64_t digraphs_checked = 0;
    /// First digraph on which the four predicates disagree.
    std::optional<EquivalenceWitness> witness;
};

/// Checks, for every digraph on n vertices, that these agree:
///   1. its degree sequence has exactly one labeled realization,
///   2. it has no forbidden configuration,
///   3. the adjacency condition holds after canonical sorting,
///   4. the realizability inequalities hold with equality after
///      canonical sorting.
/// Throws when n > kMaxEquivalenceVertices.
EquivalenceResult verify_equivalence(std::size_t n);

}  // namespace tdg::oracle

#endif
