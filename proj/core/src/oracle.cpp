#include "tdg/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "tdg/realization.hpp"
#include "tdg/threshold.hpp"

namespace tdg::oracle {

namespace {

void check_enumeration_order(std::size_t n) {
    if (n > kMaxEnumerationVertices)
        throw std::invalid_argument("exhaustive enumeration is limited to " +
                                    std::to_string(kMaxEnumerationVertices) + " vertices");
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) result *= base;
    return result;
}

std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

/// Least packed pattern over all relabelings.
std::uint64_t canonical_pattern(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> targets(n);
    std::iota(targets.begin(), targets.end(), std::size_t{0});
    std::uint64_t best = pack_digraph(g);
    while (std::next_permutation(targets.begin(), targets.end())) {
        const std::uint64_t p = pack_digraph(apply_permutation(g, VertexPermutation(targets)));
        best = std::min(best, p);
    }
    return best;
}

}  // namespace

DigraphEnumerator::DigraphEnumerator(std::size_t n) : n_(n) {
    check_enumeration_order(n);
    total_ = n == 0 ? 1 : std::uint64_t{1} << (n * (n - 1));
}

std::optional<Digraph> DigraphEnumerator::next() {
    if (next_pattern_ >= total_) return std::nullopt;
    const std::uint64_t pattern = next_pattern_++;
    Digraph::Builder b(n_);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j) continue;
            if ((pattern >> bit) & 1u) b.set_arc(i, j);
            ++bit;
        }
    return std::move(b).build();
}

void for_each_digraph(std::size_t n,
                      const std::function<void(const Digraph&, std::uint64_t)>& fn) {
    DigraphEnumerator enumerator(n);
    while (auto g = enumerator.next()) fn(*g, enumerator.index());
}

std::uint64_t pack_digraph(const Digraph& g) {
    check_enumeration_order(g.size());
    std::uint64_t pattern = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            if (g.arc(i, j)) pattern |= std::uint64_t{1} << bit;
            ++bit;
        }
    return pattern;
}

std::uint64_t count_realizations(const DegreeSequence& s) {
    std::uint64_t count = 0;
    for_each_digraph(s.size(), [&](const Digraph& g, std::uint64_t) {
        if (degree_sequence_of(g) == s) ++count;
    });
    return count;
}

bool unique_realization(const DegreeSequence& s) { return count_realizations(s) == 1; }

CensusReport census_threshold(std::size_t n) {
    check_enumeration_order(n);

    CensusReport report;
    report.n = n;
    report.upper_bound = pow_u64(n, n);
    const std::uint64_t n_factorial = factorial(n);
    const std::uint64_t g = std::gcd(report.upper_bound, n_factorial);
    report.lower_bound_num = report.upper_bound / g;
    report.lower_bound_den = n_factorial / g;

    std::unordered_set<std::uint64_t> labeled;
    std::set<std::uint64_t> classes;
    std::vector<std::size_t> beta(n, 0);
    while (true) {
        const Digraph graph = construct_from_beta(BetaSequence(beta));
        labeled.insert(pack_digraph(graph));
        classes.insert(canonical_pattern(graph));
        // Odometer over [0, n-1]^n.
        std::size_t pos = 0;
        while (pos < n && beta[pos] + 1 == n) beta[pos++] = 0;
        if (pos == n) break;
        ++beta[pos];
    }
    report.labeled_count = labeled.size();
    report.class_count = classes.size();

    report.bounds_ok = report.class_count * report.lower_bound_den >= report.lower_bound_num &&
                       report.class_count <= report.labeled_count &&
                       report.labeled_count <= report.upper_bound;
    return report;
}

std::string census_text(const CensusReport& report) {
    std::ostringstream out;
    out << "threshold digraph census, n = " << report.n << '\n';
    out << "labeled digraphs:    " << report.labeled_count << '\n';
    out << "isomorphism classes: " << report.class_count << '\n';
    out << "lower bound (n^n / n!): " << report.lower_bound_num;
    if (report.lower_bound_den != 1) out << '/' << report.lower_bound_den;
    out << '\n';
    out << "upper bound (n^n):      " << report.upper_bound << '\n';
    out << "bounds satisfied: " << (report.bounds_ok ? "yes" : "no") << '\n';
    return out.str();
}

std::string census_json(const CensusReport& report) {
    std::ostringstream out;
    out << "{\"n\":" << report.n << ",\"labeled_count\":" << report.labeled_count
        << ",\"class_count\":" << report.class_count << ",\"lower_bound\":{\"numerator\":"
        << report.lower_bound_num << ",\"denominator\":" << report.lower_bound_den
        << "},\"upper_bound\":" << report.upper_bound
        << ",\"bounds_ok\":" << (report.bounds_ok ? "true" : "false") << '}';
    return out.str();
}

EquivalenceResult verify_equivalence(std::size_t n) {
    if (n > kMaxEquivalenceVertices)
        throw std::invalid_argument("equivalence check is limited to " +
                                    std::to_string(kMaxEquivalenceVertices) + " vertices");

    // Realization counts keyed by the exact degree sequence. Relabeling
    // is a bijection between the realizations of a sequence and those
    // of any reordering, so the count for the sequence as extracted
    // equals the count for its sorted form.
    std::map<std::vector<DegreePair>, std::uint64_t> realization_counts;
    for_each_digraph(n, [&](const Digraph& g, std::uint64_t) {
        ++realization_counts[degree_sequence_of(g).pairs()];
    });

    EquivalenceResult result;
    DigraphEnumerator enumerator(n);
    while (auto g = enumerator.next()) {
        ++result.digraphs_checked;
        const DegreeSequence degrees = degree_sequence_of(*g);
        auto [sorted, perm] = positive_lex_sort(degrees);

        EquivalencePredicates p;
        p.unique_realization = realization_counts.at(degrees.pairs()) == 1;
        p.no_forbidden_configuration = !find_forbidden_configuration(*g).has_value();
        p.adjacency_condition = check_adjacency_condition(apply_permutation(*g, perm));
        p.fulkerson_chen_equality = check_fulkerson_chen_equality(sorted);

        if (p.unique_realization != p.no_forbidden_configuration ||
            p.unique_realization != p.adjacency_condition ||
            p.unique_realization != p.fulkerson_chen_equality) {
            result.witness = EquivalenceWitness{enumerator.index(), *g, p};
            return result;
        }
    }
    result.ok = true;
    return result;
}

}  // namespace tdg::oracle
