// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on
// any failure. Each check is self-contained and prints its measured
// time so budget regressions are visible.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tdg/oracle.hpp"
#include "tdg/realization.hpp"
#include "tdg/threshold.hpp"

using namespace tdg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int criterion, bool ok, const char* what, double elapsed_ms) {
    std::printf("%s  %d  %s (%.1f ms)\n", ok ? "PASS" : "FAIL", criterion, what, elapsed_ms);
    if (!ok) ++failures;
}

Digraph canon(const Digraph& g) {
    return apply_permutation(g, positive_lex_sort(degree_sequence_of(g)).second);
}

/// All degree sequences of length n with entries in [0, limit]^2, as
/// flat codes; decode on demand.
DegreeSequence decode_sequence(std::size_t code, std::size_t n, std::size_t limit) {
    const std::size_t base = limit + 1;
    std::vector<DegreePair> pairs(n);
    for (auto& p : pairs) {
        p.out_deg = code % base;
        code /= base;
        p.in_deg = code % base;
        code /= base;
    }
    return DegreeSequence(std::move(pairs));
}

std::size_t l1(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    return d;
}

void criterion_1() {
    const auto start = Clock::now();
    bool ok = true;

    const Digraph first = construct_from_beta(BetaSequence({2, 1, 0}));
    const Digraph second = construct_from_beta(BetaSequence({0, 1, 2}));
    ok &= degree_sequence_of(first) == DegreeSequence{{1, 2}, {1, 1}, {1, 0}};
    ok &= degree_sequence_of(second) == DegreeSequence{{2, 0}, {1, 1}, {0, 2}};

    const std::vector<std::vector<std::size_t>> to_first = {{2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::vector<std::size_t>> to_second = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}};
    std::set<std::vector<Arc>> canonical_forms;
    for (const auto& beta : to_first) {
        const Digraph g = construct_from_beta(BetaSequence(beta));
        ok &= canon(g) == first;
        canonical_forms.insert(canon(g).arcs());
    }
    for (const auto& beta : to_second) {
        const Digraph g = construct_from_beta(BetaSequence(beta));
        ok &= canon(g) == second;
        canonical_forms.insert(canon(g).arcs());
    }
    ok &= canonical_forms.size() == 2;
    // the two classes really are non-isomorphic: degree multisets differ
    ok &= positive_lex_sort(degree_sequence_of(first)).first !=
          positive_lex_sort(degree_sequence_of(second)).first;

    const double elapsed = ms_since(start);
    report(1, ok && elapsed < 1.0, "worked example: six beta permutations, two classes",
           elapsed);
}

void criterion_2() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto result = oracle::verify_equivalence(n);
        ok &= result.ok;
        ok &= result.digraphs_checked == oracle::DigraphEnumerator(n).total();
    }
    const double elapsed = ms_since(start);
    report(2, ok && elapsed < 10000.0, "four characterizations agree on all digraphs, n <= 4",
           elapsed);
}

// shared by criteria 3 and 4: exact realization counts of every
// 4-vertex degree sequence, from the full 4096-digraph enumeration
std::map<std::vector<DegreePair>, std::uint64_t> realization_counts_4() {
    std::map<std::vector<DegreePair>, std::uint64_t> counts;
    oracle::for_each_digraph(4, [&](const Digraph& g, std::uint64_t) {
        ++counts[degree_sequence_of(g).pairs()];
    });
    return counts;
}

void criterion_3(const std::map<std::vector<DegreePair>, std::uint64_t>& counts) {
    const auto start = Clock::now();
    bool ok = true;
    std::size_t checked = 0;
    for (std::size_t code = 0; code < 65536; ++code) {
        const DegreeSequence s = decode_sequence(code, 4, 3);
        const auto it = counts.find(s.pairs());
        const bool realizable = it != counts.end() && it->second > 0;
        const bool verdict = check_fulkerson_chen(positive_lex_sort(s).first).digraphical;
        ok &= verdict == realizable;
        ++checked;
    }
    ok &= checked == 65536;
    const double elapsed = ms_since(start);
    report(3, ok && elapsed < 30000.0,
           "test verdict equals oracle realizability on all 65536 sequences", elapsed);
}

void criterion_4(const std::map<std::vector<DegreePair>, std::uint64_t>& counts) {
    const auto start = Clock::now();
    bool ok = true;

    // exhaustive soundness at n=4
    for (std::size_t code = 0; code < 65536; ++code) {
        const DegreeSequence s = decode_sequence(code, 4, 3);
        const auto it = counts.find(s.pairs());
        if (it == counts.end()) continue;
        const auto sorted = positive_lex_sort(s).first;
        RealizeOptions options;
        options.keep_row_sum_history = true;
        const auto result = realize(sorted, options);
        ok &= degree_sequence_of(result.graph) == sorted;
        const auto& history = *result.trace.row_sum_history;
        const auto target = sorted.out_degrees();
        ok &= history.size() == result.trace.step_count + 1;
        for (std::size_t t = 0; t + 1 < history.size(); ++t) {
            ok &= dominance_leq(target, history[t]);
            ok &= dominance_leq(history[t + 1], history[t]);
            ok &= l1(history[t + 1], target) + 2 == l1(history[t], target);
        }
        ok &= history.back() == target;
    }

    // 1000 random digraphical sequences at n=200, each under 100 ms
    std::mt19937_64 rng(0x7d67  /* arbitrary fixed seed */);
    double worst = 0.0;
    const std::size_t n = 200;
    std::vector<std::vector<int>> cells(n, std::vector<int>(n, 0));
    for (int round = 0; round < 1000; ++round) {
        if (round == 0 || round % 4 == 0) {
            // fresh random digraph
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    cells[i][j] = i != j && (rng() & 1) ? 1 : 0;
        } else {
            // perturb: flip ~50 off-diagonal cells
            for (int flip = 0; flip < 50; ++flip) {
                const std::size_t i = rng() % n;
                const std::size_t j = rng() % n;
                if (i != j) cells[i][j] ^= 1;
            }
        }
        const Digraph g = Digraph::from_rows(cells);
        const auto sorted = positive_lex_sort(degree_sequence_of(g)).first;

        const auto call_start = Clock::now();
        const auto result = realize(sorted);
        const double call_ms = ms_since(call_start);
        worst = std::max(worst, call_ms);
        ok &= call_ms < 100.0;
        ok &= degree_sequence_of(result.graph) == sorted;
    }

    const double elapsed = ms_since(start);
    std::printf("      realizer worst call at n=200: %.2f ms\n", worst);
    report(4, ok, "realizer sound on all digraphical sequences; n=200 calls under 100 ms",
           elapsed);
}

void criterion_5() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::size_t> beta(n, 0);
        while (true) {
            const Digraph g = construct_from_beta(BetaSequence(beta));
            const auto result = realize(degree_sequence_of(g));
            ok &= result.trace.step_count == 0;
            ok &= result.graph == g;
            std::size_t pos = 0;
            while (pos < n && beta[pos] + 1 == n) beta[pos++] = 0;
            if (pos == n) break;
            ++beta[pos];
        }
    }
    const double elapsed = ms_since(start);
    report(5, ok, "realize reproduces every beta digraph bit-for-bit with t_max = 0", elapsed);
}

void criterion_6() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto report_n = oracle::census_threshold(n);
        std::uint64_t n_pow_n = 1;
        for (std::size_t i = 0; i < n; ++i) n_pow_n *= n;
        ok &= report_n.labeled_count == n_pow_n;
        ok &= report_n.bounds_ok;
        ok &= report_n.class_count * report_n.lower_bound_den >= report_n.lower_bound_num;
        ok &= report_n.class_count <= report_n.upper_bound;
    }
    const auto five_start = Clock::now();
    const auto report_5 = oracle::census_threshold(5);
    const double five_ms = ms_since(five_start);
    ok &= report_5.labeled_count == 3125;
    ok &= report_5.bounds_ok;
    ok &= five_ms < 10000.0;

    const double elapsed = ms_since(start);
    report(6, ok, "census bounds n^n/n! <= TD(n) <= n^n for n = 1..5, labeled = n^n", elapsed);
}

void criterion_7() {
    const auto start = Clock::now();
    bool ok = true;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < 2 * n; ++i) total *= 4;
        for (std::size_t code = 0; code < total; ++code) {
            const DegreeSequence s = decode_sequence(code, n, 3);
            bool nonincreasing = true;
            for (std::size_t i = 0; i + 1 < n; ++i)
                nonincreasing &= s[i].out_deg >= s[i + 1].out_deg;
            if (!nonincreasing) continue;
            ++checked;
            const bool relaxed = check_relaxed(s).digraphical;
            const bool strict = check_fulkerson_chen(positive_lex_sort(s).first).digraphical;
            ok &= relaxed == strict;
        }
    }
    const double elapsed = ms_since(start);
    std::printf("      relaxed-order sequences checked: %zu\n", checked);
    report(7, ok, "relaxed verdict matches the sorted verdict on every admissible sequence",
           elapsed);
}

void criterion_8() {
    const auto start = Clock::now();
    bool ok = true;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::size_t> beta(n, 0);
        while (true) {
            const Digraph g = construct_from_beta(BetaSequence(beta));
            if (g.arc_count() > 0) {
                const auto [arc, shrunk] = shrink_arc(g);
                ok &= is_threshold(shrunk);
                ok &= shrunk.arc_count() + 1 == g.arc_count();
                ok &= g.arc(arc.first, arc.second);
            }
            if (!g.is_complete()) {
                const auto [arc, grown] = grow_arc(g);
                ok &= is_threshold(grown);
                ok &= grown.arc_count() == g.arc_count() + 1;
                ok &= !g.arc(arc.first, arc.second);
            }
            std::size_t pos = 0;
            while (pos < n && beta[pos] + 1 == n) beta[pos++] = 0;
            if (pos == n) break;
            ++beta[pos];
        }
    }
    const double elapsed = ms_since(start);
    report(8, ok, "every beta digraph shrinks and grows within the threshold class", elapsed);
}

void criterion_9() {
    const auto start = Clock::now();
    const bool ok =
        oracle::count_realizations(DegreeSequence{{1, 1}, {1, 1}, {1, 1}, {1, 1}}) == 9 &&
        oracle::count_realizations(DegreeSequence{{1, 2}, {1, 1}, {1, 0}}) == 1;
    report(9, ok, "realization counts: 9 for the 4-cycle degrees, 1 for the worked example",
           ms_since(start));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    const auto counts = realization_counts_4();
    criterion_3(counts);
    criterion_4(counts);
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    if (failures == 0) {
        std::printf("all 9 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
