#include "tdg/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tdg {

std::vector<std::size_t> DegreeSequence::out_degrees() const {
    std::vector<std::size_t> out(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) out[i] = pairs_[i].out_deg;
    return out;
}

std::vector<std::size_t> DegreeSequence::in_degrees() const {
    std::vector<std::size_t> in(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) in[i] = pairs_[i].in_deg;
    return in;
}

std::size_t DegreeSequence::total_out() const noexcept {
    std::size_t sum = 0;
    for (const auto& p : pairs_) sum += p.out_deg;
    return sum;
}

std::size_t DegreeSequence::total_in() const noexcept {
    std::size_t sum = 0;
    for (const auto& p : pairs_) sum += p.in_deg;
    return sum;
}

VertexPermutation::VertexPermutation(std::vector<std::size_t> targets)
    : targets_(std::move(targets)) {
    std::vector<bool> seen(targets_.size(), false);
    for (std::size_t t : targets_) {
        if (t >= targets_.size() || seen[t])
            throw std::invalid_argument("permutation is not a bijection");
        seen[t] = true;
    }
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
    std::vector<std::size_t> targets(n);
    std::iota(targets.begin(), targets.end(), std::size_t{0});
    return VertexPermutation(std::move(targets));
}

VertexPermutation VertexPermutation::inverse() const {
    std::vector<std::size_t> inv(targets_.size());
    for (std::size_t i = 0; i < targets_.size(); ++i) inv[targets_[i]] = i;
    return VertexPermutation(std::move(inv));
}

bool positive_lex_sorted(const DegreeSequence& s) noexcept {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i].out_deg < s[i + 1].out_deg) return false;
        if (s[i].out_deg == s[i + 1].out_deg && s[i].in_deg < s[i + 1].in_deg) return false;
    }
    return true;
}

std::pair<DegreeSequence, VertexPermutation> positive_lex_sort(const DegreeSequence& s) {
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&s](std::size_t a, std::size_t b) { return s[b] < s[a]; });

    std::vector<DegreePair> sorted(s.size());
    std::vector<std::size_t> targets(s.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        sorted[pos] = s[order[pos]];
        targets[order[pos]] = pos;
    }
    return {DegreeSequence(std::move(sorted)), VertexPermutation(std::move(targets))};
}

bool dominance_leq(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_leq: sequences differ in length");
    std::size_t sum_a = 0;
    std::size_t sum_b = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sum_a += a[k];
        sum_b += b[k];
        if (k + 1 < a.size() && sum_a > sum_b) return false;
    }
    return sum_a == sum_b;
}

}  // namespace tdg
