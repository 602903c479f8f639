#include "tdg/digraph.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>

namespace tdg {

namespace {

std::atomic<std::size_t> g_vertex_limit{50000};

std::size_t words_per_row(std::size_t n) { return (n + 63) / 64; }

void check_size(std::size_t n) {
    if (n > vertex_limit())
        throw std::length_error("digraph order " + std::to_string(n) +
                                " exceeds vertex limit " + std::to_string(vertex_limit()));
}

}  // namespace

std::size_t vertex_limit() noexcept { return g_vertex_limit.load(); }
void set_vertex_limit(std::size_t limit) noexcept { g_vertex_limit.store(limit); }

Digraph::Digraph(std::size_t n) : n_(n), row_words_(words_per_row(n)), words_(n * row_words_, 0) {
    check_size(n);
}

Digraph Digraph::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    Builder b(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("adjacency row " + std::to_string(i + 1) +
                                        " has wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            const int v = rows[i][j];
            if (v != 0 && v != 1)
                throw std::invalid_argument("adjacency entries must be 0 or 1");
            if (v == 1) {
                if (i == j) throw std::invalid_argument("diagonal entries must be 0");
                b.set_arc(i, j);
            }
        }
    }
    return std::move(b).build();
}

Digraph Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
    Builder b(n);
    for (const auto& [from, to] : arcs) b.set_arc(from, to);
    return std::move(b).build();
}

Digraph Digraph::from_arcs(std::size_t n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

Digraph Digraph::complete(std::size_t n) {
    Builder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) b.set_arc(i, j);
    return std::move(b).build();
}

bool Digraph::arc(std::size_t from, std::size_t to) const {
    if (from >= n_ || to >= n_) throw std::out_of_range("vertex index out of range");
    return (words_[from * row_words_ + to / 64] >> (to % 64)) & 1u;
}

std::size_t Digraph::out_degree(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("vertex index out of range");
    std::size_t count = 0;
    for (std::size_t w = 0; w < row_words_; ++w)
        count += std::popcount(words_[v * row_words_ + w]);
    return count;
}

std::size_t Digraph::in_degree(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("vertex index out of range");
    const std::size_t word = v / 64;
    const std::uint64_t mask = std::uint64_t{1} << (v % 64);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (words_[i * row_words_ + word] & mask) ++count;
    return count;
}

std::size_t Digraph::arc_count() const noexcept {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += std::popcount(w);
    return count;
}

bool Digraph::is_complete() const noexcept { return arc_count() == n_ * (n_ - 1); }

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && arc(i, j)) out.emplace_back(i, j);
    return out;
}

Digraph Digraph::with_arc(std::size_t from, std::size_t to) const {
    Builder b(*this);
    b.set_arc(from, to);
    return std::move(b).build();
}

Digraph Digraph::without_arc(std::size_t from, std::size_t to) const {
    Builder b(*this);
    b.clear_arc(from, to);
    return std::move(b).build();
}

Digraph::Builder::Builder(std::size_t n)
    : n_(n), row_words_(words_per_row(n)), words_(n * row_words_, 0) {
    check_size(n);
}

Digraph::Builder::Builder(const Digraph& g)
    : n_(g.n_), row_words_(g.row_words_), words_(g.words_) {}

void Digraph::Builder::check_endpoints(std::size_t from, std::size_t to) const {
    if (from >= n_ || to >= n_) throw std::invalid_argument("vertex index out of range");
    if (from == to) throw std::invalid_argument("self-loops are not allowed");
}

bool Digraph::Builder::arc(std::size_t from, std::size_t to) const {
    check_endpoints(from, to);
    return (words_[from * row_words_ + to / 64] >> (to % 64)) & 1u;
}

void Digraph::Builder::set_arc(std::size_t from, std::size_t to) {
    check_endpoints(from, to);
    words_[from * row_words_ + to / 64] |= std::uint64_t{1} << (to % 64);
}

void Digraph::Builder::clear_arc(std::size_t from, std::size_t to) {
    check_endpoints(from, to);
    words_[from * row_words_ + to / 64] &= ~(std::uint64_t{1} << (to % 64));
}

std::size_t Digraph::Builder::out_degree(std::size_t v) const {
    if (v >= n_) throw std::invalid_argument("vertex index out of range");
    std::size_t count = 0;
    for (std::size_t w = 0; w < row_words_; ++w)
        count += std::popcount(words_[v * row_words_ + w]);
    return count;
}

Digraph Digraph::Builder::build() const& {
    Digraph g;
    g.n_ = n_;
    g.row_words_ = row_words_;
    g.words_ = words_;
    return g;
}

Digraph Digraph::Builder::build() && {
    Digraph g;
    g.n_ = n_;
    g.row_words_ = row_words_;
    g.words_ = std::move(words_);
    return g;
}

DegreeSequence degree_sequence_of(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<DegreePair> pairs(n);
    for (std::size_t i = 0; i < n; ++i) pairs[i].out_deg = g.out_degree(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.arc(i, j)) ++pairs[j].in_deg;
    return DegreeSequence(std::move(pairs));
}

Digraph apply_permutation(const Digraph& g, const VertexPermutation& p) {
    if (p.size() != g.size())
        throw std::invalid_argument("permutation size does not match digraph order");
    Digraph::Builder b(g.size());
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < g.size(); ++v)
            if (u != v && g.arc(u, v)) b.set_arc(p(u), p(v));
    return std::move(b).build();
}

}  // namespace tdg
