#ifndef TDG_DIGRAPH_HPP
#define TDG_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "tdg/sequence.hpp"

namespace tdg {

using Arc = std::pair<std::size_t, std::size_t>;

/// Guard on vertex counts so quadratic checks stay tractable.
/// Default 50 000; adjustable at runtime.
std::size_t vertex_limit() noexcept;
void set_vertex_limit(std::size_t limit) noexcept;

/// A labeled simple digraph stored as a zero-diagonal 0/1 adjacency
/// matrix with bit-packed rows. Immutable once constructed; use
/// Digraph::Builder or with_arc()/without_arc() to derive new values.
class Digraph {
public:
    class Builder;

    Digraph() = default;

    /// Digraph on n vertices with no arcs. Throws std::length_error if
    /// n exceeds vertex_limit().
    explicit Digraph(std::size_t n);

    /// Validates that every entry is 0 or 1 and the diagonal is zero;
    /// throws std::invalid_argument otherwise.
    static Digraph from_rows(const std::vector<std::vector<int>>& rows);

    static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs);
    static Digraph from_arcs(std::size_t n, std::initializer_list<Arc> arcs);

    /// All n(n-1) off-diagonal arcs present.
    static Digraph complete(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    bool arc(std::size_t from, std::size_t to) const;

    std::size_t out_degree(std::size_t v) const;
    std::size_t in_degree(std::size_t v) const;
    std::size_t arc_count() const noexcept;
    bool is_complete() const noexcept;

    /// Arcs in lexicographic (from, to) order.
    std::vector<Arc> arcs() const;

    Digraph with_arc(std::size_t from, std::size_t to) const;
    Digraph without_arc(std::size_t from, std::size_t to) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    friend class Builder;

    std::size_t n_ = 0;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Mutable staging area for assembling a Digraph.
class Digraph::Builder {
public:
    explicit Builder(std::size_t n);
    explicit Builder(const Digraph& g);

    std::size_t size() const noexcept { return n_; }
    bool arc(std::size_t from, std::size_t to) const;

    /// Throws std::invalid_argument on a self-loop or an index >= n.
    void set_arc(std::size_t from, std::size_t to);
    void clear_arc(std::size_t from, std::size_t to);

    std::size_t out_degree(std::size_t v) const;

    Digraph build() const&;
    Digraph build() &&;

private:
    void check_endpoints(std::size_t from, std::size_t to) const;

    std::size_t n_ = 0;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-sum / column-sum extraction: pair i is (out-degree, in-degree)
/// of vertex i in the digraph's given order.
DegreeSequence degree_sequence_of(const Digraph& g);

/// Relabeled digraph: arc (p(u), p(v)) in the result iff (u, v) in g.
/// Throws std::invalid_argument if p.size() != g.size().
Digraph apply_permutation(const Digraph& g, const VertexPermutation& p);

}  // namespace tdg

#endif
