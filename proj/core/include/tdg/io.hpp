#ifndef TDG_IO_HPP
#define TDG_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdg/digraph.hpp"
#include "tdg/sequence.hpp"

// Text formats. In all three, blank lines and lines whose first
// non-blank character is '#' are ignored.
//
// Degree sequence: one vertex per line, two whitespace-separated
// nonnegative integers "out in".
//
// Digraph: first line "n", then n lines of n space-separated 0/1
// entries.
//
// Beta values: whitespace-separated nonnegative integers, any line
// layout.

namespace tdg {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    /// 1-based line number of the offending input line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

DegreeSequence read_degree_sequence(std::istream& in);
Digraph read_digraph(std::istream& in);
std::vector<std::size_t> read_beta_values(std::istream& in);

void write_degree_sequence(std::ostream& out, const DegreeSequence& s);
void write_digraph(std::ostream& out, const Digraph& g);

/// DOT export with vertices named v1..vn, arcs in lexicographic order.
void write_dot(std::ostream& out, const Digraph& g);

}  // namespace tdg

#endif
