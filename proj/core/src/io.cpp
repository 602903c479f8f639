#include "tdg/io.hpp"

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace tdg {

namespace {

/// getline with a 1-based counter, skipping blank and '#' lines.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            const auto first = line.find_first_not_of(" \t\r\f\v");
            if (first == std::string::npos || line[first] == '#') continue;
            return line;
        }
        ++lineno_;
        return std::nullopt;
    }

    std::size_t lineno() const noexcept { return lineno_; }

private:
    std::istream& in_;
    std::size_t lineno_ = 0;
};

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(std::move(token));
    return tokens;
}

std::size_t parse_count(const std::string& token, std::size_t lineno, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(lineno, std::string(what) + " must be a nonnegative integer, got \"" +
                                     token + "\"");
    try {
        return static_cast<std::size_t>(std::stoull(token));
    } catch (const std::out_of_range&) {
        throw ParseError(lineno, std::string(what) + " is out of range: \"" + token + "\"");
    }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

DegreeSequence read_degree_sequence(std::istream& in) {
    LineReader reader(in);
    std::vector<DegreePair> pairs;
    while (auto line = reader.next()) {
        const auto tokens = split_tokens(*line);
        if (tokens.size() != 2)
            throw ParseError(reader.lineno(),
                             "expected \"out in\" degree pair, got " +
                                 std::to_string(tokens.size()) + " value(s)");
        DegreePair p;
        p.out_deg = parse_count(tokens[0], reader.lineno(), "out-degree");
        p.in_deg = parse_count(tokens[1], reader.lineno(), "in-degree");
        pairs.push_back(p);
    }
    return DegreeSequence(std::move(pairs));
}

Digraph read_digraph(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.next();
    if (!header) throw ParseError(reader.lineno(), "expected vertex count");
    const auto header_tokens = split_tokens(*header);
    if (header_tokens.size() != 1)
        throw ParseError(reader.lineno(), "expected a single vertex count");
    const std::size_t n = parse_count(header_tokens[0], reader.lineno(), "vertex count");

    Digraph::Builder b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto line = reader.next();
        if (!line)
            throw ParseError(reader.lineno(),
                             "expected adjacency row " + std::to_string(i + 1));
        const auto tokens = split_tokens(*line);
        if (tokens.size() != n)
            throw ParseError(reader.lineno(), "adjacency row " + std::to_string(i + 1) +
                                                  " has " + std::to_string(tokens.size()) +
                                                  " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            if (tokens[j] == "0") continue;
            if (tokens[j] != "1")
                throw ParseError(reader.lineno(),
                                 "adjacency entries must be 0 or 1, got \"" + tokens[j] + "\"");
            if (i == j)
                throw ParseError(reader.lineno(), "diagonal entry must be 0 (no self-loops)");
            b.set_arc(i, j);
        }
    }
    if (auto extra = reader.next(); extra.has_value())
        throw ParseError(reader.lineno(), "unexpected content after adjacency matrix");
    return std::move(b).build();
}

std::vector<std::size_t> read_beta_values(std::istream& in) {
    LineReader reader(in);
    std::vector<std::size_t> values;
    while (auto line = reader.next())
        for (const auto& token : split_tokens(*line))
            values.push_back(parse_count(token, reader.lineno(), "beta value"));
    return values;
}

void write_degree_sequence(std::ostream& out, const DegreeSequence& s) {
    for (const auto& p : s) out << p.out_deg << ' ' << p.in_deg << '\n';
}

void write_digraph(std::ostream& out, const Digraph& g) {
    const std::size_t n = g.size();
    out << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != 0) out << ' ';
            out << (i != j && g.arc(i, j) ? 1 : 0);
        }
        out << '\n';
    }
}

void write_dot(std::ostream& out, const Digraph& g) {
    out << "digraph {\n";
    for (std::size_t i = 0; i < g.size(); ++i) out << "  v" << i + 1 << ";\n";
    for (const auto& [from, to] : g.arcs())
        out << "  v" << from + 1 << " -> v" << to + 1 << ";\n";
    out << "}\n";
}

}  // namespace tdg
