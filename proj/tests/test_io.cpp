#include <random>
#include <sstream>

#include "doctest.h"
#include "tdg/io.hpp"
#include "tdg/threshold.hpp"

using namespace tdg;

TEST_SUITE("io") {

TEST_CASE("read_degree_sequence skips blanks and comments") {
    std::istringstream in("# header\n\n1 2\n  1 1\n\n# trailing note\n1 0\n");
    CHECK(read_degree_sequence(in) == DegreeSequence{{1, 2}, {1, 1}, {1, 0}});
}

TEST_CASE("read_degree_sequence reports the offending line") {
    std::istringstream one("1 2\n1\n");
    CHECK_THROWS_WITH_AS(read_degree_sequence(one),
                         "line 2: expected \"out in\" degree pair, got 1 value(s)",
                         ParseError);

    std::istringstream sign("# c\n-1 2\n");
    try {
        read_degree_sequence(sign);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    std::istringstream word("1 two\n");
    CHECK_THROWS_AS(read_degree_sequence(word), ParseError);
    std::istringstream huge("1 99999999999999999999999999\n");
    CHECK_THROWS_AS(read_degree_sequence(huge), ParseError);
    std::istringstream three("1 2 3\n");
    CHECK_THROWS_AS(read_degree_sequence(three), ParseError);
}

TEST_CASE("degree sequence write/read round trip") {
    std::mt19937 rng(11);
    for (int round = 0; round < 30; ++round) {
        std::vector<DegreePair> pairs(rng() % 10);
        for (auto& p : pairs) p = {rng() % 9, rng() % 9};
        const DegreeSequence s(pairs);
        std::ostringstream out;
        write_degree_sequence(out, s);
        std::istringstream in(out.str());
        CHECK(read_degree_sequence(in) == s);
    }
}

TEST_CASE("read_digraph parses the matrix format") {
    std::istringstream in("3\n0 1 0\n1 0 0\n1 0 0\n");
    CHECK(read_digraph(in) == construct_from_beta(BetaSequence({2, 1, 0})));

    std::istringstream commented("# graph\n2\n\n0 1\n0 0\n");
    CHECK(read_digraph(commented).arcs() == std::vector<Arc>{{0, 1}});

    std::istringstream empty("0\n");
    CHECK(read_digraph(empty) == Digraph(0));
}

TEST_CASE("read_digraph rejects malformed input") {
    std::istringstream missing("3\n0 1 0\n1 0 0\n");
    CHECK_THROWS_WITH_AS(read_digraph(missing), "line 4: expected adjacency row 3",
                         ParseError);

    std::istringstream bad_entry("2\n0 2\n0 0\n");
    CHECK_THROWS_AS(read_digraph(bad_entry), ParseError);

    std::istringstream diagonal("2\n1 0\n0 0\n");
    CHECK_THROWS_WITH_AS(read_digraph(diagonal),
                         "line 2: diagonal entry must be 0 (no self-loops)", ParseError);

    std::istringstream short_row("2\n0\n0 0\n");
    CHECK_THROWS_AS(read_digraph(short_row), ParseError);

    std::istringstream trailing("1\n0\n0 1\n");
    CHECK_THROWS_AS(read_digraph(trailing), ParseError);

    std::istringstream no_count("");
    CHECK_THROWS_AS(read_digraph(no_count), ParseError);

    std::istringstream two_counts("2 2\n");
    CHECK_THROWS_AS(read_digraph(two_counts), ParseError);
}

TEST_CASE("digraph write/read round trip") {
    const Digraph g = Digraph::from_arcs(4, {{0, 3}, {2, 1}, {3, 0}});
    std::ostringstream out;
    write_digraph(out, g);
    CHECK(out.str() == "4\n0 0 0 1\n0 0 0 0\n0 1 0 0\n1 0 0 0\n");
    std::istringstream in(out.str());
    CHECK(read_digraph(in) == g);
}

TEST_CASE("read_beta_values accepts any whitespace layout") {
    std::istringstream in("# betas\n2 1\n0\n");
    CHECK(read_beta_values(in) == std::vector<std::size_t>{2, 1, 0});

    std::istringstream bad("2 -1\n");
    CHECK_THROWS_AS(read_beta_values(bad), ParseError);
    std::istringstream none("# only comments\n");
    CHECK(read_beta_values(none).empty());
}

TEST_CASE("dot export names vertices v1..vn") {
    const Digraph g = construct_from_beta(BetaSequence({2, 1, 0}));
    std::ostringstream out;
    write_dot(out, g);
    CHECK(out.str() ==
          "digraph {\n"
          "  v1;\n"
          "  v2;\n"
          "  v3;\n"
          "  v1 -> v2;\n"
          "  v2 -> v1;\n"
          "  v3 -> v1;\n"
          "}\n");
}

}  // TEST_SUITE
