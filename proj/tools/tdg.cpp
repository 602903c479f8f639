#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdg/io.hpp"
#include "tdg/oracle.hpp"
#include "tdg/realization.hpp"
#include "tdg/threshold.hpp"

// Exit codes: 0 = affirmative verdict / successful construction,
// 1 = negative verdict (not digraphical, not threshold, bounds failed,
//     equivalence failed, no admissible arc edit),
// 2 = usage or parse error.

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string input;
    std::string format = "text";
    std::size_t n = 0;
    bool trace = false;
    bool relaxed = false;
    bool degrees = false;
};

template <typename Fn>
auto with_input(const std::string& path, Fn&& fn) {
    if (path == "-") return fn(std::cin);
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return fn(file);
}

void require_not_dot(const Options& opt) {
    if (opt.format == "dot")
        throw std::runtime_error(
            "dot output is only available for commands that produce a digraph");
}

void print_json(const json& doc) { std::cout << doc.dump() << '\n'; }

json rows_json(const tdg::Digraph& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.size(); ++j)
            row.push_back(i != j && g.arc(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

json degrees_json(const tdg::DegreeSequence& s) {
    json out = json::array();
    for (const auto& p : s) out.push_back(json::array({p.out_deg, p.in_deg}));
    return out;
}

json verdict_json(const tdg::FcVerdict& v) {
    json doc;
    doc["digraphical"] = v.digraphical;
    if (v.failing_k) doc["failing_k"] = *v.failing_k;
    if (v.sum_mismatch) doc["sum_mismatch"] = true;
    if (v.degree_out_of_range) doc["degree_out_of_range"] = true;
    return doc;
}

void print_verdict_text(const tdg::FcVerdict& v) {
    std::cout << (v.digraphical ? "digraphical" : "not digraphical") << '\n';
    if (v.degree_out_of_range) std::cout << "a degree is at least the number of vertices\n";
    if (v.sum_mismatch) std::cout << "out-degree total differs from in-degree total\n";
    if (v.failing_k) std::cout << "prefix inequality fails at k = " << *v.failing_k << '\n';
}

/// Digraph in the requested format, preceded in JSON mode by any
/// (key, value) pairs in `extra`.
void print_digraph(const tdg::Digraph& g, const Options& opt, const json& extra = json::object()) {
    if (opt.format == "dot") {
        tdg::write_dot(std::cout, g);
    } else if (opt.format == "json") {
        json doc;
        for (const auto& [key, value] : extra.items()) doc[key] = value;
        doc["n"] = g.size();
        doc["rows"] = rows_json(g);
        print_json(doc);
    } else {
        tdg::write_digraph(std::cout, g);
    }
}

int run_check(const Options& opt) {
    require_not_dot(opt);
    tdg::DegreeSequence s = with_input(opt.input, tdg::read_degree_sequence);
    tdg::FcVerdict verdict;
    if (opt.relaxed) {
        verdict = tdg::check_relaxed(s);
    } else {
        if (!tdg::positive_lex_sorted(s)) {
            std::cerr << "note: sequence sorted into positive lexicographic order\n";
            s = tdg::positive_lex_sort(s).first;
        }
        verdict = tdg::check_fulkerson_chen(s);
    }
    if (opt.format == "json")
        print_json(verdict_json(verdict));
    else
        print_verdict_text(verdict);
    return verdict.digraphical ? kExitYes : kExitNo;
}

int run_realize(const Options& opt) {
    const tdg::DegreeSequence s = with_input(opt.input, tdg::read_degree_sequence);
    tdg::RealizeOptions realize_options;
    realize_options.keep_row_sum_history = opt.trace;

    tdg::RealizationResult result;
    try {
        try {
            result = tdg::realize(s, realize_options);
        } catch (const std::invalid_argument&) {
            // Unsorted input that needs column moves: realize the
            // sorted sequence, then relabel so vertex i carries the
            // i-th input degree pair.
            std::cerr << "note: sequence sorted into positive lexicographic order; "
                         "result relabeled to match the input order\n";
            auto [sorted, perm] = tdg::positive_lex_sort(s);
            result = tdg::realize(sorted, realize_options);
            result.graph = tdg::apply_permutation(result.graph, perm.inverse());
        }
    } catch (const tdg::NotDigraphicalError& e) {
        if (opt.format == "json")
            print_json(verdict_json(e.verdict()));
        else
            std::cerr << "error: " << e.what() << '\n';
        return kExitNo;
    }

    json extra = json::object();
    if (opt.trace) {
        json trace;
        trace["t_max"] = result.trace.step_count;
        json steps = json::array();
        for (const auto& step : result.trace.steps)
            steps.push_back(json{{"from_row", step.from_row + 1},
                                 {"to_row", step.to_row + 1},
                                 {"column", step.column + 1}});
        trace["steps"] = std::move(steps);
        if (result.trace.row_sum_history) trace["row_sums"] = *result.trace.row_sum_history;
        extra["trace"] = std::move(trace);
    }

    if (opt.format == "json") {
        json doc;
        doc["n"] = result.graph.size();
        doc["rows"] = rows_json(result.graph);
        if (opt.trace) doc["trace"] = extra["trace"];
        print_json(doc);
    } else {
        print_digraph(result.graph, opt);
        if (opt.trace && opt.format == "text") {
            std::cout << "# t_max " << result.trace.step_count << '\n';
            std::size_t k = 0;
            for (const auto& step : result.trace.steps)
                std::cout << "# step " << ++k << ": column " << step.column + 1 << ", row "
                          << step.from_row + 1 << " -> row " << step.to_row + 1 << '\n';
            if (result.trace.row_sum_history)
                for (std::size_t h = 0; h < result.trace.row_sum_history->size(); ++h) {
                    std::cout << "# row sums[" << h << "]:";
                    for (std::size_t v : (*result.trace.row_sum_history)[h]) std::cout << ' ' << v;
                    std::cout << '\n';
                }
        }
    }
    return kExitYes;
}

int run_threshold_check(const Options& opt) {
    require_not_dot(opt);
    const tdg::Digraph g = with_input(opt.input, tdg::read_digraph);
    const bool threshold = tdg::is_threshold(g);

    if (opt.format == "json") {
        json doc;
        doc["threshold"] = threshold;
        if (!threshold) {
            const auto witness = tdg::find_forbidden_configuration(g);
            json w;
            if (const auto* ts = std::get_if<tdg::TwoSwitch>(&*witness)) {
                w["kind"] = "two_switch";
                w["w"] = ts->w + 1;
                w["x"] = ts->x + 1;
                w["y"] = ts->y + 1;
                w["z"] = ts->z + 1;
            } else {
                const auto& tc = std::get<tdg::InducedThreeCycle>(*witness);
                w["kind"] = "induced_three_cycle";
                w["x"] = tc.x + 1;
                w["y"] = tc.y + 1;
                w["z"] = tc.z + 1;
            }
            doc["witness"] = std::move(w);
        }
        if (opt.degrees) doc["degrees"] = degrees_json(tdg::degree_sequence_of(g));
        print_json(doc);
    } else if (opt.degrees) {
        // Degree echo mode: stdout carries exactly the degree sequence,
        // the verdict rides on the exit code.
        tdg::write_degree_sequence(std::cout, tdg::degree_sequence_of(g));
    } else {
        std::cout << (threshold ? "threshold" : "not threshold") << '\n';
        if (!threshold) {
            const auto witness = tdg::find_forbidden_configuration(g);
            if (const auto* ts = std::get_if<tdg::TwoSwitch>(&*witness))
                std::cout << "2-switch: w=v" << ts->w + 1 << " x=v" << ts->x + 1 << " y=v"
                          << ts->y + 1 << " z=v" << ts->z + 1 << '\n';
            else {
                const auto& tc = std::get<tdg::InducedThreeCycle>(*witness);
                std::cout << "induced 3-cycle: x=v" << tc.x + 1 << " y=v" << tc.y + 1 << " z=v"
                          << tc.z + 1 << '\n';
            }
        }
    }
    return threshold ? kExitYes : kExitNo;
}

int run_from_beta(const Options& opt) {
    const auto values = with_input(opt.input, tdg::read_beta_values);
    const tdg::Digraph g = tdg::construct_from_beta(tdg::BetaSequence(values));
    print_digraph(g, opt);
    return kExitYes;
}

int run_edit(const Options& opt, bool removing) {
    const tdg::Digraph g = with_input(opt.input, tdg::read_digraph);
    std::pair<tdg::Arc, tdg::Digraph> edited;
    try {
        edited = removing ? tdg::shrink_arc(g) : tdg::grow_arc(g);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNo;
    }
    const auto& [arc, result] = edited;
    const char* verb = removing ? "removed" : "added";
    if (opt.format == "text")
        std::cout << "# " << verb << " arc v" << arc.first + 1 << " -> v" << arc.second + 1
                  << '\n';
    json extra;
    extra[verb] = json::array({arc.first + 1, arc.second + 1});
    print_digraph(result, opt, extra);
    return kExitYes;
}

int run_census(const Options& opt) {
    require_not_dot(opt);
    const auto report = tdg::oracle::census_threshold(opt.n);
    if (opt.format == "json")
        std::cout << tdg::oracle::census_json(report) << '\n';
    else
        std::cout << tdg::oracle::census_text(report);
    return report.bounds_ok ? kExitYes : kExitNo;
}

int run_verify(const Options& opt) {
    require_not_dot(opt);
    const auto result = tdg::oracle::verify_equivalence(opt.n);
    if (opt.format == "json") {
        json doc;
        doc["ok"] = result.ok;
        doc["digraphs_checked"] = result.digraphs_checked;
        if (result.witness) {
            json w;
            w["index"] = result.witness->index;
            w["n"] = result.witness->graph.size();
            w["rows"] = rows_json(result.witness->graph);
            w["predicates"] = {
                {"unique_realization", result.witness->predicates.unique_realization},
                {"no_forbidden_configuration",
                 result.witness->predicates.no_forbidden_configuration},
                {"adjacency_condition", result.witness->predicates.adjacency_condition},
                {"fulkerson_chen_equality",
                 result.witness->predicates.fulkerson_chen_equality}};
            doc["witness"] = std::move(w);
        }
        print_json(doc);
    } else if (result.ok) {
        std::cout << "equivalence verified on " << result.digraphs_checked << " digraphs (n = "
                  << opt.n << ")\n";
    } else {
        const auto& w = *result.witness;
        std::cout << "equivalence FAILED at digraph index " << w.index << " (n = " << opt.n
                  << ")\n";
        tdg::write_digraph(std::cout, w.graph);
        std::cout << "unique_realization: " << (w.predicates.unique_realization ? "yes" : "no")
                  << '\n'
                  << "no_forbidden_configuration: "
                  << (w.predicates.no_forbidden_configuration ? "yes" : "no") << '\n'
                  << "adjacency_condition: " << (w.predicates.adjacency_condition ? "yes" : "no")
                  << '\n'
                  << "fulkerson_chen_equality: "
                  << (w.predicates.fulkerson_chen_equality ? "yes" : "no") << '\n';
    }
    return result.ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"threshold digraphs and degree sequence realization"};
    app.require_subcommand(1);

    Options opt;
    int status = kExitYes;

    const auto add_format = [&](CLI::App* sub, bool dot_ok) {
        auto choices = dot_ok ? std::vector<std::string>{"text", "json", "dot"}
                              : std::vector<std::string>{"text", "json"};
        sub->add_option("--format,-f", opt.format, "output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };
    const auto add_input = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", opt.input, what)->required();
    };

    auto* check = app.add_subcommand("check", "test whether a degree sequence is digraphical");
    add_input(check, "degree sequence file, or - for stdin");
    add_format(check, false);
    check->add_flag("--relaxed", opt.relaxed,
                    "only require nonincreasing out-degrees, evaluated in the given order");
    check->callback([&] { status = run_check(opt); });

    auto* realize = app.add_subcommand("realize", "construct a digraph with the given degrees");
    add_input(realize, "degree sequence file, or - for stdin");
    add_format(realize, true);
    realize->add_flag("--trace", opt.trace, "record the column moves of the construction");
    realize->callback([&] { status = run_realize(opt); });

    auto* threshold_check =
        app.add_subcommand("threshold-check", "test whether a digraph is threshold");
    add_input(threshold_check, "digraph file, or - for stdin");
    add_format(threshold_check, false);
    threshold_check->add_flag("--degrees", opt.degrees,
                              "emit the digraph's degree sequence on stdout");
    threshold_check->callback([&] { status = run_threshold_check(opt); });

    auto* from_beta =
        app.add_subcommand("from-beta", "build the threshold digraph with given in-degrees");
    add_input(from_beta, "beta value file, or - for stdin");
    add_format(from_beta, true);
    from_beta->callback([&] { status = run_from_beta(opt); });

    auto* shrink = app.add_subcommand(
        "shrink", "remove one arc from a threshold digraph, staying threshold");
    add_input(shrink, "digraph file, or - for stdin");
    add_format(shrink, true);
    shrink->callback([&] { status = run_edit(opt, true); });

    auto* grow =
        app.add_subcommand("grow", "add one arc to a threshold digraph, staying threshold");
    add_input(grow, "digraph file, or - for stdin");
    add_format(grow, true);
    grow->callback([&] { status = run_edit(opt, false); });

    auto* census =
        app.add_subcommand("census", "count threshold digraphs on n vertices (n <= 5)");
    census->add_option("n", opt.n, "vertex count")->required();
    add_format(census, false);
    census->callback([&] { status = run_census(opt); });

    auto* verify = app.add_subcommand(
        "verify", "exhaustively check the four threshold characterizations agree (n <= 4)");
    verify->add_option("n", opt.n, "vertex count")->required();
    add_format(verify, false);
    verify->callback([&] { status = run_verify(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const tdg::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return status;
}
