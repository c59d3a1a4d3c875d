#include "lb2p/cli.hpp"

#include "lb2p/balance.hpp"
#include "lb2p/biregular.hpp"
#include "lb2p/gadgets.hpp"
#include "lb2p/graph.hpp"
#include "lb2p/nae.hpp"
#include "lb2p/reductions.hpp"
#include "lb2p/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lb2p::cli {

namespace {

constexpr const char* formats = R"(Formats:
  GRAPH      header "n m", then m lines "u v" (0-based, u != v, no repeats)
               graph     := n SP m NL edge{m}
               edge      := u SP v NL
  PARTITION  one line of n characters from {0,1}
  FORMULA    comment lines start with "c"; then
               formula   := "p nae3" SP n SP k NL clause{k}
               clause    := i SP j SP l NL      (distinct, 1-based)
             every variable must occur in exactly four clauses
  ASSIGNMENT one line of n characters from {0,1}
  ROLES      sidecar written by "reduce" next to the graph:
               "lb2p-roles 1" NL
               "target" SP name [SP r] NL
               "instance" SP n SP k NL ("clause" SP i SP j SP l NL){k}
               "vertices" SP N NL (index SP tag SP a [SP b] NL){N}
             tags: p q v g y z b; indices 1-based except the g local index

Exit codes: 0 definitive answer, 1 INVALID/FAIL, 2 usage or format error,
3 node budget exhausted.)";

struct Failure {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{Usage, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) throw Failure{Usage, "cannot write " + path};
}

Graph load_graph(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const GraphFormatError& e) {
        throw Failure{Usage, path + ": " + e.what()};
    }
}

template <class Parse>
auto load(const std::string& path, Parse parse) {
    const auto text = read_file(path);
    try {
        return parse(text);
    } catch (const std::exception& e) {
        throw Failure{Usage, path + ": " + e.what()};
    }
}

void print_vertices(std::ostream& out, const char* head, const std::vector<Vertex>& vs) {
    out << head;
    for (auto v : vs) out << ' ' << v;
    out << '\n';
}

struct Options {
    std::string mode = "open";
    std::string method = "auto";
    std::uint64_t budget = SolverOptions{}.node_budget;
    std::string graph, partition, formula, roles, assignment, output, target, gadget;
    std::size_t r = 1;
};

int do_check(const Options& o, std::ostream& out) {
    const auto g = load_graph(o.graph);
    const auto p = load(o.partition, [](const std::string& t) { return parse_partition(t); });
    if (p.size() != g.vertex_count())
        throw Failure{Usage, "partition has " + std::to_string(p.size()) + " labels, graph has " +
                                 std::to_string(g.vertex_count()) + " vertices"};
    const auto bad = check(g, p, parse_neighborhood(o.mode));
    if (bad.empty()) {
        out << "VALID\n";
        return Definitive;
    }
    print_vertices(out, "INVALID", bad);
    return Negative;
}

int do_solve(const Options& o, std::ostream& out) {
    const auto g = load_graph(o.graph);
    const auto mode = parse_neighborhood(o.mode);
    SolveOutcome res;
    if (o.method == "brute") {
        if (g.vertex_count() > brute_force_cap)
            throw Failure{Usage, "brute method is limited to " + std::to_string(brute_force_cap) + " vertices"};
        res = brute_force(g, mode);
    } else {
        res = decide(g, mode, {}, SolverOptions{o.budget});
    }
    switch (res.status) {
        case SolveStatus::Sat: out << "SAT\n" << format_partition(*res.witness); return Definitive;
        case SolveStatus::Unsat: out << "UNSAT\n"; return Definitive;
        case SolveStatus::Timeout: out << "TIMEOUT\n"; return Timeout;
    }
    return Definitive;
}

int do_biregular(const Options& o, std::ostream& out) {
    const auto g = load_graph(o.graph);
    const auto res = solve_biregular(g);
    if (auto* p = std::get_if<TwoPartition>(&res)) {
        out << "SAT\n" << format_partition(*p);
        return Definitive;
    }
    if (auto* c = std::get_if<CycleCertificate>(&res)) {
        out << "CERT\n";
        for (std::size_t i = 0; i < c->cycle.size(); ++i) out << (i ? " " : "") << c->cycle[i];
        out << '\n';
        return Definitive;
    }
    out << "NOTAPPLICABLE " << std::get<NotApplicable>(res).reason << '\n';
    return Usage;
}

int do_reduce(const Options& o, std::ostream& out) {
    const auto inst = load(o.formula, [](const std::string& t) { return parse_nae(t); });
    const auto target = parse_target(o.target);
    if (o.r == 0) throw Failure{Usage, "--r must be at least 1"};
    const auto art = reduce(inst, target, o.r);
    std::string path = o.output;
    if (path.empty()) {
        path = o.formula;
        const auto slash = path.find_last_of('/');
        const auto dot = path.find_last_of('.');
        if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) path.resize(dot);
        path += "." + std::string(to_string(target)) + ".graph";
    }
    write_file(path, serialize_graph(art.graph));
    write_file(path + ".roles", write_roles(art));
    out << summarize(art) << '\n';
    return Definitive;
}

ReductionArtifact load_artifact(const Options& o) {
    const auto g = load_graph(o.graph);
    return load(o.roles, [&](const std::string& t) { return read_roles(t, g); });
}

int do_lift(const Options& o, std::ostream& out) {
    const auto art = load_artifact(o);
    const auto a = load(o.assignment, [](const std::string& t) { return parse_assignment(t); });
    if (a.size() != art.instance.variable_count())
        throw Failure{Usage, "assignment has " + std::to_string(a.size()) + " values, formula has " +
                                 std::to_string(art.instance.variable_count()) + " variables"};
    try {
        out << format_partition(assignment_to_partition(art, a));
        return Definitive;
    } catch (const UnsatAssignment& e) {
        out << "INVALID " << e.what() << '\n';
        return Negative;
    }
}

int do_extract(const Options& o, std::ostream& out) {
    const auto art = load_artifact(o);
    const auto p = load(o.partition, [](const std::string& t) { return parse_partition(t); });
    if (p.size() != art.graph.vertex_count())
        throw Failure{Usage, "partition has " + std::to_string(p.size()) + " labels, graph has " +
                                 std::to_string(art.graph.vertex_count()) + " vertices"};
    try {
        out << format_assignment(partition_to_assignment(art, p));
        return Definitive;
    } catch (const InvalidPartition& e) {
        print_vertices(out, "INVALID", e.violations());
        return Negative;
    }
}

int do_gadget_verify(const Options& o, std::ostream& out) {
    const auto g = make_gadget(parse_gadget_id(o.gadget));
    const auto v = verify_gadget(g);
    if (v.pass) {
        out << "PASS\n";
        return Definitive;
    }
    out << "FAIL " << v.detail << '\n';
    if (v.missing_completion) out << "missing-completion " << int(*v.missing_completion) << '\n';
    if (v.counterexample) {
        const auto& lab = *v.counterexample;
        out << "counterexample";
        if (g.contract == GadgetContract::ClauseCompletion) {
            // Harness labeling: clause vertex, three literals, then the gadget.
            out << " q=" << int(lab[0]);
            for (std::size_t t = 0; t < 3; ++t) out << " p" << t + 1 << '=' << int(lab[1 + t]);
            for (std::size_t u = 0; u < g.names.size(); ++u) out << ' ' << g.names[u] << '=' << int(lab[4 + u]);
        } else {
            for (std::size_t u = 0; u < g.names.size(); ++u) out << ' ' << g.names[u] << '=' << int(lab[u]);
        }
        out << '\n';
    }
    return Negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally-balanced 2-partitions: checking, exact solving, the biregular algorithm and\n"
                 "reductions from NAE-3-SAT-E4.",
                 "lb2p"};
    app.footer(formats);
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> modes{"open", "closed"};

    auto* check_cmd = app.add_subcommand("check", "Check a partition: VALID or INVALID <vertices>");
    check_cmd->add_option("--mode", o.mode, "open or closed")->required()->check(CLI::IsMember(modes));
    check_cmd->add_option("GRAPH", o.graph)->required();
    check_cmd->add_option("PARTITION", o.partition)->required();

    auto* solve_cmd = app.add_subcommand("solve", "Decide existence: SAT + partition, UNSAT or TIMEOUT");
    solve_cmd->add_option("--mode", o.mode, "open or closed")->required()->check(CLI::IsMember(modes));
    solve_cmd->add_option("--method", o.method, "auto (propagation search) or brute")
        ->check(CLI::IsMember({"auto", "brute"}));
    solve_cmd->add_option("--budget", o.budget, "search node budget for the auto method");
    solve_cmd->add_option("GRAPH", o.graph)->required();

    auto* bireg_cmd = app.add_subcommand(
        "biregular", "Open variant on (2,2k+1)-biregular graphs: SAT + partition, CERT + cycle, or NOTAPPLICABLE");
    bireg_cmd->add_option("GRAPH", o.graph)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction graph and its ROLES sidecar");
    reduce_cmd->add_option("--target", o.target, "bireg, even, subcubic or odd")
        ->required()
        ->check(CLI::IsMember({"bireg", "even", "subcubic", "odd"}));
    reduce_cmd->add_option("--r", o.r, "copies parameter of the bireg target (default 1)");
    reduce_cmd->add_option("-o,--output", o.output,
                           "graph path (default FORMULA stem + .<target>.graph); sidecar is <path>.roles");
    reduce_cmd->add_option("FORMULA", o.formula)->required();

    auto* lift_cmd = app.add_subcommand("lift", "Map a satisfying assignment to a balanced partition");
    lift_cmd->add_option("GRAPH", o.graph)->required();
    lift_cmd->add_option("ROLES", o.roles)->required();
    lift_cmd->add_option("ASSIGNMENT", o.assignment)->required();

    auto* extract_cmd = app.add_subcommand("extract", "Map a balanced partition back to an assignment");
    extract_cmd->add_option("GRAPH", o.graph)->required();
    extract_cmd->add_option("ROLES", o.roles)->required();
    extract_cmd->add_option("PARTITION", o.partition)->required();

    auto* gadget_cmd = app.add_subcommand("gadget", "Gadget utilities");
    gadget_cmd->require_subcommand(1);
    auto* verify_cmd = gadget_cmd->add_subcommand("verify", "Machine-check a gadget contract: PASS or FAIL");
    verify_cmd->add_option("--name", o.gadget, "f1, f2, forcing or f4")
        ->required()
        ->check(CLI::IsMember({"f1", "f2", "forcing", "f4"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return Usage;
    }

    try {
        if (*check_cmd) return do_check(o, out);
        if (*solve_cmd) return do_solve(o, out);
        if (*bireg_cmd) return do_biregular(o, out);
        if (*reduce_cmd) return do_reduce(o, out);
        if (*lift_cmd) return do_lift(o, out);
        if (*extract_cmd) return do_extract(o, out);
        if (*verify_cmd) return do_gadget_verify(o, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}

}  // namespace lb2p::cli
