#include "lb2p/cli.hpp"
#include "lb2p/graph.hpp"
#include "lb2p/reductions.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = lb2p::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("lb2p-cli-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        const auto p = (dir / name).string();
        std::ofstream(p) << content;
        return p;
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    static std::string slurp(const std::string& p) {
        std::ifstream in(p);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check and solve") {
    Scratch s;
    const auto k2 = s.file("k2.graph", "2 1\n0 1\n");
    const auto part = s.file("part.txt", "01\n");
    auto r = run({"check", "--mode", "closed", k2, part});
    CHECK(r.code == 0);
    CHECK(r.out == "VALID\n");

    const auto same = s.file("same.txt", "00\n");
    r = run({"check", "--mode", "closed", k2, same});
    CHECK(r.code == 1);
    CHECK(r.out == "INVALID 0 1\n");

    const auto c6 = s.file("c6.graph", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    r = run({"solve", "--mode", "open", c6});
    CHECK(r.code == 0);
    CHECK(r.out == "UNSAT\n");
    r = run({"solve", "--mode", "open", "--method", "brute", c6});
    CHECK(r.out == "UNSAT\n");

    const auto c4 = s.file("c4.graph", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    r = run({"solve", "--mode", "open", c4});
    CHECK(r.out == "SAT\n0011\n");
}

TEST_CASE("errors and budget") {
    Scratch s;
    auto r = run({"solve", "--mode", "sideways", "x"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(run({}).code == 2);
    CHECK(run({"solve", "--mode", "open", s.path("missing.graph")}).code == 2);
    const auto bad = s.file("bad.graph", "3 2\n0 1\n0 1\n");
    r = run({"solve", "--mode", "open", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    std::string big = "24 0\n";
    const auto empty24 = s.file("e24.graph", big);
    CHECK(run({"solve", "--mode", "closed", "--budget", "1", empty24}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("biregular") {
    Scratch s;
    const auto k23 = s.file("k23.graph", "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    auto r = run({"biregular", k23});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("SAT\n1", 0) == 0);
    const auto sk4 = s.file("sk4.graph", "10 12\n0 4\n4 1\n0 5\n5 2\n0 6\n6 3\n1 7\n7 2\n1 8\n8 3\n2 9\n9 3\n");
    r = run({"biregular", sk4});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("CERT\n", 0) == 0);
    const auto c6 = s.file("c6.graph", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    r = run({"biregular", c6});
    CHECK(r.code == 2);
    CHECK(r.out.rfind("NOTAPPLICABLE", 0) == 0);
}

TEST_CASE("reduce, lift and extract") {
    Scratch s;
    const auto nae = s.file("inst.nae", "p nae3 3 4\n1 2 3\n1 2 3\n1 2 3\n1 2 3\n");
    const auto assignment = s.file("a.txt", "001\n");
    const auto bad_assignment = s.file("b.txt", "111\n");
    const std::pair<const char*, const char*> targets[] = {
        {"bireg", "11 vertices (3,8)-biregular\n"},
        {"even", "60 vertices even bipartite max-degree 4\n"},
        {"subcubic", "94 vertices bipartite max-degree 3\n"},
        {"odd", "130 vertices odd max-degree 3\n"},
    };
    for (const auto& [target, summary] : targets) {
        INFO(target);
        auto r = run({"reduce", "--target", target, nae});
        CHECK(r.code == 0);
        CHECK(r.out == summary);
        const auto graph = s.path(std::string("inst.") + target + ".graph");
        const auto roles = graph + ".roles";
        const auto text = Scratch::slurp(graph);
        CHECK(lb2p::serialize_graph(lb2p::parse_graph(text)) == text);

        r = run({"lift", graph, roles, assignment});
        CHECK(r.code == 0);
        const auto part = s.file(std::string(target) + ".part", r.out);
        r = run({"extract", graph, roles, part});
        CHECK(r.code == 0);
        CHECK(r.out == "001\n");

        r = run({"lift", graph, roles, bad_assignment});
        CHECK(r.code == 1);
        CHECK(r.out.rfind("INVALID", 0) == 0);

        const auto mode = std::string(target) == "bireg" || std::string(target) == "even" ? "open" : "closed";
        r = run({"check", "--mode", mode, graph, part});
        CHECK(r.out == "VALID\n");
    }
    const auto out = s.path("custom.graph");
    CHECK(run({"reduce", "--target", "bireg", "--r", "2", "-o", out, nae}).out ==
          "19 vertices (3,16)-biregular\n");
    CHECK(fs::exists(out + ".roles"));
    CHECK(run({"reduce", "--target", "bireg", "--r", "0", nae}).code == 2);
    CHECK(run({"lift", out, nae, assignment}).code == 2);
}

TEST_CASE("gadget verify") {
    for (const char* name : {"f1", "f2", "forcing", "f4"}) {
        const auto r = run({"gadget", "verify", "--name", name});
        CHECK(r.code == 0);
        CHECK(r.out == "PASS\n");
    }
    CHECK(run({"gadget", "verify", "--name", "f3"}).code == 2);
}

TEST_CASE("output is deterministic") {
    Scratch s;
    const auto g = s.file("g.graph", "8 9\n0 1\n1 2\n2 3\n3 0\n4 5\n5 6\n6 7\n7 4\n0 4\n");
    const auto a = run({"solve", "--mode", "closed", g});
    const auto b = run({"solve", "--mode", "closed", g});
    CHECK(a.out == b.out);
}

}
