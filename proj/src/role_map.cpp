#include "lb2p/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>

namespace lb2p {

namespace {

using Kind = Role::Kind;
using Key = std::tuple<Kind, std::size_t, std::size_t>;
constexpr std::size_t none = static_cast<std::size_t>(-1);

Key key_of(const Role& r) { return {r.kind, r.first, r.second.value_or(none)}; }

char tag_of(Kind k) {
    switch (k) {
        case Kind::P: return 'p';
        case Kind::Q: return 'q';
        case Kind::V: return 'v';
        case Kind::G: return 'g';
        case Kind::Y: return 'y';
        case Kind::Z: return 'z';
        case Kind::B: return 'b';
    }
    return '?';
}

std::string describe(const Key& k) {
    std::string s(1, tag_of(std::get<0>(k)));
    s += "(" + std::to_string(std::get<1>(k));
    if (std::get<2>(k) != none) s += "," + std::to_string(std::get<2>(k));
    return s + ")";
}

class Lookup {
public:
    explicit Lookup(const std::map<Key, Vertex>& index) : index_(index) {}
    Vertex operator()(Kind kind, std::size_t first, std::size_t second = none) {
        const Key k{kind, first, second};
        auto it = index_.find(k);
        if (it == index_.end()) {
            if (!missing) missing = describe(k);
            return 0;
        }
        ++hits;
        return it->second;
    }
    std::optional<std::string> missing;
    std::size_t hits = 0;

private:
    const std::map<Key, Vertex>& index_;
};

std::size_t expected_vertices(const ReductionArtifact& art) {
    const auto n = art.instance.variable_count(), k = art.instance.clause_count();
    switch (art.target) {
        case ReductionTarget::Biregular: return n + 2 * art.r * k;
        case ReductionTarget::Even: return make_gadget(GadgetId::F1).graph.vertex_count() * n + 3 * k;
        case ReductionTarget::Subcubic: return make_gadget(GadgetId::Forcing).graph.vertex_count() * n + k;
        case ReductionTarget::Odd: return make_gadget(GadgetId::Forcing).graph.vertex_count() * n + 10 * k;
    }
    return 0;
}

}  // namespace

std::optional<std::string> role_map_mismatch(const ReductionArtifact& art) {
    const auto& inst = art.instance;
    if (art.roles.size() != art.graph.vertex_count()) return "role map does not cover every vertex";
    if (art.roles.size() != expected_vertices(art)) return "vertex count does not fit the target";

    std::map<Key, Vertex> index;
    for (Vertex v = 0; v < art.roles.size(); ++v)
        if (!index.emplace(key_of(art.roles[v]), v).second)
            return "role " + describe(key_of(art.roles[v])) + " appears twice";

    // Occurrence slots follow clause order, independently of the constructor.
    std::vector<std::size_t> seen(inst.variable_count(), 0);
    std::vector<std::array<std::size_t, 3>> occ(inst.clause_count());
    for (std::size_t j = 0; j < inst.clause_count(); ++j)
        for (std::size_t s = 0; s < 3; ++s) occ[j][s] = seen[inst.clauses()[j][s]]++;

    Lookup at(index);
    std::vector<Edge> expected;
    auto add = [&](Vertex a, Vertex b) { expected.push_back(std::minmax(a, b)); };

    if (art.target != ReductionTarget::Biregular) {
        const auto g = make_gadget(art.target == ReductionTarget::Even ? GadgetId::F1 : GadgetId::Forcing);
        for (std::size_t i = 0; i < inst.variable_count(); ++i) {
            auto local = [&](Vertex u) {
                auto it = std::find(g.inputs.begin(), g.inputs.end(), u);
                return it != g.inputs.end() ? at(Kind::P, i, static_cast<std::size_t>(it - g.inputs.begin()))
                                            : at(Kind::G, i, u);
            };
            for (Vertex u = 0; u < g.graph.vertex_count(); ++u) local(u);
            for (const auto& [a, b] : g.graph.edges()) add(local(a), local(b));
        }
    }
    const auto f4 = make_gadget(GadgetId::F4);
    for (std::size_t j = 0; j < inst.clause_count(); ++j) {
        const auto& c = inst.clauses()[j];
        switch (art.target) {
            case ReductionTarget::Biregular:
                for (std::size_t l = 0; l < 2 * art.r; ++l)
                    for (auto i : c) add(at(Kind::P, i), at(Kind::Q, j, l));
                break;
            case ReductionTarget::Even: {
                const Vertex v = at(Kind::V, j);
                for (std::size_t l = 0; l < 2; ++l) {
                    const Vertex q = at(Kind::Q, j, l);
                    add(q, v);
                    for (std::size_t s = 0; s < 3; ++s) add(at(Kind::P, c[s], occ[j][s]), q);
                }
                break;
            }
            case ReductionTarget::Subcubic:
            case ReductionTarget::Odd: {
                const Vertex q = at(Kind::Q, j);
                for (std::size_t s = 0; s < 3; ++s) add(at(Kind::P, c[s], occ[j][s]), q);
                if (art.target == ReductionTarget::Subcubic) break;
                auto local = [&](Vertex u) {
                    const std::size_t slot = u / 3;
                    const Kind kinds[3] = {Kind::Y, Kind::Z, Kind::B};
                    return at(kinds[u % 3], j, slot);
                };
                for (Vertex u = 0; u < f4.graph.vertex_count(); ++u) local(u);
                for (const auto& [a, b] : f4.graph.edges()) add(local(a), local(b));
                for (std::size_t s = 0; s < 3; ++s) add(at(Kind::P, c[s], occ[j][s]), local(f4.inputs[s]));
                break;
            }
        }
    }
    if (art.target == ReductionTarget::Biregular)
        for (std::size_t i = 0; i < inst.variable_count(); ++i) at(Kind::P, i);
    if (at.missing) return "construction needs role " + *at.missing + ", which is absent";

    std::sort(expected.begin(), expected.end());
    if (std::adjacent_find(expected.begin(), expected.end()) != expected.end())
        return "construction rules produce a repeated edge";
    const auto actual = art.graph.edges();
    if (expected != actual) {
        std::vector<Edge> diff;
        std::set_symmetric_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                                      std::back_inserter(diff));
        const auto& [a, b] = diff.front();
        const bool extra = std::binary_search(actual.begin(), actual.end(), diff.front());
        return "edge " + std::to_string(a) + "-" + std::to_string(b) +
               (extra ? " is not derivable from the role map" : " is required by the role map but absent");
    }
    return std::nullopt;
}

std::string summarize(const ReductionArtifact& art) {
    const auto cls = classify(art.graph);
    std::ostringstream out;
    out << art.graph.vertex_count() << " vertices";
    if (art.target == ReductionTarget::Biregular) {
        if (cls.biregular) out << " (" << cls.biregular->first << ',' << cls.biregular->second << ")-biregular";
        return out.str();
    }
    if (cls.is_even) out << " even";
    if (cls.is_odd) out << " odd";
    if (bipartition(art.graph)) out << " bipartite";
    out << " max-degree " << cls.max_degree;
    return out.str();
}

std::string write_roles(const ReductionArtifact& art) {
    std::ostringstream out;
    out << "lb2p-roles 1\n";
    out << "target " << to_string(art.target);
    if (art.target == ReductionTarget::Biregular) out << ' ' << art.r;
    out << "\ninstance " << art.instance.variable_count() << ' ' << art.instance.clause_count() << '\n';
    for (const auto& c : art.instance.clauses())
        out << "clause " << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << '\n';
    out << "vertices " << art.roles.size() << '\n';
    for (Vertex v = 0; v < art.roles.size(); ++v) {
        const auto& r = art.roles[v];
        out << v << ' ' << tag_of(r.kind) << ' ' << r.first + 1;
        if (r.second) out << ' ' << (r.kind == Kind::G ? *r.second : *r.second + 1);
        out << '\n';
    }
    return out.str();
}

namespace {

struct LineReader {
    std::istringstream in;
    std::size_t line_no = 0;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("roles line " + std::to_string(line_no) + ": " + what);
    }

    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::vector<std::string> tok;
            for (std::string t; ls >> t;) tok.push_back(t);
            if (!tok.empty()) return tok;
        }
        ++line_no;
        fail("unexpected end of document");
    }

    std::size_t number(const std::string& token) const {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) fail("expected a number, got \"" + token + "\"");
        return v;
    }

    std::size_t one_based(const std::string& token) const {
        const auto v = number(token);
        if (v == 0) fail("indices are 1-based");
        return v - 1;
    }
};

}  // namespace

ReductionArtifact read_roles(std::string_view text, const Graph& graph) {
    LineReader rd(text);
    auto tok = rd.next();
    if (tok.size() != 2 || tok[0] != "lb2p-roles" || tok[1] != "1") rd.fail("expected \"lb2p-roles 1\"");

    tok = rd.next();
    if (tok.size() < 2 || tok[0] != "target") rd.fail("expected \"target <name> [r]\"");
    ReductionTarget target;
    try {
        target = parse_target(tok[1]);
    } catch (const std::invalid_argument& e) {
        rd.fail(e.what());
    }
    std::size_t r = 0;
    if (target == ReductionTarget::Biregular) {
        if (tok.size() != 3) rd.fail("bireg target needs r");
        r = rd.number(tok[2]);
        if (r == 0) rd.fail("r must be at least 1");
    } else if (tok.size() != 2) {
        rd.fail("only the bireg target takes r");
    }

    tok = rd.next();
    if (tok.size() != 3 || tok[0] != "instance") rd.fail("expected \"instance <n> <k>\"");
    const auto n = rd.number(tok[1]), k = rd.number(tok[2]);
    std::vector<Clause> clauses;
    for (std::size_t j = 0; j < k; ++j) {
        tok = rd.next();
        if (tok.size() != 4 || tok[0] != "clause") rd.fail("expected \"clause <a> <b> <c>\"");
        clauses.push_back({rd.one_based(tok[1]), rd.one_based(tok[2]), rd.one_based(tok[3])});
    }
    std::optional<NaeInstance> inst;
    try {
        inst.emplace(n, std::move(clauses));
    } catch (const NaeFormatError& e) {
        rd.fail(e.what());
    }

    tok = rd.next();
    if (tok.size() != 2 || tok[0] != "vertices") rd.fail("expected \"vertices <N>\"");
    const auto count = rd.number(tok[1]);
    std::vector<Role> roles;
    for (std::size_t v = 0; v < count; ++v) {
        tok = rd.next();
        if (tok.size() < 3 || tok.size() > 4 || rd.number(tok[0]) != v || tok[1].size() != 1)
            rd.fail("expected \"" + std::to_string(v) + " <tag> <i> [<j>]\"");
        Role role{Kind::P, rd.one_based(tok[2]), std::nullopt};
        switch (tok[1][0]) {
            case 'p': role.kind = Kind::P; break;
            case 'q': role.kind = Kind::Q; break;
            case 'v': role.kind = Kind::V; break;
            case 'g': role.kind = Kind::G; break;
            case 'y': role.kind = Kind::Y; break;
            case 'z': role.kind = Kind::Z; break;
            case 'b': role.kind = Kind::B; break;
            default: rd.fail("unknown role tag \"" + tok[1] + "\"");
        }
        if (tok.size() == 4) role.second = role.kind == Kind::G ? rd.number(tok[3]) : rd.one_based(tok[3]);
        roles.push_back(role);
    }
    std::string rest;
    std::getline(rd.in, rest, '\0');
    if (rest.find_first_not_of(" \t\r\n") != std::string::npos) rd.fail("trailing content after vertex records");

    ReductionArtifact art{target, r, std::move(*inst), graph, std::move(roles)};
    if (auto why = role_map_mismatch(art)) throw std::runtime_error("role map does not match the graph: " + *why);
    return art;
}

}  // namespace lb2p
