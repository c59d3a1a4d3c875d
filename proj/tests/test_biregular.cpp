#include "lb2p/biregular.hpp"
#include "lb2p/factor.hpp"
#include "lb2p/solver.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lb2p;

namespace {

bool degrees_within(const MultiGraph& m, const FactorResult& f, std::size_t lo, std::size_t hi) {
    const auto d = f.degrees(m);
    return std::all_of(d.begin(), d.end(), [&](auto x) { return lo <= x && x <= hi; });
}

}  // namespace

TEST_SUITE("factor") {

TEST_CASE("small factor examples") {
    const MultiGraph theta(2, {{0, 1}, {0, 1}, {0, 1}});
    const auto f = kk1_factor(theta, 1);
    CHECK(degrees_within(theta, f, 1, 2));
    const auto subsets = testing::all_degree_bounded_subsets(theta, 1, 2);
    CHECK(subsets.size() == 6);
    CHECK(std::find(subsets.begin(), subsets.end(), f.edges) != subsets.end());

    const auto k4 = testing::complete_multigraph(4);
    CHECK(degrees_within(k4, kk1_factor(k4, 1), 1, 2));
    const auto c4 = MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(degrees_within(c4, kk1_factor(c4, 1), 1, 2));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(kk1_factor(MultiGraph(3, {{0, 1}, {1, 2}}), 1), std::invalid_argument);
    CHECK_THROWS_AS(kk1_factor(testing::complete_multigraph(4), 3), std::invalid_argument);
    CHECK_THROWS_AS(kk1_factor(testing::complete_multigraph(4), 0), std::invalid_argument);
}

TEST_CASE("euler split and search agree with the subset oracle") {
    testing::Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        const std::size_t k = 1 + i % 2, r = 2 * k + 1;
        const std::size_t n = r == 3 ? 2 * (1 + i % 4) : 2 * (1 + i % 3);
        const auto m = testing::random_regular_multigraph(n, r, rng);
        const auto euler = factor_by_euler_split(m);
        CHECK(degrees_within(m, euler, k, k + 1));
        const auto search = factor_by_search(m, k, k + 1);
        REQUIRE(search);
        CHECK(degrees_within(m, *search, k, k + 1));
        if (m.edge_count() <= 16) {
            const auto all = testing::all_degree_bounded_subsets(m, k, k + 1);
            CHECK(std::find(all.begin(), all.end(), euler.edges) != all.end());
            CHECK(std::find(all.begin(), all.end(), search->edges) != all.end());
        }
    }
}

TEST_CASE("search reports infeasible bounds") {
    CHECK_FALSE(factor_by_search(testing::complete_multigraph(3), 1, 1));
    CHECK(factor_by_search(testing::complete_multigraph(4), 1, 1));
}

}

TEST_SUITE("biregular") {

TEST_CASE("validation") {
    const auto k23 = validate_2odd_biregular(testing::complete_bipartite(2, 3));
    REQUIRE(std::holds_alternative<BiregularShape>(k23));
    CHECK(std::get<BiregularShape>(k23).k == 1);
    CHECK(std::get<BiregularShape>(k23).parts.side_x == std::vector<Vertex>{2, 3, 4});

    CHECK(std::holds_alternative<NotApplicable>(validate_2odd_biregular(testing::cycle(6))));
    CHECK(std::holds_alternative<NotApplicable>(validate_2odd_biregular(testing::cycle(5))));
    CHECK(std::holds_alternative<NotApplicable>(validate_2odd_biregular(testing::complete_bipartite(2, 4))));
    CHECK(std::holds_alternative<NotApplicable>(validate_2odd_biregular(Graph(3))));

    const auto sk4 = validate_2odd_biregular(testing::subdivide(testing::complete_multigraph(4)));
    REQUIRE(std::holds_alternative<BiregularShape>(sk4));
    CHECK(std::get<BiregularShape>(sk4).parts.side_x.size() == 6);
}

TEST_CASE("reduced multigraph") {
    const auto k23 = testing::complete_bipartite(2, 3);
    const auto red = build_reduced(k23, std::get<BiregularShape>(validate_2odd_biregular(k23)));
    CHECK(red.graph.vertex_count() == 2);
    CHECK(red.graph.edge_count() == 3);
    CHECK(red.provenance == std::vector<Vertex>{2, 3, 4});

    const auto k4 = testing::complete_multigraph(4);
    const auto sk4 = testing::subdivide(k4);
    const auto red4 = build_reduced(sk4, std::get<BiregularShape>(validate_2odd_biregular(sk4)));
    CHECK(red4.graph.edges() == k4.edges());

    const MultiGraph theta5(2, std::vector<Edge>(5, Edge{0, 1}));
    const auto g = testing::subdivide(theta5);
    const auto shape = std::get<BiregularShape>(validate_2odd_biregular(g));
    CHECK(shape.k == 2);
    CHECK(build_reduced(g, shape).graph.edge_count() == 5);
}

TEST_CASE("witnesses and certificates") {
    const auto k23 = testing::complete_bipartite(2, 3);
    auto res = solve_biregular(k23);
    REQUIRE(std::holds_alternative<TwoPartition>(res));
    const auto& w = std::get<TwoPartition>(res);
    CHECK(w[0] == 1);
    CHECK(w[1] == 0);
    CHECK(check(k23, w, Neighborhood::Open).empty());
    CHECK_FALSE(has_bad_cycle(k23));

    const auto sk4 = testing::subdivide(testing::complete_multigraph(4));
    res = solve_biregular(sk4);
    REQUIRE(std::holds_alternative<CycleCertificate>(res));
    const auto& cert = std::get<CycleCertificate>(res);
    CHECK(cert.cycle.size() == 6);
    CHECK(is_valid_certificate(sk4, cert));
    CHECK(has_bad_cycle(sk4));

    const auto sk33 = testing::subdivide(testing::complete_bipartite_multigraph(3, 3));
    CHECK(std::holds_alternative<TwoPartition>(solve_biregular(sk33)));
    CHECK_FALSE(has_bad_cycle(sk33));

    CHECK(std::holds_alternative<NotApplicable>(solve_biregular(testing::cycle(6))));
    CHECK_THROWS_AS(has_bad_cycle(testing::cycle(6)), std::invalid_argument);
}

TEST_CASE("odd-side balances follow the factor degrees") {
    testing::Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        const auto g = testing::random_2odd_biregular(4, 1 + i % 2, rng);
        const auto res = solve_biregular(g);
        if (!std::holds_alternative<TwoPartition>(res)) continue;
        const auto& w = std::get<TwoPartition>(res);
        const auto shape = std::get<BiregularShape>(validate_2odd_biregular(g));
        const auto report = balance_report(g, w);
        for (Vertex y : shape.parts.side_y) {
            std::size_t selected = 0;
            for (Vertex x : g.neighbors(y)) selected += w[x];
            CHECK(report.open_balance[y] == 2 * static_cast<int>(selected) - static_cast<int>(2 * shape.k + 1));
            CHECK((report.open_balance[y] == 1 || report.open_balance[y] == -1));
        }
    }
}

TEST_CASE("lifting multigraph cycles tracks length mod 4") {
    // A cycle through m odd-side vertices has length 2m.
    const auto k4 = testing::complete_multigraph(4);
    const auto g = testing::subdivide(k4);
    const std::vector<Vertex> triangle{0, 4, 1, 7, 2, 5};  // y0 x01 y1 x12 y2 x02
    CHECK(is_valid_certificate(g, {triangle}));
    const std::vector<Vertex> square{0, 4, 1, 7, 2, 9, 3, 6};
    CHECK_FALSE(is_valid_certificate(g, {square}));
}

TEST_CASE("closed trail extraction") {
    const auto g = testing::subdivide(testing::complete_multigraph(4));
    // K4 edge ids: 0:{0,1} 1:{0,2} 2:{0,3} 3:{1,2} 4:{1,3} 5:{2,3}; x = 4 + id.
    const std::vector<Vertex> square{0, 4, 1, 8, 3, 9, 2, 5};
    CHECK_THROWS_AS(extract_cycle_2mod4(g, square), std::invalid_argument);
    const std::vector<Vertex> broken{0, 4, 1, 8, 3, 9};
    CHECK_THROWS_AS(extract_cycle_2mod4(g, broken), std::invalid_argument);
    const std::vector<Vertex> hexagon{0, 4, 1, 7, 2, 5};
    CHECK(extract_cycle_2mod4(g, hexagon) == hexagon);

    // A triangle and a square of the multigraph glued at vertex 0 lift to a
    // closed trail of length 14 that visits 0 twice; the triangle part keeps
    // the residue.
    const MultiGraph glued(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}});
    const auto h = testing::subdivide(glued);
    const std::vector<Vertex> trail{0, 6, 1, 7, 2, 8, 0, 9, 3, 10, 4, 11, 5, 12};
    CHECK(extract_cycle_2mod4(h, trail) == std::vector<Vertex>{0, 6, 1, 7, 2, 8});
    const std::vector<Vertex> rotated{3, 10, 4, 11, 5, 12, 0, 6, 1, 7, 2, 8, 0, 9};
    const auto cyc = extract_cycle_2mod4(h, rotated);
    CHECK(cyc.size() == 6);
    CHECK(is_valid_certificate(h, {cyc}));
}

TEST_CASE("verdicts agree with the exact oracle") {
    testing::Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        const std::size_t k = 1 + i % 2;
        const std::size_t y = k == 1 ? 2 * (1 + i % 4) : 2 * (1 + i % 2);
        const auto g = testing::random_2odd_biregular(y, k, rng);
        if (g.vertex_count() > 20) continue;
        const bool sat = std::holds_alternative<TwoPartition>(solve_biregular(g));
        CHECK(sat == (brute_force(g, Neighborhood::Open).status == SolveStatus::Sat));
    }
}

}
