#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coveralg/hypergraph.hpp"
#include "testutil.hpp"

using namespace coveralg;

TEST_CASE("normalize_clutter: superset removal, dedupe, canonical order") {
    Hypergraph h = normalize_clutter({{1, 2}, {1, 2, 3}}, 3);
    CHECK(h.edges == std::vector<std::vector<int>>{{1, 2}});

    Hypergraph q = normalize_clutter({{3, 4, 5}, {2, 4, 6}, {1, 5, 6}, {1, 2, 3}}, 6);
    CHECK(q.edges == testutil::q6().edges);

    Hypergraph single = normalize_clutter({{1}, {1}}, 1);
    CHECK(single.edges == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("normalize_clutter: rejections") {
    CHECK_THROWS_AS(normalize_clutter({{}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(normalize_clutter({{1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(normalize_clutter({{1, 5}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(normalize_clutter({{0, 1}}, 2), std::invalid_argument);
}

TEST_CASE("normalize_clutter: idempotent and order-insensitive") {
    std::vector<std::vector<int>> edges{{2, 3}, {1, 2}, {1, 2, 3}, {1, 3}};
    Hypergraph a = normalize_clutter(edges, 3);
    std::reverse(edges.begin(), edges.end());
    Hypergraph b = normalize_clutter(edges, 3);
    CHECK(a == b);
    CHECK(normalize_clutter(a.edges, a.n) == a);
}

TEST_CASE("normalize_clutter: edgeless hypergraph is legal") {
    Hypergraph h = normalize_clutter({}, 4);
    CHECK(h.edge_count() == 0);
    CHECK(blocker(h).edge_count() == 0);
    CHECK(incidence_matrix(h).rows() == 0);
    CHECK(incidence_matrix(h).cols() == 4);
}

TEST_CASE("incidence_matrix: pinned matrices") {
    const IntegerMatrix tri = incidence_matrix(testutil::triangle());
    REQUIRE(tri.rows() == 3);
    REQUIRE(tri.cols() == 3);
    const std::vector<std::vector<Int>> tri_expect{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(tri.at(i, j) == tri_expect[i][j]);

    const IntegerMatrix single = incidence_matrix(normalize_clutter({{1, 2}}, 2));
    REQUIRE(single.rows() == 1);
    CHECK(single.at(0, 0) == 1);
    CHECK(single.at(0, 1) == 1);

    const IntegerMatrix q = incidence_matrix(testutil::q6());
    const std::vector<std::vector<Int>> q_expect{{1, 1, 1, 0, 0, 0},
                                                 {1, 0, 0, 0, 1, 1},
                                                 {0, 1, 0, 1, 0, 1},
                                                 {0, 0, 1, 1, 1, 0}};
    REQUIRE(q.rows() == 4);
    REQUIRE(q.cols() == 6);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(q.at(i, j) == q_expect[i][j]);
}

TEST_CASE("blocker: pinned values") {
    const std::vector<std::vector<int>> q6_blocker{
        {1, 2, 3}, {1, 4}, {1, 5, 6}, {2, 4, 6}, {2, 5}, {3, 4, 5}, {3, 6}};
    CHECK(blocker(testutil::q6()).edges == q6_blocker);

    CHECK(blocker(testutil::cycle4()).edges ==
          std::vector<std::vector<int>>{{1, 3}, {2, 4}});

    CHECK(blocker(normalize_clutter({{1}}, 1)).edges ==
          std::vector<std::vector<int>>{{1}});
}

TEST_CASE("blocker matches the subset-comparison oracle on small clutters") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : testutil::all_clutters(n))
            CHECK(blocker(h).edges == testutil::brute_force_blocker(h));
}

TEST_CASE("blocker is an involution on every clutter with n <= 5") {
    std::size_t count = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& h : testutil::all_clutters(n)) {
            ++count;
            CHECK(blocker(blocker(h)) == h);
        }
    }
    // antichain counts over nonempty subsets: 2 + 5 + 19 + 167 + 7580
    CHECK(count == 7773);
}

TEST_CASE("blocker edges meet every edge, minimally") {
    for (const auto& h : {testutil::triangle(), testutil::cycle4(), testutil::q6()}) {
        for (const auto& cover : blocker(h).edges) {
            for (const auto& e : h.edges) {
                std::vector<int> meet;
                std::set_intersection(cover.begin(), cover.end(), e.begin(), e.end(),
                                      std::back_inserter(meet));
                CHECK(!meet.empty());
            }
            // dropping any vertex must expose some uncovered edge
            for (int dropped : cover) {
                bool still_covers = true;
                for (const auto& e : h.edges) {
                    bool hit = false;
                    for (int v : cover)
                        if (v != dropped &&
                            std::binary_search(e.begin(), e.end(), v))
                            hit = true;
                    if (!hit) still_covers = false;
                }
                CHECK_FALSE(still_covers);
            }
        }
    }
}

TEST_CASE("odd alternating chain: triangle") {
    auto chain = find_odd_alternating_chain(testutil::triangle());
    REQUIRE(chain.has_value());
    CHECK(chain->vertices.size() == 3);
    CHECK(is_valid_chain(testutil::triangle(), *chain));
}

TEST_CASE("odd alternating chain: absent cases") {
    CHECK_FALSE(find_odd_alternating_chain(testutil::cycle4()));
    CHECK_FALSE(find_odd_alternating_chain(normalize_clutter({{1, 2}}, 2)));
}

TEST_CASE("odd alternating chain: q6 has one") {
    auto chain = find_odd_alternating_chain(testutil::q6());
    REQUIRE(chain.has_value());
    CHECK(is_valid_chain(testutil::q6(), *chain));
}

TEST_CASE("is_bipartite_graph") {
    CHECK(is_bipartite_graph(testutil::cycle4()) == true);
    CHECK(is_bipartite_graph(testutil::triangle()) == false);
    CHECK_FALSE(is_bipartite_graph(testutil::q6()).has_value());
    CHECK(is_bipartite_graph(normalize_clutter({}, 3)) == true);
}

TEST_CASE("graphs: bipartite <=> no odd chain <=> TU incidence (n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : testutil::connected_graphs(n)) {
            const auto bip = is_bipartite_graph(g);
            REQUIRE(bip.has_value());
            const bool no_chain = !find_odd_alternating_chain(g).has_value();
            const bool tu = is_totally_unimodular(incidence_matrix(g));
            CHECK(*bip == no_chain);
            CHECK(*bip == tu);
        }
    }
}
