#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "tga/cages.hpp"
#include "tga/girth.hpp"
#include "tga/node_set.hpp"
#include "tga/transforms.hpp"

using namespace tga;

namespace {

// Independent girth oracle: the shortest cycle through edge e = (u, v) has
// length 1 + dist(u, v) in the graph with one instance of e deleted. Runs a
// BFS per edge, so it shares no code path with the per-node search under test.
int oracle_girth(const GeneralGraph& g) {
    int best = kInfiniteGirth;
    auto edge_list = g.edges();
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = edge_list[i];
        if (u == v) {
            return 1;
        }
        std::vector<std::vector<int>> adj(g.node_count());
        for (std::size_t j = 0; j < edge_list.size(); ++j) {
            if (j == i) {
                continue;
            }
            adj[edge_list[j].first].push_back(edge_list[j].second);
            adj[edge_list[j].second].push_back(edge_list[j].first);
        }
        std::vector<int> dist(g.node_count(), -1);
        std::deque<int> queue{u};
        dist[u] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[v] >= 0 && dist[v] + 1 < best) {
            best = dist[v] + 1;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("girth of fixed graphs") {
    CHECK(girth(cycle_graph(6)) == 6);
    CHECK(girth(cycle_graph(3)) == 3);
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(heawood_graph()) == 6);
    CHECK(girth(pg2_3_incidence_graph()) == 6);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(complete_bipartite_graph(3, 3)) == 4);

    GeneralGraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(girth(path) == kInfiniteGirth);
    CHECK(girth(GeneralGraph(5)) == kInfiniteGirth);

    GeneralGraph loop(2);
    loop.add_edge(0, 0);
    CHECK(girth(loop) == 1);

    GeneralGraph doubled(2);
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK(girth(doubled) == 2);
}

TEST_CASE("girth of Tanner graphs is even") {
    CHECK(girth(testutil::tanner_cycle(4)) == 8);
    CHECK(girth(testutil::tanner_cycle(3)) == 6);

    TannerGraph edge(2, 1);
    edge.add_edge(0, 0);
    edge.add_edge(1, 0);
    CHECK(girth(edge) == kInfiniteGirth);

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        auto t = testutil::random_tanner(rng, 2 + trial % 5, 2 + trial % 4, 0.45);
        int g = girth(t);
        CHECK(g == oracle_girth(t.to_general()));
        if (g != kInfiniteGirth) {
            CHECK(g % 2 == 0);
            CHECK(g >= 4);
        }
    }
}

TEST_CASE("girth matches brute-force oracle on random graphs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> size(2, 12);
    const double probs[] = {0.15, 0.3, 0.5};
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testutil::random_simple_graph(rng, size(rng), probs[trial % 3]);
        if (trial % 5 == 4 && g.edge_count() > 0) {
            auto e = g.edges()[trial % g.edge_count()];
            g.add_edge(e.first, e.second);  // parallel edge
        }
        if (trial % 7 == 6) {
            g.add_edge(0, 0);  // self-loop
        }
        CHECK(girth(g) == oracle_girth(g));
    }
}

TEST_CASE("bfs_distances") {
    auto c6 = cycle_graph(6);
    auto d = bfs_distances(c6, 0);
    CHECK(d == std::vector<int>{0, 1, 2, 3, 2, 1});
    auto capped = bfs_distances(c6, 0, 1);
    CHECK(capped == std::vector<int>{0, 1, -1, -1, -1, 1});

    GeneralGraph two(3);
    two.add_edge(0, 1);
    CHECK(bfs_distances(two, 0) == std::vector<int>{0, 1, -1});
}

TEST_CASE("TannerGraph basics") {
    TannerGraph g(3, 2);
    g.add_edge(0, 0);
    g.add_edge(1, 0);
    g.add_edge(2, 1);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(1, 1));
    CHECK(g.edge_index_in_check(0, 1) == 1);
    CHECK(g.edge_index_in_check(1, 1) == -1);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);

    CHECK(g.var_regularity() == 1);
    CHECK(!g.check_regularity().has_value());
    CHECK(g.max_check_degree() == 2);

    auto general = g.to_general();
    CHECK(general.node_count() == 5);
    CHECK(general.edge_count() == 3);
    CHECK(general.degree(3) == 2);  // check 0 lives at node var_count + 0

    auto cycle = testutil::tanner_cycle(4);
    CHECK(cycle.var_regularity() == 2);
    CHECK(cycle.check_regularity() == 2);
}

TEST_CASE("TannerGraph::from_adjacency validates both sides") {
    auto g = TannerGraph::from_adjacency({{1, 0}, {1}}, {{0}, {0, 1}});
    CHECK(g.edge_count() == 3);
    CHECK(g.var_neighbors(0) == std::vector<int>{1, 0});
    CHECK(g.check_neighbors(1) == std::vector<int>{0, 1});

    CHECK_THROWS_AS(TannerGraph::from_adjacency({{0}}, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(TannerGraph::from_adjacency({{0, 0}}, {{0}}), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
    auto cycle = testutil::tanner_cycle(4);

    SUBCASE("empty set gives empty graph") {
        auto sub = induced_subgraph(cycle, {});
        CHECK(sub.graph.var_count() == 0);
        CHECK(sub.graph.check_count() == 0);
        CHECK(sub.graph.edge_count() == 0);
    }

    SUBCASE("full variable set reproduces the graph") {
        auto sub = induced_subgraph(cycle, {0, 1, 2, 3});
        CHECK(sub.graph.var_count() == 4);
        CHECK(sub.graph.check_count() == 4);
        CHECK(sub.graph.edge_count() == 8);
        CHECK(girth(sub.graph) == 8);
    }

    SUBCASE("single variable of a 3-left-regular graph gives a star") {
        auto host = edge_vertex_incidence(heawood_graph()).graph;
        REQUIRE(host.var_regularity() == 3);
        auto sub = induced_subgraph(host, {0});
        CHECK(sub.graph.var_count() == 1);
        CHECK(sub.graph.check_count() == 3);
        CHECK(sub.graph.var_degree(0) == 3);
        for (int c = 0; c < 3; ++c) {
            CHECK(sub.graph.check_degree(c) == 1);
        }
    }

    SUBCASE("index maps point back at host edges") {
        auto host = edge_vertex_incidence(petersen_graph()).graph;
        NodeSet vars{1, 4, 6, 9};
        auto sub = induced_subgraph(host, vars);
        CHECK(sub.var_to_host == std::vector<int>{1, 4, 6, 9});
        int edges_in_host = 0;
        for (int c = 0; c < host.check_count(); ++c) {
            for (int v : host.check_neighbors(c)) {
                edges_in_host += node_set_contains(vars, v);
            }
        }
        CHECK(sub.graph.edge_count() == edges_in_host);
        for (int v = 0; v < sub.graph.var_count(); ++v) {
            for (int c : sub.graph.var_neighbors(v)) {
                CHECK(host.has_edge(sub.var_to_host[v], sub.check_to_host[c]));
            }
        }
        // every included check really meets the set
        for (int c = 0; c < sub.graph.check_count(); ++c) {
            CHECK(sub.graph.check_degree(c) >= 1);
        }
    }

    SUBCASE("out-of-range variable throws") {
        CHECK_THROWS_AS(induced_subgraph(cycle, {7}), std::out_of_range);
    }
}

TEST_CASE("reduced graph removes pendant checks") {
    SUBCASE("no pendants: unchanged") {
        auto cycle = testutil::tanner_cycle(4);
        auto red = reduced_graph(cycle);
        CHECK(red.pendant_checks_removed == 0);
        CHECK(red.graph.check_count() == 4);
        CHECK(red.graph.edge_count() == 8);
    }

    SUBCASE("star collapses to a bare variable") {
        TannerGraph star(1, 3);
        for (int c = 0; c < 3; ++c) {
            star.add_edge(0, c);
        }
        auto red = reduced_graph(star);
        CHECK(red.graph.var_count() == 1);
        CHECK(red.graph.check_count() == 0);
        CHECK(red.graph.edge_count() == 0);
        CHECK(red.pendant_checks_removed == 3);
    }

    SUBCASE("8-cycle with one pendant per variable reduces to the cycle") {
        // 4 variables of degree 3: two cycle checks plus one pendant each.
        TannerGraph h(4, 8);
        for (int i = 0; i < 4; ++i) {
            h.add_edge(i, i);
            h.add_edge(i, (i + 1) % 4);
            h.add_edge(i, 4 + i);
        }
        auto red = reduced_graph(h);
        CHECK(red.pendant_checks_removed == 4);
        CHECK(red.graph.check_count() == 4);
        CHECK(red.graph.edge_count() == h.edge_count() - 4);
        CHECK(girth(red.graph) == 8);
        CHECK(red.check_to_host == std::vector<int>{0, 1, 2, 3});
    }
}

TEST_CASE("gamma augment") {
    SUBCASE("already regular graphs are unchanged") {
        auto cycle = testutil::tanner_cycle(5);
        auto aug = gamma_augment(cycle, 2);
        CHECK(aug.check_count() == 5);
        CHECK(aug.edge_count() == 10);
    }

    SUBCASE("8-cycle raised to gamma=4") {
        auto aug = gamma_augment(testutil::tanner_cycle(4), 4);
        CHECK(aug.var_count() == 4);
        CHECK(aug.check_count() == 12);
        CHECK(aug.var_regularity() == 4);
        for (int c = 4; c < 12; ++c) {
            CHECK(aug.check_degree(c) == 1);
        }
        // pendants appended in variable order
        CHECK(aug.check_neighbors(4)[0] == 0);
        CHECK(aug.check_neighbors(5)[0] == 0);
        CHECK(aug.check_neighbors(10)[0] == 3);
        // originals untouched
        CHECK(aug.check_neighbors(0) == testutil::tanner_cycle(4).check_neighbors(0));
    }

    SUBCASE("isolated variable becomes a star") {
        TannerGraph lone(1, 0);
        auto aug = gamma_augment(lone, 3);
        CHECK(aug.check_count() == 3);
        CHECK(aug.var_degree(0) == 3);
    }

    SUBCASE("variable above gamma throws") {
        CHECK_THROWS_AS(gamma_augment(testutil::tanner_cycle(4), 1), std::invalid_argument);
    }

    SUBCASE("never changes girth") {
        std::mt19937 rng(77);
        for (int trial = 0; trial < 20; ++trial) {
            auto t = testutil::random_tanner(rng, 3 + trial % 4, 3 + trial % 3, 0.4);
            int gamma = t.max_var_degree() + 1 + trial % 2;
            CHECK(girth(gamma_augment(t, gamma)) == girth(t));
        }
    }
}

TEST_CASE("edge-vertex incidence") {
    SUBCASE("5-cycle becomes the Tanner 10-cycle") {
        auto ev = edge_vertex_incidence(cycle_graph(5));
        CHECK(ev.graph.var_count() == 5);
        CHECK(ev.graph.check_count() == 5);
        CHECK(ev.graph.check_regularity() == 2);
        CHECK(girth(ev.graph) == 10);
    }

    SUBCASE("single edge") {
        GeneralGraph g(2);
        g.add_edge(0, 1);
        auto ev = edge_vertex_incidence(g);
        CHECK(ev.graph.var_count() == 2);
        CHECK(ev.graph.check_count() == 1);
        CHECK(ev.graph.check_degree(0) == 2);
        CHECK(ev.check_to_edge[0] == std::pair<int, int>{0, 1});
    }

    SUBCASE("Petersen graph") {
        auto ev = edge_vertex_incidence(petersen_graph());
        CHECK(ev.graph.var_count() == 10);
        CHECK(ev.graph.check_count() == 15);
        CHECK(ev.graph.var_regularity() == 3);
        CHECK(ev.graph.check_regularity() == 2);
        CHECK(girth(ev.graph) == 10);
        CHECK(ev.graph.edge_count() == 30);
    }

    SUBCASE("girth doubles") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 25; ++trial) {
            auto g = testutil::random_simple_graph(rng, 3 + trial % 8, 0.4);
            int base = girth(g);
            int doubled = girth(edge_vertex_incidence(g).graph);
            if (base == kInfiniteGirth) {
                CHECK(doubled == kInfiniteGirth);
            } else {
                CHECK(doubled == 2 * base);
            }
        }
    }

    SUBCASE("self-loops rejected") {
        GeneralGraph g(1);
        g.add_edge(0, 0);
        CHECK_THROWS_AS(edge_vertex_incidence(g), std::invalid_argument);
    }
}

TEST_CASE("inverse edge-vertex incidence") {
    SUBCASE("Tanner 10-cycle returns to the 5-cycle") {
        auto inv = inverse_edge_vertex_incidence(testutil::tanner_cycle(5));
        CHECK(inv.graph.node_count() == 5);
        CHECK(inv.graph.edge_count() == 5);
        CHECK(girth(inv.graph) == 5);
        CHECK(inv.pendant_checks_ignored == 0);
        CHECK(inv.collapsed_parallel_edges == 0);
    }

    SUBCASE("star maps to an isolated node") {
        TannerGraph star(1, 3);
        for (int c = 0; c < 3; ++c) {
            star.add_edge(0, c);
        }
        auto inv = inverse_edge_vertex_incidence(star);
        CHECK(inv.graph.node_count() == 1);
        CHECK(inv.graph.edge_count() == 0);
        CHECK(inv.pendant_checks_ignored == 3);
    }

    SUBCASE("round trip from any graph under every root rule") {
        std::mt19937 rng(555);
        for (int trial = 0; trial < 25; ++trial) {
            auto g = testutil::random_simple_graph(rng, 2 + trial % 9, 0.45);
            auto ev = edge_vertex_incidence(g);
            for (auto rule : {RootRule::lowest_index, RootRule::highest_index,
                              RootRule::first_listed}) {
                auto inv = inverse_edge_vertex_incidence(ev.graph, rule);
                CHECK(inv.graph.node_count() == g.node_count());
                CHECK(inv.graph.edges() == g.edges());
            }
        }
    }

    SUBCASE("edge count identity against the reduced graph") {
        std::mt19937 rng(808);
        for (int trial = 0; trial < 20; ++trial) {
            auto t = testutil::random_tanner(rng, 3 + trial % 5, 3 + trial % 4, 0.5);
            auto red = reduced_graph(t);
            auto inv = inverse_edge_vertex_incidence(t);
            // degree-0 checks survive reduction but contribute no edges
            int active = 0;
            for (int c = 0; c < red.graph.check_count(); ++c) {
                active += red.graph.check_degree(c) >= 2;
            }
            CHECK(inv.pendant_checks_ignored == red.pendant_checks_removed);
            CHECK(inv.graph.edge_count() + inv.collapsed_parallel_edges ==
                  red.graph.edge_count() - active);
            int gh = girth(t);
            if (gh != kInfiniteGirth && inv.collapsed_parallel_edges == 0) {
                CHECK(girth(inv.graph) >= gh / 2);
            }
        }
    }

    SUBCASE("duplicate variable pairs collapse and are counted") {
        TannerGraph h(2, 2);
        h.add_edge(0, 0);
        h.add_edge(1, 0);
        h.add_edge(0, 1);
        h.add_edge(1, 1);
        auto inv = inverse_edge_vertex_incidence(h);
        CHECK(inv.graph.edge_count() == 1);
        CHECK(inv.collapsed_parallel_edges == 1);
    }

    SUBCASE("root rules pick different edges on a degree-3 check") {
        TannerGraph h(3, 1);
        h.add_edge(2, 0);
        h.add_edge(0, 0);
        h.add_edge(1, 0);
        auto low = inverse_edge_vertex_incidence(h, RootRule::lowest_index);
        CHECK(low.graph.edges() ==
              std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
        auto high = inverse_edge_vertex_incidence(h, RootRule::highest_index);
        CHECK(high.graph.edges() ==
              std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
        auto first = inverse_edge_vertex_incidence(h, RootRule::first_listed);
        CHECK(first.graph.edges() ==
              std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    }
}

TEST_CASE("cage constructions are what they claim") {
    auto p = petersen_graph();
    CHECK(p.node_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.is_regular(3));

    auto h = heawood_graph();
    CHECK(h.node_count() == 14);
    CHECK(h.edge_count() == 21);
    CHECK(h.is_regular(3));

    auto pg = pg2_3_incidence_graph();
    CHECK(pg.node_count() == 26);
    CHECK(pg.edge_count() == 52);
    CHECK(pg.is_regular(4));

    auto k66 = complete_bipartite_graph(6, 6);
    CHECK(k66.is_regular(6));
    CHECK(girth(k66) == 4);
}
