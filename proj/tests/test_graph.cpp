#include <catch_amalgamated.hpp>

#include <random>

#include "lexpath/graph.hpp"
#include "lexpath/grid.hpp"
#include "oracles.hpp"

using namespace lexpath;

namespace {
LabelledGraph random_graph(int n, double density, std::mt19937& rng, bool labels = false) {
    LabelledGraph g(n);
    std::bernoulli_distribution edge(density);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng)) g.add_edge(a, b);
    if (labels) {
        std::vector<int> lab;
        for (int v = 0; v < n; ++v) lab.push_back(int(rng() % 2));
        g.set_labels(std::move(lab));
    }
    return g;
}
}  // namespace

TEST_CASE("distances and diameter") {
    LabelledGraph p4 = path_graph(4);
    auto d = distance_matrix(p4);
    CHECK(d[0][3] == 3);
    CHECK(d[1][1] == 0);

    LabelledGraph two(2);
    CHECK(distance_matrix(two)[0][1] == kUnreachable);
    CHECK_FALSE(diameter(two).has_value());

    CHECK(diameter(complete_graph(5)) == 1);

    GridWindow g2 = congruence_window(2, 3, 6);
    auto dd = bfs_distances(g2.graph, {g2.index_of(0, 0)});
    CHECK(dd[size_t(g2.index_of(1, 0))] == 2);
}

TEST_CASE("distance invariants on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        LabelledGraph g = random_graph(2 + int(rng() % 10), 0.4, rng);
        auto d = distance_matrix(g);
        for (int a = 0; a < g.size(); ++a)
            for (int b = 0; b < g.size(); ++b) {
                CHECK((d[a][b] == 1) == g.adjacent(a, b));
                CHECK(d[a][b] == d[b][a]);
                for (int c = 0; c < g.size(); ++c)
                    if (d[a][b] >= 0 && d[b][c] >= 0) {
                        REQUIRE(d[a][c] >= 0);
                        CHECK(d[a][c] <= d[a][b] + d[b][c]);
                    }
            }
    }
}

TEST_CASE("balls") {
    LabelledGraph p5 = path_graph(5);
    CHECK(ball(p5, {2}, 0) == std::vector<int>{2});
    CHECK(ball(p5, {2}, 1) == std::vector<int>{1, 2, 3});

    GridWindow g2 = congruence_window(2, 3, 6);
    auto b = ball(g2.graph, {g2.index_of(0, 0)}, 1);
    std::vector<int> expected{g2.index_of(0, 0), g2.index_of(0, 1)};
    for (int row = 1; row < 3; ++row)
        for (long col = 1; col < 6; col += 2) expected.push_back(g2.index_of(row, col));
    std::sort(expected.begin(), expected.end());
    CHECK(b == expected);
}

TEST_CASE("induced path enumeration") {
    CHECK(induced_paths(path_graph(5), 4).size() == 1);
    CHECK(induced_paths(cycle_graph(6), 4).size() == 6);
    CHECK(oracles::count_induced_paths_brute(cycle_graph(6), 4) == 6);

    for (int n : {3, 5, 8})
        for (int m = 1; m < n + 2; ++m)
            CHECK(long(induced_paths(path_graph(n), m).size()) == std::max(0, n - m));

    CHECK(induced_paths(path_graph(8), 2, 3).size() == 3);  // limit stops the stream

    // every yielded sequence passes the induced-path invariant, appears once,
    // in lexicographic order, smaller endpoint first
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        LabelledGraph g = random_graph(9, 0.35, rng);
        for (int len = 2; len <= 4; ++len) {
            auto paths = induced_paths(g, len);
            CHECK(long(paths.size()) == oracles::count_induced_paths_brute(g, len));
            std::vector<std::vector<int>> seqs;
            for (const auto& p : paths) {
                CHECK(is_induced_path(g, p.vertices));
                CHECK(p.vertices.front() < p.vertices.back());
                seqs.push_back(p.vertices);
            }
            CHECK(std::is_sorted(seqs.begin(), seqs.end()));
            CHECK(std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end());
        }
    }
}

TEST_CASE("detour") {
    CHECK(detour(path_graph(7)) == 6);
    CHECK(detour(cycle_graph(5)) == 3);
    CHECK(oracles::detour_brute(cycle_graph(5)) == 3);
    CHECK(detour(complete_graph(4)) == 1);
    LabelledGraph edgeless(4);
    CHECK(detour(edgeless) == 0);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        LabelledGraph g = random_graph(8, 0.3, rng);
        CHECK(detour(g) == oracles::detour_brute(g));
    }
}

TEST_CASE("embedding search agrees with the all-injections oracle") {
    CHECK(find_embedding(path_graph(3), path_graph(4)).has_value());

    // sanity probe against small windows, both verdict directions
    for (int k : {2, 3}) {
        LabelledGraph host = congruence_window(k, 2, 5).graph;
        LabelledGraph c4 = cycle_graph(4);
        auto got = find_embedding(c4, host);
        CHECK(got.has_value() == oracles::embedding_exists_brute(c4, host, false));
        if (got) CHECK(embedding_valid(c4, host, *got, false));
    }

    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 120; ++trial) {
        bool labels = trial % 3 == 0;
        LabelledGraph pattern = random_graph(1 + int(rng() % 5), 0.45, rng, labels);
        LabelledGraph host = random_graph(4 + int(rng() % 6), 0.45, rng, labels);
        auto got = find_embedding(pattern, host, labels);
        CHECK(got.has_value() == oracles::embedding_exists_brute(pattern, host, labels));
        if (got) CHECK(embedding_valid(pattern, host, *got, labels));
    }
}

TEST_CASE("modules and closures") {
    // complete sum of two 3-vertex paths: each summand is a module
    LabelledGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    for (int a : {0, 1, 2})
        for (int b : {3, 4, 5}) g.add_edge(a, b);

    CHECK(minimal_module_containing(g, 0, 1) == std::vector<int>{0, 1, 2});
    CHECK(is_module(g, {0, 1, 2}));
    auto p = is_prime(g);
    CHECK(p.verdict == PrimalityCheck::Verdict::non_prime);
    REQUIRE(p.witness.has_value());
    CHECK(*p.witness == std::vector<int>{0, 1, 2});
    CHECK(is_module(g, *p.witness));

    // the path on four vertices is prime
    LabelledGraph p4 = path_graph(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            CHECK(minimal_module_containing(p4, a, b).size() == 4);
    CHECK(is_prime(p4).prime());

    CHECK(is_prime(path_graph(3)).verdict == PrimalityCheck::Verdict::too_small);
}

TEST_CASE("pairwise closures are modules and minimal, prime implies induced P4") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        LabelledGraph g = random_graph(4 + int(rng() % 5), 0.5, rng);
        for (int a = 0; a < g.size(); ++a)
            for (int b = a + 1; b < g.size(); ++b) {
                auto m = minimal_module_containing(g, a, b);
                CHECK(is_module(g, m));
                CHECK(oracles::pair_module_is_minimal_brute(g, m, a, b));
            }
        if (is_prime(g).prime()) CHECK(find_embedding(path_graph(4), g).has_value());
    }
}

TEST_CASE("second projection window: early rows are a module") {
    Word u = sturmian_word(SturmianDirective{{1, 1, 1, 1, 1, 1}}, 10);
    GridWindow w = build_window(u, projection_table(Projection::Second), 4, 10);
    for (int k : {1, 2}) {
        std::vector<int> m;
        for (int v = 0; v < w.graph.size(); ++v)
            if (w.coord_of(v).first <= k) m.push_back(v);
        CHECK(is_module(w.graph, m));
        auto closure = minimal_module_containing(w.graph, w.index_of(0, 0), w.index_of(k, 0));
        for (int v : closure) CHECK(w.coord_of(v).first <= k);
    }
}

TEST_CASE("path forest recognition") {
    LabelledGraph g(12);
    for (int i = 0; i + 1 < 3; ++i) g.add_edge(i, i + 1);
    for (int i = 3; i + 1 < 11; ++i) g.add_edge(i, i + 1);
    auto r = is_disjoint_union_of_paths(g);
    CHECK(r.is_path_forest);
    CHECK(r.component_lengths == std::vector<int>{0, 2, 7});

    CHECK_FALSE(is_disjoint_union_of_paths(cycle_graph(4)).is_path_forest);

    GridWindow q3 = build_window(periodic_word(3, 8), congruence_table(3),
                                 staircase_intervals(3));
    CHECK_FALSE(is_disjoint_union_of_paths(q3.graph).is_path_forest);

    GridWindow zero = build_window(periodic_word(2, 8), constant_table(2, 0), 3, 8);
    auto rz = is_disjoint_union_of_paths(zero.graph);
    CHECK(rz.is_path_forest);
    CHECK(rz.component_lengths == std::vector<int>{7, 7, 7});
}

TEST_CASE("isometric subsets") {
    LabelledGraph c6 = cycle_graph(6);
    CHECK(isometric_check(c6, {0, 1, 2, 3}));
    CHECK_FALSE(isometric_check(c6, {0, 1, 2, 3, 4}));
    CHECK(isometric_check(c6, {2}));

    LabelledGraph grid = grid_graph(5, 5);
    std::vector<int> row;
    for (int c = 0; c < 5; ++c) row.push_back(2 * 5 + c);
    CHECK(isometric_check(grid, row));
}

TEST_CASE("graphic distance never exceeds the longest induced path between a pair") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        LabelledGraph g = random_graph(8, 0.45, rng);
        auto d = distance_matrix(g);
        // per-pair supremum of induced connecting paths, by enumeration
        std::vector<std::vector<int>> longest(size_t(g.size()),
                                              std::vector<int>(size_t(g.size()), -1));
        for (int len = 1; len < g.size(); ++len)
            enumerate_induced_paths(g, len, [&](const InducedPath& p) {
                int a = p.vertices.front(), b = p.vertices.back();
                longest[size_t(a)][size_t(b)] = std::max(longest[size_t(a)][size_t(b)], len);
                longest[size_t(b)][size_t(a)] = longest[size_t(a)][size_t(b)];
                return true;
            });
        for (int a = 0; a < g.size(); ++a)
            for (int b = 0; b < g.size(); ++b)
                if (d[a][b] > 0) {
                    REQUIRE(longest[size_t(a)][size_t(b)] >= 1);  // a geodesic is induced
                    CHECK(d[a][b] <= longest[size_t(a)][size_t(b)]);
                }
    }
}
