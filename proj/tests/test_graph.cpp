#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracle.hpp"
#include "rainbow/builders.hpp"
#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/trees.hpp"

using namespace rainbow;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph out(g.order());
    for (const Edge& e : g.edges()) {
        out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    }
    return out;
}

std::vector<Vertex> shuffled(int n, std::mt19937_64& rng) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = i;
    }
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (rng() % 2) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("edges are normalized and validated") {
        CHECK(Edge(3, 1) == Edge(1, 3));
        CHECK(Edge(3, 1).u == 1);
        CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
        Graph g(3);
        g.add_edge(0, 2);
        CHECK(g.has_edge(2, 0));
        CHECK_THROWS(g.add_edge(2, 0));
        CHECK_THROWS(g.add_edge(1, 1));
        CHECK_THROWS(g.add_edge(0, 3));
        CHECK(g.size() == 1);
        CHECK(g.degree(1) == 0);
        CHECK(g.add_vertices(2) == 3);
        CHECK(g.order() == 5);
    }

    TEST_CASE("neighbor lists stay sorted and symmetric") {
        Graph g(5);
        g.add_edge(4, 2);
        g.add_edge(0, 2);
        g.add_edge(2, 3);
        const auto nb = g.neighbors(2);
        CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 3, 4});
        for (const Edge& e : g.edges()) {
            CHECK(g.has_edge(e.v, e.u));
        }
    }

    TEST_CASE("vertex removal relabels densely") {
        const auto r = remove_vertex(path_graph(3), 1);
        CHECK(r.graph.order() == 2);
        CHECK(r.graph.size() == 0);
        CHECK(r.old_to_new == std::vector<Vertex>{0, -1, 1});

        CHECK(trees_isomorphic(remove_vertex(star_graph(3), 2).graph, star_graph(2)));
        for (Vertex v = 0; v < 4; ++v) {
            CHECK(trees_isomorphic(remove_vertex(cycle_graph(4), v).graph, path_graph(3)));
        }
        CHECK_THROWS_AS(remove_vertex(path_graph(3), 3), std::out_of_range);
        const Vertex both[] = {0, 2, 2};
        CHECK(remove_vertices(path_graph(4), both).graph == Graph(2));
    }

    TEST_CASE("edge removal") {
        const Graph g = remove_edge(path_graph(3), Edge(0, 1));
        CHECK(g.order() == 3);
        CHECK(connected_components(g).size() == 2);
        CHECK(trees_isomorphic(remove_edge(cycle_graph(4), Edge(0, 3)), path_graph(4)));
        CHECK(remove_edge(path_graph(2), Edge(0, 1)).size() == 0);
        CHECK_THROWS_AS(remove_edge(path_graph(3), Edge(0, 2)), std::invalid_argument);
    }

    TEST_CASE("subdivision") {
        CHECK(trees_isomorphic(subdivision(path_graph(2)), path_graph(3)));
        CHECK(trees_isomorphic(subdivision(path_graph(3)), path_graph(5)));
        const Graph s = subdivision(star_graph(3));
        CHECK(s.order() == 7);
        CHECK(s.degree(0) == 3);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            const Graph g = random_graph(1 + static_cast<int>(rng() % 8), rng);
            const Graph sub = subdivision(g);
            CHECK(sub.order() == g.order() + g.size());
            CHECK(sub.size() == 2 * g.size());
            for (Vertex w = g.order(); w < sub.order(); ++w) {
                CHECK(sub.degree(w) == 2);
            }
        }
    }

    TEST_CASE("metrics") {
        const auto p5 = metrics(path_graph(5));
        CHECK(p5.diameter == 4);
        CHECK_FALSE(p5.girth.has_value());
        CHECK(p5.leaves.size() == 2);
        const auto c6 = metrics(cycle_graph(6));
        CHECK(c6.diameter == 3);
        CHECK(c6.girth == 6);
        CHECK(c6.leaves.empty());
        const auto star = metrics(star_graph(4));
        CHECK(star.diameter == 2);
        CHECK(star.leaves.size() == 4);
        CHECK(star.degrees[0] == 4);

        Graph forest(5);
        forest.add_edge(0, 1);
        forest.add_edge(2, 3);
        forest.add_edge(3, 4);
        const auto m = metrics(forest);
        CHECK_FALSE(m.diameter.has_value());
        CHECK(m.component_diameters == std::vector<int>{1, 2});
        CHECK(m.components.size() == 2);
        CHECK_FALSE(metrics(Graph()).diameter.has_value());
    }

    TEST_CASE("removing a tree vertex leaves a forest of trees") {
        for (int n = 1; n <= 8; ++n) {
            for (const Graph& t : enumerate_free_trees(n)) {
                for (Vertex v = 0; v < n; ++v) {
                    const Graph f = remove_vertex(t, v).graph;
                    CHECK(is_forest(f));
                    for (const auto& comp : connected_components(f)) {
                        CHECK(is_tree(induced_subgraph(f, comp)));
                    }
                }
            }
        }
    }
}

TEST_SUITE("graph6") {
    TEST_CASE("known encodings") {
        CHECK(emit_graph6(Graph()) == "?");
        CHECK(emit_graph6(Graph(1)) == "@");
        CHECK(emit_graph6(Graph(2)) == "A?");
        CHECK(emit_graph6(path_graph(2)) == "A_");
        CHECK(emit_graph6(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}})) == "Bg");
        CHECK(emit_graph6(cycle_graph(3)) == "Bw");
        CHECK(parse_graph6("A?") == Graph(2));
        CHECK(parse_graph6("Bw") == cycle_graph(3));
        CHECK(parse_graph6("Bg\n") == path_graph(3));
        CHECK(parse_graph6("Bg\r\n") == path_graph(3));
    }

    TEST_CASE("round trip over all trees up to order 8 and random graphs") {
        for (int n = 1; n <= 8; ++n) {
            for (const Graph& t : enumerate_free_trees(n)) {
                CHECK(parse_graph6(emit_graph6(t)) == t);
            }
        }
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 300; ++trial) {
            const Graph g = random_graph(static_cast<int>(rng() % 9), rng);
            CHECK(parse_graph6(emit_graph6(g)) == g);
        }
        const Graph c5 = parse_graph6(emit_graph6(cycle_graph(5)));
        CHECK(c5.size() == 5);
    }

    TEST_CASE("long order form") {
        for (int n : {62, 63, 64, 100}) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(n));
            const Graph g = random_graph(n, rng);
            const auto text = emit_graph6(g);
            CHECK((n <= 62) == (text[0] != '~'));
            CHECK(parse_graph6(text) == g);
        }
    }

    TEST_CASE("malformed input is rejected") {
        CHECK_THROWS_AS(parse_graph6(""), ParseError);
        CHECK_THROWS_AS(parse_graph6(">>graph6<<Bg"), ParseError);
        CHECK_THROWS_AS(parse_graph6(":Bg"), ParseError);
        CHECK_THROWS_AS(parse_graph6("B"), ParseError);
        CHECK_THROWS_AS(parse_graph6("Bgg"), ParseError);
        CHECK_THROWS_AS(parse_graph6("Bh"), ParseError);   // padding bits set
        CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);
        CHECK_THROWS_AS(parse_graph6("~??~"), ParseError);  // long form for a short order
    }
}

TEST_SUITE("trees") {
    TEST_CASE("free tree counts") {
        const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
        for (int n = 1; n <= 14; ++n) {
            std::size_t count = 0;
            FreeTreeEnumerator e(n);
            while (e.next()) {
                ++count;
            }
            CHECK(count == expected[static_cast<std::size_t>(n - 1)]);
        }
        std::size_t total = 0;
        for (int n = 1; n <= 10; ++n) {
            total += enumerate_free_trees(n).size();
        }
        CHECK(total == 201);
    }

    TEST_CASE("counts agree with labeled-tree enumeration") {
        for (int n = 1; n <= 8; ++n) {
            CHECK(enumerate_free_trees(n).size() == oracle::count_free_trees(n));
        }
    }

    TEST_CASE("enumerated trees are trees and pairwise non-isomorphic") {
        for (int n = 1; n <= 11; ++n) {
            std::set<std::string> codes;
            for (const Graph& t : enumerate_free_trees(n)) {
                CHECK(is_tree(t));
                CHECK(t.order() == n);
                codes.insert(oracle::tree_code(t));
            }
            CHECK(codes.size() == enumerate_free_trees(n).size());
        }
    }

    TEST_CASE("enumeration is deterministic") {
        const auto a = enumerate_free_trees(9);
        const auto b = enumerate_free_trees(9);
        CHECK(a == b);
    }

    TEST_CASE("isomorphism") {
        CHECK_FALSE(trees_isomorphic(path_graph(4), star_graph(3)));
        std::mt19937_64 rng(3);
        const Graph p4 = path_graph(4);
        CHECK(trees_isomorphic(p4, relabel(p4, shuffled(4, rng))));
        const Graph spider = build_spider(3);
        for (int trial = 0; trial < 20; ++trial) {
            const auto perm = shuffled(spider.order(), rng);
            const Graph moved = relabel(spider, perm);
            CHECK(trees_isomorphic(spider, moved));
            const auto map = forest_isomorphism(spider, moved);
            REQUIRE(map.has_value());
            for (const Edge& e : spider.edges()) {
                CHECK(moved.has_edge((*map)[static_cast<std::size_t>(e.u)], (*map)[static_cast<std::size_t>(e.v)]));
            }
        }
        CHECK_THROWS_AS(forest_canonical_form(cycle_graph(3)), NotATree);
    }

    TEST_CASE("isomorphism agrees with an independent canonical form") {
        std::mt19937_64 rng(17);
        std::vector<Graph> sample;
        for (int trial = 0; trial < 60; ++trial) {
            sample.push_back(random_tree(7, rng));
        }
        for (const Graph& a : sample) {
            CHECK(trees_isomorphic(a, a));
            for (const Graph& b : sample) {
                const bool same = oracle::tree_code(a) == oracle::tree_code(b);
                CHECK(trees_isomorphic(a, b) == same);
                CHECK(forest_isomorphism(a, b).has_value() == same);
            }
        }
    }

    TEST_CASE("forests compare componentwise") {
        Graph a(5);
        a.add_edge(0, 1);
        a.add_edge(2, 3);
        a.add_edge(3, 4);
        Graph b(5);
        b.add_edge(0, 1);
        b.add_edge(1, 2);
        b.add_edge(3, 4);
        CHECK(trees_isomorphic(a, b));
        b = remove_edge(b, Edge(3, 4));
        CHECK_FALSE(trees_isomorphic(a, b));
    }

    TEST_CASE("prufer decoding") {
        CHECK(tree_from_prufer(4, {1, 1}).degree(1) == 3);
        const Graph star = tree_from_prufer(5, {0, 0, 0});
        CHECK(star.degree(0) == 4);
        std::mt19937_64 rng(1);
        for (int n = 1; n <= 12; ++n) {
            CHECK(is_tree(random_tree(n, rng)));
        }
    }

    TEST_CASE("level sequences") {
        const Graph t = tree_from_level_sequence({0, 1, 2, 1});
        CHECK(trees_isomorphic(t, path_graph(4)));
        FreeTreeEnumerator e(5);
        while (auto tree = e.next()) {
            CHECK(tree_from_level_sequence(e.level_sequence()) == *tree);
        }
    }
}
