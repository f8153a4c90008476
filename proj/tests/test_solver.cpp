#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracle.hpp"
#include "rainbow/builders.hpp"
#include "rainbow/error.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/trees.hpp"

using namespace rainbow;

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g = a;
    const Vertex offset = g.add_vertices(b.order());
    for (const Edge& e : b.edges()) {
        g.add_edge(e.u + offset, e.v + offset);
    }
    return g;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

std::vector<int> masks_of(const ColorConstraint& c, int n) {
    std::vector<int> m;
    for (Vertex v = 0; v < n; ++v) {
        m.push_back(c.allowed(v));
    }
    return m;
}

void check_against_oracle(const Graph& g, const ColorConstraint& c) {
    const auto expected = oracle::solve(g, masks_of(c, g.order()));
    const auto brute = gamma_bruteforce(g, c);
    const auto general = gamma(g, c);
    REQUIRE(brute.weight == expected.weight);
    REQUIRE(general.weight == expected.weight);
    if (expected.weight) {
        const RainbowAssignment first(std::vector<Color>(expected.optima.front().begin(), expected.optima.front().end()));
        CHECK(*brute.witness == first);
        CHECK(*general.witness == first);
    }
    if (is_forest(g)) {
        const auto dp = gamma_tree_dp(g, c);
        CHECK(dp.weight == expected.weight);
        if (expected.weight) {
            CHECK(dp.witness->to_string() == brute.witness->to_string());
        }
    }
}

}  // namespace

TEST_SUITE("solver") {
    TEST_CASE("assignment parsing and validity") {
        const Graph p3 = path_graph(3);
        CHECK(is_2ridf(p3, RainbowAssignment::parse("102")));
        CHECK_FALSE(is_2ridf(p3, RainbowAssignment::parse("101")));
        CHECK_FALSE(is_2ridf(Graph(1), RainbowAssignment::parse("0")));
        CHECK_FALSE(is_2ridf(path_graph(2), RainbowAssignment::parse("11")));
        CHECK_THROWS_AS(is_2ridf(p3, RainbowAssignment::parse("10")), std::invalid_argument);
        CHECK_THROWS(RainbowAssignment::parse("103"));
        const auto f = RainbowAssignment::parse("1020");
        CHECK(f.weight() == 2);
        CHECK(f.vertices_with(0) == std::vector<Vertex>{1, 3});
        CHECK(f.to_string() == "1020");
    }

    TEST_CASE("known values") {
        CHECK(gamma_bruteforce(path_graph(7)).weight == 4);
        CHECK(gamma_bruteforce(cycle_graph(5)).weight == 4);
        CHECK(gamma_bruteforce(Graph(1)).weight == 1);
        CHECK(gamma_tree_dp(build_spider(3)).weight == 6);
        CHECK(gamma_tree_dp(path_graph(20)).weight == 11);
        CHECK(gamma_tree_dp(subdivision(star_graph(3))).weight == 4);
        CHECK(gamma(disjoint_union(Graph(1), path_graph(2))).weight == 3);
        CHECK(gamma(cycle_graph(4)).weight == 2);
        CHECK(gamma(star_graph(4)).weight == 4);
        CHECK(gamma_number(Graph()) == 0);
        CHECK(gamma(Graph(3)).witness->to_string() == "111");
    }

    TEST_CASE("path and cycle formulas") {
        for (int n = 1; n <= 30; ++n) {
            CHECK(gamma_number(path_graph(n)) == (n + 2) / 2);
        }
        for (int n = 3; n <= 22; ++n) {
            const int expected = (n + 1) / 2 + ((n % 4 == 1 || n % 4 == 2) ? 1 : 0);
            CHECK(gamma_number(cycle_graph(n)) == expected);
        }
    }

    TEST_CASE("minimum functions") {
        const auto p3 = enumerate_min_functions(path_graph(3));
        REQUIRE(p3.size() == 2);
        CHECK(p3[0].to_string() == "102");
        CHECK(p3[1].to_string() == "201");
        const auto k2 = enumerate_min_functions(path_graph(2));
        REQUIRE(k2.size() == 2);
        CHECK(k2[0].to_string() == "12");
        CHECK(k2[1].to_string() == "21");
        const auto k1 = enumerate_min_functions(Graph(1));
        REQUIRE(k1.size() == 2);
        CHECK(k1[0].to_string() == "1");
        CHECK(k1[1].to_string() == "2");
        CHECK_THROWS_AS(enumerate_min_functions(path_graph(16)), CapExceeded);
    }

    TEST_CASE("minimum functions match the oracle") {
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& t : enumerate_free_trees(n)) {
                const auto expected = oracle::solve(t);
                const auto got = enumerate_min_functions(t);
                REQUIRE(got.size() == expected.optima.size());
                for (std::size_t i = 0; i < got.size(); ++i) {
                    CHECK(std::vector<int>(got[i].colors().begin(), got[i].colors().end()) == expected.optima[i]);
                }
            }
        }
    }

    TEST_CASE("zero set") {
        CHECK(w_zero(build_spider(3)) == std::vector<Vertex>{0, 2, 5, 8});
        CHECK(w_zero(path_graph(3)) == std::vector<Vertex>{1});
        CHECK(w_zero(path_graph(2)).empty());
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 40; ++trial) {
            const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
            const auto optima = oracle::solve(g).optima;
            std::vector<Vertex> expected;
            for (Vertex v = 0; v < g.order(); ++v) {
                bool zero = true;
                for (const auto& f : optima) {
                    zero = zero && f[static_cast<std::size_t>(v)] == 0;
                }
                if (zero) {
                    expected.push_back(v);
                }
            }
            CHECK(w_zero(g) == expected);
        }
    }

    TEST_CASE("independent domination") {
        CHECK(independent_domination(star_graph(3)) == 1);
        CHECK(independent_domination(path_graph(4)) == 2);
        CHECK(independent_domination(cycle_graph(5)) == 2);
        CHECK(independent_domination(Graph()) == 0);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 60; ++trial) {
            const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.35);
            CHECK(independent_domination(g) == oracle::independent_domination(g));
        }
        CHECK_THROWS_AS(independent_domination(path_graph(20)), CapExceeded);
    }

    TEST_CASE("all trees up to order 8 under constraints") {
        std::mt19937_64 rng(17);
        for (int n = 1; n <= 8; ++n) {
            for (const Graph& t : enumerate_free_trees(n)) {
                check_against_oracle(t, {});
                ColorConstraint forced(n);
                forced.force(static_cast<Vertex>(rng() % n), static_cast<Color>(rng() % 3));
                check_against_oracle(t, forced);
                ColorConstraint forbidden(n);
                forbidden.forbid(static_cast<Vertex>(rng() % n), static_cast<Color>(rng() % 3));
                check_against_oracle(t, forbidden);
            }
        }
    }

    TEST_CASE("random graphs against the oracle") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 150; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 9);
            const Graph g = random_graph(rng, n, trial % 2 == 0 ? 0.3 : 0.5);
            ColorConstraint c(n);
            if (trial % 3 == 1) {
                c.force(static_cast<Vertex>(rng() % n), static_cast<Color>(rng() % 3));
            } else if (trial % 3 == 2) {
                c.restrict(static_cast<Vertex>(rng() % n), kPositive);
            }
            check_against_oracle(g, c);
        }
    }

    TEST_CASE("frontier engine agrees with exhaustive search") {
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 150; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 10);
            const Graph g = random_graph(rng, n, 0.3);
            ColorConstraint c(n);
            if (trial % 2 == 1) {
                c.force(static_cast<Vertex>(rng() % n), static_cast<Color>(rng() % 3));
            }
            const auto exhaustive = gamma(g, c);
            const auto frontier = gamma(g, c, 0);
            REQUIRE(frontier.weight == exhaustive.weight);
            if (frontier.witness) {
                CHECK(*frontier.witness == *exhaustive.witness);
            }
        }
        CHECK(gamma_number(cycle_graph(20), 0) == 10);
        CHECK(gamma_number(cycle_graph(30)) == 16);
    }

    TEST_CASE("witness validity and constraints") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 12);
            const Graph g = trial % 2 == 0 ? random_tree(n, rng) : random_graph(rng, n, 0.3);
            ColorConstraint c(n);
            c.force(static_cast<Vertex>(rng() % n), static_cast<Color>(rng() % 3));
            const auto out = gamma(g, c);
            if (out.feasible()) {
                CHECK(is_2ridf(g, *out.witness));
                CHECK(c.satisfied_by(*out.witness));
                CHECK(out.witness->weight() == *out.weight);
                CHECK(*out.weight >= gamma_number(g));
            }
        }
    }

    TEST_CASE("disjoint additivity") {
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 50; ++trial) {
            const Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.4);
            const Graph b = random_tree(1 + static_cast<int>(rng() % 9), rng);
            CHECK(gamma_number(disjoint_union(a, b)) == gamma_number(a) + gamma_number(b));
        }
    }

    TEST_CASE("infeasible constraints") {
        ColorConstraint c(1);
        c.force(0, 0);
        CHECK_FALSE(gamma(Graph(1), c).feasible());
        CHECK_FALSE(gamma_tree_dp(Graph(1), c).feasible());
        CHECK_FALSE(gamma_bruteforce(Graph(1), c).feasible());
        CHECK_THROWS(ColorConstraint(2).force(0, 1).force(0, 2));
        CHECK_THROWS_AS(gamma(path_graph(3), ColorConstraint(2)), std::invalid_argument);
    }

    TEST_CASE("caps and errors") {
        CHECK_THROWS_AS(gamma_bruteforce(path_graph(16)), CapExceeded);
        CHECK(gamma_bruteforce(path_graph(16), {}, 16).weight == 9);
        CHECK_THROWS_AS(gamma_tree_dp(cycle_graph(4)), NotATree);
        CHECK_NOTHROW(gamma_tree_dp(disjoint_union(path_graph(3), path_graph(4))));
        Graph big(34);
        for (Vertex v = 0; v < 34; ++v) {
            big.add_edge(v, (v + 1) % 34);
        }
        CHECK_THROWS_AS(gamma(big), CapExceeded);
        CHECK(gamma_number(path_graph(200)) == 101);
    }
}
