#include <doctest.h>

#include <stdexcept>

#include "rainbow/builders.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/trees.hpp"

using namespace rainbow;

TEST_SUITE("builders") {
    TEST_CASE("basic families") {
        CHECK(path_graph(0).order() == 0);
        CHECK(path_graph(5).size() == 4);
        CHECK(cycle_graph(5).size() == 5);
        CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
        CHECK(star_graph(4).degree(0) == 4);
        const Graph ds = double_star(2, 3);
        CHECK(ds.order() == 7);
        CHECK(ds.has_edge(0, 1));
        CHECK(ds.degree(0) == 3);
        CHECK(ds.degree(1) == 4);
        CHECK(trees_isomorphic(double_star(1, 1), path_graph(4)));
        CHECK_THROWS_AS(double_star(0, 2), std::invalid_argument);
    }

    TEST_CASE("spiders") {
        const Graph s2 = build_spider(2);
        CHECK(s2.order() == 7);
        CHECK(s2.degree(0) == 2);
        const Graph s3 = build_spider(3);
        CHECK(s3.order() == 10);
        CHECK(metrics(s3).leaves.size() == 3);
        for (int i = 1; i <= 3; ++i) {
            CHECK(s3.has_edge(0, 3 * i - 2));
            CHECK(s3.has_edge(3 * i - 2, 3 * i - 1));
            CHECK(s3.has_edge(3 * i - 1, 3 * i));
        }
        CHECK_THROWS_AS(build_spider(1), std::invalid_argument);
    }

    TEST_CASE("the o2 gadget is a two-legged spider hanging from its head") {
        const auto r = attach_gadget(Graph(1), 0, GadgetKind::o2());
        const Graph without_x = remove_vertex(r.graph, 0).graph;
        CHECK(trees_isomorphic(without_x, build_spider(2)));
        CHECK(r.names.at("v1") == 1);
        CHECK(r.graph.has_edge(0, r.names.at("v1")));
        CHECK(r.graph.degree(r.names.at("v1")) == 3);
    }

    TEST_CASE("gadget shapes") {
        const Graph p3 = path_graph(3);
        const auto k12 = attach_gadget(p3, 1, GadgetKind::k12_path());
        CHECK(k12.graph.order() == 6);
        CHECK(is_tree(k12.graph));
        CHECK(k12.graph.has_edge(1, k12.names.at("v1")));
        CHECK(k12.graph.degree(k12.names.at("v1")) == 3);

        const auto o1 = attach_gadget(p3, 1, GadgetKind::o1());
        CHECK(trees_isomorphic(o1.graph, double_star(2, 2)));
        CHECK(attach_gadget(p3, 0, GadgetKind::o1()).graph.order() == 6);

        const auto k13 = attach_gadget(p3, 0, GadgetKind::k13_path());
        CHECK(k13.graph.has_edge(0, k13.names.at("v4")));
        CHECK(k13.graph.order() == 8);

        const auto spider = attach_gadget(Graph(1), 0, GadgetKind::spider_attach(3));
        CHECK(spider.graph.order() == 11);
        CHECK(spider.names.at("v3^2") == 1 + 6);

        struct Shape {
            int item;
            int added;
            int attach_degree;
        };
        for (const auto& s : {Shape{1, 3, 2}, Shape{2, 4, 2}, Shape{3, 5, 2}, Shape{4, 4, 1}, Shape{5, 7, 3},
                              Shape{6, 3, 3}, Shape{7, 5, 1}}) {
            const auto kind = GadgetKind::k14(s.item);
            CHECK(kind.added_vertices() == s.added);
            const auto r = attach_gadget(Graph(1), 0, kind);
            CHECK(r.graph.order() == 1 + s.added);
            CHECK(r.graph.degree(0) == s.attach_degree);
            CHECK(is_tree(r.graph));
        }
        const auto k14_1 = attach_gadget(Graph(1), 0, GadgetKind::k14(1));
        CHECK(k14_1.graph.has_edge(0, k14_1.names.at("v")));
        CHECK(k14_1.graph.has_edge(k14_1.names.at("v1"), k14_1.names.at("v2")));
        const auto k14_7 = attach_gadget(Graph(1), 0, GadgetKind::k14(7));
        CHECK(k14_7.graph.has_edge(0, k14_7.names.at("u4")));
        CHECK(attach_gadget(Graph(1), 0, GadgetKind::k14(6, 5)).graph.degree(0) == 5);
    }

    TEST_CASE("gadget parameters and parsing") {
        CHECK_THROWS_AS(GadgetKind::o3(2), std::invalid_argument);
        CHECK_THROWS_AS(GadgetKind::spider_attach(1), std::invalid_argument);
        CHECK_THROWS_AS(GadgetKind::k14(6, 2), std::invalid_argument);
        CHECK_THROWS_AS(GadgetKind::k14(8), std::invalid_argument);
        CHECK_THROWS_AS(attach_gadget(Graph(2), 2, GadgetKind::o1()), std::out_of_range);
        CHECK(GadgetKind::parse("o3", 4) == GadgetKind::o3(4));
        CHECK(GadgetKind::parse("k14-6", 5) == GadgetKind::k14(6, 5));
        CHECK(GadgetKind::parse("spider", 2) == GadgetKind::spider_attach(2));
        CHECK(GadgetKind::parse("k12", 0) == GadgetKind::k12_path());
        CHECK_THROWS(GadgetKind::parse("o4", 3));
    }

    TEST_CASE("gadgets keep existing vertex ids") {
        const Graph base = cycle_graph(4);
        const Graph grown = attach_gadget(base, 2, GadgetKind::k13_path()).graph;
        for (const Edge& e : base.edges()) {
            CHECK(grown.has_edge(e.u, e.v));
        }
        CHECK(grown.size() == base.size() + 5);
    }
}
