#include "rainbow/builders.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace rainbow {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
    }
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycles need at least 3 vertices");
    }
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) {
        g.add_edge(0, i);
    }
    return g;
}

Graph double_star(int p, int q) {
    if (p < 1 || q < 1) {
        throw std::invalid_argument("double star needs p, q >= 1");
    }
    Graph g(2 + p + q);
    g.add_edge(0, 1);
    for (int i = 0; i < p; ++i) {
        g.add_edge(0, 2 + i);
    }
    for (int i = 0; i < q; ++i) {
        g.add_edge(1, 2 + p + i);
    }
    return g;
}

Graph build_spider(int k) {
    if (k < 2) {
        throw std::invalid_argument("spider needs k >= 2 legs");
    }
    Graph g(3 * k + 1);
    for (int i = 1; i <= k; ++i) {
        g.add_edge(0, 3 * i - 2);
        g.add_edge(3 * i - 2, 3 * i - 1);
        g.add_edge(3 * i - 1, 3 * i);
    }
    return g;
}

GadgetKind GadgetKind::o3(int k) {
    if (k < 3) {
        throw std::invalid_argument("operation O3 needs a spider with k >= 3");
    }
    return GadgetKind(Tag::O3, k);
}

GadgetKind GadgetKind::spider_attach(int k) {
    if (k < 2) {
        throw std::invalid_argument("spider attachment needs k >= 2");
    }
    return GadgetKind(Tag::SpiderAttach, k);
}

GadgetKind GadgetKind::k14(int item, int k) {
    switch (item) {
        case 1: return GadgetKind(Tag::K14_1);
        case 2: return GadgetKind(Tag::K14_2);
        case 3: return GadgetKind(Tag::K14_3);
        case 4: return GadgetKind(Tag::K14_4);
        case 5: return GadgetKind(Tag::K14_5);
        case 6:
            if (k < 3) {
                throw std::invalid_argument("pendant-edge gadget needs k >= 3");
            }
            return GadgetKind(Tag::K14_6, k);
        case 7: return GadgetKind(Tag::K14_7);
        default: throw std::invalid_argument("non-stable gadget item must be in 1..7");
    }
}

GadgetKind GadgetKind::parse(const std::string& name, int k) {
    if (name == "o1") return o1();
    if (name == "o2") return o2();
    if (name == "o3") return o3(k);
    if (name == "k12") return k12_path();
    if (name == "k13") return k13_path();
    if (name == "spider") return spider_attach(k);
    if (name.size() == 5 && name.rfind("k14-", 0) == 0 && name[4] >= '1' && name[4] <= '7') {
        return k14(name[4] - '0', k);
    }
    throw std::invalid_argument("unknown gadget kind '" + name + "'");
}

int GadgetKind::added_vertices() const noexcept {
    switch (tag_) {
        case Tag::O1:
        case Tag::K12Path:
        case Tag::K14_1: return 3;
        case Tag::O2: return 7;
        case Tag::O3:
        case Tag::SpiderAttach: return 3 * k_ + 1;
        case Tag::K13Path:
        case Tag::K14_3:
        case Tag::K14_7: return 5;
        case Tag::K14_2:
        case Tag::K14_4: return 4;
        case Tag::K14_5: return 7;
        case Tag::K14_6: return k_;
    }
    return 0;
}

std::string GadgetKind::name() const {
    switch (tag_) {
        case Tag::O1: return "o1";
        case Tag::O2: return "o2";
        case Tag::O3: return "o3(k=" + std::to_string(k_) + ")";
        case Tag::K12Path: return "k12";
        case Tag::K13Path: return "k13";
        case Tag::SpiderAttach: return "spider(k=" + std::to_string(k_) + ")";
        case Tag::K14_1: return "k14-1";
        case Tag::K14_2: return "k14-2";
        case Tag::K14_3: return "k14-3";
        case Tag::K14_4: return "k14-4";
        case Tag::K14_5: return "k14-5";
        case Tag::K14_6: return "k14-6(k=" + std::to_string(k_) + ")";
        case Tag::K14_7: return "k14-7";
    }
    return "?";
}

namespace {

// Appends labeled vertices in order and wires edges by label; "x" names the attachment vertex.
class GadgetWriter {
public:
    GadgetWriter(const Graph& base, Vertex x) : result_{base, {}}, x_(x) {}

    void vertices(std::initializer_list<std::string> labels) {
        for (const auto& label : labels) {
            vertex(label);
        }
    }
    void vertex(const std::string& label) { result_.names[label] = result_.graph.add_vertices(1); }
    void edge(const std::string& a, const std::string& b) { result_.graph.add_edge(id(a), id(b)); }
    void path(std::initializer_list<std::string> labels) {
        const std::vector<std::string> seq(labels);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            edge(seq[i], seq[i + 1]);
        }
    }
    void spider(int k) {
        vertex("v1");
        for (int i = 1; i <= k; ++i) {
            const auto sup = "^" + std::to_string(i);
            vertex("v1" + sup);
            vertex("v2" + sup);
            vertex("v3" + sup);
            edge("v1", "v1" + sup);
            edge("v1" + sup, "v2" + sup);
            edge("v2" + sup, "v3" + sup);
        }
    }
    GadgetResult finish() && { return std::move(result_); }

private:
    Vertex id(const std::string& label) const { return label == "x" ? x_ : result_.names.at(label); }

    GadgetResult result_;
    Vertex x_;
};

}  // namespace

GadgetResult attach_gadget(const Graph& g, Vertex x, const GadgetKind& kind) {
    if (!g.contains(x)) {
        throw std::out_of_range("attachment vertex " + std::to_string(x) + " out of range");
    }
    using Tag = GadgetKind::Tag;
    GadgetWriter w(g, x);
    switch (kind.tag()) {
        case Tag::O1:
        case Tag::K12Path:
            w.vertices({"v1", "v2", "v3"});
            w.path({"v2", "v1", "v3"});
            w.edge("x", "v1");
            break;
        case Tag::O2:
            w.vertices({"v1", "v2", "v3", "v4", "v5", "v6", "v7"});
            w.path({"v4", "v3", "v2", "v1", "v5", "v6", "v7"});
            w.edge("x", "v1");
            break;
        case Tag::O3:
        case Tag::SpiderAttach:
            w.spider(kind.k());
            w.edge("x", "v1");
            break;
        case Tag::K13Path:
            w.vertices({"v1", "v2", "v3", "v4", "v5"});
            w.path({"v5", "v4", "v3", "v2", "v1"});
            w.edge("x", "v4");
            break;
        case Tag::K14_1:
            w.vertices({"v1", "v2", "v"});
            w.edge("v2", "v1");
            w.edge("x", "v2");
            w.edge("x", "v");
            break;
        case Tag::K14_2:
            w.vertices({"v1", "v2", "v1'", "v2'"});
            w.edge("v1", "v2");
            w.edge("v1'", "v2'");
            w.edge("x", "v2");
            w.edge("x", "v2'");
            break;
        case Tag::K14_3:
            w.vertices({"v1", "v2", "u1", "u2", "u3"});
            w.edge("v1", "v2");
            w.path({"u1", "u2", "u3"});
            w.edge("x", "v2");
            w.edge("x", "u3");
            break;
        case Tag::K14_4:
            w.vertices({"u1", "u2", "u3", "u4"});
            w.path({"u1", "u2", "u3", "u4"});
            w.edge("x", "u4");
            break;
        case Tag::K14_5:
            w.vertices({"v1", "v2", "v3", "u1", "u2", "u3", "w"});
            w.path({"v1", "v2", "v3"});
            w.path({"u1", "u2", "u3"});
            w.edge("x", "w");
            w.edge("x", "v3");
            w.edge("x", "u3");
            break;
        case Tag::K14_6:
            for (int i = 1; i <= kind.k(); ++i) {
                w.vertex("v" + std::to_string(i));
                w.edge("x", "v" + std::to_string(i));
            }
            break;
        case Tag::K14_7:
            w.vertices({"u1", "u2", "u3", "u4", "u5"});
            w.path({"u1", "u2", "u3", "u4", "u5"});
            w.edge("x", "u4");
            break;
    }
    return std::move(w).finish();
}

}  // namespace rainbow
