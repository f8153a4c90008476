#pragma once

#include <map>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,leaves}; the center is vertex 0.
Graph star_graph(int leaves);
/// DS_{p,q}: centers 0 and 1, then p leaves on 0, then q leaves on 1.
Graph double_star(int p, int q);

/// Spider S_k with head 0 and k legs of length three. Leg i (1-based)
/// occupies ids 3i-2, 3i-1, 3i, nearest the head first. Requires k >= 2.
Graph build_spider(int k);

/// Pendant gadgets that extend a graph at one attachment vertex.
class GadgetKind {
public:
    enum class Tag {
        O1,            // path v2 v1 v3, x joined to v1
        O2,            // path v4 v3 v2 v1 v5 v6 v7, x joined to v1
        O3,            // spider with k >= 3 legs, x joined to its head
        K12Path,       // same shape as O1, no side condition
        K13Path,       // path v5 v4 v3 v2 v1, x joined to v4
        SpiderAttach,  // spider with k >= 2 legs, x joined to its head
        K14_1,         // v1 v2 path plus pendant v; x joined to v2 and v
        K14_2,         // two P2s v1 v2 and v1' v2'; x joined to v2 and v2'
        K14_3,         // P2 v1 v2 and P3 u1 u2 u3; x joined to v2 and u3
        K14_4,         // P4 u1 u2 u3 u4; x joined to u4
        K14_5,         // P3s v1 v2 v3 and u1 u2 u3 plus w; x joined to w, v3, u3
        K14_6,         // k >= 3 pendant edges x v1 ... x vk
        K14_7,         // P5 u1 ... u5; x joined to u4
    };

    static GadgetKind o1() { return GadgetKind(Tag::O1); }
    static GadgetKind o2() { return GadgetKind(Tag::O2); }
    static GadgetKind o3(int k);
    static GadgetKind k12_path() { return GadgetKind(Tag::K12Path); }
    static GadgetKind k13_path() { return GadgetKind(Tag::K13Path); }
    static GadgetKind spider_attach(int k);
    /// item in 1..7; `k` is only used by item 6.
    static GadgetKind k14(int item, int k = 3);

    /// Parses the CLI spelling: o1, o2, o3, k12, k13, spider, k14-1 ... k14-7.
    static GadgetKind parse(const std::string& name, int k);

    Tag tag() const noexcept { return tag_; }
    int k() const noexcept { return k_; }
    /// Number of vertices the gadget adds.
    int added_vertices() const noexcept;
    std::string name() const;

    friend bool operator==(const GadgetKind&, const GadgetKind&) = default;

private:
    explicit GadgetKind(Tag tag, int k = 0) : tag_(tag), k_(k) {}

    Tag tag_;
    int k_;
};

struct GadgetResult {
    Graph graph;
    /// Gadget vertex labels ("v1", "v2'", "u3", "w", "v2^3", ...) to ids.
    std::map<std::string, Vertex> names;
};

/// Returns a copy of `g` with the gadget appended (new ids follow the
/// existing ones, in the order the labels are listed above) and joined at `x`.
GadgetResult attach_gadget(const Graph& g, Vertex x, const GadgetKind& kind);

}  // namespace rainbow
