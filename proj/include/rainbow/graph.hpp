#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted, so two graphs compare equal exactly when
/// they have the same order and the same edge set.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    static Graph from_edges(int order, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex a, Vertex b) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

    /// Inserts edge {a, b}; throws on self-loops, duplicates or bad ids.
    void add_edge(Vertex a, Vertex b);
    /// Appends `count` isolated vertices and returns the id of the first one.
    Vertex add_vertices(int count = 1);

    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    int edge_count_ = 0;
};

/// Result of deleting a vertex: the densely relabeled graph plus the old->new
/// id map (-1 for the deleted vertex).
struct VertexRemoval {
    Graph graph;
    std::vector<Vertex> old_to_new;
};

VertexRemoval remove_vertex(const Graph& g, Vertex v);
/// Deletes every vertex in `removed` (duplicates ignored), relabeling densely.
VertexRemoval remove_vertices(const Graph& g, std::span<const Vertex> removed);
Graph remove_edge(const Graph& g, Edge e);

/// Replaces every edge uv by a path u-w-v. Original vertices keep ids 0..n-1;
/// the subdivision vertex of the i-th edge (in `edges()` order) gets id n+i.
Graph subdivision(const Graph& g);

/// Induced subgraph on `keep` (sorted ascending), relabeled densely in that order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct GraphMetrics {
    /// Max over the whole graph; empty when disconnected or n == 0.
    std::optional<int> diameter;
    /// One entry per component, aligned with `components`.
    std::vector<int> component_diameters;
    /// Length of a shortest cycle; empty for forests.
    std::optional<int> girth;
    std::vector<Vertex> leaves;
    std::vector<std::vector<Vertex>> components;
    /// Degrees indexed by vertex id.
    std::vector<int> degrees;
};

GraphMetrics metrics(const Graph& g);

std::optional<int> girth(const Graph& g);

}  // namespace rainbow
