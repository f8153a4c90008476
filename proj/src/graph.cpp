#include "rainbow/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) {
        throw std::invalid_argument("edge endpoints must differ: " + std::to_string(a));
    }
}

Graph::Graph(int order) {
    if (order < 0) {
        throw std::invalid_argument("graph order must be nonnegative");
    }
    adjacency_.resize(static_cast<std::size_t>(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (const Edge& e : edges) {
        g.add_edge(e.u, e.v);
    }
    return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (!contains(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return adjacency_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) {
        return false;
    }
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

void Graph::add_edge(Vertex a, Vertex b) {
    if (!contains(a) || !contains(b)) {
        throw std::out_of_range("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                "} references a missing vertex");
    }
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    auto& la = adjacency_[static_cast<std::size_t>(a)];
    auto pos = std::lower_bound(la.begin(), la.end(), b);
    if (pos != la.end() && *pos == b) {
        throw std::invalid_argument("duplicate edge {" + std::to_string(a) + "," +
                                    std::to_string(b) + "}");
    }
    la.insert(pos, b);
    auto& lb = adjacency_[static_cast<std::size_t>(b)];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
    ++edge_count_;
}

Vertex Graph::add_vertices(int count) {
    if (count < 0) {
        throw std::invalid_argument("cannot add a negative number of vertices");
    }
    const Vertex first = order();
    adjacency_.resize(adjacency_.size() + static_cast<std::size_t>(count));
    return first;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex a = 0; a < order(); ++a) {
        for (Vertex b : adjacency_[static_cast<std::size_t>(a)]) {
            if (a < b) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

VertexRemoval remove_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> gone(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : removed) {
        if (!g.contains(v)) {
            throw std::out_of_range("cannot remove vertex " + std::to_string(v) + " from graph of order " +
                                    std::to_string(g.order()));
        }
        gone[static_cast<std::size_t>(v)] = true;
    }
    VertexRemoval out;
    out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!gone[static_cast<std::size_t>(v)]) {
            out.old_to_new[static_cast<std::size_t>(v)] = next++;
        }
    }
    out.graph = Graph(next);
    for (const Edge& e : g.edges()) {
        const Vertex a = out.old_to_new[static_cast<std::size_t>(e.u)];
        const Vertex b = out.old_to_new[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) {
            out.graph.add_edge(a, b);
        }
    }
    return out;
}

VertexRemoval remove_vertex(const Graph& g, Vertex v) {
    const Vertex one[] = {v};
    return remove_vertices(g, one);
}

Graph remove_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) {
        throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} is not present");
    }
    Graph out(g.order());
    for (const Edge& f : g.edges()) {
        if (f != e) {
            out.add_edge(f.u, f.v);
        }
    }
    return out;
}

Graph subdivision(const Graph& g) {
    const auto edges = g.edges();
    Graph out(g.order() + static_cast<int>(edges.size()));
    Vertex w = g.order();
    for (const Edge& e : edges) {
        out.add_edge(e.u, w);
        out.add_edge(w, e.v);
        ++w;
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
    }
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (Vertex w : g.neighbors(keep[i])) {
            const Vertex j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) {
                out.add_edge(static_cast<Vertex>(i), j);
            }
        }
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) {
            continue;
        }
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() > 0 && connected_components(g).size() == 1;
}

bool is_forest(const Graph& g) {
    return g.size() + static_cast<int>(connected_components(g).size()) == g.order();
}

bool is_tree(const Graph& g) {
    return g.order() > 0 && g.size() == g.order() - 1 && is_connected(g);
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge closing at depths (d1, d2) bounds a cycle of length d1+d2+1.
    int best = std::numeric_limits<int>::max();
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
        std::deque<Vertex> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(v)] != w) {
                    best = std::min(best, dist[static_cast<std::size_t>(v)] +
                                              dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) {
        return std::nullopt;
    }
    return best;
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    m.components = connected_components(g);
    m.degrees.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        m.degrees[static_cast<std::size_t>(v)] = g.degree(v);
        if (g.degree(v) == 1) {
            m.leaves.push_back(v);
        }
    }
    for (const auto& comp : m.components) {
        int ecc_max = 0;
        for (Vertex s : comp) {
            const auto dist = bfs_distances(g, s);
            for (Vertex t : comp) {
                ecc_max = std::max(ecc_max, dist[static_cast<std::size_t>(t)]);
            }
        }
        m.component_diameters.push_back(ecc_max);
    }
    if (m.components.size() == 1) {
        m.diameter = m.component_diameters.front();
    }
    m.girth = girth(g);
    return m;
}

}  // namespace rainbow
