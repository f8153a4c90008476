#pragma once

// Reference implementations that share no code with the library beyond Graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::Graph;
using rainbow::Vertex;

inline bool valid(const Graph& g, const std::vector<int>& f) {
    for (Vertex v = 0; v < g.order(); ++v) {
        bool one = false;
        bool two = false;
        for (Vertex w : g.neighbors(v)) {
            one = one || f[static_cast<std::size_t>(w)] == 1;
            two = two || f[static_cast<std::size_t>(w)] == 2;
        }
        const int c = f[static_cast<std::size_t>(v)];
        if ((c == 1 && one) || (c == 2 && two) || (c == 0 && !(one && two))) {
            return false;
        }
    }
    return true;
}

struct Result {
    std::optional<int> weight;
    std::vector<std::vector<int>> optima;  // lexicographic order
};

// allowed[v] is a bitmask over colors {0,1,2}; empty vector means unconstrained.
inline Result solve(const Graph& g, const std::vector<int>& allowed = {}) {
    const int n = g.order();
    Result r;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> go = [&](int v, int weight) {
        if (r.weight && weight > *r.weight) {
            return;
        }
        if (v == n) {
            if (!valid(g, f)) {
                return;
            }
            if (!r.weight || weight < *r.weight) {
                r.weight = weight;
                r.optima.clear();
            }
            r.optima.push_back(f);
            return;
        }
        for (int c = 0; c < 3; ++c) {
            if (!allowed.empty() && !((allowed[static_cast<std::size_t>(v)] >> c) & 1)) {
                continue;
            }
            f[static_cast<std::size_t>(v)] = c;
            go(v + 1, weight + (c != 0 ? 1 : 0));
        }
        f[static_cast<std::size_t>(v)] = 0;
    };
    go(0, 0);
    return r;
}

inline int independent_domination(const Graph& g) {
    const int n = g.order();
    int best = n;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
            const bool in = (s >> v) & 1u;
            bool touched = in;
            for (Vertex w : g.neighbors(v)) {
                const bool w_in = (s >> w) & 1u;
                if (in && w_in) {
                    ok = false;
                }
                touched = touched || w_in;
            }
            ok = ok && touched;
        }
        if (ok) {
            best = std::min(best, static_cast<int>(__builtin_popcount(s)));
        }
    }
    return best;
}

// Canonical string of a tree: least rooted encoding over every root.
inline std::string tree_code(const Graph& t) {
    std::function<std::string(Vertex, Vertex)> enc = [&](Vertex v, Vertex parent) {
        std::vector<std::string> parts;
        for (Vertex w : t.neighbors(v)) {
            if (w != parent) {
                parts.push_back(enc(w, v));
            }
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& p : parts) {
            s += p;
        }
        return s + ")";
    };
    std::string best;
    for (Vertex r = 0; r < t.order(); ++r) {
        const auto s = enc(r, -1);
        if (best.empty() || s < best) {
            best = s;
        }
    }
    return best;
}

// Number of unlabeled trees of order n, by decoding every Prufer sequence.
inline std::size_t count_free_trees(int n) {
    if (n <= 2) {
        return 1;
    }
    std::set<std::string> seen;
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : seq) {
            ++degree[static_cast<std::size_t>(x)];
        }
        Graph t(n);
        for (int x : seq) {
            Vertex leaf = 0;
            while (degree[static_cast<std::size_t>(leaf)] != 1) {
                ++leaf;
            }
            t.add_edge(leaf, x);
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(x)];
        }
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v) {
            if (degree[static_cast<std::size_t>(v)] == 1) {
                rest.push_back(v);
            }
        }
        t.add_edge(rest[0], rest[1]);
        seen.insert(tree_code(t));
        int pos = n - 3;
        while (pos >= 0 && ++seq[static_cast<std::size_t>(pos)] == n) {
            seq[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return seen.size();
}

}  // namespace oracle
