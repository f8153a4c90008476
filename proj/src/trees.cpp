#include "rainbow/trees.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "rainbow/error.hpp"

namespace rainbow {
namespace {

// Splits a center-rooted level sequence into the first principal subtree
// (levels shifted up by one) and the remainder (root plus other subtrees).
void split_tree(const std::vector<int>& layout, std::vector<int>& left, std::vector<int>& rest) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    left.clear();
    for (std::size_t i = 1; i < m; ++i) {
        left.push_back(layout[i] - 1);
    }
    rest.assign(1, 0);
    for (std::size_t i = m; i < layout.size(); ++i) {
        rest.push_back(layout[i]);
    }
}

std::vector<Vertex> tree_centers(const Graph& g, const std::vector<Vertex>& comp) {
    if (comp.size() <= 2) {
        return comp;
    }
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> layer;
    for (Vertex v : comp) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= 1) {
            layer.push_back(v);
        }
    }
    std::size_t remaining = comp.size();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : g.neighbors(v)) {
                if (--deg[static_cast<std::size_t>(w)] == 1) {
                    next.push_back(w);
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// AHU code of every vertex of the component when rooted at `root`.
std::vector<std::string> rooted_codes(const Graph& g, Vertex root) {
    std::vector<std::string> code(static_cast<std::size_t>(g.order()));
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> order{root};
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex w : g.neighbors(order[head])) {
            if (parent[static_cast<std::size_t>(w)] < 0) {
                parent[static_cast<std::size_t>(w)] = order[head];
                order.push_back(w);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        std::vector<std::string> kids;
        for (Vertex w : g.neighbors(v)) {
            if (w != root && parent[static_cast<std::size_t>(w)] == v) {
                kids.push_back(code[static_cast<std::size_t>(w)]);
            }
        }
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) {
            s += k;
        }
        s += ")";
        code[static_cast<std::size_t>(v)] = std::move(s);
    }
    return code;
}

struct RootedComponent {
    Vertex root = -1;
    std::vector<std::string> codes;
    const std::string& code() const { return codes[static_cast<std::size_t>(root)]; }
};

RootedComponent canonical_rooting(const Graph& g, const std::vector<Vertex>& comp) {
    RootedComponent best;
    for (Vertex c : tree_centers(g, comp)) {
        auto codes = rooted_codes(g, c);
        if (best.root < 0 || codes[static_cast<std::size_t>(c)] < best.code()) {
            best.root = c;
            best.codes = std::move(codes);
        }
    }
    return best;
}

void require_forest(const Graph& g, const char* who) {
    if (!is_forest(g)) {
        throw NotATree(std::string(who) + ": input contains a cycle");
    }
}

std::vector<Vertex> children_of(const Graph& g, Vertex v, Vertex parent) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v)) {
        if (w != parent) {
            out.push_back(w);
        }
    }
    return out;
}

}  // namespace

FreeTreeEnumerator::FreeTreeEnumerator(int order) : order_(order) {
    if (order < 1) {
        throw std::invalid_argument("free tree order must be at least 1");
    }
    if (order >= 2) {
        for (int i = 0; i <= order / 2; ++i) {
            layout_.push_back(i);
        }
        for (int i = 1; i < (order + 1) / 2; ++i) {
            layout_.push_back(i);
        }
    }
}

void FreeTreeEnumerator::advance_rooted(std::size_t p) {
    if (p == 0) {
        done_ = true;
        return;
    }
    std::size_t q = p - 1;
    while (layout_[q] != layout_[p] - 1) {
        --q;
    }
    for (std::size_t i = p; i < layout_.size(); ++i) {
        layout_[i] = layout_[i - p + q];
    }
}

// Keeps the current layout if it is a canonical free tree; otherwise jumps to
// the next one.
bool FreeTreeEnumerator::make_valid() {
    std::vector<int> left;
    std::vector<int> rest;
    split_tree(layout_, left, rest);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size()) {
            valid = false;
        } else if (left.size() == rest.size() && left > rest) {
            valid = false;
        }
    }
    if (valid) {
        return true;
    }
    const std::size_t p = left.size();
    const int jumped_from = layout_[p];
    advance_rooted(p);
    if (done_) {
        return false;
    }
    if (jumped_from > 2) {
        split_tree(layout_, left, rest);
        const int new_left_height = *std::max_element(left.begin(), left.end());
        const std::size_t tail = static_cast<std::size_t>(new_left_height) + 1;
        for (std::size_t i = 0; i < tail; ++i) {
            layout_[layout_.size() - tail + i] = static_cast<int>(i) + 1;
        }
    }
    return true;
}

std::optional<Graph> FreeTreeEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (order_ == 1) {
        done_ = true;
        current_ = {0};
        return Graph(1);
    }
    if (started_) {
        std::size_t p = layout_.size() - 1;
        while (layout_[p] == 1) {
            --p;
        }
        advance_rooted(p);
        if (done_) {
            return std::nullopt;
        }
    }
    started_ = true;
    if (!make_valid()) {
        return std::nullopt;
    }
    current_ = layout_;
    return tree_from_level_sequence(layout_);
}

std::vector<Graph> enumerate_free_trees(int order) {
    std::vector<Graph> out;
    FreeTreeEnumerator it(order);
    while (auto t = it.next()) {
        out.push_back(std::move(*t));
    }
    return out;
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
    Graph g(static_cast<int>(levels.size()));
    std::vector<Vertex> last_at_depth;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const int depth = levels[i];
        if (depth < 0 || (i == 0 && depth != 0) || (i > 0 && (depth < 1 || depth > static_cast<int>(last_at_depth.size())))) {
            throw std::invalid_argument("invalid level sequence");
        }
        last_at_depth.resize(static_cast<std::size_t>(depth));
        if (depth > 0) {
            g.add_edge(last_at_depth[static_cast<std::size_t>(depth - 1)], static_cast<Vertex>(i));
        }
        last_at_depth.push_back(static_cast<Vertex>(i));
    }
    return g;
}

std::string forest_canonical_form(const Graph& g) {
    require_forest(g, "forest_canonical_form");
    std::vector<std::string> parts;
    for (const auto& comp : connected_components(g)) {
        parts.push_back(canonical_rooting(g, comp).code());
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) {
        out += p;
    }
    return out;
}

bool trees_isomorphic(const Graph& a, const Graph& b) {
    require_forest(a, "trees_isomorphic");
    require_forest(b, "trees_isomorphic");
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    return forest_canonical_form(a) == forest_canonical_form(b);
}

std::optional<std::vector<Vertex>> forest_isomorphism(const Graph& a, const Graph& b) {
    require_forest(a, "forest_isomorphism");
    require_forest(b, "forest_isomorphism");
    if (a.order() != b.order() || a.size() != b.size()) {
        return std::nullopt;
    }
    std::vector<RootedComponent> ra;
    std::vector<RootedComponent> rb;
    for (const auto& comp : connected_components(a)) {
        ra.push_back(canonical_rooting(a, comp));
    }
    for (const auto& comp : connected_components(b)) {
        rb.push_back(canonical_rooting(b, comp));
    }
    auto by_code = [](const RootedComponent& x, const RootedComponent& y) { return x.code() < y.code(); };
    std::stable_sort(ra.begin(), ra.end(), by_code);
    std::stable_sort(rb.begin(), rb.end(), by_code);

    std::vector<Vertex> mapping(static_cast<std::size_t>(a.order()), -1);
    for (std::size_t i = 0; i < ra.size(); ++i) {
        if (ra[i].code() != rb[i].code()) {
            return std::nullopt;
        }
        const auto& ca = ra[i].codes;
        const auto& cb = rb[i].codes;
        // Equal codes at matched vertices let children be paired in sorted-code order.
        struct Frame {
            Vertex va, pa, vb, pb;
        };
        std::vector<Frame> stack{{ra[i].root, -1, rb[i].root, -1}};
        while (!stack.empty()) {
            const Frame f = stack.back();
            stack.pop_back();
            mapping[static_cast<std::size_t>(f.va)] = f.vb;
            auto kids_a = children_of(a, f.va, f.pa);
            auto kids_b = children_of(b, f.vb, f.pb);
            std::sort(kids_a.begin(), kids_a.end(), [&](Vertex x, Vertex y) {
                return ca[static_cast<std::size_t>(x)] < ca[static_cast<std::size_t>(y)];
            });
            std::sort(kids_b.begin(), kids_b.end(), [&](Vertex x, Vertex y) {
                return cb[static_cast<std::size_t>(x)] < cb[static_cast<std::size_t>(y)];
            });
            for (std::size_t k = 0; k < kids_a.size(); ++k) {
                stack.push_back({kids_a[k], f.va, kids_b[k], f.vb});
            }
        }
    }
    return mapping;
}

Graph tree_from_prufer(int n, const std::vector<int>& sequence) {
    if (n < 1 || static_cast<int>(sequence.size()) != std::max(0, n - 2)) {
        throw std::invalid_argument("Prufer sequence length must be n-2");
    }
    Graph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
    }
    if (n <= 2) {
        return g;
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : sequence) {
        if (x < 0 || x >= n) {
            throw std::invalid_argument("Prufer entry out of range");
        }
        ++degree[static_cast<std::size_t>(x)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            leaves.push(v);
        }
    }
    for (int x : sequence) {
        const int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1) {
            leaves.push(x);
        }
    }
    const int u = leaves.top();
    leaves.pop();
    g.add_edge(u, leaves.top());
    return g;
}

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)));
    std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
    for (auto& x : seq) {
        x = pick(rng);
    }
    return tree_from_prufer(n, seq);
}

}  // namespace rainbow
