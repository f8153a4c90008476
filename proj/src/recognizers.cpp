#include "rainbow/recognizers.hpp"

#include <algorithm>
#include <tuple>

#include "rainbow/error.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {
namespace {

using Tag = GadgetKind::Tag;

bool in_w_zero(const Graph& t, Vertex v, int cap) {
    return !some_min_function_uses(t, v, kPositive, cap);
}

Graph base_tree(const FamilyTCertificate& c) {
    if (c.base == FamilyTCertificate::Base::P3) {
        return path_graph(3);
    }
    if (c.spider_legs < 3) {
        throw CertificateError("spider base needs k >= 3 legs");
    }
    return build_spider(c.spider_legs);
}

struct Recognized {
    FamilyTCertificate certificate;
    std::vector<Vertex> map;
};

struct RootedTree {
    std::vector<Vertex> parent;
    std::vector<int> height;

    std::vector<Vertex> children(const Graph& t, Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex w : t.neighbors(v)) {
            if (parent[static_cast<std::size_t>(w)] == v) {
                out.push_back(w);
            }
        }
        return out;
    }
};

RootedTree root_at(const Graph& t, Vertex root) {
    RootedTree r;
    const int n = t.order();
    r.parent.assign(static_cast<std::size_t>(n), -2);
    r.height.assign(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order{root};
    r.parent[static_cast<std::size_t>(root)] = -1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex w : t.neighbors(order[head])) {
            if (r.parent[static_cast<std::size_t>(w)] == -2) {
                r.parent[static_cast<std::size_t>(w)] = order[head];
                order.push_back(w);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex p = r.parent[static_cast<std::size_t>(*it)];
        if (p >= 0) {
            r.height[static_cast<std::size_t>(p)] =
                std::max(r.height[static_cast<std::size_t>(p)], r.height[static_cast<std::size_t>(*it)] + 1);
        }
    }
    return r;
}

// Diametrical path v1..vk maximizing deg(v2); ties by smaller v2, then the
// endpoint pair (smaller id, larger id), then v1.
std::vector<Vertex> choose_diametrical_path(const Graph& t) {
    const int n = t.order();
    std::vector<std::vector<int>> dist;
    int diameter = 0;
    for (Vertex s = 0; s < n; ++s) {
        dist.push_back(bfs_distances(t, s));
        diameter = std::max(diameter, *std::max_element(dist.back().begin(), dist.back().end()));
    }
    auto hop_toward = [&](Vertex from, Vertex target) {
        for (Vertex w : t.neighbors(from)) {
            if (dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(target)] ==
                dist[static_cast<std::size_t>(from)][static_cast<std::size_t>(target)] - 1) {
                return w;
            }
        }
        throw Error("internal: broken distance table");
    };
    std::tuple<int, Vertex, Vertex, Vertex, Vertex> best{1, 0, 0, 0, 0};
    bool found = false;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (a == b || dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != diameter) {
                continue;
            }
            const Vertex v2 = hop_toward(a, b);
            const auto key = std::make_tuple(-t.degree(v2), v2, std::min(a, b), std::max(a, b), a);
            if (!found || key < best) {
                best = key;
                found = true;
            }
        }
    }
    Vertex cur = std::get<4>(best);
    const Vertex end = cur == std::get<2>(best) ? std::get<3>(best) : std::get<2>(best);
    std::vector<Vertex> path{cur};
    while (cur != end) {
        cur = hop_toward(cur, end);
        path.push_back(cur);
    }
    return path;
}

bool is_p3_leg(const Graph& t, const RootedTree& r, Vertex c) {
    if (t.degree(c) != 2) {
        return false;
    }
    const auto mid = r.children(t, c);
    if (mid.size() != 1 || t.degree(mid[0]) != 2) {
        return false;
    }
    const auto tip = r.children(t, mid[0]);
    return tip.size() == 1 && t.degree(tip[0]) == 1;
}

std::optional<Recognized> base_match(const Graph& t) {
    if (t.order() == 3) {
        FamilyTCertificate c;
        c.base = FamilyTCertificate::Base::P3;
        auto map = forest_isomorphism(t, path_graph(3));
        return Recognized{c, std::move(*map)};
    }
    if ((t.order() - 1) % 3 == 0 && t.order() >= 10) {
        const int k = (t.order() - 1) / 3;
        if (auto map = forest_isomorphism(t, build_spider(k))) {
            FamilyTCertificate c;
            c.base = FamilyTCertificate::Base::Spider;
            c.spider_legs = k;
            return Recognized{c, std::move(*map)};
        }
    }
    return std::nullopt;
}

std::optional<Recognized> recognize(const Graph& t, int cap, std::string& why) {
    if (t.order() < 3) {
        why = "residual tree of order " + std::to_string(t.order()) + " is below 3";
        return std::nullopt;
    }
    if (auto base = base_match(t)) {
        return base;
    }
    const auto path = choose_diametrical_path(t);
    const int diameter = static_cast<int>(path.size()) - 1;
    if (diameter <= 2) {
        why = "star K_{1," + std::to_string(t.order() - 1) + "} is not a base tree";
        return std::nullopt;
    }
    if (diameter == 3) {
        if (t.order() == 6 && trees_isomorphic(t, double_star(2, 2))) {
            FamilyTCertificate c;
            c.steps.push_back({GadgetKind::o1(), 1});
            auto map = forest_isomorphism(t, replay_certificate(c, cap));
            return Recognized{c, std::move(*map)};
        }
        why = "diameter-3 tree other than DS_{2,2}";
        return std::nullopt;
    }

    const RootedTree rooted = root_at(t, path.back());
    const Vertex v2 = path[1];
    const Vertex v3 = path[2];
    const Vertex v4 = path[3];
    const Vertex v5 = path[4];

    // Gadget to strip: its vertices in gadget-label order, the op, and where it hangs.
    std::vector<Vertex> gadget;
    GadgetKind op = GadgetKind::o1();
    Vertex attach = -1;

    auto take_cherry = [&](Vertex center) {
        gadget = {center};
        auto leaves = rooted.children(t, center);
        std::sort(leaves.begin(), leaves.end());
        gadget.insert(gadget.end(), leaves.begin(), leaves.end());
        op = GadgetKind::o1();
        attach = rooted.parent[static_cast<std::size_t>(center)];
    };

    if (t.degree(v2) >= 4) {
        why = "vertex " + std::to_string(v2) + " supports three or more leaves";
        return std::nullopt;
    }
    if (t.degree(v2) == 3) {
        take_cherry(v2);
    } else {
        if (t.degree(v3) != 2) {
            why = "vertex " + std::to_string(v3) + " on the diametrical path has degree " +
                  std::to_string(t.degree(v3));
            return std::nullopt;
        }
        auto kids = rooted.children(t, v4);
        std::sort(kids.begin(), kids.end());
        const auto depth_one = std::find_if(kids.begin(), kids.end(), [&](Vertex y) {
            return rooted.height[static_cast<std::size_t>(y)] == 1;
        });
        const bool has_leaf = std::any_of(kids.begin(), kids.end(), [&](Vertex y) { return t.degree(y) == 1; });
        if (depth_one != kids.end()) {
            if (t.degree(*depth_one) != 3) {
                why = "vertex " + std::to_string(*depth_one) + " below " + std::to_string(v4) + " has degree " +
                      std::to_string(t.degree(*depth_one));
                return std::nullopt;
            }
            take_cherry(*depth_one);
        } else if (has_leaf) {
            why = "vertex " + std::to_string(v4) + " carries a pendant leaf next to a length-3 leg";
            return std::nullopt;
        } else {
            for (Vertex c : kids) {
                if (!is_p3_leg(t, rooted, c)) {
                    why = "subtree at " + std::to_string(v4) + " is not a spider";
                    return std::nullopt;
                }
            }
            const int legs = static_cast<int>(kids.size());
            if (legs < 2) {
                why = "path of length 4 hangs from vertex " + std::to_string(v5);
                return std::nullopt;
            }
            gadget = {v4};
            for (Vertex c : kids) {
                const Vertex mid = rooted.children(t, c).front();
                const Vertex tip = rooted.children(t, mid).front();
                gadget.insert(gadget.end(), {c, mid, tip});
            }
            op = legs == 2 ? GadgetKind::o2() : GadgetKind::o3(legs);
            attach = v5;
        }
    }

    const auto removal = remove_vertices(t, gadget);
    const Graph& residual = removal.graph;
    const Vertex attach_residual = removal.old_to_new[static_cast<std::size_t>(attach)];
    std::string inner;
    auto sub = recognize(residual, cap, inner);
    if (!sub) {
        why = "after stripping " + op.name() + " at " + std::to_string(attach) + ": " + inner;
        return std::nullopt;
    }
    if (op.tag() == Tag::O1 && !in_w_zero(residual, attach_residual, cap)) {
        why = "o1 attachment " + std::to_string(attach) + " is not in W_0 of the residual tree";
        return std::nullopt;
    }
    if (op.tag() == Tag::O2 && in_w_zero(residual, attach_residual, cap)) {
        why = "o2 attachment " + std::to_string(attach) + " is in W_0 of the residual tree";
        return std::nullopt;
    }

    Recognized out;
    out.certificate = std::move(sub->certificate);
    out.certificate.steps.push_back({op, sub->map[static_cast<std::size_t>(attach_residual)]});
    out.map.assign(static_cast<std::size_t>(t.order()), -1);
    for (Vertex v = 0; v < t.order(); ++v) {
        const Vertex r = removal.old_to_new[static_cast<std::size_t>(v)];
        if (r >= 0) {
            out.map[static_cast<std::size_t>(v)] = sub->map[static_cast<std::size_t>(r)];
        }
    }
    // Stripped vertices were listed in the order attach_gadget appends them.
    const Vertex first_new = residual.order();
    for (std::size_t i = 0; i < gadget.size(); ++i) {
        out.map[static_cast<std::size_t>(gadget[i])] = first_new + static_cast<Vertex>(i);
    }
    return out;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map) {
    if (a.order() != b.order() || a.size() != b.size() || static_cast<int>(map.size()) != a.order()) {
        return false;
    }
    std::vector<bool> hit(static_cast<std::size_t>(b.order()), false);
    for (Vertex m : map) {
        if (m < 0 || m >= b.order() || hit[static_cast<std::size_t>(m)]) {
            return false;
        }
        hit[static_cast<std::size_t>(m)] = true;
    }
    for (const Edge& e : a.edges()) {
        if (!b.has_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) {
            return false;
        }
    }
    return true;
}

}  // namespace

FamilyTRecognition recognize_family_T(const Graph& t, int cap) {
    if (!is_tree(t)) {
        throw NotATree("recognize_family_T: input is not a tree");
    }
    if (t.order() < 3) {
        throw std::invalid_argument("recognize_family_T: order must be at least 3");
    }
    FamilyTRecognition out;
    auto r = recognize(t, cap, out.rejection);
    if (!r) {
        return out;
    }
    if (!is_isomorphism(t, replay_certificate(r->certificate, cap), r->map)) {
        throw Error("internal: certificate does not replay onto the recognized tree");
    }
    out.rejection.clear();
    out.certificate = std::move(r->certificate);
    out.vertex_map = std::move(r->map);
    return out;
}

Graph replay_certificate(const FamilyTCertificate& c, int cap) {
    Graph t = base_tree(c);
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const auto& step = c.steps[i];
        const auto where = "step " + std::to_string(i + 1) + " (" + step.op.name() + " at " +
                           std::to_string(step.attach_at) + ")";
        if (!t.contains(step.attach_at)) {
            throw CertificateError(where + ": attachment vertex does not exist");
        }
        switch (step.op.tag()) {
            case Tag::O1:
                if (!in_w_zero(t, step.attach_at, cap)) {
                    throw CertificateError(where + ": attachment vertex is not in W_0");
                }
                break;
            case Tag::O2:
                if (in_w_zero(t, step.attach_at, cap)) {
                    throw CertificateError(where + ": attachment vertex is in W_0");
                }
                break;
            case Tag::O3:
                break;
            default:
                throw CertificateError(where + ": only o1, o2 and o3 may appear in a certificate");
        }
        t = attach_gadget(t, step.attach_at, step.op).graph;
    }
    return t;
}

nlohmann::json to_json(const FamilyTCertificate& c) {
    nlohmann::json base;
    if (c.base == FamilyTCertificate::Base::P3) {
        base = {{"kind", "P3"}};
    } else {
        base = {{"kind", "Spider"}, {"k", c.spider_legs}};
    }
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : c.steps) {
        nlohmann::json params = nlohmann::json::object();
        std::string op = "O1";
        if (s.op.tag() == Tag::O2) {
            op = "O2";
        } else if (s.op.tag() == Tag::O3) {
            op = "O3";
            params["k"] = s.op.k();
        }
        steps.push_back({{"op", op}, {"params", params}, {"attach", s.attach_at}});
    }
    return {{"base", base}, {"steps", steps}};
}

FamilyTCertificate certificate_from_json(const nlohmann::json& j) {
    FamilyTCertificate c;
    const auto kind = j.at("base").at("kind").get<std::string>();
    if (kind == "P3") {
        c.base = FamilyTCertificate::Base::P3;
    } else if (kind == "Spider") {
        c.base = FamilyTCertificate::Base::Spider;
        c.spider_legs = j.at("base").at("k").get<int>();
    } else {
        throw CertificateError("unknown certificate base '" + kind + "'");
    }
    for (const auto& s : j.at("steps")) {
        const auto op = s.at("op").get<std::string>();
        TreeCertificateStep step;
        step.attach_at = s.at("attach").get<Vertex>();
        if (op == "O1") {
            step.op = GadgetKind::o1();
        } else if (op == "O2") {
            step.op = GadgetKind::o2();
        } else if (op == "O3") {
            step.op = GadgetKind::o3(s.at("params").at("k").get<int>());
        } else {
            throw CertificateError("unknown certificate operation '" + op + "'");
        }
        c.steps.push_back(step);
    }
    return c;
}

FamilyFRecognition recognize_family_F(const Graph& t) {
    if (!is_tree(t)) {
        throw NotATree("recognize_family_F: input is not a tree");
    }
    FamilyFRecognition out;
    if (t.order() < 3) {
        out.rejection = "order below 3";
        return out;
    }
    Vertex leaf = 0;
    while (t.degree(leaf) != 1) {
        ++leaf;
    }
    const auto dist = bfs_distances(t, leaf);
    SubdivisionPreimage pre;
    for (Vertex v = 0; v < t.order(); ++v) {
        if (dist[static_cast<std::size_t>(v)] % 2 == 0) {
            pre.originals.push_back(v);
        } else {
            if (t.degree(v) != 2) {
                out.rejection = "vertex " + std::to_string(v) + " at odd distance has degree " +
                                std::to_string(t.degree(v));
                return out;
            }
            pre.subdivision_vertices.push_back(v);
        }
    }
    if (pre.originals.size() < 2) {
        out.rejection = "fewer than two original vertices";
        return out;
    }
    std::vector<Vertex> index(static_cast<std::size_t>(t.order()), -1);
    for (std::size_t i = 0; i < pre.originals.size(); ++i) {
        index[static_cast<std::size_t>(pre.originals[i])] = static_cast<Vertex>(i);
    }
    pre.preimage = Graph(static_cast<int>(pre.originals.size()));
    for (Vertex x : pre.subdivision_vertices) {
        const auto nb = t.neighbors(x);
        pre.preimage.add_edge(index[static_cast<std::size_t>(nb[0])], index[static_cast<std::size_t>(nb[1])]);
    }
    if (!trees_isomorphic(subdivision(pre.preimage), t)) {
        out.rejection = "subdivision of the extracted preimage does not match";
        return out;
    }
    out.preimage = std::move(pre);
    return out;
}

}  // namespace rainbow
