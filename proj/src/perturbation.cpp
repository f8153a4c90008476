#include "rainbow/perturbation.hpp"

#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {

VertexRemovalProfile vertex_removal_profile(const Graph& g, int cap) {
    VertexRemovalProfile p;
    p.base_gamma = gamma_number(g, cap);
    for (Vertex v = 0; v < g.order(); ++v) {
        const int value = gamma_number(remove_vertex(g, v).graph, cap);
        p.entries.push_back({v, value, value - p.base_gamma});
    }
    return p;
}

EdgeRemovalProfile edge_removal_profile(const Graph& g, int cap) {
    EdgeRemovalProfile p;
    p.base_gamma = gamma_number(g, cap);
    for (const Edge& e : g.edges()) {
        const int value = gamma_number(remove_edge(g, e), cap);
        p.entries.push_back({e, value, value - p.base_gamma});
    }
    return p;
}

bool is_stable(const Graph& g, int cap) {
    const int base = gamma_number(g, cap);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (gamma_number(remove_vertex(g, v).graph, cap) != base) {
            return false;
        }
    }
    return true;
}

bool is_er_critical(const Graph& t, int cap) {
    if (!is_tree(t)) {
        throw NotATree("is_er_critical: input is not a tree");
    }
    if (t.size() == 0) {
        throw std::invalid_argument("is_er_critical: tree has no edges");
    }
    const int base = gamma_number(t, cap);
    for (const Edge& e : t.edges()) {
        if (gamma_number(remove_edge(t, e), cap) != base + 1) {
            return false;
        }
    }
    return true;
}

EdgeWitness edgedel_witness(const Graph& t, Edge e, const std::vector<RainbowAssignment>& min_functions,
                            int base_gamma, int cap) {
    if (!is_tree(t)) {
        throw NotATree("edgedel_witness: input is not a tree");
    }
    if (!t.has_edge(e.u, e.v)) {
        throw std::invalid_argument("edgedel_witness: edge not present");
    }
    EdgeWitness w;
    w.edge = e;
    w.predicts_increase = true;
    for (const auto& f : min_functions) {
        EdgeFunctionRecord r;
        r.function = f;
        r.u_zero = f[e.u] == 0;
        r.v_zero = f[e.v] == 0;
        if (r.u_zero != r.v_zero) {
            const Vertex z = r.u_zero ? e.u : e.v;
            int positive = 0;
            for (Vertex x : t.neighbors(z)) {
                positive += f[x] != 0 ? 1 : 0;
            }
            r.zero_endpoint_positive_neighbors = positive;
            r.meets_condition = positive == 2;
        }
        w.predicts_increase = w.predicts_increase && r.meets_condition;
        w.records.push_back(std::move(r));
    }
    w.measured_delta = gamma_number(remove_edge(t, e), cap) - base_gamma;
    w.agrees = w.predicts_increase == (w.measured_delta == 1);
    return w;
}

EdgeWitness edgedel_witness(const Graph& t, Edge e, int cap) {
    const auto functions = enumerate_min_functions(t, cap);
    return edgedel_witness(t, e, functions, gamma_number(t, cap), cap);
}

nlohmann::json to_json(const VertexRemovalProfile& p) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : p.entries) {
        entries.push_back({{"vertex", e.vertex}, {"gamma", e.gamma}, {"delta", e.delta}});
    }
    return {{"base_gamma", p.base_gamma}, {"mode", "vertices"}, {"entries", entries}};
}

nlohmann::json to_json(const EdgeRemovalProfile& p) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : p.entries) {
        entries.push_back({{"edge", {e.edge.u, e.edge.v}}, {"gamma", e.gamma}, {"delta", e.delta}});
    }
    return {{"base_gamma", p.base_gamma}, {"mode", "edges"}, {"entries", entries}};
}

nlohmann::json to_json(const EdgeWitness& w) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : w.records) {
        nlohmann::json rec = {{"function", r.function.to_string()},
                              {"u_zero", r.u_zero},
                              {"v_zero", r.v_zero},
                              {"meets_condition", r.meets_condition}};
        if (r.zero_endpoint_positive_neighbors) {
            rec["zero_endpoint_positive_neighbors"] = *r.zero_endpoint_positive_neighbors;
        }
        records.push_back(std::move(rec));
    }
    return {{"edge", {w.edge.u, w.edge.v}},
            {"predicts_increase", w.predicts_increase},
            {"measured_delta", w.measured_delta},
            {"agrees", w.agrees},
            {"records", records}};
}

std::string to_report(const VertexRemovalProfile& p) {
    std::ostringstream os;
    os << "base gamma " << p.base_gamma << '\n';
    for (const auto& e : p.entries) {
        os << "vertex " << e.vertex << ": gamma " << e.gamma << " (delta " << (e.delta > 0 ? "+" : "") << e.delta
           << ")\n";
    }
    return os.str();
}

std::string to_report(const EdgeRemovalProfile& p) {
    std::ostringstream os;
    os << "base gamma " << p.base_gamma << '\n';
    for (const auto& e : p.entries) {
        os << "edge " << e.edge.u << "-" << e.edge.v << ": gamma " << e.gamma << " (delta "
           << (e.delta > 0 ? "+" : "") << e.delta << ")\n";
    }
    return os.str();
}

}  // namespace rainbow
