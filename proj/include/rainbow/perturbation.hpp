#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

struct VertexRemovalEntry {
    Vertex vertex = 0;
    int gamma = 0;
    int delta = 0;
};

struct EdgeRemovalEntry {
    Edge edge;
    int gamma = 0;
    int delta = 0;
};

/// gamma of every single-vertex deletion, relative to the intact graph.
struct VertexRemovalProfile {
    int base_gamma = 0;
    std::vector<VertexRemovalEntry> entries;
};

/// gamma of every single-edge deletion, relative to the intact graph.
struct EdgeRemovalProfile {
    int base_gamma = 0;
    std::vector<EdgeRemovalEntry> entries;
};

VertexRemovalProfile vertex_removal_profile(const Graph& g, int cap = kDefaultBruteCap);
EdgeRemovalProfile edge_removal_profile(const Graph& g, int cap = kDefaultBruteCap);

/// gamma unchanged by every vertex deletion.
bool is_stable(const Graph& g, int cap = kDefaultBruteCap);

/// Every edge deletion raises gamma by one. Requires a tree with at least one edge.
bool is_er_critical(const Graph& t, int cap = kDefaultBruteCap);

/// How one minimum function treats the endpoints of an edge.
struct EdgeFunctionRecord {
    RainbowAssignment function;
    bool u_zero = false;
    bool v_zero = false;
    /// Positively colored neighbors of the unique 0-endpoint; empty unless exactly one endpoint is 0.
    std::optional<int> zero_endpoint_positive_neighbors;
    /// Exactly one endpoint is 0 and it has exactly two positive neighbors.
    bool meets_condition = false;
};

/// Edge-deletion characterization for trees: deleting uv raises gamma iff every
/// minimum function zeroes exactly one endpoint and that endpoint has exactly
/// two positively colored neighbors.
struct EdgeWitness {
    Edge edge;
    std::vector<EdgeFunctionRecord> records;
    bool predicts_increase = false;
    int measured_delta = 0;
    bool agrees = false;
};

/// Uses every minimum function of `t` (requires order <= cap).
EdgeWitness edgedel_witness(const Graph& t, Edge e, int cap = kDefaultBruteCap);
/// Same, reusing a precomputed list of minimum functions and base gamma.
EdgeWitness edgedel_witness(const Graph& t, Edge e, const std::vector<RainbowAssignment>& min_functions,
                            int base_gamma, int cap = kDefaultBruteCap);

nlohmann::json to_json(const VertexRemovalProfile& p);
nlohmann::json to_json(const EdgeRemovalProfile& p);
nlohmann::json to_json(const EdgeWitness& w);

/// One line per entry: "vertex 3: gamma 2 (delta -1)".
std::string to_report(const VertexRemovalProfile& p);
std::string to_report(const EdgeRemovalProfile& p);

}  // namespace rainbow
