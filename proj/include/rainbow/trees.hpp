#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Streams every unlabeled free tree of a given order exactly once.
///
/// Wright-Richmond-Odlyzko-McKay successor generation over canonical level
/// sequences: each state is the level sequence of a tree rooted at its
/// center, and successive states are produced in constant amortized time.
/// Order is deterministic.
class FreeTreeEnumerator {
public:
    explicit FreeTreeEnumerator(int order);

    /// Next tree, or nullopt once the stream is exhausted.
    std::optional<Graph> next();

    /// Level sequence of the most recently returned tree (depth per vertex in preorder).
    const std::vector<int>& level_sequence() const noexcept { return current_; }

private:
    void advance_rooted(std::size_t p);
    bool make_valid();

    int order_;
    std::vector<int> layout_;
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

/// Collects the full stream. Convenient for tests and suites at desk scale.
std::vector<Graph> enumerate_free_trees(int order);

/// Converts a preorder level sequence (root at depth 0) into a tree; vertex i is
/// the i-th entry.
Graph tree_from_level_sequence(const std::vector<int>& levels);

/// Canonical string of a forest: components' center-rooted AHU codes, sorted.
/// Equal strings iff isomorphic. Throws NotATree on a cycle.
std::string forest_canonical_form(const Graph& g);

bool trees_isomorphic(const Graph& a, const Graph& b);

/// An explicit isomorphism a -> b (mapping[v] is the image of v), if one exists.
std::optional<std::vector<Vertex>> forest_isomorphism(const Graph& a, const Graph& b);

/// Uniformly random labeled tree on n vertices via a random Prufer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// Decodes a Prufer sequence of length n-2 over {0..n-1}.
Graph tree_from_prufer(int n, const std::vector<int>& sequence);

}  // namespace rainbow
