#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Color = std::uint8_t;

/// Subset of {0, 1, 2} as a bitmask: bit c set means color c is allowed.
using ColorSet = std::uint8_t;
inline constexpr ColorSet kAnyColor = 0b111;
inline constexpr ColorSet kPositive = 0b110;
constexpr ColorSet only(Color c) { return static_cast<ColorSet>(1u << c); }

/// Default vertex cap for 3^n / 2^n exhaustive routines.
inline constexpr int kDefaultBruteCap = 15;

/// A function V -> {0, 1, 2}, indexed by vertex id.
class RainbowAssignment {
public:
    RainbowAssignment() = default;
    explicit RainbowAssignment(int order) : colors_(static_cast<std::size_t>(order), 0) {}
    explicit RainbowAssignment(std::vector<Color> colors);

    /// Parses a digit string such as "102".
    static RainbowAssignment parse(std::string_view digits);

    int size() const noexcept { return static_cast<int>(colors_.size()); }
    Color operator[](Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
    void set(Vertex v, Color c);
    std::span<const Color> colors() const noexcept { return colors_; }

    /// |V_1| + |V_2|.
    int weight() const noexcept;
    /// V_c in ascending order.
    std::vector<Vertex> vertices_with(Color c) const;
    std::string to_string() const;

    friend bool operator==(const RainbowAssignment&, const RainbowAssignment&) = default;
    friend auto operator<=>(const RainbowAssignment&, const RainbowAssignment&) = default;

private:
    std::vector<Color> colors_;
};

/// Per-vertex allowed colors. A default-constructed constraint allows
/// everything on a graph of any order.
class ColorConstraint {
public:
    ColorConstraint() = default;
    explicit ColorConstraint(int order) : allowed_(static_cast<std::size_t>(order), kAnyColor) {}

    bool unconstrained() const noexcept;
    ColorSet allowed(Vertex v) const;
    bool permits(Vertex v, Color c) const { return (allowed(v) >> c) & 1u; }

    /// Intersects the allowed set of v with `colors`; throws if it becomes empty.
    ColorConstraint& restrict(Vertex v, ColorSet colors);
    ColorConstraint& force(Vertex v, Color c) { return restrict(v, only(c)); }
    ColorConstraint& forbid(Vertex v, Color c) { return restrict(v, static_cast<ColorSet>(kAnyColor & ~only(c))); }

    /// Throws std::invalid_argument if this constraint cannot apply to an order-n graph.
    void check_order(int order) const;
    bool satisfied_by(const RainbowAssignment& f) const;
    /// Constraint for `induced_subgraph(g, keep)`.
    ColorConstraint restricted_to(std::span<const Vertex> keep) const;
    /// Constraint after deleting vertices, given the old->new map of the deletion.
    ColorConstraint relabeled(std::span<const Vertex> old_to_new, int new_order) const;

private:
    std::vector<ColorSet> allowed_;
};

struct SolveOutcome {
    /// Minimum weight, or empty when no 2RiDF satisfies the constraint.
    std::optional<int> weight;
    /// Lexicographically smallest optimal assignment, present iff feasible.
    std::optional<RainbowAssignment> witness;

    bool feasible() const noexcept { return weight.has_value(); }
};

/// V_1 and V_2 independent, and every 0-vertex sees both colors.
/// Throws std::invalid_argument on a length mismatch.
bool is_2ridf(const Graph& g, const RainbowAssignment& f);

/// Scans all 3^n assignments permitted by `c` in lexicographic order.
SolveOutcome gamma_bruteforce(const Graph& g, const ColorConstraint& c = {}, int cap = kDefaultBruteCap);

/// Exact tree dynamic program; throws NotATree if `g` has a cycle.
SolveOutcome gamma_tree_dp(const Graph& g, const ColorConstraint& c = {});
std::optional<int> gamma_tree_dp_weight(const Graph& g, const ColorConstraint& c = {});

/// General solver. Tree parts are folded by dynamic programming. A cyclic core
/// component with at most `cap` vertices is enumerated exhaustively; larger ones
/// (up to 32 vertices) go through a frontier dynamic program, which throws
/// CapExceeded when its frontier grows past 14 vertices. Sums over components.
SolveOutcome gamma(const Graph& g, const ColorConstraint& c = {}, int cap = kDefaultBruteCap);
std::optional<int> gamma_weight(const Graph& g, const ColorConstraint& c = {}, int cap = kDefaultBruteCap);

/// gamma_weight for callers that know the instance is feasible (no constraint).
int gamma_number(const Graph& g, int cap = kDefaultBruteCap);

/// Every minimum-weight 2RiDF, in lexicographic order. Requires n <= cap.
std::vector<RainbowAssignment> enumerate_min_functions(const Graph& g, int cap = kDefaultBruteCap);

/// Vertices that every minimum 2RiDF colors 0, ascending.
std::vector<Vertex> w_zero(const Graph& g, int cap = kDefaultBruteCap);

/// True iff some minimum 2RiDF gives v a color in `colors`.
bool some_min_function_uses(const Graph& g, Vertex v, ColorSet colors, int cap = kDefaultBruteCap);

/// Independent domination number i(G) by subset enumeration. Requires n <= cap.
int independent_domination(const Graph& g, int cap = kDefaultBruteCap);

}  // namespace rainbow
