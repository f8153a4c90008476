#include "rainbow/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

#include "rainbow/error.hpp"
#include "rainbow/kernels.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// RainbowAssignment / ColorConstraint

RainbowAssignment::RainbowAssignment(std::vector<Color> colors) : colors_(std::move(colors)) {
    for (Color c : colors_) {
        if (c > 2) {
            throw std::invalid_argument("rainbow colors must be 0, 1 or 2");
        }
    }
}

RainbowAssignment RainbowAssignment::parse(std::string_view digits) {
    std::vector<Color> colors;
    colors.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '2') {
            throw std::invalid_argument("assignment digits must be 0, 1 or 2");
        }
        colors.push_back(static_cast<Color>(ch - '0'));
    }
    return RainbowAssignment(std::move(colors));
}

void RainbowAssignment::set(Vertex v, Color c) {
    if (c > 2) {
        throw std::invalid_argument("rainbow colors must be 0, 1 or 2");
    }
    colors_.at(static_cast<std::size_t>(v)) = c;
}

int RainbowAssignment::weight() const noexcept {
    return static_cast<int>(std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != 0; }));
}

std::vector<Vertex> RainbowAssignment::vertices_with(Color c) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] == c) {
            out.push_back(static_cast<Vertex>(v));
        }
    }
    return out;
}

std::string RainbowAssignment::to_string() const {
    std::string s;
    s.reserve(colors_.size());
    for (Color c : colors_) {
        s.push_back(static_cast<char>('0' + c));
    }
    return s;
}

bool ColorConstraint::unconstrained() const noexcept {
    return std::all_of(allowed_.begin(), allowed_.end(), [](ColorSet s) { return s == kAnyColor; });
}

ColorSet ColorConstraint::allowed(Vertex v) const {
    if (allowed_.empty()) {
        return kAnyColor;
    }
    return allowed_.at(static_cast<std::size_t>(v));
}

ColorConstraint& ColorConstraint::restrict(Vertex v, ColorSet colors) {
    if (v < 0 || static_cast<std::size_t>(v) >= allowed_.size()) {
        throw std::out_of_range("constraint vertex " + std::to_string(v) + " out of range");
    }
    const ColorSet next = allowed_[static_cast<std::size_t>(v)] & colors & kAnyColor;
    if (next == 0) {
        throw std::invalid_argument("constraint leaves vertex " + std::to_string(v) + " with no color");
    }
    allowed_[static_cast<std::size_t>(v)] = next;
    return *this;
}

void ColorConstraint::check_order(int order) const {
    if (!allowed_.empty() && static_cast<int>(allowed_.size()) != order) {
        throw std::invalid_argument("constraint covers " + std::to_string(allowed_.size()) +
                                    " vertices but the graph has " + std::to_string(order));
    }
}

bool ColorConstraint::satisfied_by(const RainbowAssignment& f) const {
    for (Vertex v = 0; v < f.size(); ++v) {
        if (!permits(v, f[v])) {
            return false;
        }
    }
    return true;
}

ColorConstraint ColorConstraint::restricted_to(std::span<const Vertex> keep) const {
    if (allowed_.empty()) {
        return {};
    }
    ColorConstraint out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.allowed_[i] = allowed(keep[i]);
    }
    return out;
}

ColorConstraint ColorConstraint::relabeled(std::span<const Vertex> old_to_new, int new_order) const {
    if (allowed_.empty()) {
        return {};
    }
    ColorConstraint out(new_order);
    for (std::size_t v = 0; v < old_to_new.size(); ++v) {
        if (old_to_new[v] >= 0) {
            out.allowed_[static_cast<std::size_t>(old_to_new[v])] = allowed_[v];
        }
    }
    return out;
}

bool is_2ridf(const Graph& g, const RainbowAssignment& f) {
    if (f.size() != g.order()) {
        throw std::invalid_argument("assignment length " + std::to_string(f.size()) + " does not match order " +
                                    std::to_string(g.order()));
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        bool sees[3] = {false, false, false};
        for (Vertex w : g.neighbors(v)) {
            sees[f[w]] = true;
        }
        const Color c = f[v];
        if (c != 0 && sees[c]) {
            return false;
        }
        if (c == 0 && !(sees[1] && sees[2])) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exhaustive engine over a "core" of at most 32 vertices.

namespace {

constexpr std::int32_t kInf = kernels::kInfeasible;
constexpr int kSuffixVertices = 7;

std::int32_t sat_add(std::int32_t a, std::int32_t b) {
    return std::min(a + b, kInf);
}

struct CoreTable {
    std::vector<std::uint32_t> adjacency;
    std::vector<std::int32_t> costs;
    std::vector<ColorSet> allowed;

    int size() const { return static_cast<int>(adjacency.size()); }
};

struct ExhaustiveResult {
    std::int32_t best = kInf;
    std::vector<Color> first;
    std::vector<std::vector<Color>> all;
};

std::vector<Color> decode(std::uint32_t ones, std::uint32_t twos, int k) {
    std::vector<Color> out(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < k; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << v;
        out[static_cast<std::size_t>(v)] = (ones & bit) ? 1 : (twos & bit) ? 2 : 0;
    }
    return out;
}

std::vector<Color> allowed_list(ColorSet s) {
    std::vector<Color> out;
    for (Color c = 0; c < 3; ++c) {
        if ((s >> c) & 1u) {
            out.push_back(c);
        }
    }
    return out;
}

// Visits every permitted coloring in lexicographic order (vertex 0 most significant).
ExhaustiveResult run_exhaustive(const CoreTable& table, bool collect_all) {
    const int k = table.size();
    if (k > kernels::kMaxCoreVertices) {
        throw CapExceeded("exhaustive search", k, kernels::kMaxCoreVertices);
    }
    const int tail = std::min(k, kSuffixVertices);
    const int split = k - tail;

    std::vector<std::uint32_t> suffix_ones{0};
    std::vector<std::uint32_t> suffix_twos{0};
    for (int v = split; v < k; ++v) {
        std::vector<std::uint32_t> next_ones;
        std::vector<std::uint32_t> next_twos;
        const std::uint32_t bit = std::uint32_t{1} << v;
        const auto colors = allowed_list(table.allowed[static_cast<std::size_t>(v)]);
        for (std::size_t i = 0; i < suffix_ones.size(); ++i) {
            for (Color c : colors) {
                next_ones.push_back(suffix_ones[i] | (c == 1 ? bit : 0));
                next_twos.push_back(suffix_twos[i] | (c == 2 ? bit : 0));
            }
        }
        suffix_ones = std::move(next_ones);
        suffix_twos = std::move(next_twos);
    }

    std::vector<std::vector<Color>> prefix_choices;
    for (int v = 0; v < split; ++v) {
        prefix_choices.push_back(allowed_list(table.allowed[static_cast<std::size_t>(v)]));
    }
    std::vector<std::size_t> digit(static_cast<std::size_t>(split), 0);

    ExhaustiveResult result;
    std::vector<std::int32_t> out(suffix_ones.size());
    kernels::BatchInput in{table.adjacency, table.costs, 0, 0, suffix_ones, suffix_twos};
    while (true) {
        in.prefix_ones = 0;
        in.prefix_twos = 0;
        for (int v = 0; v < split; ++v) {
            const Color c = prefix_choices[static_cast<std::size_t>(v)][digit[static_cast<std::size_t>(v)]];
            in.prefix_ones |= c == 1 ? std::uint32_t{1} << v : 0;
            in.prefix_twos |= c == 2 ? std::uint32_t{1} << v : 0;
        }
        kernels::evaluate(in, out);
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i] >= kInf || out[i] > result.best) {
                continue;
            }
            if (out[i] < result.best) {
                result.best = out[i];
                result.first = decode(in.prefix_ones | suffix_ones[i], in.prefix_twos | suffix_twos[i], k);
                result.all.clear();
            }
            if (collect_all) {
                result.all.push_back(decode(in.prefix_ones | suffix_ones[i], in.prefix_twos | suffix_twos[i], k));
            }
        }
        int pos = split - 1;
        while (pos >= 0) {
            auto& d = digit[static_cast<std::size_t>(pos)];
            if (++d < prefix_choices[static_cast<std::size_t>(pos)].size()) {
                break;
            }
            d = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return result;
}

// Dynamic program over a vertex elimination order. The state keeps, for every
// introduced vertex that still has an unintroduced neighbor, its color or (for
// 0-vertices) which colors its introduced neighbors carry. Used for cores too
// large to enumerate; cost is roughly 6^width per step.
constexpr int kMaxFrontierWidth = 14;

std::int32_t run_frontier(const CoreTable& table) {
    const int k = table.size();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    std::vector<int> placed_neighbors(static_cast<std::size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int v = 0; v < k; ++v) {
            if (!placed[static_cast<std::size_t>(v)] &&
                (pick < 0 || placed_neighbors[static_cast<std::size_t>(v)] > placed_neighbors[static_cast<std::size_t>(pick)])) {
                pick = v;
            }
        }
        placed[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
        for (std::uint32_t rest = table.adjacency[static_cast<std::size_t>(pick)]; rest != 0; rest &= rest - 1) {
            ++placed_neighbors[static_cast<std::size_t>(std::countr_zero(rest))];
        }
    }

    // Slot values: 0 -> color 1, 1 -> color 2, 2 + seen -> color 0.
    using Key = std::uint64_t;
    auto slot = [](Key key, int i) { return static_cast<int>((key >> (3 * i)) & 7u); };
    std::map<Key, std::int32_t> states{{0, 0}};
    std::vector<int> frontier;
    std::uint32_t introduced = 0;
    for (int v : order) {
        introduced |= std::uint32_t{1} << v;
        const std::uint32_t adj = table.adjacency[static_cast<std::size_t>(v)];
        std::vector<int> next_frontier;
        for (int u : frontier) {
            if ((table.adjacency[static_cast<std::size_t>(u)] & ~introduced) != 0) {
                next_frontier.push_back(u);
            }
        }
        const bool v_stays = (adj & ~introduced) != 0;
        if (v_stays) {
            next_frontier.push_back(v);
        }
        if (static_cast<int>(next_frontier.size()) > kMaxFrontierWidth) {
            throw CapExceeded("gamma: core frontier width", static_cast<int>(next_frontier.size()), kMaxFrontierWidth);
        }
        std::map<Key, std::int32_t> next;
        for (const auto& [key, cost] : states) {
            for (Color c : allowed_list(table.allowed[static_cast<std::size_t>(v)])) {
                std::int32_t total = cost;
                if (c != 0) {
                    total = sat_add(total, table.costs[static_cast<std::size_t>(v) * kernels::kStatesPerVertex + c]);
                }
                std::vector<int> values(frontier.size());
                int own_seen = 0;
                bool ok = total < kInf;
                for (std::size_t i = 0; i < frontier.size() && ok; ++i) {
                    int value = slot(key, static_cast<int>(i));
                    if ((adj >> frontier[i]) & 1u) {
                        if (value < 2) {
                            own_seen |= 1 << value;
                            ok = c != value + 1;
                        } else if (c != 0) {
                            value = 2 + ((value - 2) | (1 << (c - 1)));
                        }
                    }
                    values[i] = value;
                }
                if (!ok) {
                    continue;
                }
                const int own = c == 0 ? 2 + own_seen : c - 1;
                auto finish = [&](int u, int value) {
                    if (value >= 2) {
                        total = sat_add(total, table.costs[static_cast<std::size_t>(u) * kernels::kStatesPerVertex + 4 +
                                                           static_cast<std::size_t>(value - 2)]);
                    }
                };
                Key out = 0;
                int pos = 0;
                for (std::size_t i = 0; i < frontier.size(); ++i) {
                    if ((table.adjacency[static_cast<std::size_t>(frontier[i])] & ~introduced) != 0) {
                        out |= static_cast<Key>(values[i]) << (3 * pos++);
                    } else {
                        finish(frontier[i], values[i]);
                    }
                }
                if (v_stays) {
                    out |= static_cast<Key>(own) << (3 * pos);
                } else {
                    finish(v, own);
                }
                if (total >= kInf) {
                    continue;
                }
                auto [it, inserted] = next.try_emplace(out, total);
                if (!inserted) {
                    it->second = std::min(it->second, total);
                }
            }
        }
        states = std::move(next);
        frontier = std::move(next_frontier);
        if (states.empty()) {
            return kInf;
        }
    }
    return states.begin()->second;
}

// Table straight from the definition: weight 1 per colored vertex, a 0-vertex
// is feasible only when it sees both colors.
CoreTable definition_table(const Graph& g, const ColorConstraint& c) {
    CoreTable t;
    const int n = g.order();
    t.adjacency.resize(static_cast<std::size_t>(n));
    t.costs.assign(static_cast<std::size_t>(n) * kernels::kStatesPerVertex, kInf);
    t.allowed.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t mask = 0;
        for (Vertex w : g.neighbors(v)) {
            mask |= std::uint32_t{1} << w;
        }
        t.adjacency[static_cast<std::size_t>(v)] = mask;
        t.allowed[static_cast<std::size_t>(v)] = c.allowed(v);
        auto* row = &t.costs[static_cast<std::size_t>(v) * kernels::kStatesPerVertex];
        row[1] = c.permits(v, 1) ? 1 : kInf;
        row[2] = c.permits(v, 2) ? 1 : kInf;
        row[4 + 3] = c.permits(v, 0) ? 0 : kInf;
    }
    return t;
}

void check_brute_cap(const char* who, int n, int cap) {
    if (n > cap) {
        throw CapExceeded(who, n, cap);
    }
    if (n > kernels::kMaxCoreVertices) {
        throw CapExceeded(who, n, kernels::kMaxCoreVertices);
    }
}

// ---------------------------------------------------------------------------
// Tree dynamic program.
//
// Per vertex, the cheapest cost of its rooted subtree in each of six states:
// colored 1, colored 2, or colored 0 with S = set of colors supplied by its
// children (S encoded as bit0 = "1 seen", bit1 = "2 seen"). A 0-colored child
// is complete only once its parent's color fills S up to {1, 2}.

struct DpState {
    std::int32_t one = kInf;
    std::int32_t two = kInf;
    std::array<std::int32_t, 4> zero{kInf, kInf, kInf, kInf};

    std::int32_t as_root() const { return std::min({one, two, zero[3]}); }
};

DpState combine(ColorSet allowed, const std::vector<const DpState*>& children) {
    DpState s;
    if ((allowed >> 1) & 1u) {
        std::int32_t total = 1;
        for (const DpState* c : children) {
            total = sat_add(total, std::min({c->two, c->zero[2], c->zero[3]}));
        }
        s.one = total;
    }
    if ((allowed >> 2) & 1u) {
        std::int32_t total = 1;
        for (const DpState* c : children) {
            total = sat_add(total, std::min({c->one, c->zero[1], c->zero[3]}));
        }
        s.two = total;
    }
    if (allowed & 1u) {
        std::array<std::int32_t, 4> acc{0, kInf, kInf, kInf};
        for (const DpState* c : children) {
            std::array<std::int32_t, 4> next{kInf, kInf, kInf, kInf};
            for (int mask = 0; mask < 4; ++mask) {
                if (acc[static_cast<std::size_t>(mask)] >= kInf) {
                    continue;
                }
                const auto base = acc[static_cast<std::size_t>(mask)];
                auto relax = [&](int m, std::int32_t cost) {
                    next[static_cast<std::size_t>(m)] = std::min(next[static_cast<std::size_t>(m)], sat_add(base, cost));
                };
                relax(mask | 1, c->one);
                relax(mask | 2, c->two);
                relax(mask, c->zero[3]);
            }
            acc = next;
        }
        s.zero = acc;
    }
    return s;
}

// Peels vertices of degree <= 1 until only the 2-core remains, runs the tree
// DP bottom-up along the peeling order, and enumerates each core component
// with the pendant subtrees folded into its cost table.
std::optional<int> solve_weight(const Graph& g, const ColorConstraint& c, int cap) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> peeled(static_cast<std::size_t>(n), false);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order;
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= 1) {
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        peeled[static_cast<std::size_t>(v)] = true;
        order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!peeled[static_cast<std::size_t>(w)]) {
                parent[static_cast<std::size_t>(v)] = w;
                if (--deg[static_cast<std::size_t>(w)] == 1) {
                    queue.push_back(w);
                }
            }
        }
    }

    std::vector<std::vector<const DpState*>> children(static_cast<std::size_t>(n));
    std::vector<DpState> dp(static_cast<std::size_t>(n));
    std::int64_t total = 0;
    for (Vertex v : order) {
        dp[static_cast<std::size_t>(v)] = combine(c.allowed(v), children[static_cast<std::size_t>(v)]);
        const Vertex p = parent[static_cast<std::size_t>(v)];
        if (p >= 0) {
            children[static_cast<std::size_t>(p)].push_back(&dp[static_cast<std::size_t>(v)]);
        } else {
            const auto best = dp[static_cast<std::size_t>(v)].as_root();
            if (best >= kInf) {
                return std::nullopt;
            }
            total += best;
        }
    }
    if (order.size() == static_cast<std::size_t>(n)) {
        return static_cast<int>(total);
    }

    std::vector<Vertex> core;
    for (Vertex v = 0; v < n; ++v) {
        if (!peeled[static_cast<std::size_t>(v)]) {
            dp[static_cast<std::size_t>(v)] = combine(c.allowed(v), children[static_cast<std::size_t>(v)]);
            core.push_back(v);
        }
    }
    const Graph core_graph = induced_subgraph(g, core);
    for (const auto& comp : connected_components(core_graph)) {
        const int k = static_cast<int>(comp.size());
        if (k > kernels::kMaxCoreVertices) {
            throw CapExceeded("gamma: cyclic core", k, kernels::kMaxCoreVertices);
        }
        std::vector<int> local(static_cast<std::size_t>(core_graph.order()), -1);
        for (int i = 0; i < k; ++i) {
            local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
        }
        CoreTable t;
        t.adjacency.resize(static_cast<std::size_t>(k));
        t.costs.assign(static_cast<std::size_t>(k) * kernels::kStatesPerVertex, kInf);
        t.allowed.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const Vertex cv = comp[static_cast<std::size_t>(i)];
            std::uint32_t mask = 0;
            for (Vertex w : core_graph.neighbors(cv)) {
                mask |= std::uint32_t{1} << local[static_cast<std::size_t>(w)];
            }
            t.adjacency[static_cast<std::size_t>(i)] = mask;
            const Vertex orig = core[static_cast<std::size_t>(cv)];
            t.allowed[static_cast<std::size_t>(i)] = c.allowed(orig);
            const DpState& s = dp[static_cast<std::size_t>(orig)];
            auto* row = &t.costs[static_cast<std::size_t>(i) * kernels::kStatesPerVertex];
            row[1] = s.one;
            row[2] = s.two;
            for (int seen = 0; seen < 4; ++seen) {
                std::int32_t best = kInf;
                for (int supplied = 0; supplied < 4; ++supplied) {
                    if ((seen | supplied) == 3) {
                        best = std::min(best, s.zero[static_cast<std::size_t>(supplied)]);
                    }
                }
                row[4 + seen] = best;
            }
        }
        const std::int32_t best = k <= cap ? run_exhaustive(t, false).best : run_frontier(t);
        if (best >= kInf) {
            return std::nullopt;
        }
        total += best;
    }
    return static_cast<int>(total);
}

// Lexicographically smallest optimal assignment by fixing vertices in id
// order to the smallest color that keeps the optimum.
SolveOutcome with_lex_witness(const Graph& g, const ColorConstraint& c,
                              const std::function<std::optional<int>(const ColorConstraint&)>& weight_of) {
    SolveOutcome out;
    out.weight = weight_of(c);
    if (!out.weight) {
        return out;
    }
    ColorConstraint work(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        work.restrict(v, c.allowed(v));
    }
    RainbowAssignment f(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        bool fixed = false;
        for (Color col = 0; col < 3 && !fixed; ++col) {
            if (!work.permits(v, col)) {
                continue;
            }
            ColorConstraint trial = work;
            trial.force(v, col);
            if (weight_of(trial) == out.weight) {
                work = std::move(trial);
                f.set(v, col);
                fixed = true;
            }
        }
        if (!fixed) {
            throw Error("internal: witness reconstruction lost the optimum");
        }
    }
    out.witness = std::move(f);
    return out;
}

}  // namespace

SolveOutcome gamma_bruteforce(const Graph& g, const ColorConstraint& c, int cap) {
    c.check_order(g.order());
    check_brute_cap("gamma_bruteforce", g.order(), cap);
    const auto r = run_exhaustive(definition_table(g, c), false);
    SolveOutcome out;
    if (r.best < kInf) {
        out.weight = r.best;
        out.witness = RainbowAssignment(r.first);
    }
    return out;
}

std::optional<int> gamma_tree_dp_weight(const Graph& g, const ColorConstraint& c) {
    c.check_order(g.order());
    if (!is_forest(g)) {
        throw NotATree("gamma_tree_dp: input contains a cycle");
    }
    return solve_weight(g, c, 0);
}

SolveOutcome gamma_tree_dp(const Graph& g, const ColorConstraint& c) {
    c.check_order(g.order());
    if (!is_forest(g)) {
        throw NotATree("gamma_tree_dp: input contains a cycle");
    }
    return with_lex_witness(g, c, [&](const ColorConstraint& cc) { return solve_weight(g, cc, 0); });
}

std::optional<int> gamma_weight(const Graph& g, const ColorConstraint& c, int cap) {
    c.check_order(g.order());
    return solve_weight(g, c, cap);
}

SolveOutcome gamma(const Graph& g, const ColorConstraint& c, int cap) {
    c.check_order(g.order());
    return with_lex_witness(g, c, [&](const ColorConstraint& cc) { return solve_weight(g, cc, cap); });
}

int gamma_number(const Graph& g, int cap) {
    const auto w = solve_weight(g, {}, cap);
    if (!w) {
        throw Error("internal: unconstrained instance reported infeasible");
    }
    return *w;
}

std::vector<RainbowAssignment> enumerate_min_functions(const Graph& g, int cap) {
    check_brute_cap("enumerate_min_functions", g.order(), cap);
    const auto r = run_exhaustive(definition_table(g, {}), true);
    std::vector<RainbowAssignment> out;
    out.reserve(r.all.size());
    for (const auto& colors : r.all) {
        out.emplace_back(colors);
    }
    return out;
}

bool some_min_function_uses(const Graph& g, Vertex v, ColorSet colors, int cap) {
    const int base = gamma_number(g, cap);
    ColorConstraint c(g.order());
    c.restrict(v, colors);
    const auto w = solve_weight(g, c, cap);
    return w && *w == base;
}

std::vector<Vertex> w_zero(const Graph& g, int cap) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!some_min_function_uses(g, v, kPositive, cap)) {
            out.push_back(v);
        }
    }
    return out;
}

int independent_domination(const Graph& g, int cap) {
    const int n = g.order();
    check_brute_cap("independent_domination", n, std::min(cap, 31));
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) {
            adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << w;
        }
    }
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    int best = n;
    for (std::uint32_t set = 0; set <= all; ++set) {
        const int size = std::popcount(set);
        if (size < best) {
            std::uint32_t covered = set;
            bool independent = true;
            for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                if (adj[static_cast<std::size_t>(v)] & set) {
                    independent = false;
                    break;
                }
                covered |= adj[static_cast<std::size_t>(v)];
            }
            if (independent && covered == all) {
                best = size;
            }
        }
        if (set == all) {
            break;
        }
    }
    return best;
}

}  // namespace rainbow
