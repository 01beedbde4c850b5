#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "univgraph/combinators.hpp"
#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/mp_universal.hpp"
#include "univgraph/parity_universal.hpp"
#include "univgraph/product.hpp"
#include "univgraph/safety.hpp"
#include "univgraph/value_iteration.hpp"

namespace univgraph {

struct SolveReport {
    std::vector<bool> winning;
    /// Positional strategy on the winning region; left empty for objectives
    /// that need memory (the automaton state is part of the winning strategy).
    PositionalStrategy strategy;
    std::size_t lifts = 0;
    std::size_t edge_touches = 0;
    std::size_t q_size = 0;
};

enum class ParityGraphKind { Tree, Exponential };
enum class MpSetKind { Interval, Sums, Digits };

inline int max_priority(const ColoredGraph<Priority>& g) {
    int d = 0;
    for (const auto& e : g.edges()) {
        if (e.color.value < 0) throw InvalidInput("negative priority");
        d = std::max(d, e.color.value);
    }
    return d;
}

/// Smallest even d covering every priority.
inline int even_ceiling(int p) { return p % 2 == 0 ? p : p + 1; }

inline std::int64_t max_abs_weight(const ColoredGraph<Weight>& g) {
    std::int64_t m = 0;
    for (const auto& e : g.edges()) m = std::max(m, e.color.value < 0 ? -e.color.value : e.color.value);
    return m;
}

template <class C, LinearGraph L>
SolveReport solve_with_linear_graph(const Game<C>& game, const L& lg) {
    auto vi = value_iteration(game, lg);
    SolveReport r;
    r.strategy = extract_strategy(game, lg, vi.theta);
    r.winning = std::move(vi.winning);
    r.lifts = vi.lifts;
    r.edge_touches = vi.edge_touches;
    r.q_size = lg.size();
    return r;
}

inline TreeGraph parity_universal_graph(int n, int d, ParityGraphKind kind) {
    if (d < 0 || d % 2 != 0) throw InvalidInput("d must be even and non-negative");
    if (d == 0) return TreeGraph(UniversalTree(0, {Leaf{}}));
    if (kind == ParityGraphKind::Exponential) return exp_universal_graph(std::max(n, 1), d);
    return TreeGraph(build_universal_tree(std::max(n, 1), d / 2));
}

/// n defaults to |V|; d to the largest priority rounded up to even.
inline SolveReport solve_parity(const Game<Priority>& game, int n = -1, int d = -1,
                                ParityGraphKind kind = ParityGraphKind::Tree) {
    const int top = max_priority(game.graph());
    if (d < 0) d = even_ceiling(top);
    if (top > d) throw InvalidInput("priority " + std::to_string(top) + " exceeds d = " + std::to_string(d));
    if (n < 0) n = static_cast<int>(game.size());
    return solve_with_linear_graph(game, parity_universal_graph(n, d, kind));
}

inline IntegerGraphSpec mp_universal_set(int n, std::int64_t N, MpSetKind kind, const std::vector<std::int64_t>& weights) {
    n = std::max(n, 1);
    switch (kind) {
        case MpSetKind::Interval:
            return universal_set_interval(n, N);
        case MpSetKind::Sums:
            return universal_set_sums(n, weights);
        case MpSetKind::Digits:
            if (n < 2) return universal_set_interval(n, N);
            return universal_set_digits(n, std::max<std::int64_t>(N, 1));
    }
    throw InvalidInput("unknown set kind");
}

/// Weights occurring in the graph, plus 0.
template <class C, class F>
std::vector<std::int64_t> weight_set(const ColoredGraph<C>& g, F weight_of) {
    std::set<std::int64_t> w{0};
    for (const auto& e : g.edges()) w.insert(weight_of(e.color));
    return {w.begin(), w.end()};
}

/// n defaults to |V|, N to the largest absolute weight. For the digit set,
/// games with a single vertex fall back to the interval set.
inline SolveReport solve_mp(const Game<Weight>& game, MpSetKind kind = MpSetKind::Interval, int n = -1,
                            std::int64_t N = -1) {
    if (n < 0) n = static_cast<int>(game.size());
    const std::int64_t actual = max_abs_weight(game.graph());
    if (N < 0) N = actual;
    if (actual > N) throw InvalidInput("weight exceeds N");
    auto W = weight_set(game.graph(), [](const Weight& c) { return c.value; });
    return solve_with_linear_graph(game, integer_graph(mp_universal_set(n, N, kind, W)));
}

/// Parity or mean payoff, through the product with the separating automaton.
/// Eve wins v iff she wins (v, initial state) in the safety game.
inline SolveReport solve_parity_or_mp(const Game<ParityWeight>& game, int n = -1, int d = -1, std::int64_t N = -1,
                                      MpSetKind kind = MpSetKind::Interval) {
    const auto& g = game.graph();
    int top = 0;
    std::int64_t actual = 0;
    for (const auto& e : g.edges()) {
        if (e.color.priority < 0) throw InvalidInput("negative priority");
        top = std::max(top, e.color.priority);
        actual = std::max(actual, e.color.weight < 0 ? -e.color.weight : e.color.weight);
    }
    if (n < 0) n = static_cast<int>(game.size());
    if (d < 0) d = even_ceiling(top);
    if (N < 0) N = actual;
    if (top > d) throw InvalidInput("priority exceeds d");
    if (actual > N) throw InvalidInput("weight exceeds N");
    auto W = weight_set(g, [](const ParityWeight& c) { return c.weight; });
    auto sep = parity_mp_separating(std::max(n, 1), d, mp_universal_set(n, N, kind, W), g.colors());
    auto product = product_general(game, sep.automaton.graph());
    auto safety = solve_safety(product.game);
    SolveReport r;
    r.winning.assign(game.size(), false);
    if (sep.automaton.size() > 0)
        for (Vertex v = 0; v < game.size(); ++v) r.winning[v] = safety.winning[product.vertex(v, 0)];
    r.edge_touches = safety.edge_touches;
    r.q_size = sep.automaton.size();
    return r;
}

/// Disjunction of mean payoff objectives, through the product with the
/// universal graph. Eve wins v iff she wins (v, q) for some q.
inline SolveReport solve_disj_mp(const Game<WeightVector>& game, int n = -1, std::int64_t N = -1) {
    const auto& g = game.graph();
    std::size_t dim = 0;
    std::int64_t actual = 0;
    for (const auto& e : g.edges()) {
        if (dim != 0 && e.color.dim() != dim) throw InvalidInput("mixed weight dimensions");
        dim = e.color.dim();
        for (auto w : e.color.values) actual = std::max(actual, w < 0 ? -w : w);
    }
    if (n < 0) n = static_cast<int>(game.size());
    if (N < 0) N = actual;
    if (actual > N) throw InvalidInput("weight exceeds N");
    SolveReport r;
    r.winning.assign(game.size(), false);
    if (dim == 0) {
        // No edges: only Adam's sinks are winning.
        for (Vertex v = 0; v < game.size(); ++v) r.winning[v] = !game.is_eve(v);
        return r;
    }
    auto u = disj_mp_universal(std::max(n, 1), static_cast<int>(dim), N, g.colors());
    auto product = product_general(game, u);
    auto safety = solve_safety(product.game);
    for (Vertex v = 0; v < game.size(); ++v)
        for (std::size_t q = 0; q < u.size() && !r.winning[v]; ++q) r.winning[v] = safety.winning[product.vertex(v, q)];
    r.edge_touches = safety.edge_touches;
    r.q_size = u.size();
    return r;
}

}  // namespace univgraph
