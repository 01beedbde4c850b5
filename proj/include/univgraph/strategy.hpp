#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/objectives.hpp"

namespace univgraph {

template <class C>
struct RestrictedGraph {
    /// G[sigma, v0], vertices renumbered in discovery order (v0 is 0).
    ColoredGraph<C> graph;
    /// original[i] is the game vertex behind local vertex i.
    std::vector<Vertex> original;
    bool eve_sink_reachable = false;
    bool adam_sink_reachable = false;
};

namespace detail {

// Plays from v0 where `chooser` follows `choice` and the opponent moves freely.
template <class C>
RestrictedGraph<C> restrict_plays(const Game<C>& game, const PositionalStrategy& choice, Vertex v0, Player chooser) {
    const auto& g = game.graph();
    if (v0 >= g.size()) throw InvalidInput("start vertex out of range");
    constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> local(g.size(), kUnseen);
    RestrictedGraph<C> out;
    std::vector<Edge<C>> edges;

    auto visit = [&](Vertex v) {
        if (local[v] == kUnseen) {
            local[v] = out.original.size();
            out.original.push_back(v);
        }
        return local[v];
    };
    visit(v0);
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        Vertex v = out.original[i];
        if (g.is_sink(v)) {
            (game.is_eve(v) ? out.eve_sink_reachable : out.adam_sink_reachable) = true;
            continue;
        }
        if (game.owner(v) == chooser) {
            if (!choice.defined(v)) throw UndefinedStrategy(v);
            const auto& e = g.edge(choice.at(v));
            edges.push_back({i, e.color, visit(e.target)});
        } else {
            for (const auto& e : g.out_edges(v)) edges.push_back({i, e.color, visit(e.target)});
        }
    }
    out.graph = ColoredGraph<C>(out.original.size(), std::move(edges));
    return out;
}

}  // namespace detail

/// The graph of plays consistent with `sigma` from `v0`: every edge of a
/// reachable Adam vertex, and the chosen edge of a reachable Eve vertex.
/// Throws UndefinedStrategy at a reachable Eve vertex that has moves but no choice.
template <class C>
RestrictedGraph<C> restrict_to_strategy(const Game<C>& game, const PositionalStrategy& sigma, Vertex v0) {
    validate_strategy(game, sigma);
    return detail::restrict_plays(game, sigma, v0, Player::Eve);
}

/// sigma wins from v0: no Eve sink is reachable and every play satisfies the objective.
template <class C>
bool verify_strategy(const Game<C>& game, const PositionalStrategy& sigma, Vertex v0) {
    auto r = restrict_to_strategy(game, sigma, v0);
    return !r.eve_sink_reachable && satisfies_objective(r.graph);
}

/// verify_strategy from every vertex of `region`.
template <class C>
bool verify_strategy_on(const Game<C>& game, const PositionalStrategy& sigma,
                        const std::vector<bool>& region) {
    for (Vertex v = 0; v < game.size(); ++v)
        if (region.at(v) && !verify_strategy(game, sigma, v)) return false;
    return true;
}

}  // namespace univgraph
