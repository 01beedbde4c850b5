#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "univgraph/graph.hpp"

namespace univgraph {

inline constexpr std::size_t kNeverRemoved = std::numeric_limits<std::size_t>::max();

struct SafetyResult {
    std::vector<bool> winning;
    PositionalStrategy strategy;
    /// Round in which the vertex left the candidate set, kNeverRemoved if winning.
    std::vector<std::size_t> removal_round;
    /// In-edges visited while propagating removals; never exceeds |E|.
    std::size_t edge_touches = 0;
};

/// Greatest fixpoint of Safe, in time linear in |E|.
///
/// Round 0 removes Eve's sinks. Each later round scans the in-edges of the
/// vertices removed in the previous round: an Adam predecessor leaves at once,
/// an Eve predecessor leaves once its last remaining edge is gone. Colours are
/// ignored, so any game can be read as a safety game.
template <class C>
SafetyResult solve_safety(const Game<C>& game) {
    const auto& g = game.graph();
    const std::size_t n = g.size();
    SafetyResult r;
    r.removal_round.assign(n, kNeverRemoved);
    std::vector<std::size_t> count(n);
    std::vector<Vertex> frontier;
    for (Vertex v = 0; v < n; ++v) {
        count[v] = g.out_degree(v);
        if (game.is_eve(v) && count[v] == 0) {
            r.removal_round[v] = 0;
            frontier.push_back(v);
        }
    }
    for (std::size_t round = 1; !frontier.empty(); ++round) {
        std::vector<Vertex> next;
        for (Vertex v : frontier) {
            for (EdgeId id : g.in_edges(v)) {
                ++r.edge_touches;
                Vertex u = g.edge(id).source;
                if (r.removal_round[u] != kNeverRemoved) continue;
                if (!game.is_eve(u) || --count[u] == 0) {
                    r.removal_round[u] = round;
                    next.push_back(u);
                }
            }
        }
        frontier = std::move(next);
    }

    r.winning.assign(n, false);
    for (Vertex v = 0; v < n; ++v) r.winning[v] = r.removal_round[v] == kNeverRemoved;
    r.strategy = PositionalStrategy(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!r.winning[v] || !game.is_eve(v)) continue;
        for (EdgeId id = g.out_begin(v); id < g.out_end(v); ++id)
            if (r.winning[g.edge(id).target]) {
                r.strategy.set(v, id);
                break;
            }
    }
    return r;
}

}  // namespace univgraph
