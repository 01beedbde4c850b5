#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/objectives.hpp"
#include "univgraph/strategy.hpp"

namespace univgraph {

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

namespace detail {

// Calls visit on every positional strategy of `who`; vertices without moves stay undefined.
template <class C>
void for_each_positional_strategy(const Game<C>& game, Player who, std::uint64_t budget,
                                  const std::function<void(const PositionalStrategy&)>& visit) {
    const auto& g = game.graph();
    std::vector<Vertex> choosers;
    std::uint64_t total = 1;
    for (Vertex v = 0; v < g.size(); ++v)
        if (game.owner(v) == who && !g.is_sink(v)) {
            choosers.push_back(v);
            total *= g.out_degree(v);
            if (total > budget)
                throw BudgetExceeded("more than " + std::to_string(budget) + " positional strategies");
        }
    PositionalStrategy s(g.size());
    for (Vertex v : choosers) s.set(v, g.out_begin(v));
    while (true) {
        visit(s);
        std::size_t i = 0;
        for (; i < choosers.size(); ++i) {
            Vertex v = choosers[i];
            EdgeId next = s.at(v) + 1;
            if (next < g.out_end(v)) {
                s.set(v, next);
                break;
            }
            s.set(v, g.out_begin(v));
        }
        if (i == choosers.size()) break;
    }
}

}  // namespace detail

/// Eve's winning region by trying every positional strategy.
template <class C>
std::vector<bool> brute_force_solve(const Game<C>& game, std::uint64_t budget = kDefaultOracleBudget) {
    std::vector<bool> winning(game.size(), false);
    detail::for_each_positional_strategy<C>(game, Player::Eve, budget, [&](const PositionalStrategy& s) {
        for (Vertex v = 0; v < game.size(); ++v)
            if (!winning[v] && verify_strategy(game, s, v)) winning[v] = true;
    });
    return winning;
}

namespace detail {

// Adam wins every play of r: every cycle is odd, i.e. shifting priorities by
// one makes all cycles even.
inline bool adam_wins_plays(const ColoredGraph<Priority>& g) {
    return check_parity(map_colors(g, [](const Priority& c) { return Priority{c.value + 1}; }));
}

// Every cycle is negative, i.e. -((n+1)w + 1) has no negative cycle.
inline bool adam_wins_plays(const ColoredGraph<Weight>& g) {
    const auto n = static_cast<std::int64_t>(g.size());
    return check_mean_payoff(map_colors(g, [n](const Weight& c) { return Weight{-((n + 1) * c.value + 1)}; }));
}

}  // namespace detail

/// Adam's winning region by trying every positional Adam strategy. Only for
/// parity and mean payoff, whose complements have cycle characterisations.
template <class C>
    requires std::same_as<C, Priority> || std::same_as<C, Weight>
std::vector<bool> brute_force_solve_adam(const Game<C>& game, std::uint64_t budget = kDefaultOracleBudget) {
    std::vector<bool> winning(game.size(), false);
    detail::for_each_positional_strategy<C>(game, Player::Adam, budget, [&](const PositionalStrategy& s) {
        for (Vertex v = 0; v < game.size(); ++v) {
            if (winning[v]) continue;
            auto r = detail::restrict_plays(game, s, v, Player::Adam);
            if (!r.adam_sink_reachable && detail::adam_wins_plays(r.graph)) winning[v] = true;
        }
    });
    return winning;
}

}  // namespace univgraph
