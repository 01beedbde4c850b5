#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/linear_graph.hpp"

namespace univgraph {

struct ValueIterationResult {
    /// Final map; a value equal to `top` means the vertex is losing.
    std::vector<Rank> theta;
    Rank top = 0;
    std::vector<bool> winning;
    std::size_t lifts = 0;
    std::size_t rounds = 0;
    std::size_t edge_touches = 0;
};

using RoundObserver = std::function<void(const std::vector<Rank>&)>;

namespace detail {

template <LinearGraph L>
class ValueIteration {
public:
    using C = typename L::color_type;

    ValueIteration(const Game<C>& game, const L& lg) : game_(game), g_(game.graph()), lg_(lg), top_(top(lg)) {}

    ValueIterationResult run(const RoundObserver& observer) {
        const std::size_t n = g_.size();
        theta_.assign(n, top_ == 0 ? top_ : 0);
        count_.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) count_[v] = count_good(v);

        std::vector<Vertex> invalid;
        for (Vertex v = 0; v < n; ++v)
            if (is_invalid(v)) invalid.push_back(v);

        std::vector<char> queued(n, 0), lifted(n, 0);
        std::vector<Rank> old_theta(n, 0);
        while (!invalid.empty()) {
            ++rounds_;
            // All new values are computed from the same snapshot, then applied.
            std::vector<Rank> next(invalid.size());
            for (std::size_t i = 0; i < invalid.size(); ++i) next[i] = update(invalid[i]);
            for (std::size_t i = 0; i < invalid.size(); ++i) {
                Vertex v = invalid[i];
                if (next[i] <= theta_[v]) throw InternalError("value iteration failed to lift an invalid vertex");
                old_theta[v] = theta_[v];
                theta_[v] = next[i];
                lifted[v] = 1;
                ++lifts_;
            }

            std::vector<Vertex> candidates;
            for (Vertex v : invalid) {
                for (EdgeId id : g_.in_edges(v)) {
                    ++touches_;
                    const auto& e = g_.edge(id);
                    Vertex u = e.source;
                    if (lifted[u]) continue;
                    Rank reach = step(theta_[u], e.color);
                    if (old_theta[v] <= reach && reach < theta_[v]) {
                        --count_[u];
                        if (!queued[u]) {
                            queued[u] = 1;
                            candidates.push_back(u);
                        }
                    }
                }
            }
            for (Vertex v : invalid) {
                count_[v] = count_good(v);
                if (!queued[v]) {
                    queued[v] = 1;
                    candidates.push_back(v);
                }
            }
            for (Vertex v : invalid) lifted[v] = 0;

            invalid.clear();
            std::sort(candidates.begin(), candidates.end());
            for (Vertex v : candidates) {
                queued[v] = 0;
                if (is_invalid(v)) invalid.push_back(v);
            }
            if (observer) observer(theta_);
        }

        ValueIterationResult r;
        r.top = top_;
        r.winning.assign(n, false);
        for (Vertex v = 0; v < n; ++v) r.winning[v] = theta_[v] < top_;
        r.theta = std::move(theta_);
        r.lifts = lifts_;
        r.rounds = rounds_;
        r.edge_touches = touches_;
        return r;
    }

private:
    Rank step(Rank q, const C& c) const { return q == top_ ? top_ : lg_.delta(q, c); }
    Rank back(Rank q, const C& c) const { return q == top_ ? top_ : lg_.rho(q, c); }

    bool good(const Edge<C>& e) const { return theta_[e.target] <= step(theta_[e.source], e.color); }

    std::size_t count_good(Vertex v) {
        std::size_t k = 0;
        for (const auto& e : g_.out_edges(v)) {
            ++touches_;
            k += good(e);
        }
        return k;
    }

    bool is_invalid(Vertex v) const {
        if (theta_[v] == top_) return false;
        return game_.is_eve(v) ? count_[v] == 0 : count_[v] < g_.out_degree(v);
    }

    // Least value making v valid against the current snapshot:
    // min over edges of rho for Eve (top if none), max for Adam (0 if none).
    Rank update(Vertex v) const {
        if (game_.is_eve(v)) {
            Rank best = top_;
            for (const auto& e : g_.out_edges(v)) best = std::min(best, back(theta_[e.target], e.color));
            return best;
        }
        Rank best = 0;
        for (const auto& e : g_.out_edges(v)) best = std::max(best, back(theta_[e.target], e.color));
        return best;
    }

    const Game<C>& game_;
    const ColoredGraph<C>& g_;
    const L& lg_;
    Rank top_;
    std::vector<Rank> theta_;
    std::vector<std::size_t> count_;
    std::size_t lifts_ = 0;
    std::size_t rounds_ = 0;
    std::size_t touches_ = 0;
};

}  // namespace detail

/// Least map theta : V -> Q + {top} with no invalid vertex, where an edge
/// (v, c, v') is valid when theta(v') <= delta(theta(v), c). Eve wins exactly
/// where theta stays below top. `observer`, if set, sees theta after each round.
template <class C, LinearGraph L>
    requires std::same_as<C, typename L::color_type>
ValueIterationResult value_iteration(const Game<C>& game, const L& lg, const RoundObserver& observer = {}) {
    return detail::ValueIteration<L>(game, lg).run(observer);
}

/// For each winning Eve vertex, the lowest-indexed edge that keeps theta valid.
template <class C, LinearGraph L>
PositionalStrategy extract_strategy(const Game<C>& game, const L& lg, const std::vector<Rank>& theta) {
    const auto& g = game.graph();
    const Rank t = top(lg);
    PositionalStrategy sigma(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!game.is_eve(v) || theta.at(v) >= t) continue;
        for (EdgeId id = g.out_begin(v); id < g.out_end(v); ++id) {
            const auto& e = g.edge(id);
            if (theta[e.target] <= lg.delta(theta[v], e.color)) {
                sigma.set(v, id);
                break;
            }
        }
        if (!sigma.defined(v))
            throw InternalError("no valid edge at winning vertex " + std::to_string(v));
    }
    return sigma;
}

}  // namespace univgraph
