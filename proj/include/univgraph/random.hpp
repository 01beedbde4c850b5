#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "univgraph/graph.hpp"

namespace univgraph {

/// Shapes of random games. Every vertex gets between min_out and max_out
/// successors; a min_out of 0 allows sinks.
struct RandomGameShape {
    std::size_t min_vertices = 1;
    std::size_t max_vertices = 6;
    std::size_t min_out = 1;
    std::size_t max_out = 3;
};

namespace detail {

template <class C, class Rng, class MakeColor>
Game<C> random_game(Rng& rng, const RandomGameShape& shape, MakeColor make_color) {
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    const std::size_t n = pick(shape.min_vertices, shape.max_vertices);
    std::vector<Player> owner(n);
    std::vector<Edge<C>> edges;
    for (Vertex v = 0; v < n; ++v) {
        owner[v] = pick(0, 1) ? Player::Adam : Player::Eve;
        const std::size_t k = pick(shape.min_out, shape.max_out);
        for (std::size_t i = 0; i < k; ++i) edges.push_back({v, make_color(), pick(0, n - 1)});
    }
    return {ColoredGraph<C>(n, std::move(edges)), std::move(owner)};
}

}  // namespace detail

template <class Rng>
Game<Priority> random_parity_game(Rng& rng, const RandomGameShape& shape, int d) {
    std::uniform_int_distribution<int> p(0, d);
    return detail::random_game<Priority>(rng, shape, [&] { return Priority{p(rng)}; });
}

template <class Rng>
Game<Weight> random_mp_game(Rng& rng, const RandomGameShape& shape, std::int64_t N) {
    std::uniform_int_distribution<std::int64_t> w(-N, N);
    return detail::random_game<Weight>(rng, shape, [&] { return Weight{w(rng)}; });
}

template <class Rng>
Game<ParityWeight> random_parity_mp_game(Rng& rng, const RandomGameShape& shape, int d, std::int64_t N) {
    std::uniform_int_distribution<int> p(0, d);
    std::uniform_int_distribution<std::int64_t> w(-N, N);
    return detail::random_game<ParityWeight>(rng, shape, [&] {
        int pr = p(rng);
        return ParityWeight{pr, w(rng)};
    });
}

template <class Rng>
Game<WeightVector> random_disj_mp_game(Rng& rng, const RandomGameShape& shape, std::size_t dim, std::int64_t N) {
    std::uniform_int_distribution<std::int64_t> w(-N, N);
    return detail::random_game<WeightVector>(rng, shape, [&] {
        WeightVector c;
        for (std::size_t i = 0; i < dim; ++i) c.values.push_back(w(rng));
        return c;
    });
}

template <class Rng>
Game<Unit> random_safety_game(Rng& rng, const RandomGameShape& shape) {
    return detail::random_game<Unit>(rng, shape, [] { return Unit{}; });
}

/// A random graph: each vertex gets up to max_out edges with colours from make_color.
template <class C, class Rng, class MakeColor>
ColoredGraph<C> random_graph(Rng& rng, std::size_t n, std::size_t max_out, MakeColor make_color) {
    std::uniform_int_distribution<std::size_t> deg(0, max_out), tgt(0, n == 0 ? 0 : n - 1);
    std::vector<Edge<C>> edges;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t k = deg(rng);
        for (std::size_t i = 0; i < k; ++i) edges.push_back({v, make_color(), tgt(rng)});
    }
    return ColoredGraph<C>(n, std::move(edges));
}

}  // namespace univgraph
