#pragma once

#include <cstddef>
#include <vector>

#include "univgraph/graph.hpp"
#include "univgraph/linear_graph.hpp"

namespace univgraph {

/// A safety game built from a game and an automaton, with the index scheme
/// needed to read results back.
struct ProductGame {
    Game<Unit> game;
    std::size_t base_vertices = 0;
    std::size_t base_edges = 0;
    std::size_t q_size = 0;

    /// Id of (v, q).
    Vertex vertex(Vertex v, std::size_t q) const { return v * q_size + q; }
    /// Id of (e, q); general product only.
    Vertex edge_vertex(EdgeId e, std::size_t q) const { return base_vertices * q_size + e * q_size + q; }
    /// The losing sink; simplified product only.
    Vertex bottom() const { return base_vertices * q_size; }
};

/// G |> A: Eve picks nothing at (v, q) beyond what the owner of v picks, then at
/// (e, q) with e = (v, c, v') she resolves the automaton's choice of a
/// c-successor q'. Vertices V x Q followed by E x Q.
template <class C>
ProductGame product_general(const Game<C>& game, const ColoredGraph<C>& automaton) {
    const auto& g = game.graph();
    ProductGame p;
    p.base_vertices = g.size();
    p.base_edges = g.edge_count();
    p.q_size = automaton.size();
    const std::size_t n = (g.size() + g.edge_count()) * p.q_size;
    std::vector<Player> owner(n, Player::Eve);
    std::vector<Edge<Unit>> edges;
    for (Vertex v = 0; v < g.size(); ++v)
        for (std::size_t q = 0; q < p.q_size; ++q) {
            owner[p.vertex(v, q)] = game.owner(v);
            for (EdgeId e = g.out_begin(v); e < g.out_end(v); ++e)
                edges.push_back({p.vertex(v, q), {}, p.edge_vertex(e, q)});
        }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        for (std::size_t q = 0; q < p.q_size; ++q) {
            auto [lo, hi] = automaton.successors(q, edge.color);
            for (EdgeId a = lo; a < hi; ++a)
                edges.push_back({p.edge_vertex(e, q), {}, p.vertex(edge.target, automaton.edge(a).target)});
        }
    }
    p.game = Game<Unit>(ColoredGraph<Unit>(n, std::move(edges)), std::move(owner));
    return p;
}

/// Product with a linear graph: (v, q) moves along (v, c, v') to
/// (v', delta(q, c)), or to the Eve-owned sink bottom when delta is undefined.
template <class C, LinearGraph L>
ProductGame product_simplified(const Game<C>& game, const L& lg) {
    const auto& g = game.graph();
    ProductGame p;
    p.base_vertices = g.size();
    p.base_edges = g.edge_count();
    p.q_size = lg.size();
    const std::size_t n = g.size() * p.q_size + 1;
    std::vector<Player> owner(n, Player::Eve);
    std::vector<Edge<Unit>> edges;
    for (Vertex v = 0; v < g.size(); ++v)
        for (std::size_t q = 0; q < p.q_size; ++q) {
            owner[p.vertex(v, q)] = game.owner(v);
            for (const auto& e : g.out_edges(v)) {
                Rank next = lg.delta(static_cast<Rank>(q), e.color);
                Vertex to = next == kBottom ? p.bottom() : p.vertex(e.target, static_cast<std::size_t>(next));
                edges.push_back({p.vertex(v, q), {}, to});
            }
        }
    p.game = Game<Unit>(ColoredGraph<Unit>(n, std::move(edges)), std::move(owner));
    return p;
}

}  // namespace univgraph
