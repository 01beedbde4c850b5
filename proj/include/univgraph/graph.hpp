#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "univgraph/color.hpp"
#include "univgraph/errors.hpp"

namespace univgraph {

using Vertex = std::size_t;
using EdgeId = std::size_t;

template <class C>
struct Edge {
    Vertex source = 0;
    C color{};
    Vertex target = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Directed edge-coloured graph with set semantics on edges.
///
/// Edges are stored sorted by (source, colour, target), so the outgoing edges of
/// a vertex form a contiguous block and the edges of a given (source, colour)
/// pair are a contiguous sub-block. An EdgeId is a position in that order.
/// Immutable once built.
template <class C>
class ColoredGraph {
public:
    using color_type = C;

    ColoredGraph() { out_begin_.assign(1, 0); }

    ColoredGraph(std::size_t n, std::vector<Edge<C>> edges) : n_(n), edges_(std::move(edges)) {
        for (const auto& e : edges_)
            if (e.source >= n_ || e.target >= n_)
                throw InvalidInput("edge endpoint out of range (" + std::to_string(e.source) +
                                   " -> " + std::to_string(e.target) + ", " +
                                   std::to_string(n_) + " vertices)");
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        out_begin_.assign(n_ + 1, 0);
        for (const auto& e : edges_) ++out_begin_[e.source + 1];
        for (std::size_t v = 0; v < n_; ++v) out_begin_[v + 1] += out_begin_[v];

        in_begin_.assign(n_ + 1, 0);
        for (const auto& e : edges_) ++in_begin_[e.target + 1];
        for (std::size_t v = 0; v < n_; ++v) in_begin_[v + 1] += in_begin_[v];
        in_ids_.resize(edges_.size());
        std::vector<std::size_t> fill(in_begin_.begin(), in_begin_.end() - 1);
        for (EdgeId id = 0; id < edges_.size(); ++id) in_ids_[fill[edges_[id].target]++] = id;
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Edge<C>> edges() const noexcept { return edges_; }
    const Edge<C>& edge(EdgeId id) const { return edges_[id]; }

    EdgeId out_begin(Vertex v) const { return out_begin_[v]; }
    EdgeId out_end(Vertex v) const { return out_begin_[v + 1]; }
    std::size_t out_degree(Vertex v) const { return out_end(v) - out_begin(v); }
    bool is_sink(Vertex v) const { return out_degree(v) == 0; }

    std::span<const Edge<C>> out_edges(Vertex v) const {
        return std::span<const Edge<C>>(edges_).subspan(out_begin(v), out_degree(v));
    }

    /// Ids of the edges entering `v`, in increasing order.
    std::span<const EdgeId> in_edges(Vertex v) const {
        return std::span<const EdgeId>(in_ids_).subspan(in_begin_[v], in_begin_[v + 1] - in_begin_[v]);
    }

    /// Ids [first, last) of the edges leaving `v` with colour `c`.
    std::pair<EdgeId, EdgeId> successors(Vertex v, const C& c) const {
        auto block = out_edges(v);
        auto lo = std::lower_bound(block.begin(), block.end(), c,
                                   [](const Edge<C>& e, const C& col) { return e.color < col; });
        auto hi = std::upper_bound(lo, block.end(), c,
                                   [](const C& col, const Edge<C>& e) { return col < e.color; });
        return {out_begin(v) + static_cast<std::size_t>(lo - block.begin()),
                out_begin(v) + static_cast<std::size_t>(hi - block.begin())};
    }

    bool has_edge(Vertex v, const C& c, Vertex w) const {
        return std::binary_search(edges_.begin(), edges_.end(), Edge<C>{v, c, w});
    }

    std::optional<EdgeId> find_edge(Vertex v, const C& c, Vertex w) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge<C>{v, c, w});
        if (it == edges_.end() || *it != Edge<C>{v, c, w}) return std::nullopt;
        return static_cast<EdgeId>(it - edges_.begin());
    }

    /// Distinct colours used on edges, sorted.
    std::vector<C> colors() const {
        std::vector<C> out;
        for (const auto& e : edges_) out.push_back(e.color);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool operator==(const ColoredGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge<C>> edges_;
    std::vector<EdgeId> out_begin_;
    std::vector<EdgeId> in_begin_;
    std::vector<EdgeId> in_ids_;
};

/// Graph on the same vertices keeping only the edges accepted by `keep`.
template <class C, class Pred>
ColoredGraph<C> filter_edges(const ColoredGraph<C>& g, Pred keep) {
    std::vector<Edge<C>> kept;
    for (const auto& e : g.edges())
        if (keep(e)) kept.push_back(e);
    return ColoredGraph<C>(g.size(), std::move(kept));
}

/// Graph on the same vertices with every colour rewritten by `f`.
template <class C, class F>
auto map_colors(const ColoredGraph<C>& g, F f) {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<Edge<D>> out;
    out.reserve(g.edge_count());
    for (const auto& e : g.edges()) out.push_back({e.source, f(e.color), e.target});
    return ColoredGraph<D>(g.size(), std::move(out));
}

enum class Player : unsigned char { Eve, Adam };

inline Player opponent(Player p) { return p == Player::Eve ? Player::Adam : Player::Eve; }

/// An arena: a coloured graph whose vertices are partitioned between Eve and Adam.
template <class C>
class Game {
public:
    using color_type = C;

    Game() = default;
    Game(ColoredGraph<C> graph, std::vector<Player> owner)
        : graph_(std::move(graph)), owner_(std::move(owner)) {
        if (owner_.size() != graph_.size())
            throw InvalidInput("owner map covers " + std::to_string(owner_.size()) +
                               " vertices, graph has " + std::to_string(graph_.size()));
    }

    const ColoredGraph<C>& graph() const noexcept { return graph_; }
    std::size_t size() const noexcept { return graph_.size(); }
    Player owner(Vertex v) const { return owner_[v]; }
    bool is_eve(Vertex v) const { return owner_[v] == Player::Eve; }
    const std::vector<Player>& owners() const noexcept { return owner_; }

    bool operator==(const Game&) const = default;

private:
    ColoredGraph<C> graph_;
    std::vector<Player> owner_;
};

/// Eve's positional strategy: for each vertex, optionally the id of one of its
/// outgoing edges.
struct PositionalStrategy {
    std::vector<std::optional<EdgeId>> choice;

    PositionalStrategy() = default;
    explicit PositionalStrategy(std::size_t n) : choice(n) {}

    bool defined(Vertex v) const { return v < choice.size() && choice[v].has_value(); }
    EdgeId at(Vertex v) const { return *choice.at(v); }
    void set(Vertex v, EdgeId e) { choice.at(v) = e; }
};

/// Throws InvalidInput unless every chosen edge leaves its Eve vertex.
template <class C>
void validate_strategy(const Game<C>& game, const PositionalStrategy& sigma) {
    if (sigma.choice.size() != game.size())
        throw InvalidInput("strategy size does not match game size");
    for (Vertex v = 0; v < game.size(); ++v) {
        if (!sigma.choice[v]) continue;
        if (!game.is_eve(v)) throw InvalidInput("strategy defined at Adam vertex " + std::to_string(v));
        EdgeId e = *sigma.choice[v];
        if (e >= game.graph().edge_count() || game.graph().edge(e).source != v)
            throw InvalidInput("strategy edge does not leave vertex " + std::to_string(v));
    }
}

}  // namespace univgraph
