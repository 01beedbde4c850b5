#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/linear_graph.hpp"
#include "univgraph/objectives.hpp"

namespace univgraph {

/// Adds every edge over `alphabet` that keeps the objective, trying candidates
/// in lexicographic (source, colour, target) order. One pass is enough: a
/// candidate rejected once stays rejected as the graph only grows.
template <class C>
ColoredGraph<C> saturate(const ColoredGraph<C>& g, std::vector<C> alphabet) {
    if (!satisfies_objective(g)) throw InvalidInput("input violates objective");
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::vector<Edge<C>> edges(g.edges().begin(), g.edges().end());
    ColoredGraph<C> cur = g;
    for (Vertex v = 0; v < g.size(); ++v)
        for (const C& c : alphabet)
            for (Vertex w = 0; w < g.size(); ++w) {
                if (cur.has_edge(v, c, w)) continue;
                edges.push_back({v, c, w});
                ColoredGraph<C> next(g.size(), edges);
                if (satisfies_objective(next)) cur = std::move(next);
                else edges.pop_back();
            }
    return cur;
}

/// The order of a saturated graph: v >= v' iff (v, neutral, v') is an edge.
/// Vertices listed smallest first; ties broken by index.
template <class C>
std::vector<Vertex> linear_order(const ColoredGraph<C>& g, const C& neutral) {
    const std::size_t n = g.size();
    std::vector<std::size_t> below(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w) {
            bool vw = g.has_edge(v, neutral, w);
            if (!vw && !g.has_edge(w, neutral, v))
                throw InvalidInput("0-edge relation not total (" + std::to_string(v) + ", " +
                                   std::to_string(w) + ")");
            below[v] += vw;
        }
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return below[a] < below[b]; });
    return order;
}

template <class C>
std::vector<Vertex> linear_order(const ColoredGraph<C>& g) {
    return linear_order(g, neutral_color(C{}));
}

inline std::vector<Vertex> linear_order(const ColoredGraph<WeightVector>& g) {
    if (g.edge_count() == 0) {
        if (g.size() <= 1) return std::vector<Vertex>(g.size(), 0);
        throw InvalidInput("0-edge relation not total");
    }
    return linear_order(g, neutral_color(g.edge(0).color));
}

/// True iff for every word of length <= horizon over `alphabet`, some path of g
/// is labelled by it exactly when the automaton's run on it is defined.
template <class C>
bool languages_agree(const ColoredGraph<C>& g, const DeterministicAutomaton<C>& a, const std::vector<C>& alphabet,
                     int horizon) {
    if (g.size() > 63) throw InvalidInput("language comparison limited to 63 vertices");
    using Mask = std::uint64_t;
    const Mask all = g.size() == 0 ? 0 : (g.size() == 64 ? ~Mask{0} : ((Mask{1} << g.size()) - 1));
    std::map<std::pair<Mask, Rank>, int> explored;  // deepest remaining horizon seen
    std::vector<std::tuple<Mask, Rank, int>> stack{{all, a.size() ? a.initial() : kBottom, horizon}};
    if ((all != 0) != (a.size() != 0)) return false;
    while (!stack.empty()) {
        auto [mask, q, left] = stack.back();
        stack.pop_back();
        if (left == 0 || mask == 0) continue;
        auto key = std::make_pair(mask, q);
        auto it = explored.find(key);
        if (it != explored.end() && it->second >= left) continue;
        explored[key] = left;
        for (const C& c : alphabet) {
            Mask next = 0;
            for (Vertex v = 0; v < g.size(); ++v) {
                if (!(mask >> v & 1)) continue;
                auto [lo, hi] = g.successors(v, c);
                for (EdgeId e = lo; e < hi; ++e) next |= Mask{1} << g.edge(e).target;
            }
            Rank nq = a.step(q, c);
            if ((next != 0) != (nq != kBottom)) return false;
            stack.push_back({next, nq, left - 1});
        }
    }
    return true;
}

}  // namespace univgraph
