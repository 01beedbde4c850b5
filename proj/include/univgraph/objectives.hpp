#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "univgraph/graph.hpp"
#include "univgraph/scc.hpp"

namespace univgraph {

namespace detail {

struct WeightedArc {
    Vertex source;
    std::int64_t weight;
    Vertex target;
};

// Bellman-Ford from a virtual source joined to every vertex by 0-arcs.
inline bool has_negative_cycle(std::size_t n, const std::vector<WeightedArc>& arcs) {
    if (n == 0 || arcs.empty()) return false;
    std::vector<std::int64_t> dist(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
        bool changed = false;
        for (const auto& a : arcs) {
            if (dist[a.source] + a.weight < dist[a.target]) {
                dist[a.target] = dist[a.source] + a.weight;
                changed = true;
            }
        }
        if (!changed) return false;
    }
    return true;
}

// Arcs of each SCC, with endpoints renumbered locally.
template <class C, class W>
std::vector<std::vector<WeightedArc>> arcs_per_component(const ColoredGraph<C>& g,
                                                         const SccDecomposition& scc, W weight_of) {
    std::vector<std::size_t> local(g.size(), 0);
    for (const auto& comp : scc.components)
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<std::vector<WeightedArc>> arcs(scc.components.size());
    for (const auto& e : g.edges()) {
        std::size_t c = scc.component_of[e.source];
        if (c == scc.component_of[e.target])
            arcs[c].push_back({local[e.source], weight_of(e.color), local[e.target]});
    }
    return arcs;
}

template <class C, class PriorityOf>
std::vector<int> odd_priorities(const ColoredGraph<C>& g, PriorityOf prio) {
    std::set<int> odd;
    for (const auto& e : g.edges())
        if (prio(e.color) % 2 != 0) odd.insert(prio(e.color));
    return {odd.begin(), odd.end()};
}

}  // namespace detail

/// True iff every cycle of `g` has an even maximal priority.
///
/// For each odd p, an odd cycle with maximum p exists iff some SCC of the
/// subgraph of edges with priority <= p contains a p-edge internally.
inline bool check_parity(const ColoredGraph<Priority>& g) {
    for (int p : detail::odd_priorities(g, [](const Priority& c) { return c.value; })) {
        auto sub = filter_edges(g, [p](const Edge<Priority>& e) { return e.color.value <= p; });
        auto scc = scc_decompose(sub);
        for (const auto& e : sub.edges())
            if (e.color.value == p && scc.component_of[e.source] == scc.component_of[e.target])
                return false;
    }
    return true;
}

/// True iff `g` has no cycle of negative total weight.
inline bool check_mean_payoff(const ColoredGraph<Weight>& g) {
    auto scc = scc_decompose(g);
    auto arcs = detail::arcs_per_component(g, scc, [](const Weight& w) { return w.value; });
    for (std::size_t c = 0; c < arcs.size(); ++c)
        if (detail::has_negative_cycle(scc.components[c].size(), arcs[c])) return false;
    return true;
}

/// True iff every SCC has some dimension along which it has no negative cycle.
/// Components without internal edges carry no cycle and are always fine.
inline bool check_disj_mp(const ColoredGraph<WeightVector>& g) {
    if (g.edge_count() == 0) return true;
    const std::size_t dim = g.edge(0).color.dim();
    auto scc = scc_decompose(g);
    std::vector<std::vector<std::vector<detail::WeightedArc>>> arcs;  // [dimension][component]
    for (std::size_t i = 0; i < dim; ++i)
        arcs.push_back(detail::arcs_per_component(
            g, scc, [i](const WeightVector& c) { return c.values.at(i); }));
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
        bool has_internal = false;
        for (Vertex v : scc.components[c])
            for (const auto& e : g.out_edges(v)) has_internal |= scc.component_of[e.target] == c;
        if (!has_internal) continue;
        bool some_dimension_ok = false;
        for (std::size_t i = 0; i < dim && !some_dimension_ok; ++i)
            some_dimension_ok = !detail::has_negative_cycle(scc.components[c].size(), arcs[i][c]);
        if (!some_dimension_ok) return false;
    }
    return true;
}

/// True iff every infinite path satisfies the parity condition or the mean
/// payoff condition.
///
/// A violating path exists iff for some odd p, the subgraph of edges with
/// priority <= p has an SCC containing both an internal p-edge and a negative
/// cycle: pumping the negative cycle ever more between visits of the p-edge
/// defeats both disjuncts, and conversely the edges seen infinitely often by a
/// violating path form such a component.
inline bool check_parity_mp(const ColoredGraph<ParityWeight>& g) {
    for (int p : detail::odd_priorities(g, [](const ParityWeight& c) { return c.priority; })) {
        auto sub = filter_edges(g, [p](const Edge<ParityWeight>& e) { return e.color.priority <= p; });
        auto scc = scc_decompose(sub);
        std::vector<bool> has_top(scc.components.size(), false);
        for (const auto& e : sub.edges())
            if (e.color.priority == p && scc.component_of[e.source] == scc.component_of[e.target])
                has_top[scc.component_of[e.source]] = true;
        auto arcs = detail::arcs_per_component(sub, scc, [](const ParityWeight& c) { return c.weight; });
        for (std::size_t c = 0; c < arcs.size(); ++c)
            if (has_top[c] && detail::has_negative_cycle(scc.components[c].size(), arcs[c])) return false;
    }
    return true;
}

/// Safety: every infinite path is winning.
inline bool check_safety(const ColoredGraph<Unit>&) { return true; }

/// Objective dispatch by colour family.
inline bool satisfies_objective(const ColoredGraph<Unit>& g) { return check_safety(g); }
inline bool satisfies_objective(const ColoredGraph<Priority>& g) { return check_parity(g); }
inline bool satisfies_objective(const ColoredGraph<Weight>& g) { return check_mean_payoff(g); }
inline bool satisfies_objective(const ColoredGraph<WeightVector>& g) { return check_disj_mp(g); }
inline bool satisfies_objective(const ColoredGraph<ParityWeight>& g) { return check_parity_mp(g); }

/// Projection of a vector-weighted graph onto one dimension.
inline ColoredGraph<Weight> project(const ColoredGraph<WeightVector>& g, std::size_t dim) {
    return map_colors(g, [dim](const WeightVector& c) { return Weight{c.values.at(dim)}; });
}

}  // namespace univgraph
