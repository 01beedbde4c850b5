#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "univgraph/graph.hpp"

namespace univgraph {

struct SccDecomposition {
    /// Components in topological order: every edge between distinct
    /// components goes from an earlier to a later one. Vertices sorted.
    std::vector<std::vector<Vertex>> components;
    /// component_of[v] indexes `components`.
    std::vector<std::size_t> component_of;
};

/// Tarjan's algorithm, iterative.
template <class C>
SccDecomposition scc_decompose(const ColoredGraph<C>& g) {
    constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.size();
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> reverse_topo;
    std::size_t counter = 0;

    struct Frame {
        Vertex v;
        EdgeId next;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, g.out_begin(root)});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < g.out_end(f.v)) {
                Vertex w = g.edge(f.next++).target;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, g.out_begin(w)});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                reverse_topo.push_back(std::move(comp));
            }
        }
    }

    SccDecomposition out;
    out.components.assign(reverse_topo.rbegin(), reverse_topo.rend());
    out.component_of.assign(n, 0);
    for (std::size_t i = 0; i < out.components.size(); ++i)
        for (Vertex v : out.components[i]) out.component_of[v] = i;
    return out;
}

/// Subgraph induced by `vertices`, renumbered 0..k-1 in the given order.
template <class C>
ColoredGraph<C> induced_subgraph(const ColoredGraph<C>& g, const std::vector<Vertex>& vertices) {
    constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> local(g.size(), kAbsent);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
    std::vector<Edge<C>> edges;
    for (Vertex v : vertices)
        for (const auto& e : g.out_edges(v))
            if (local[e.target] != kAbsent) edges.push_back({local[v], e.color, local[e.target]});
    return ColoredGraph<C>(vertices.size(), std::move(edges));
}

}  // namespace univgraph
