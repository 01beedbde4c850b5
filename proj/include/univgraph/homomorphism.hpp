#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"

namespace univgraph {

using VertexMap = std::vector<Vertex>;

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// True iff `map` sends every edge of `g` onto an edge of `h`.
template <class C>
bool is_homomorphism(const ColoredGraph<C>& g, const ColoredGraph<C>& h, const VertexMap& map) {
    if (map.size() != g.size()) return false;
    for (Vertex image : map)
        if (image >= h.size()) return false;
    for (const auto& e : g.edges())
        if (!h.has_edge(map[e.source], e.color, map[e.target])) return false;
    return true;
}

/// psi after phi.
inline VertexMap compose(const VertexMap& phi, const VertexMap& psi) {
    VertexMap out(phi.size());
    for (std::size_t v = 0; v < phi.size(); ++v) out[v] = psi.at(phi[v]);
    return out;
}

namespace detail {

template <class C>
class HomomorphismSearch {
public:
    HomomorphismSearch(const ColoredGraph<C>& g, const ColoredGraph<C>& h, std::uint64_t budget)
        : g_(g), h_(h), budget_(budget), adjacent_(g.size()) {
        for (const auto& e : g.edges()) {
            if (e.source == e.target) continue;
            adjacent_[e.source].push_back({e.target, e.color, true});
            adjacent_[e.target].push_back({e.source, e.color, false});
        }
    }

    std::optional<VertexMap> run() {
        const std::size_t n = g_.size();
        if (n == 0) return VertexMap{};
        if (h_.size() == 0) return std::nullopt;

        // Unary pruning from self-loops.
        Domains domains(n, std::vector<char>(h_.size(), 1));
        for (const auto& e : g_.edges())
            if (e.source == e.target)
                for (Vertex y = 0; y < h_.size(); ++y)
                    if (!h_.has_edge(y, e.color, y)) domains[e.source][y] = 0;

        assignment_.assign(n, 0);
        assigned_.assign(n, false);
        if (extend(0, domains)) return assignment_;
        return std::nullopt;
    }

private:
    using Domains = std::vector<std::vector<char>>;

    struct Neighbour {
        Vertex other;
        C color;
        bool outgoing;  // edge goes from this vertex to `other`
    };

    bool consistent(Vertex y, const Neighbour& nb, Vertex y_other) const {
        return nb.outgoing ? h_.has_edge(y, nb.color, y_other) : h_.has_edge(y_other, nb.color, y);
    }

    bool extend(Vertex x, Domains& domains) {
        if (x == g_.size()) return true;
        for (Vertex y = 0; y < h_.size(); ++y) {
            if (!domains[x][y]) continue;
            if (++nodes_ > budget_)
                throw BudgetExceeded("homomorphism search visited more than " +
                                     std::to_string(budget_) + " nodes");
            // Edges towards already assigned vertices.
            bool ok = true;
            for (const auto& nb : adjacent_[x])
                if (assigned_[nb.other] && !consistent(y, nb, assignment_[nb.other])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;

            // Forward checking on unassigned neighbours.
            Domains next = domains;
            for (const auto& nb : adjacent_[x]) {
                if (assigned_[nb.other]) continue;
                bool any = false;
                for (Vertex z = 0; z < h_.size(); ++z) {
                    if (!next[nb.other][z]) continue;
                    if (!consistent(y, nb, z)) next[nb.other][z] = 0;
                    else any = true;
                }
                if (!any) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;

            assignment_[x] = y;
            assigned_[x] = true;
            if (extend(x + 1, next)) return true;
            assigned_[x] = false;
        }
        return false;
    }

    const ColoredGraph<C>& g_;
    const ColoredGraph<C>& h_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<Neighbour>> adjacent_;
    VertexMap assignment_;
    std::vector<bool> assigned_;
};

}  // namespace detail

/// Backtracking search for a homomorphism g -> h.
///
/// Vertices of g are assigned in index order, candidates tried in h's vertex
/// order, with forward checking on neighbours. Returns nullopt only when the
/// search space is exhausted; throws BudgetExceeded past `budget` nodes.
template <class C>
std::optional<VertexMap> find_homomorphism(const ColoredGraph<C>& g, const ColoredGraph<C>& h,
                                           std::uint64_t budget = kDefaultSearchBudget) {
    auto found = detail::HomomorphismSearch<C>(g, h, budget).run();
    if (found && !is_homomorphism(g, h, *found))
        throw InternalError("homomorphism search returned an invalid map");
    return found;
}

}  // namespace univgraph
