#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"

namespace univgraph {

/// A state of a linear graph, identified by its position in the order
/// (0 = smallest). Rank -1 stands for bottom, rank size() for top.
using Rank = std::int64_t;

inline constexpr Rank kBottom = -1;

/// Ordered graphs exposing max-successor and min-predecessor.
///
/// delta(q, c): largest q' with an edge (q, c, q'), or kBottom.
/// rho(q', c): smallest q with an edge (q, c, q'), or size().
template <class L>
concept LinearGraph = requires(const L& lg, Rank q, const typename L::color_type& c) {
    { lg.size() } -> std::convertible_to<std::size_t>;
    { lg.delta(q, c) } -> std::same_as<Rank>;
    { lg.rho(q, c) } -> std::same_as<Rank>;
};

template <LinearGraph L>
Rank top(const L& lg) {
    return static_cast<Rank>(lg.size());
}

template <LinearGraph L>
Rank max_state(const L& lg) {
    return static_cast<Rank>(lg.size()) - 1;
}

/// In a linear graph, (q, c, q') is an edge iff q' <= delta(q, c).
template <LinearGraph L>
bool linear_has_edge(const L& lg, Rank q, const typename L::color_type& c, Rank q2) {
    return q2 <= lg.delta(q, c);
}

/// Which composition rule a violation breaks.
///
/// Left: larger >= smaller and (smaller, c, other) is an edge, (larger, c, other) is not.
/// Right: (other, c, larger) is an edge, (other, c, smaller) is not.
template <class C>
struct LinearityViolation {
    enum class Rule { Left, Right } rule;
    Vertex larger;
    Vertex smaller;
    C color;
    Vertex other;

    std::string describe() const {
        auto s = [](Vertex v) { return std::to_string(v); };
        if (rule == Rule::Left)
            return "left composition fails: " + s(larger) + " >= " + s(smaller) + ", edge " +
                   s(smaller) + " -> " + s(other) + " not matched from " + s(larger);
        return "right composition fails: edge " + s(other) + " -> " + s(larger) + " but not " +
               s(other) + " -> " + s(smaller);
    }
};

class NotLinear : public Error {
public:
    explicit NotLinear(const std::string& what) : Error("not linear under given order: " + what) {}
};

/// Checks both composition rules. `order` lists the vertices from smallest to largest.
template <class C>
std::optional<LinearityViolation<C>> find_linearity_violation(const ColoredGraph<C>& g,
                                                              const std::vector<Vertex>& order) {
    using V = LinearityViolation<C>;
    const std::size_t n = g.size();
    if (order.size() != n) throw InvalidInput("order does not cover every vertex");
    std::vector<std::size_t> rank(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || rank[order[i]] != n) throw InvalidInput("order is not a permutation");
        rank[order[i]] = i;
    }
    for (const C& c : g.colors()) {
        // Successor ranks of each vertex under c must form {0..max} and max must
        // be non-decreasing along the order.
        std::vector<Rank> top_succ(n, kBottom);
        for (std::size_t i = 0; i < n; ++i) {
            Vertex v = order[i];
            auto [lo, hi] = g.successors(v, c);
            std::vector<char> present(n, 0);
            for (EdgeId e = lo; e < hi; ++e) {
                std::size_t r = rank[g.edge(e).target];
                present[r] = 1;
                top_succ[i] = std::max<Rank>(top_succ[i], static_cast<Rank>(r));
            }
            for (Rank r = 0; r < top_succ[i]; ++r)
                if (!present[r])
                    return V{V::Rule::Right, order[top_succ[i]], order[r], c, v};
            if (i > 0 && top_succ[i] < top_succ[i - 1])
                return V{V::Rule::Left, v, order[i - 1], c, order[top_succ[i - 1]]};
        }
    }
    return std::nullopt;
}

template <class C>
bool check_linear(const ColoredGraph<C>& g, const std::vector<Vertex>& order) {
    return !find_linearity_violation(g, order).has_value();
}

/// A linear graph with delta and rho stored as tables over an explicit alphabet.
/// Colours outside the alphabet have no edges.
template <class C>
class TabulatedLinearGraph {
public:
    using color_type = C;

    TabulatedLinearGraph() = default;

    std::size_t size() const noexcept { return n_; }
    const std::vector<C>& alphabet() const noexcept { return alphabet_; }

    /// Original vertex of each rank, when built from a graph.
    const std::vector<Vertex>& vertex_of_rank() const noexcept { return order_; }

    Rank delta(Rank q, const C& c) const {
        auto i = color_index(c);
        return i ? delta_[*i * n_ + static_cast<std::size_t>(q)] : kBottom;
    }

    Rank rho(Rank q, const C& c) const {
        auto i = color_index(c);
        return i ? rho_[*i * n_ + static_cast<std::size_t>(q)] : static_cast<Rank>(n_);
    }

    template <class G>
    friend TabulatedLinearGraph<typename G::color_type> tabulate_linear(
        const G& lg, std::vector<typename G::color_type> alphabet);
    template <class D>
    friend TabulatedLinearGraph<D> linear_from_edges(const ColoredGraph<D>& g,
                                                     const std::vector<Vertex>& order);

private:
    std::optional<std::size_t> color_index(const C& c) const {
        auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
        if (it == alphabet_.end() || !(*it == c)) return std::nullopt;
        return static_cast<std::size_t>(it - alphabet_.begin());
    }

    void fill_rho() {
        rho_.assign(alphabet_.size() * n_, static_cast<Rank>(n_));
        for (std::size_t i = 0; i < alphabet_.size(); ++i) {
            // delta is non-decreasing, so rho(q') is the first q with delta(q) >= q'.
            std::size_t q = 0;
            for (std::size_t target = 0; target < n_; ++target) {
                while (q < n_ && delta_[i * n_ + q] < static_cast<Rank>(target)) ++q;
                rho_[i * n_ + target] = static_cast<Rank>(q);
            }
        }
    }

    std::size_t n_ = 0;
    std::vector<C> alphabet_;
    std::vector<Vertex> order_;
    std::vector<Rank> delta_;  // [colour][state]
    std::vector<Rank> rho_;
};

/// Tabulates any linear graph over a finite alphabet.
template <class G>
TabulatedLinearGraph<typename G::color_type> tabulate_linear(const G& lg,
                                                             std::vector<typename G::color_type> alphabet) {
    TabulatedLinearGraph<typename G::color_type> out;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    out.n_ = lg.size();
    out.alphabet_ = std::move(alphabet);
    out.order_.resize(out.n_);
    for (std::size_t q = 0; q < out.n_; ++q) out.order_[q] = q;
    out.delta_.resize(out.alphabet_.size() * out.n_);
    for (std::size_t i = 0; i < out.alphabet_.size(); ++i)
        for (std::size_t q = 0; q < out.n_; ++q)
            out.delta_[i * out.n_ + q] = lg.delta(static_cast<Rank>(q), out.alphabet_[i]);
    out.fill_rho();
    return out;
}

/// Builds delta/rho tables for `g` ordered by `order` (smallest first).
/// Throws NotLinear with a witness if a composition rule fails.
template <class C>
TabulatedLinearGraph<C> linear_from_edges(const ColoredGraph<C>& g, const std::vector<Vertex>& order) {
    if (auto bad = find_linearity_violation(g, order)) throw NotLinear(bad->describe());
    TabulatedLinearGraph<C> out;
    out.n_ = g.size();
    out.alphabet_ = g.colors();
    out.order_ = order;
    std::vector<std::size_t> rank(out.n_);
    for (std::size_t i = 0; i < out.n_; ++i) rank[order[i]] = i;
    out.delta_.assign(out.alphabet_.size() * out.n_, kBottom);
    for (const auto& e : g.edges()) {
        auto i = *out.color_index(e.color);
        Rank& slot = out.delta_[i * out.n_ + rank[e.source]];
        slot = std::max<Rank>(slot, static_cast<Rank>(rank[e.target]));
    }
    out.fill_rho();
    return out;
}

/// The explicit edge set of a linear graph over `alphabet`; vertex i is rank i.
template <LinearGraph L>
ColoredGraph<typename L::color_type> materialize(const L& lg,
                                                 const std::vector<typename L::color_type>& alphabet) {
    using C = typename L::color_type;
    std::vector<Edge<C>> edges;
    const Rank n = static_cast<Rank>(lg.size());
    for (Rank q = 0; q < n; ++q)
        for (const C& c : alphabet)
            for (Rank t = 0; t <= lg.delta(q, c); ++t)
                edges.push_back({static_cast<Vertex>(q), c, static_cast<Vertex>(t)});
    return ColoredGraph<C>(lg.size(), std::move(edges));
}

/// A complete-or-partial deterministic automaton over a finite alphabet.
/// A transition of kBottom means the run is rejected.
template <class C>
class DeterministicAutomaton {
public:
    using color_type = C;

    DeterministicAutomaton() = default;
    DeterministicAutomaton(std::size_t states, Rank initial, std::vector<C> alphabet, std::vector<Rank> next)
        : states_(states), initial_(initial), alphabet_(std::move(alphabet)), next_(std::move(next)) {
        if (!std::is_sorted(alphabet_.begin(), alphabet_.end()))
            throw InvalidInput("automaton alphabet must be sorted");
        if (next_.size() != states_ * alphabet_.size())
            throw InvalidInput("transition table has the wrong size");
    }

    std::size_t size() const noexcept { return states_; }
    Rank initial() const noexcept { return initial_; }
    const std::vector<C>& alphabet() const noexcept { return alphabet_; }

    Rank step(Rank q, const C& c) const {
        if (q < 0) return kBottom;
        auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
        if (it == alphabet_.end() || !(*it == c)) return kBottom;
        return next_[static_cast<std::size_t>(q) * alphabet_.size() +
                     static_cast<std::size_t>(it - alphabet_.begin())];
    }

    /// Runs a word from the initial state; kBottom once rejected.
    template <class Range>
    Rank run(const Range& word) const {
        Rank q = initial_;
        for (const auto& c : word) {
            q = step(q, c);
            if (q == kBottom) break;
        }
        return q;
    }

    /// The transition graph.
    ColoredGraph<C> graph() const {
        std::vector<Edge<C>> edges;
        for (std::size_t q = 0; q < states_; ++q)
            for (std::size_t i = 0; i < alphabet_.size(); ++i) {
                Rank t = next_[q * alphabet_.size() + i];
                if (t != kBottom) edges.push_back({q, alphabet_[i], static_cast<Vertex>(t)});
            }
        return ColoredGraph<C>(states_, std::move(edges));
    }

private:
    std::size_t states_ = 0;
    Rank initial_ = 0;
    std::vector<C> alphabet_;
    std::vector<Rank> next_;
};

/// Det(lg): same states, initial state max, transition delta.
template <LinearGraph L>
DeterministicAutomaton<typename L::color_type> determinise(const L& lg,
                                                            std::vector<typename L::color_type> alphabet) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::vector<Rank> next;
    next.reserve(lg.size() * alphabet.size());
    for (Rank q = 0; q < static_cast<Rank>(lg.size()); ++q)
        for (const auto& c : alphabet) next.push_back(lg.delta(q, c));
    return {lg.size(), max_state(lg), std::move(alphabet), std::move(next)};
}

template <class C>
DeterministicAutomaton<C> determinise(const TabulatedLinearGraph<C>& lg) {
    return determinise(lg, lg.alphabet());
}

}  // namespace univgraph
