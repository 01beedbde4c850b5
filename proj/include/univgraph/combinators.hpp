#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/linear_graph.hpp"
#include "univgraph/mp_universal.hpp"
#include "univgraph/parity_universal.hpp"

namespace univgraph {

/// u_n = u_{floor(n/2)} . (n) . u_{n-1-floor(n/2)}, u_0 empty.
inline std::vector<int> universal_sequence(int n) {
    if (n < 0) throw InvalidInput("universal_sequence needs n >= 0");
    if (n == 0) return {};
    auto out = universal_sequence(n / 2);
    out.push_back(n);
    auto right = universal_sequence(n - 1 - n / 2);
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

/// Increasing f with v[i] <= u[f(i)], matching each entry to the first
/// available position; nullopt when none exists.
inline std::optional<std::vector<std::size_t>> seq_embed(const std::vector<int>& v, const std::vector<int>& u) {
    std::vector<std::size_t> f;
    std::size_t j = 0;
    for (int x : v) {
        while (j < u.size() && u[j] < x) ++j;
        if (j == u.size()) return std::nullopt;
        f.push_back(j++);
    }
    return f;
}

template <class C>
struct SequentialProduct {
    ColoredGraph<C> graph;
    /// First vertex of each part, plus the total at the end.
    std::vector<std::size_t> offsets;
};

/// Disjoint union of the parts plus every forward edge (u, c, v), u in an
/// earlier part than v, for every c of `alphabet`.
template <class C>
SequentialProduct<C> sequential_product(const std::vector<ColoredGraph<C>>& parts, const std::vector<C>& alphabet) {
    SequentialProduct<C> out;
    out.offsets.push_back(0);
    for (const auto& p : parts) out.offsets.push_back(out.offsets.back() + p.size());
    std::vector<Edge<C>> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::size_t base = out.offsets[i];
        for (const auto& e : parts[i].edges()) edges.push_back({base + e.source, e.color, base + e.target});
        for (Vertex v = base; v < out.offsets[i + 1]; ++v)
            for (const C& c : alphabet)
                for (Vertex w = out.offsets[i + 1]; w < out.offsets.back(); ++w) edges.push_back({v, c, w});
    }
    out.graph = ColoredGraph<C>(out.offsets.back(), std::move(edges));
    return out;
}

/// Sequential product of part_builder(x) over the entries x of u_n.
template <class C>
SequentialProduct<C> scc_universal(int n, const std::function<ColoredGraph<C>(int)>& part_builder,
                                   const std::vector<C>& alphabet) {
    std::vector<ColoredGraph<C>> parts;
    for (int x : universal_sequence(n)) parts.push_back(part_builder(x));
    return sequential_product(parts, alphabet);
}

/// d disjoint copies of G([0,(k-1)N]); copy i reads component i of the vector.
inline ColoredGraph<WeightVector> disj_mp_part(int k, int d, std::int64_t N, const std::vector<WeightVector>& alphabet) {
    IntegerGraph base = integer_graph(universal_set_interval(k, N));
    const std::size_t m = base.size();
    std::vector<Edge<WeightVector>> edges;
    for (int i = 0; i < d; ++i)
        for (Rank q = 0; q < static_cast<Rank>(m); ++q)
            for (const auto& c : alphabet) {
                Rank top_target = base.delta(q, Weight{c.values.at(i)});
                for (Rank t = 0; t <= top_target; ++t)
                    edges.push_back({i * m + static_cast<std::size_t>(q), c, i * m + static_cast<std::size_t>(t)});
            }
    return ColoredGraph<WeightVector>(m * d, std::move(edges));
}

/// Universal graph for disjunctions of d mean payoff objectives, restricted to
/// `alphabet` (all of [-N,N]^d when empty).
inline ColoredGraph<WeightVector> disj_mp_universal(int n, int d, std::int64_t N, std::vector<WeightVector> alphabet = {}) {
    if (d < 1) throw InvalidInput("disj_mp_universal needs d >= 1");
    if (alphabet.empty()) alphabet = weight_vector_alphabet(static_cast<std::size_t>(d), N);
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    for (const auto& c : alphabet)
        if (c.dim() != static_cast<std::size_t>(d)) throw InvalidInput("colour dimension differs from d");
    std::function<ColoredGraph<WeightVector>(int)> build = [&](int k) { return disj_mp_part(k, d, N, alphabet); };
    return scc_universal<WeightVector>(n, build, alphabet).graph;
}

/// Predicted vertex count: d * sum over x in u_n of ((x-1)N + 1).
inline std::size_t disj_mp_universal_size(int n, int d, std::int64_t N) {
    std::size_t total = 0;
    for (int x : universal_sequence(n)) total += static_cast<std::size_t>(d) * static_cast<std::size_t>((x - 1) * N + 1);
    return total;
}

struct ParityMpAutomaton {
    DeterministicAutomaton<ParityWeight> automaton;
    /// (p, parity state, mean payoff state) behind each state.
    std::vector<std::tuple<int, Rank, Rank>> labels;
};

/// Separating automaton for Parity(d) or MP: the parity component tracks the
/// largest priority seen since the last reset; a reset happens when the mean
/// payoff automaton rejects, feeding that priority to the parity automaton and
/// restarting the mean payoff one. Only states reachable from (d, q0, q0) are built.
template <LinearGraph P, LinearGraph M>
    requires std::same_as<typename P::color_type, Priority> && std::same_as<typename M::color_type, Weight>
ParityMpAutomaton parity_mp_separating(const P& parity_part, const M& mp_part, int d, std::vector<ParityWeight> alphabet,
                                       std::uint64_t budget = kDefaultConstructionBudget) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    ParityMpAutomaton out;
    if (parity_part.size() == 0 || mp_part.size() == 0) {
        out.automaton = DeterministicAutomaton<ParityWeight>(0, kBottom, alphabet, {});
        return out;
    }
    using Key = std::tuple<int, Rank, Rank>;
    const Rank q0p = max_state(parity_part), q0m = max_state(mp_part);
    std::map<Key, Rank> id;
    std::vector<Rank> next;
    std::queue<Key> todo;
    auto intern = [&](const Key& k) {
        auto [it, fresh] = id.emplace(k, static_cast<Rank>(out.labels.size()));
        if (fresh) {
            if (out.labels.size() >= budget) throw BudgetExceeded("separating automaton state count");
            out.labels.push_back(k);
            todo.push(k);
        }
        return it->second;
    };
    intern({d, q0p, q0m});
    while (!todo.empty()) {
        auto [p, qp, qm] = todo.front();
        todo.pop();
        for (const auto& c : alphabet) {
            const int top_priority = std::max(p, c.priority);
            Rank qm2 = mp_part.delta(qm, Weight{c.weight});
            if (qm2 != kBottom) {
                next.push_back(intern({top_priority, qp, qm2}));
                continue;
            }
            Rank qp2 = parity_part.delta(qp, Priority{top_priority});
            next.push_back(qp2 == kBottom ? kBottom : intern({0, qp2, q0m}));
        }
    }
    out.automaton = DeterministicAutomaton<ParityWeight>(out.labels.size(), 0, alphabet, std::move(next));
    return out;
}

/// The standard instance: universal tree of height d/2 for parity, G(set) for mean payoff.
inline ParityMpAutomaton parity_mp_separating(int n, int d, const IntegerGraphSpec& mp_set,
                                              std::vector<ParityWeight> alphabet = {},
                                              std::uint64_t budget = kDefaultConstructionBudget) {
    if (d < 0 || d % 2 != 0) throw InvalidInput("d must be even and non-negative");
    if (alphabet.empty()) alphabet = parity_weight_alphabet(d, mp_set.N());
    TreeGraph tp(d == 0 ? UniversalTree(0, {Leaf{}}) : build_universal_tree(n, d / 2));
    return parity_mp_separating(tp, integer_graph(mp_set), d, std::move(alphabet), budget);
}

}  // namespace univgraph
