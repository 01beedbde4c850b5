#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/homomorphism.hpp"
#include "univgraph/linear_graph.hpp"
#include "univgraph/objectives.hpp"
#include "univgraph/saturation.hpp"

namespace univgraph {

/// Vertex set A and weight set W of an integer graph: (x, w, x') is an edge iff x' - x <= w.
struct IntegerGraphSpec {
    std::vector<std::int64_t> A;
    std::vector<std::int64_t> W;

    IntegerGraphSpec() = default;
    IntegerGraphSpec(std::vector<std::int64_t> a, std::vector<std::int64_t> w) : A(std::move(a)), W(std::move(w)) {
        std::sort(A.begin(), A.end());
        A.erase(std::unique(A.begin(), A.end()), A.end());
        std::sort(W.begin(), W.end());
        W.erase(std::unique(W.begin(), W.end()), W.end());
    }

    std::int64_t N() const {
        std::int64_t m = 0;
        for (auto w : W) m = std::max(m, w < 0 ? -w : w);
        return m;
    }

    std::vector<Weight> alphabet() const {
        std::vector<Weight> out;
        for (auto w : W) out.push_back({w});
        return out;
    }

    bool operator==(const IntegerGraphSpec&) const = default;
};

/// G(A) as a linear graph under the numeric order of A.
class IntegerGraph {
public:
    using color_type = Weight;

    IntegerGraph() = default;
    explicit IntegerGraph(IntegerGraphSpec spec) : spec_(std::move(spec)) {}

    std::size_t size() const noexcept { return spec_.A.size(); }
    const IntegerGraphSpec& spec() const noexcept { return spec_; }
    std::int64_t value(Rank q) const { return spec_.A.at(static_cast<std::size_t>(q)); }

    /// Largest x' in A with x' <= x + w.
    Rank delta(Rank q, const Weight& c) const {
        const auto& A = spec_.A;
        auto it = std::upper_bound(A.begin(), A.end(), A[static_cast<std::size_t>(q)] + c.value);
        return static_cast<Rank>(it - A.begin()) - 1;
    }

    /// Smallest x in A with x >= x' - w.
    Rank rho(Rank q, const Weight& c) const {
        const auto& A = spec_.A;
        auto it = std::lower_bound(A.begin(), A.end(), A[static_cast<std::size_t>(q)] - c.value);
        return static_cast<Rank>(it - A.begin());
    }

private:
    IntegerGraphSpec spec_;
};

inline IntegerGraph integer_graph(const IntegerGraphSpec& spec) {
    if (!std::binary_search(spec.W.begin(), spec.W.end(), std::int64_t{0}))
        throw InvalidInput("weight set must contain 0");
    return IntegerGraph(spec);
}

/// Explicit edges of G(A) over W; vertex i is the i-th smallest element of A.
inline ColoredGraph<Weight> integer_graph_edges(const IntegerGraphSpec& spec) {
    return materialize(integer_graph(spec), spec.alphabet());
}

inline std::vector<std::int64_t> symmetric_weights(std::int64_t N) {
    std::vector<std::int64_t> W;
    for (std::int64_t w = -N; w <= N; ++w) W.push_back(w);
    return W;
}

/// [0, (n-1)N] over W = [-N, N].
inline IntegerGraphSpec universal_set_interval(int n, std::int64_t N) {
    if (n < 1 || N < 0) throw InvalidInput("interval set needs n >= 1 and N >= 0");
    std::vector<std::int64_t> A;
    for (std::int64_t x = 0; x <= (n - 1) * N; ++x) A.push_back(x);
    return {std::move(A), symmetric_weights(N)};
}

/// All sums of at most n-1 weights of W, repetitions allowed.
inline IntegerGraphSpec universal_set_sums(int n, std::vector<std::int64_t> W) {
    if (n < 1) throw InvalidInput("sums set needs n >= 1");
    if (std::find(W.begin(), W.end(), 0) == W.end()) W.push_back(0);
    std::sort(W.begin(), W.end());
    W.erase(std::unique(W.begin(), W.end()), W.end());
    std::vector<std::int64_t> level{0}, all{0};
    for (int i = 1; i < n; ++i) {
        std::vector<std::int64_t> next;
        for (auto s : level)
            for (auto w : W) next.push_back(s + w);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return {std::move(all), std::move(W)};
}

/// Smallest b >= 2 with b^n >= (n-1)N.
inline std::int64_t digits_base(int n, std::int64_t N) {
    const std::int64_t target = (n - 1) * N;
    for (std::int64_t b = 2;; ++b) {
        std::int64_t p = 1;
        for (int i = 0; i < n && p < target; ++i) p *= b;
        if (p >= target) return b;
    }
}

inline std::int64_t int_pow(std::int64_t b, int e) {
    std::int64_t p = 1;
    for (int i = 0; i < e; ++i) p *= b;
    return p;
}

/// Numbers in [0, b^n + (n-1)N) with a zero among their n lowest base-b digits.
inline IntegerGraphSpec universal_set_digits(int n, std::int64_t N) {
    if (n < 2 || N < 1) throw InvalidInput("digit set needs n >= 2 and N >= 1");
    const std::int64_t b = digits_base(n, N);
    const std::int64_t range = int_pow(b, n) + (n - 1) * N;
    std::vector<std::int64_t> A;
    for (std::int64_t a = 0; a < range; ++a) {
        std::int64_t x = a;
        for (int k = 0; k < n; ++k, x /= b)
            if (x % b == 0) {
                A.push_back(a);
                break;
            }
    }
    return {std::move(A), symmetric_weights(N)};
}

/// The shift p < b^n such that p + d_k has base-b digit k equal to 0 for each
/// k, built one digit at a time from the lowest. `distances` must be the sorted
/// set {0 = d_0 < ... < d_{m-1}} with m <= n.
inline std::int64_t digits_shift(const std::vector<std::int64_t>& distances, int n, std::int64_t N) {
    if (distances.size() > static_cast<std::size_t>(n)) throw InvalidInput("more distances than digits");
    const std::int64_t b = digits_base(n, N);
    std::int64_t p = 0, bk = 1;
    for (std::size_t k = 0; k < distances.size(); ++k, bk *= b) {
        std::int64_t s = p + distances[k];
        std::int64_t a = (b - (s / bk) % b) % b;
        p += a * bk;
    }
    return p;
}

struct DistanceEmbedding {
    IntegerGraphSpec spec;
    /// Value in spec.A of each vertex.
    std::vector<std::int64_t> value;
};

/// Maps a graph without negative cycles into G(A), A its distance set.
///
/// The graph is saturated over W first, then distances are taken from its
/// maximal vertex and shifted so that A starts at 0.
inline DistanceEmbedding dist_embedding(const ColoredGraph<Weight>& g, std::vector<std::int64_t> W) {
    if (!check_mean_payoff(g)) throw InvalidInput("graph has a negative cycle");
    if (std::find(W.begin(), W.end(), 0) == W.end()) W.push_back(0);
    for (const auto& e : g.edges())
        if (std::find(W.begin(), W.end(), e.color.value) == W.end()) W.push_back(e.color.value);
    std::vector<Weight> alphabet;
    for (auto w : W) alphabet.push_back({w});
    DistanceEmbedding out;
    if (g.size() == 0) {
        out.spec = IntegerGraphSpec({}, W);
        return out;
    }
    auto sat = saturate(g, alphabet);
    Vertex v0 = linear_order(sat).back();

    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(g.size(), kInf);
    dist[v0] = 0;
    for (std::size_t round = 0; round + 1 < g.size() || round == 0; ++round) {
        bool changed = false;
        for (const auto& e : sat.edges())
            if (dist[e.source] != kInf && dist[e.source] + e.color.value < dist[e.target]) {
                dist[e.target] = dist[e.source] + e.color.value;
                changed = true;
            }
        if (!changed) break;
    }
    for (Vertex v = 0; v < g.size(); ++v)
        if (dist[v] == kInf) throw InvalidInput("unreachable vertex from base: " + std::to_string(v));
    std::int64_t low = *std::min_element(dist.begin(), dist.end());
    out.value.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) out.value[v] = dist[v] - low;
    out.spec = IntegerGraphSpec(out.value, W);
    return out;
}

/// The n-vertex chain with edges (j, w_{j+1}, j+1) and (j+1, -w_{j+1}, j).
inline ColoredGraph<Weight> chain_witness(const std::vector<std::int64_t>& weights) {
    std::vector<Edge<Weight>> edges;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        edges.push_back({j, {weights[j]}, j + 1});
        edges.push_back({j + 1, {-weights[j]}, j});
    }
    return ColoredGraph<Weight>(weights.size() + 1, std::move(edges));
}

struct CycleWitness {
    ColoredGraph<Weight> graph;
    /// Edge ids along the cycle, starting at vertex 0.
    std::vector<EdgeId> cycle;
    /// Vertex ending each box, box_end[0] = 0.
    std::vector<Vertex> box_end;
    /// Weight accumulated from vertex 0 to box_end[i].
    std::vector<std::int64_t> u;
    std::vector<std::int64_t> W;
};

/// The n-cycle coded by k-1 sequences s^(0..k-2), each of k non-negative
/// entries summing to (n-1)/(k-1). Box i uses weight n^j exactly s^(j)_i times,
/// and the cycle closes with -((n-1)/(k-1)) (1 + n + ... + n^{k-2}).
inline CycleWitness cycle_witness(int n, const std::vector<std::vector<int>>& seqs) {
    const int k = static_cast<int>(seqs.size()) + 1;
    if (k < 2 || n < 2) throw InvalidInput("cycle witness needs k >= 2 and n >= 2");
    if ((n - 1) % (k - 1) != 0) throw InvalidInput("k-1 must divide n-1");
    const int per = (n - 1) / (k - 1);
    for (const auto& s : seqs) {
        if (static_cast<int>(s.size()) != k) throw InvalidInput("each sequence needs k entries");
        int sum = 0;
        for (int x : s) {
            if (x < 0 || x >= n) throw InvalidInput("sequence entry outside [0,n)");
            sum += x;
        }
        if (sum != per) throw InvalidInput("sequence must sum to (n-1)/(k-1)");
    }
    CycleWitness out;
    std::int64_t T = 0;
    for (int j = 0; j <= k - 2; ++j) {
        T += int_pow(n, j);
        out.W.push_back(int_pow(n, j));
    }
    out.W.push_back(-per * T);

    std::vector<Edge<Weight>> edges;
    Vertex at = 0;
    std::int64_t acc = 0;
    out.box_end.push_back(0);
    out.u.push_back(0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= k - 2; ++j)
            for (int t = 0; t < seqs[j][i]; ++t) {
                edges.push_back({at, {int_pow(n, j)}, at + 1});
                acc += int_pow(n, j);
                ++at;
            }
        out.box_end.push_back(at);
        out.u.push_back(acc);
    }
    edges.push_back({at, {-per * T}, 0});
    std::vector<Edge<Weight>> order = edges;
    out.graph = ColoredGraph<Weight>(static_cast<std::size_t>(n), std::move(edges));
    for (const auto& e : order) out.cycle.push_back(*out.graph.find_edge(e.source, e.color, e.target));
    return out;
}

/// Along a cycle of total weight 0 mapped into G(A), every edge inequality
/// phi(v') - phi(v) <= w must be tight. `value` gives phi as elements of A.
inline bool check_zero_cycle_equalities(const ColoredGraph<Weight>& g, const std::vector<std::int64_t>& value,
                                        const std::vector<EdgeId>& cycle) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& e = g.edge(cycle[i]);
        const auto& next = g.edge(cycle[(i + 1) % cycle.size()]);
        if (e.target != next.source) throw InvalidInput("edges do not form a cycle");
        total += e.color.value;
    }
    if (total != 0) throw InvalidInput("cycle total weight is not 0");
    for (EdgeId id : cycle) {
        const auto& e = g.edge(id);
        if (value.at(e.target) - value.at(e.source) != e.color.value) return false;
    }
    return true;
}

/// Calls `visit` on every set {0 = d_0 < ... < d_{m-1}} with 1 <= m <= n and gaps in [1,N].
inline void for_each_distance_set(int n, std::int64_t N,
                                  const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> cur{0};
    bool stop = false;
    std::function<void()> rec = [&]() {
        if (stop) return;
        if (!visit(cur)) {
            stop = true;
            return;
        }
        if (static_cast<int>(cur.size()) == n) return;
        for (std::int64_t gap = 1; gap <= N && !stop; ++gap) {
            cur.push_back(cur.back() + gap);
            rec();
            cur.pop_back();
        }
    };
    if (n >= 1) rec();
}

/// True iff G(A) maps into G(U) for every distance-shaped A of size <= n over W.
/// Any integer graph of size <= n reduces to one of these: gaps wider than N
/// carry no edge constraints across them and can be narrowed to N.
inline bool check_universal_mp(const IntegerGraphSpec& U, int n, const std::vector<std::int64_t>& W,
                               std::uint64_t budget = kDefaultSearchBudget) {
    IntegerGraphSpec target(U.A, W);
    auto h = integer_graph_edges(target);
    const std::int64_t N = target.N();
    bool ok = true;
    std::uint64_t sets = 0;
    for_each_distance_set(n, std::max<std::int64_t>(N, 1), [&](const std::vector<std::int64_t>& A) {
        if (++sets > budget) throw BudgetExceeded("too many distance sets");
        auto g = integer_graph_edges(IntegerGraphSpec(A, W));
        ok = find_homomorphism(g, h, budget).has_value();
        return ok;
    });
    return ok;
}

/// Binomial coefficient, exact for the small arguments used here.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace univgraph
