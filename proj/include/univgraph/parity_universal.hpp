#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/linear_graph.hpp"
#include "univgraph/objectives.hpp"

namespace univgraph {

using Leaf = std::vector<int>;

/// An ordered leveled tree of height h, as its sorted list of leaves. Each leaf
/// is the sequence of child indices on its root path; coordinate j stands for
/// priority d-1-2j with d = 2h.
struct UniversalTree {
    int height = 0;
    std::vector<Leaf> leaves;

    UniversalTree() = default;
    UniversalTree(int h, std::vector<Leaf> l) : height(h), leaves(std::move(l)) {
        if (height < 0) throw InvalidInput("tree height must be non-negative");
        for (const auto& leaf : leaves) {
            if (static_cast<int>(leaf.size()) != height)
                throw InvalidInput("leaf length differs from tree height");
            for (int x : leaf)
                if (x < 0) throw InvalidInput("leaf coordinates must be non-negative");
        }
        std::sort(leaves.begin(), leaves.end());
        leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    }

    std::size_t size() const noexcept { return leaves.size(); }
    int d() const noexcept { return 2 * height; }

    bool operator==(const UniversalTree&) const = default;
};

/// Number of coordinates compared by the preorder of priority p.
inline int prefix_length(int height, int p) {
    return p % 2 == 0 ? height - p / 2 : height - (p - 1) / 2;
}

/// The tree-like graph G(T), read as a linear graph over its leaf order.
///
/// For even p, (v, p, v') iff v >=_{p+1} v'; for odd p, iff v >_p v', where
/// the preorder of odd p compares the first h - (p-1)/2 coordinates.
class TreeGraph {
public:
    using color_type = Priority;

    TreeGraph() = default;
    explicit TreeGraph(UniversalTree t) : tree_(std::move(t)) {
        const std::size_t m = tree_.size();
        const int h = tree_.height;
        first_.assign(h + 1, std::vector<Rank>(m));
        last_.assign(h + 1, std::vector<Rank>(m));
        for (int k = 0; k <= h; ++k) {
            auto same = [&](std::size_t a, std::size_t b) {
                return std::equal(tree_.leaves[a].begin(), tree_.leaves[a].begin() + k, tree_.leaves[b].begin());
            };
            for (std::size_t i = 0; i < m; ++i)
                first_[k][i] = (i > 0 && same(i - 1, i)) ? first_[k][i - 1] : static_cast<Rank>(i);
            for (std::size_t i = m; i-- > 0;)
                last_[k][i] = (i + 1 < m && same(i, i + 1)) ? last_[k][i + 1] : static_cast<Rank>(i);
        }
    }

    std::size_t size() const noexcept { return tree_.size(); }
    int d() const noexcept { return tree_.d(); }
    const UniversalTree& tree() const noexcept { return tree_; }

    Rank delta(Rank q, const Priority& c) const {
        const int p = c.value;
        if (p < 0 || p > d() || size() == 0) return kBottom;
        const int k = prefix_length(tree_.height, p);
        if (p % 2 == 0) return last_[k][q];
        return first_[k][q] - 1;
    }

    Rank rho(Rank q, const Priority& c) const {
        const int p = c.value;
        if (p < 0 || p > d() || size() == 0) return static_cast<Rank>(size());
        const int k = prefix_length(tree_.height, p);
        if (p % 2 == 0) return first_[k][q];
        return last_[k][q] + 1;
    }

private:
    UniversalTree tree_;
    std::vector<std::vector<Rank>> first_;  // [prefix length][leaf]
    std::vector<std::vector<Rank>> last_;
};

inline TreeGraph tree_to_graph(const UniversalTree& t) { return TreeGraph(t); }

inline constexpr std::uint64_t kDefaultConstructionBudget = 5'000'000;

/// The complete tree [0,n-1]^h.
inline UniversalTree complete_tree(int n, int h, std::uint64_t budget = kDefaultConstructionBudget) {
    if (n < 0 || h < 0) throw InvalidInput("complete tree needs n >= 0 and h >= 0");
    std::uint64_t total = 1;
    for (int i = 0; i < h; ++i) {
        total *= static_cast<std::uint64_t>(n);
        if (total > budget) throw BudgetExceeded("complete tree with " + std::to_string(n) + "^" +
                                                 std::to_string(h) + " leaves");
    }
    std::vector<Leaf> leaves;
    if (n == 0 && h > 0) return UniversalTree(h, {});
    Leaf cur(h, 0);
    while (true) {
        leaves.push_back(cur);
        int i = h;
        while (i > 0 && cur[i - 1] == n - 1) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return UniversalTree(h, std::move(leaves));
}

/// The lexicographically ordered graph on [0,n-1]^{d/2}.
inline TreeGraph exp_universal_graph(int n, int d, std::uint64_t budget = kDefaultConstructionBudget) {
    if (d < 0 || d % 2 != 0) throw InvalidInput("d must be even and non-negative");
    if (n < 1) throw InvalidInput("n must be positive");
    return TreeGraph(complete_tree(n, d / 2, budget));
}

/// Leaf count of the recursive universal tree.
inline std::uint64_t f_size(int n, int h) {
    if (n < 0 || h < 1) throw InvalidInput("f_size needs n >= 0 and h >= 1");
    std::map<std::pair<int, int>, std::uint64_t> memo;
    std::function<std::uint64_t(int, int)> f = [&](int a, int b) -> std::uint64_t {
        if (a == 0) return 0;
        if (b == 1) return static_cast<std::uint64_t>(a);
        if (a == 1) return 1;
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        std::uint64_t v = f(a, b - 1) + f(a / 2, b) + f(a - 1 - a / 2, b);
        memo[{a, b}] = v;
        return v;
    };
    return f(n, h);
}

/// Lower bound on the size of universal trees.
inline std::uint64_t g_size(int n, int h) {
    if (n < 0 || h < 1) throw InvalidInput("g_size needs n >= 0 and h >= 1");
    std::map<std::pair<int, int>, std::uint64_t> memo;
    std::function<std::uint64_t(int, int)> g = [&](int a, int b) -> std::uint64_t {
        if (a == 0) return 0;
        if (b == 1) return static_cast<std::uint64_t>(a);
        if (a == 1) return 1;
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        std::uint64_t v = 0;
        for (int k = 1; k <= a; ++k) v += g(a / k, b - 1);
        memo[{a, b}] = v;
        return v;
    };
    return g(n, h);
}

/// An (n,h)-universal tree with f_size(n,h) leaves.
inline UniversalTree build_universal_tree(int n, int h) {
    if (n < 0 || h < 1) throw InvalidInput("build_universal_tree needs n >= 0 and h >= 1");
    if (n == 0) return UniversalTree(h, {});
    if (h == 1) {
        std::vector<Leaf> leaves;
        for (int i = 0; i < n; ++i) leaves.push_back({i});
        return UniversalTree(1, std::move(leaves));
    }
    if (n == 1) return UniversalTree(h, {Leaf(h, 0)});

    UniversalTree left = build_universal_tree(n / 2, h);
    UniversalTree middle = build_universal_tree(n, h - 1);
    UniversalTree right = build_universal_tree(n - 1 - n / 2, h);
    const int split = left.leaves.empty() ? 0 : left.leaves.back()[0] + 1;

    std::vector<Leaf> leaves = left.leaves;
    for (const auto& m : middle.leaves) {
        Leaf leaf{split};
        leaf.insert(leaf.end(), m.begin(), m.end());
        leaves.push_back(std::move(leaf));
    }
    for (auto leaf : right.leaves) {
        leaf[0] += split + 1;
        leaves.push_back(std::move(leaf));
    }
    return UniversalTree(h, std::move(leaves));
}

struct TreeEmbedding {
    UniversalTree tree;
    /// Leaf index of each vertex.
    std::vector<std::size_t> map;
};

/// Embeds a graph satisfying Parity(d) into G(T), T the set of its occurrence
/// vectors: phi(v) is the lexicographically largest vector over paths from v
/// counting, per odd priority p, the occurrences of p before anything larger.
inline TreeEmbedding occ_embedding(const ColoredGraph<Priority>& g, int d) {
    if (d < 0 || d % 2 != 0) throw InvalidInput("d must be even and non-negative");
    for (const auto& e : g.edges())
        if (e.color.value < 0 || e.color.value > d) throw InvalidInput("priority outside [0,d]");
    if (!check_parity(g)) throw InvalidInput("graph does not satisfy the parity objective");

    const int h = d / 2;
    const std::size_t n = g.size();
    // Coordinate j stands for odd priority d-1-2j.
    auto extend = [h, d](int p, const Leaf& x) {
        Leaf y(h, 0);
        for (int j = 0; j < h; ++j) {
            int q = d - 1 - 2 * j;
            if (q > p) y[j] = x[j];
            else if (q == p) y[j] = x[j] + 1;
        }
        return y;
    };
    std::vector<Leaf> phi(n, Leaf(h, 0));
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < n; ++v)
            for (const auto& e : g.out_edges(v)) {
                Leaf cand = extend(e.color.value, phi[e.target]);
                if (cand > phi[v]) {
                    for (int x : cand)
                        if (static_cast<std::size_t>(x) >= std::max<std::size_t>(n, 1))
                            throw InternalError("occurrence count reached the vertex count");
                    phi[v] = std::move(cand);
                    changed = true;
                }
            }
    }

    TreeEmbedding out{UniversalTree(h, phi), std::vector<std::size_t>(n)};
    for (Vertex v = 0; v < n; ++v)
        out.map[v] = static_cast<std::size_t>(
            std::lower_bound(out.tree.leaves.begin(), out.tree.leaves.end(), phi[v]) - out.tree.leaves.begin());
    TreeGraph tg(out.tree);
    for (const auto& e : g.edges())
        if (!linear_has_edge(tg, static_cast<Rank>(out.map[e.source]), e.color, static_cast<Rank>(out.map[e.target])))
            throw InternalError("occurrence map is not a homomorphism");
    return out;
}

namespace detail {

// Subtree at depth k whose leaves are [lo, hi): children are maximal runs of
// equal coordinate k.
inline std::vector<std::pair<std::size_t, std::size_t>> children(const UniversalTree& t, std::size_t lo,
                                                                 std::size_t hi, int k) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = lo; i < hi;) {
        std::size_t j = i;
        while (j < hi && t.leaves[j][k] == t.leaves[i][k]) ++j;
        out.push_back({i, j});
        i = j;
    }
    return out;
}

inline bool embed_subtree(const UniversalTree& small, std::size_t slo, std::size_t shi, const UniversalTree& big,
                          std::size_t blo, std::size_t bhi, int k, std::vector<std::size_t>& map) {
    if (k == small.height) {
        map[slo] = blo;
        return true;
    }
    auto sc = children(small, slo, shi, k);
    auto bc = children(big, blo, bhi, k);
    std::size_t j = 0;
    for (const auto& [a, b] : sc) {
        while (j < bc.size() && !embed_subtree(small, a, b, big, bc[j].first, bc[j].second, k + 1, map)) ++j;
        if (j == bc.size()) return false;
        ++j;
    }
    return true;
}

}  // namespace detail

/// Leaf map preserving every preorder in both directions, or nullopt.
/// Children are matched greedily: each goes to the first unused child it fits in.
inline std::optional<std::vector<std::size_t>> tree_embed(const UniversalTree& small, const UniversalTree& big) {
    if (small.height != big.height) throw InvalidInput("trees must have equal height");
    std::vector<std::size_t> map(small.size(), 0);
    if (small.size() == 0) return map;
    if (big.size() == 0) return std::nullopt;
    if (!detail::embed_subtree(small, 0, small.size(), big, 0, big.size(), 0, map)) return std::nullopt;
    return map;
}

/// Calls `visit` on every ordered tree of height h with exactly m leaves.
/// Returns false if `visit` asked to stop.
inline bool for_each_tree(int h, int m, const std::function<bool(const UniversalTree&)>& visit) {
    if (m < 0 || h < 0) throw InvalidInput("negative tree parameters");
    std::function<std::vector<std::vector<Leaf>>(int, int)> all;
    std::map<std::pair<int, int>, std::vector<std::vector<Leaf>>> memo;
    all = [&](int height, int leaves) -> std::vector<std::vector<Leaf>> {
        if (height == 0) return leaves == 1 ? std::vector<std::vector<Leaf>>{{Leaf{}}} : std::vector<std::vector<Leaf>>{};
        if (leaves == 0) return {};
        auto key = std::make_pair(height, leaves);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<std::vector<Leaf>> out;
        // Prepend child subtrees one at a time: first child takes `first` leaves.
        std::function<void(int, int, std::vector<Leaf>&)> rec = [&](int remaining, int index, std::vector<Leaf>& acc) {
            if (remaining == 0) {
                out.push_back(acc);
                return;
            }
            for (int first = 1; first <= remaining; ++first)
                for (const auto& sub : all(height - 1, first)) {
                    std::size_t mark = acc.size();
                    for (const auto& l : sub) {
                        Leaf leaf{index};
                        leaf.insert(leaf.end(), l.begin(), l.end());
                        acc.push_back(std::move(leaf));
                    }
                    rec(remaining - first, index + 1, acc);
                    acc.resize(mark);
                }
        };
        std::vector<Leaf> acc;
        rec(leaves, 0, acc);
        memo[key] = out;
        return out;
    };
    if (m == 0) return visit(UniversalTree(h, {}));
    for (auto& leaves : all(h, m))
        if (!visit(UniversalTree(h, std::move(leaves)))) return false;
    return true;
}

/// True iff every tree of the same height with at most n leaves embeds into t.
inline bool check_universal_parity(const UniversalTree& t, int n, std::uint64_t budget = kDefaultConstructionBudget) {
    std::uint64_t visited = 0;
    bool ok = true;
    for (int m = 1; m <= n && ok; ++m)
        for_each_tree(t.height, m, [&](const UniversalTree& s) {
            if (++visited > budget) throw BudgetExceeded("universality check over too many trees");
            ok = tree_embed(s, t).has_value();
            return ok;
        });
    return ok;
}

/// A smallest (n,h)-universal tree, by exhaustive search over ordered trees in
/// increasing leaf count.
inline UniversalTree minimal_universal_tree(int n, int h, std::uint64_t budget = kDefaultConstructionBudget) {
    if (n < 0 || h < 1) throw InvalidInput("minimal_universal_tree needs n >= 0 and h >= 1");
    if (n == 0) return UniversalTree(h, {});
    // Every tree with fewer than n leaves embeds into one with exactly n, so
    // the n-leaf trees are the only ones to test.
    std::vector<UniversalTree> targets;
    for_each_tree(h, n, [&](const UniversalTree& t) {
        targets.push_back(t);
        return true;
    });
    std::uint64_t work = 0;
    for (int size = n;; ++size) {
        std::optional<UniversalTree> found;
        for_each_tree(h, size, [&](const UniversalTree& cand) {
            for (const auto& t : targets) {
                if (++work > budget) throw BudgetExceeded("minimal universal tree search");
                if (!tree_embed(t, cand)) return true;
            }
            found = cand;
            return false;
        });
        if (found) return *found;
    }
}

}  // namespace univgraph
