#include <gtest/gtest.h>

#include <random>
#include <set>

#include "univgraph/homomorphism.hpp"
#include "univgraph/mp_universal.hpp"
#include "univgraph/objectives.hpp"
#include "univgraph/random.hpp"

using namespace univgraph;

namespace {

using Ints = std::vector<std::int64_t>;

std::vector<Vertex> successors_by_value(const IntegerGraph& lg, std::int64_t x, std::int64_t w) {
    const auto& A = lg.spec().A;
    Rank q = std::lower_bound(A.begin(), A.end(), x) - A.begin();
    std::vector<Vertex> out;
    for (Rank r = 0; r < static_cast<Rank>(A.size()); ++r)
        if (linear_has_edge(lg, q, Weight{w}, r)) out.push_back(static_cast<Vertex>(A[r] + 100));
    return out;
}

Ints values_of(const IntegerGraphSpec& spec, const VertexMap& phi) {
    Ints out;
    for (auto i : phi) out.push_back(spec.A[i]);
    return out;
}

}  // namespace

TEST(IntegerGraph, Examples) {
    IntegerGraphSpec spec({-1, 0, 2, 3, 5}, {-3, 0, 1, 2});
    auto lg = integer_graph(spec);
    // Offsets by 100 keep negative values representable as vertex ids.
    EXPECT_EQ(successors_by_value(lg, 2, 2), (std::vector<Vertex>{99, 100, 102, 103}));
    EXPECT_EQ(lg.value(lg.delta(4, {-3})), 2);
    EXPECT_EQ(lg.delta(0, {-3}), kBottom);
    EXPECT_TRUE(check_mean_payoff(integer_graph_edges(spec)));

    auto one = integer_graph_edges(IntegerGraphSpec({0}, {0}));
    EXPECT_EQ(one.size(), 1u);
    EXPECT_EQ(one.edge_count(), 1u);
    EXPECT_TRUE(one.has_edge(0, {0}, 0));

    EXPECT_THROW(integer_graph(IntegerGraphSpec({0, 1}, {1, 2})), InvalidInput);
}

TEST(IntegerGraph, EdgeRuleAndLinearity) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> val(-10, 10);
    for (int it = 0; it < 200; ++it) {
        Ints A(1 + rng() % 6), W{0};
        for (auto& a : A) a = val(rng);
        for (int k = rng() % 4; k > 0; --k) W.push_back(val(rng) / 2);
        IntegerGraphSpec spec(A, W);
        auto g = integer_graph_edges(spec);
        for (Vertex i = 0; i < g.size(); ++i)
            for (auto w : spec.W)
                for (Vertex j = 0; j < g.size(); ++j)
                    ASSERT_EQ(g.has_edge(i, {w}, j), spec.A[j] - spec.A[i] <= w);
        std::vector<Vertex> order(g.size());
        for (Vertex v = 0; v < g.size(); ++v) order[v] = v;
        ASSERT_TRUE(check_linear(g, order));
        ASSERT_TRUE(check_mean_payoff(g));
    }
}

TEST(IntegerGraph, TranslationInvariance) {
    IntegerGraphSpec spec({-1, 0, 2, 3, 5}, {-3, 0, 1, 2});
    for (std::int64_t p : {-7, 1, 13}) {
        Ints shifted;
        for (auto a : spec.A) shifted.push_back(a + p);
        auto g = integer_graph_edges(spec);
        auto h = integer_graph_edges(IntegerGraphSpec(shifted, spec.W));
        VertexMap id(g.size());
        for (Vertex v = 0; v < g.size(); ++v) id[v] = v;
        EXPECT_TRUE(is_homomorphism(g, h, id));
        EXPECT_TRUE(is_homomorphism(h, g, id));
        EXPECT_EQ(g, h);
    }
}

TEST(UniversalSets, Interval) {
    EXPECT_EQ(universal_set_interval(2, 3).A, (Ints{0, 1, 2, 3}));
    EXPECT_EQ(universal_set_interval(1, 5).A, (Ints{0}));
    EXPECT_EQ(universal_set_interval(3, 1).A, (Ints{0, 1, 2}));
    EXPECT_EQ(universal_set_interval(3, 2).W, (Ints{-2, -1, 0, 1, 2}));
}

TEST(UniversalSets, Sums) {
    EXPECT_EQ(universal_set_sums(3, {0, 1}).A, (Ints{0, 1, 2}));
    EXPECT_EQ(universal_set_sums(5, {0}).A, (Ints{0}));
    EXPECT_EQ(universal_set_sums(2, {-1, 0, 2}).A, (Ints{-1, 0, 2}));
    EXPECT_EQ(universal_set_sums(3, {2}).W, (Ints{0, 2}));
}

TEST(UniversalSets, SumsWithinMultisetCount) {
    for (int n = 1; n <= 6; ++n)
        for (const Ints& W : {Ints{0, 1}, Ints{-2, 0, 3}, Ints{-5, -1, 0, 4, 7}}) {
            auto spec = universal_set_sums(n, W);
            const std::uint64_t k = W.size();
            // Multisets of n-1 elements from W, 0 included, count every sum of at most n-1 weights.
            EXPECT_LE(spec.A.size(), binomial(n - 1 + k - 1, k - 1)) << n;
        }
}

TEST(UniversalSets, DigitsExamples) {
    EXPECT_EQ(digits_base(2, 9), 3);
    auto spec = universal_set_digits(2, 9);
    EXPECT_EQ(spec.A.size(), 10u);
    EXPECT_EQ(spec.A, (Ints{0, 1, 2, 3, 6, 9, 10, 11, 12, 15}));
    EXPECT_EQ(digits_base(2, 1), 2);
    EXPECT_EQ(universal_set_digits(2, 1).A, (Ints{0, 1, 2, 4}));
    EXPECT_THROW(universal_set_digits(1, 3), InvalidInput);
}

TEST(UniversalSets, DigitShiftFitsEveryDistanceSet) {
    for (auto [n, N] : {std::pair<int, int>{3, 3}, {2, 9}, {4, 2}, {3, 7}}) {
        auto spec = universal_set_digits(n, N);
        const std::int64_t b = digits_base(n, N);
        int sets = 0;
        for_each_distance_set(n, N, [&](const Ints& d) {
            ++sets;
            auto p = digits_shift(d, n, N);
            EXPECT_GE(p, 0);
            EXPECT_LT(p, int_pow(b, n));
            for (auto x : d) EXPECT_TRUE(std::binary_search(spec.A.begin(), spec.A.end(), p + x)) << p << "+" << x;
            return true;
        });
        EXPECT_GT(sets, 0);
    }
    int full = 0;
    for_each_distance_set(3, 3, [&](const Ints& d) {
        full += d.size() == 3;
        return true;
    });
    EXPECT_EQ(full, 9);
}

TEST(UniversalSets, AllSatisfyMeanPayoff) {
    for (int n = 1; n <= 4; ++n)
        for (int N = 1; N <= 3; ++N) {
            EXPECT_TRUE(check_mean_payoff(integer_graph_edges(universal_set_interval(n, N))));
            EXPECT_TRUE(check_mean_payoff(integer_graph_edges(universal_set_sums(n, {-N, 0, N}))));
            if (n >= 2) {
                EXPECT_TRUE(check_mean_payoff(integer_graph_edges(universal_set_digits(n, N))));
            }
        }
}

TEST(CheckUniversalMp, Examples) {
    EXPECT_TRUE(check_universal_mp(universal_set_interval(3, 2), 3, symmetric_weights(2)));
    EXPECT_FALSE(check_universal_mp(IntegerGraphSpec({0}, symmetric_weights(1)), 2, symmetric_weights(1)));
    EXPECT_TRUE(check_universal_mp(universal_set_digits(3, 3), 3, symmetric_weights(3)));
    EXPECT_TRUE(check_universal_mp(universal_set_sums(3, {-1, 0, 2}), 3, {-1, 0, 2}));
    // One element short of the interval is no longer universal.
    EXPECT_FALSE(check_universal_mp(IntegerGraphSpec({0, 1, 2, 3}, symmetric_weights(2)), 3, symmetric_weights(2)));
}

TEST(DistEmbedding, Examples) {
    auto loop = dist_embedding(ColoredGraph<Weight>(1, {{0, {0}, 0}}), {0});
    EXPECT_EQ(loop.spec.A, (Ints{0}));

    // Non-negative weights only: saturation closes everything onto one 0-loop.
    ColoredGraph<Weight> chain(3, {{0, {2}, 1}, {1, {1}, 2}});
    auto flat = dist_embedding(chain, {0, 1, 2});
    EXPECT_EQ(flat.spec.A, (Ints{0}));
    EXPECT_EQ(flat.value, (Ints{0, 0, 0}));

    auto wide = dist_embedding(chain, symmetric_weights(2));
    EXPECT_LE(wide.spec.A.back(), 4);
    VertexMap phi;
    for (auto x : wide.value) phi.push_back(std::lower_bound(wide.spec.A.begin(), wide.spec.A.end(), x) - wide.spec.A.begin());
    EXPECT_TRUE(is_homomorphism(chain, integer_graph_edges(wide.spec), phi));

    EXPECT_THROW(dist_embedding(ColoredGraph<Weight>(1, {{0, {-1}, 0}}), {-1, 0}), InvalidInput);
}

TEST(DistEmbedding, HomomorphismOnRandomGraphs) {
    std::mt19937_64 rng(17);
    const std::int64_t N = 3;
    std::uniform_int_distribution<std::int64_t> w(-N, N);
    int done = 0;
    for (int it = 0; it < 1500; ++it) {
        auto g = random_graph<Weight>(rng, 6, 3, [&] { return Weight{w(rng)}; });
        if (!check_mean_payoff(g)) continue;
        ++done;
        auto emb = dist_embedding(g, symmetric_weights(N));
        ASSERT_FALSE(emb.spec.A.empty());
        ASSERT_EQ(emb.spec.A.front(), 0);
        ASSERT_LE(emb.spec.A.back(), static_cast<std::int64_t>(g.size() - 1) * N);
        auto h = integer_graph_edges(emb.spec);
        VertexMap phi(g.size());
        for (Vertex v = 0; v < g.size(); ++v)
            phi[v] = std::lower_bound(emb.spec.A.begin(), emb.spec.A.end(), emb.value[v]) - emb.spec.A.begin();
        ASSERT_TRUE(is_homomorphism(g, h, phi));
        ASSERT_TRUE(find_homomorphism(g, integer_graph_edges(universal_set_interval(g.size(), N))).has_value());
    }
    EXPECT_GT(done, 100);
}

TEST(ChainWitness, Examples) {
    auto zero = chain_witness({0, 0});
    EXPECT_EQ(zero.size(), 3u);
    EXPECT_EQ(zero.edge_count(), 4u);
    EXPECT_TRUE(check_mean_payoff(zero));

    auto g = chain_witness({1, 2});
    EXPECT_TRUE(check_mean_payoff(g));
    auto spec = universal_set_interval(3, 2);
    auto phi = find_homomorphism(g, integer_graph_edges(spec));
    ASSERT_TRUE(phi);
    auto vals = values_of(spec, *phi);
    EXPECT_EQ((Ints{vals[0] - vals[0], vals[1] - vals[0], vals[2] - vals[0]}), (Ints{0, 1, 3}));
}

TEST(ChainWitness, ForcedEqualitiesGiveInjectivity) {
    const int n = 3;
    const std::int64_t N = 3;
    auto spec = universal_set_digits(n, N);
    auto h = integer_graph_edges(spec);
    std::set<Ints> images;
    for (std::int64_t w1 = 0; w1 <= N; ++w1)
        for (std::int64_t w2 = 0; w2 <= N; ++w2) {
            auto g = chain_witness({w1, w2});
            auto phi = find_homomorphism(g, h);
            ASSERT_TRUE(phi);
            auto vals = values_of(spec, *phi);
            for (Vertex j = 0; j + 1 < g.size(); ++j) {
                auto fwd = *g.find_edge(j, {j == 0 ? w1 : w2}, j + 1);
                auto back = *g.find_edge(j + 1, {j == 0 ? -w1 : -w2}, j);
                ASSERT_TRUE(check_zero_cycle_equalities(g, vals, {fwd, back}));
            }
            EXPECT_EQ(vals[1] - vals[0], w1);
            EXPECT_EQ(vals[2] - vals[1], w2);
            images.insert(vals);
        }
    EXPECT_EQ(images.size(), 16u);
    EXPECT_GE(spec.A.size() * spec.A.size() * spec.A.size(), images.size());
}

TEST(CycleWitness, SmallExample) {
    auto cw = cycle_witness(3, {{1, 1}});
    EXPECT_EQ(cw.graph.size(), 3u);
    EXPECT_EQ(cw.W, (Ints{1, -2}));
    ASSERT_EQ(cw.cycle.size(), 3u);
    std::int64_t total = 0;
    int plus = 0;
    for (auto id : cw.cycle) {
        total += cw.graph.edge(id).color.value;
        plus += cw.graph.edge(id).color.value == 1;
    }
    EXPECT_EQ(total, 0);
    EXPECT_EQ(plus, 2);
    EXPECT_THROW(cycle_witness(4, {{1, 1}, {0, 2}, {1, 0}}), InvalidInput);
    EXPECT_THROW(cycle_witness(3, {{2, 1}}), InvalidInput);
}

TEST(CycleWitness, BoxBoundariesDecodeTheSequences) {
    const int n = 5, k = 3;
    std::vector<std::vector<int>> S;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) S.push_back({a, b, 2 - a - b});
    int checked = 0;
    for (const auto& s0 : S)
        for (const auto& s1 : S) {
            auto cw = cycle_witness(n, {s0, s1});
            ASSERT_EQ(cw.graph.size(), static_cast<std::size_t>(n));
            ASSERT_EQ(cw.u.size(), static_cast<std::size_t>(k + 1));
            for (int i = 0; i <= k; ++i) {
                int pre0 = 0, pre1 = 0;
                for (int l = 0; l < i; ++l) {
                    pre0 += s0[l];
                    pre1 += s1[l];
                }
                ASSERT_EQ(cw.u[i] % n, pre0);
                ASSERT_EQ(cw.u[i] / n, pre1);
            }
            std::int64_t total = 0;
            for (auto id : cw.cycle) total += cw.graph.edge(id).color.value;
            ASSERT_EQ(total, 0);
            ASSERT_TRUE(check_mean_payoff(cw.graph));

            auto spec = universal_set_sums(n, cw.W);
            auto phi = find_homomorphism(cw.graph, integer_graph_edges(spec));
            ASSERT_TRUE(phi);
            auto vals = values_of(spec, *phi);
            ASSERT_TRUE(check_zero_cycle_equalities(cw.graph, vals, cw.cycle));
            for (int i = 0; i <= k; ++i) ASSERT_EQ(vals[cw.box_end[i]] - vals[0], cw.u[i]);
            ++checked;
        }
    EXPECT_EQ(checked, 36);
}

TEST(ZeroCycleEqualities, Examples) {
    ColoredGraph<Weight> loop(1, {{0, {0}, 0}});
    EXPECT_TRUE(check_zero_cycle_equalities(loop, {0}, {0}));

    auto g = chain_witness({2});
    auto fwd = *g.find_edge(0, {2}, 1);
    auto back = *g.find_edge(1, {-2}, 0);
    EXPECT_TRUE(check_zero_cycle_equalities(g, {0, 2}, {fwd, back}));
    EXPECT_FALSE(check_zero_cycle_equalities(g, {0, 1}, {fwd, back}));

    ColoredGraph<Weight> pos(1, {{0, {1}, 0}});
    EXPECT_THROW(check_zero_cycle_equalities(pos, {0}, {0}), InvalidInput);
}
