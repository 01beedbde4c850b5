#include <gtest/gtest.h>

#include <random>

#include "univgraph/homomorphism.hpp"
#include "univgraph/mp_universal.hpp"
#include "univgraph/parity_universal.hpp"
#include "univgraph/random.hpp"
#include "univgraph/saturation.hpp"

using namespace univgraph;

namespace {

template <class C>
bool is_saturated(const ColoredGraph<C>& g, const std::vector<C>& alphabet) {
    for (Vertex v = 0; v < g.size(); ++v)
        for (const auto& c : alphabet)
            for (Vertex w = 0; w < g.size(); ++w) {
                if (g.has_edge(v, c, w)) continue;
                std::vector<Edge<C>> more(g.edges().begin(), g.edges().end());
                more.push_back({v, c, w});
                if (satisfies_objective(ColoredGraph<C>(g.size(), more))) return false;
            }
    return true;
}

template <class C>
VertexMap identity(const ColoredGraph<C>& g) {
    VertexMap id(g.size());
    for (Vertex v = 0; v < g.size(); ++v) id[v] = v;
    return id;
}

}  // namespace

TEST(Saturate, Examples) {
    auto tree = materialize(TreeGraph(build_universal_tree(3, 2)), parity_alphabet(4));
    EXPECT_EQ(saturate(tree, parity_alphabet(4)), tree);

    auto alphabet = weight_alphabet(1);
    ColoredGraph<Weight> step(2, {{0, {1}, 1}});
    auto sat = saturate(step, alphabet);
    EXPECT_TRUE(sat.has_edge(0, {1}, 1));
    EXPECT_TRUE(sat.has_edge(0, {0}, 0));
    EXPECT_TRUE(sat.has_edge(1, {0}, 1));
    // (0,-1,1) is tried before any edge out of 1, which then can only return with +1.
    EXPECT_TRUE(sat.has_edge(0, {-1}, 1));
    EXPECT_TRUE(sat.has_edge(1, {1}, 0));
    EXPECT_FALSE(sat.has_edge(1, {0}, 0));
    EXPECT_TRUE(is_saturated(sat, alphabet));
    EXPECT_TRUE(check_mean_payoff(sat));

    auto lone = saturate(ColoredGraph<Priority>(1, {}), parity_alphabet(2));
    EXPECT_EQ(lone.edge_count(), 2u);
    EXPECT_TRUE(lone.has_edge(0, {0}, 0));
    EXPECT_TRUE(lone.has_edge(0, {2}, 0));

    EXPECT_THROW(saturate(ColoredGraph<Priority>(1, {{0, {1}, 0}}), parity_alphabet(2)), InvalidInput);
}

TEST(Saturate, PropertiesOnRandomGraphs) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> p(0, 3);
    std::uniform_int_distribution<std::int64_t> w(-2, 2);
    int parity = 0, mp = 0;
    for (int it = 0; it < 800; ++it) {
        auto gp = random_graph<Priority>(rng, 1 + rng() % 5, 3, [&] { return Priority{p(rng)}; });
        if (check_parity(gp)) {
            ++parity;
            auto alphabet = parity_alphabet(4);
            auto s = saturate(gp, alphabet);
            ASSERT_TRUE(check_parity(s));
            ASSERT_TRUE(is_homomorphism(gp, s, identity(gp)));
            ASSERT_TRUE(is_saturated(s, alphabet));
            ASSERT_EQ(saturate(s, alphabet), s);
            auto order = linear_order(s);
            ASSERT_TRUE(check_linear(s, order));
        }
        auto gm = random_graph<Weight>(rng, 1 + rng() % 5, 3, [&] { return Weight{w(rng)}; });
        if (check_mean_payoff(gm)) {
            ++mp;
            auto alphabet = weight_alphabet(2);
            auto s = saturate(gm, alphabet);
            ASSERT_TRUE(check_mean_payoff(s));
            ASSERT_TRUE(is_homomorphism(gm, s, identity(gm)));
            ASSERT_TRUE(is_saturated(s, alphabet));
            ASSERT_EQ(saturate(s, alphabet), s);
            auto order = linear_order(s);
            ASSERT_TRUE(check_linear(s, order));
        }
    }
    EXPECT_GE(parity, 200);
    EXPECT_GE(mp, 200);
}

TEST(Saturate, DisjunctionAndParityMpObjectives) {
    std::vector<WeightVector> av;
    for (std::int64_t a : {-1, 0, 1})
        for (std::int64_t b : {-1, 0, 1}) av.push_back({{a, b}});
    ColoredGraph<WeightVector> g(2, {{0, {{1, -1}}, 1}});
    auto s = saturate(g, av);
    EXPECT_TRUE(check_disj_mp(s));
    EXPECT_TRUE(is_saturated(s, av));

    ColoredGraph<ParityWeight> h(2, {{0, {1, 1}, 1}, {1, {0, 0}, 0}});
    auto ap = parity_weight_alphabet(2, 1);
    auto t = saturate(h, ap);
    EXPECT_TRUE(check_parity_mp(t));
    EXPECT_TRUE(is_saturated(t, ap));
}

TEST(LinearOrder, Examples) {
    auto tree = materialize(TreeGraph(build_universal_tree(3, 2)), parity_alphabet(4));
    auto order = linear_order(tree);
    for (Vertex i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i);

    // Vertex i holds the i-th element of A; shuffle ids to see the order recovered.
    IntegerGraphSpec spec({-3, 1, 2, 7}, symmetric_weights(2));
    auto g = integer_graph_edges(spec);
    std::vector<Vertex> perm{2, 0, 3, 1};
    std::vector<Edge<Weight>> moved;
    for (const auto& e : g.edges()) moved.push_back({perm[e.source], e.color, perm[e.target]});
    ColoredGraph<Weight> shuffled(4, moved);
    EXPECT_EQ(linear_order(shuffled), (std::vector<Vertex>{2, 0, 3, 1}));

    EXPECT_EQ(linear_order(ColoredGraph<Priority>(1, {{0, {0}, 0}})), (std::vector<Vertex>{0}));
    EXPECT_THROW(linear_order(ColoredGraph<Priority>(2, {{0, {0}, 0}, {1, {0}, 1}})), InvalidInput);
}

TEST(CheckLinear, ScrambledOrderFails) {
    auto tree = materialize(TreeGraph(build_universal_tree(3, 2)), parity_alphabet(4));
    std::vector<Vertex> order(tree.size());
    for (Vertex v = 0; v < tree.size(); ++v) order[v] = v;
    EXPECT_TRUE(check_linear(tree, order));
    std::swap(order.front(), order.back());
    EXPECT_FALSE(check_linear(tree, order));
    auto violation = find_linearity_violation(tree, order);
    ASSERT_TRUE(violation);
    EXPECT_FALSE(violation->describe().empty());
}

TEST(LanguagesAgree, DeterminisedSaturatedGraphs) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> p(0, 2);
    std::uniform_int_distribution<std::int64_t> w(-1, 1);
    int done = 0;
    for (int it = 0; it < 200; ++it) {
        auto gp = random_graph<Priority>(rng, 1 + rng() % 4, 2, [&] { return Priority{p(rng)}; });
        if (check_parity(gp)) {
            auto alphabet = parity_alphabet(2);
            auto s = saturate(gp, alphabet);
            auto order = linear_order(s);
            auto lg = linear_from_edges(s, order);
            ASSERT_TRUE(languages_agree(s, determinise(lg, alphabet), alphabet, 8));
            ++done;
        }
        auto gm = random_graph<Weight>(rng, 1 + rng() % 4, 2, [&] { return Weight{w(rng)}; });
        if (check_mean_payoff(gm)) {
            auto alphabet = weight_alphabet(1);
            auto s = saturate(gm, alphabet);
            auto lg = linear_from_edges(s, linear_order(s));
            ASSERT_TRUE(languages_agree(s, determinise(lg, alphabet), alphabet, 8));
            ++done;
        }
    }
    EXPECT_GE(done, 200);
}

TEST(LanguagesAgree, DetectsDifference) {
    auto alphabet = parity_alphabet(2);
    auto full = materialize(TreeGraph(build_universal_tree(2, 1)), alphabet);
    auto one = determinise(TreeGraph(build_universal_tree(1, 1)), alphabet);
    // Two leaves read 1 once; a single leaf cannot.
    EXPECT_FALSE(languages_agree(full, one, alphabet, 2));
}

TEST(CheckUniversalParity, Examples) {
    EXPECT_TRUE(check_universal_parity(build_universal_tree(5, 2), 5));
    EXPECT_TRUE(check_universal_parity(build_universal_tree(1, 3), 1));
    bool any_ten = false;
    for_each_tree(2, 10, [&](const UniversalTree& t) {
        EXPECT_FALSE(check_universal_parity(t, 5));
        any_ten = true;
        return true;
    });
    EXPECT_TRUE(any_ten);
    EXPECT_FALSE(check_universal_parity(build_universal_tree(4, 2), 5));
}
