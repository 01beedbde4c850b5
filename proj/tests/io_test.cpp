#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "univgraph/io.hpp"
#include "univgraph/oracle.hpp"
#include "univgraph/random.hpp"

using namespace univgraph;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t error_line(const std::string& text) {
    try {
        import_pgsolver(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(PgSolver, Examples) {
    auto one = import_pgsolver("parity 0;\n0 2 0 0;\n");
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one.is_eve(0));
    EXPECT_EQ(one.graph().edge_count(), 1u);
    EXPECT_TRUE(one.graph().has_edge(0, {2}, 0));

    auto two = import_pgsolver("0 1 1 1; 1 2 0 0;");
    ASSERT_EQ(two.size(), 2u);
    EXPECT_FALSE(two.is_eve(0));
    EXPECT_TRUE(two.is_eve(1));
    EXPECT_TRUE(two.graph().has_edge(0, {1}, 1));
    EXPECT_TRUE(two.graph().has_edge(1, {2}, 0));

    auto sparse = import_pgsolver("parity 20;\n10 0 0 20 \"a\";\n20 3 1 10,20 \"b;c\";\nstart 10;\n");
    ASSERT_EQ(sparse.size(), 2u);
    EXPECT_TRUE(sparse.graph().has_edge(1, {3}, 1));
    EXPECT_TRUE(sparse.graph().has_edge(0, {0}, 1));
}

TEST(PgSolver, Errors) {
    EXPECT_THROW(import_pgsolver("0 1 2 0;"), ParseError);
    EXPECT_EQ(error_line("parity 1;\n0 1 0 1;\n1 1 0 7;\n"), 3u);
    EXPECT_EQ(error_line("0 1 0 0;\n\n0 x 0 0;\n"), 3u);
    EXPECT_THROW(import_pgsolver("0 1 0 0;\n0 2 0 0;"), ParseError);
    EXPECT_THROW(import_pgsolver("0 1 0;"), ParseError);
    EXPECT_THROW(import_pgsolver("0 -1 0 0;"), ParseError);
}

TEST(PgSolver, RoundTripKeepsWinners) {
    std::mt19937_64 rng(71);
    RandomGameShape shape{1, 6, 1, 3};
    for (int it = 0; it < 100; ++it) {
        auto gm = random_parity_game(rng, shape, 4);
        // Push one priority per vertex so the game is expressible.
        std::vector<Edge<Priority>> edges;
        for (const auto& e : gm.graph().edges()) edges.push_back({e.source, {static_cast<int>(e.source % 5)}, e.target});
        Game<Priority> vg(ColoredGraph<Priority>(gm.size(), edges), gm.owners());
        auto back = import_pgsolver(export_pgsolver(vg));
        ASSERT_EQ(back.graph(), vg.graph());
        ASSERT_EQ(back.owners(), vg.owners());
        ASSERT_EQ(brute_force_solve(back), brute_force_solve(vg));
    }
    Game<Priority> sink(ColoredGraph<Priority>(1, {}), {Player::Eve});
    EXPECT_THROW(export_pgsolver(sink), InvalidInput);
}

TEST(Weighted, Examples) {
    auto loop = import_weighted("mpg dim=1;\n0 0 (0::0);\n");
    ASSERT_TRUE(std::holds_alternative<Game<Weight>>(loop));
    const auto& g1 = std::get<Game<Weight>>(loop);
    EXPECT_TRUE(g1.graph().has_edge(0, {0}, 0));
    EXPECT_TRUE(g1.is_eve(0));

    auto disj = import_weighted("mpg dim=2;\n0 0 (0::-1,0);\n");
    ASSERT_TRUE(std::holds_alternative<Game<WeightVector>>(disj));
    EXPECT_TRUE(std::get<Game<WeightVector>>(disj).graph().has_edge(0, {{-1, 0}}, 0));

    auto pm = import_weighted("mpg dim=1 parity;\n0 0 (0:1:-1);\n");
    ASSERT_TRUE(std::holds_alternative<Game<ParityWeight>>(pm));
    EXPECT_TRUE(std::get<Game<ParityWeight>>(pm).graph().has_edge(0, {1, -1}, 0));
}

TEST(Weighted, Errors) {
    EXPECT_THROW(import_weighted("0 0 (0::0);"), ParseError);
    EXPECT_THROW(import_weighted("mpg;"), ParseError);
    EXPECT_THROW(import_weighted("mpg dim=2 parity;"), ParseError);
    EXPECT_THROW(import_weighted("mpg dim=2;\n0 0 (0::1);"), ParseError);
    EXPECT_THROW(import_weighted("mpg dim=1;\n0 0 (0:2:1);"), ParseError);
    EXPECT_THROW(import_weighted("mpg dim=1 parity;\n0 0 (0::1);"), ParseError);
    EXPECT_THROW(import_weighted("mpg dim=1;\n0 0 (4::1);"), ParseError);
    EXPECT_THROW(import_weighted("mpg dim=1;\n0 0 (0::1;"), ParseError);
    EXPECT_THROW(import_weighted("mpg dim=1;\n0 3 (0::1);"), ParseError);
    try {
        import_weighted("mpg dim=1;\n0 0 (0::0);\n1 0 (0::x);\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Weighted, RoundTrips) {
    std::mt19937_64 rng(72);
    RandomGameShape shape{1, 5, 0, 3};
    for (int it = 0; it < 50; ++it) {
        auto a = random_mp_game(rng, shape, 3);
        auto ra = std::get<Game<Weight>>(import_weighted(export_weighted(a)));
        ASSERT_EQ(ra.graph(), a.graph());
        ASSERT_EQ(ra.owners(), a.owners());
        ASSERT_EQ(brute_force_solve(ra), brute_force_solve(a));

        auto b = random_parity_mp_game(rng, shape, 3, 2);
        auto rb = std::get<Game<ParityWeight>>(import_weighted(export_weighted(b)));
        ASSERT_EQ(rb.graph(), b.graph());

        auto c = random_disj_mp_game(rng, shape, 3, 2);
        auto rc = std::get<Game<WeightVector>>(import_weighted(export_weighted(c)));
        ASSERT_EQ(rc.graph(), c.graph());
        ASSERT_EQ(rc.owners(), c.owners());
    }
}

TEST(Samples, RoundTripUnderTheOracle) {
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(UNIVGRAPH_SAMPLES)) {
        const auto& p = entry.path();
        if (p.extension() == ".gm") {
            auto gm = import_pgsolver(slurp(p));
            auto back = import_pgsolver(export_pgsolver(gm));
            EXPECT_EQ(brute_force_solve(back), brute_force_solve(gm)) << p;
            ++files;
        } else if (p.extension() == ".mpg") {
            std::visit(
                [&](const auto& gm) {
                    auto back = import_weighted(export_weighted(gm));
                    using G = std::decay_t<decltype(gm)>;
                    EXPECT_EQ(brute_force_solve(std::get<G>(back)), brute_force_solve(gm)) << p;
                },
                import_weighted(slurp(p)));
            ++files;
        }
    }
    EXPECT_GE(files, 6);
}

TEST(TreeFormat, RoundTrip) {
    auto t = build_universal_tree(5, 2);
    EXPECT_EQ(read_tree(write_tree(t)), t);
    UniversalTree flat(0, {Leaf{}});
    EXPECT_EQ(write_tree(flat), "height 0\n()\n");
    EXPECT_EQ(read_tree(write_tree(flat)), flat);
    EXPECT_THROW(read_tree("height 2\n0,1\n3\n"), ParseError);
    EXPECT_THROW(read_tree("0,1\n"), ParseError);
}

TEST(IntSetFormat, RoundTrip) {
    auto spec = universal_set_digits(3, 3);
    auto text = write_int_set(spec, 3);
    EXPECT_EQ(text.substr(0, text.find('\n')), "n=3 N=3 W=-3,-2,-1,0,1,2,3");
    auto back = read_int_set(text);
    EXPECT_EQ(back.n, 3);
    EXPECT_EQ(back.spec, spec);
    EXPECT_THROW(read_int_set("n=2 Q=1\n0\n"), ParseError);
}
