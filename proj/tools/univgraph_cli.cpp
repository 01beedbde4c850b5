#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "univgraph/univgraph.hpp"

using namespace univgraph;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    int n = -1;
    int d = -1;
    std::int64_t N = -1;
    std::string in;
    std::string out;
    std::string set = "interval";
    std::string graph = "tree";
    std::string weights;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    int count = 20;
    bool pretty = false;
};

std::string read_file(const std::string& path) {
    if (path.empty()) throw InvalidInput("--in FILE is required");
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

bool is_weighted(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    in >> first;
    return first.rfind("mpg", 0) == 0;
}

std::vector<std::int64_t> parse_weights(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

MpSetKind set_kind(const std::string& s) {
    if (s == "interval") return MpSetKind::Interval;
    if (s == "digits") return MpSetKind::Digits;
    if (s == "sums") return MpSetKind::Sums;
    throw InvalidInput("unknown set '" + s + "'");
}

Json winning_json(const std::vector<bool>& winning) {
    Json w = Json::array();
    for (Vertex v = 0; v < winning.size(); ++v)
        if (winning[v]) w.push_back(v);
    return w;
}

template <class C>
Json report_json(const Game<C>& game, const SolveReport& r, double wall_ms) {
    Json out;
    out["winning"] = winning_json(r.winning);
    Json strategy = Json::object(), targets = Json::object();
    for (Vertex v = 0; v < game.size(); ++v)
        if (r.winning[v] && game.is_eve(v) && r.strategy.defined(v)) {
            strategy[std::to_string(v)] = r.strategy.at(v);
            targets[std::to_string(v)] = game.graph().edge(r.strategy.at(v)).target;
        }
    out["strategy"] = strategy;
    out["strategy_targets"] = targets;
    out["stats"] = {{"lifts", r.lifts}, {"edge_touches", r.edge_touches}, {"q_size", r.q_size}, {"wall_ms", wall_ms}};
    return out;
}

template <class F>
auto timed(F f, double& ms) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Game<Weight> mp_game(const std::string& text) {
    auto g = import_weighted(text);
    if (!std::holds_alternative<Game<Weight>>(g)) throw InvalidInput("expected a 'mpg dim=1' game");
    return std::get<Game<Weight>>(g);
}

Json solve_parity_cmd(const Options& o) {
    auto game = import_pgsolver(read_file(o.in));
    ParityGraphKind kind;
    if (o.graph == "tree") kind = ParityGraphKind::Tree;
    else if (o.graph == "exp") kind = ParityGraphKind::Exponential;
    else throw InvalidInput("unknown graph '" + o.graph + "'");
    int d = o.d < 0 ? even_ceiling(max_priority(game.graph())) : o.d;
    int n = o.n < 0 ? static_cast<int>(game.size()) : o.n;
    if (kind == ParityGraphKind::Exponential && d > 0) complete_tree(std::max(n, 1), d / 2, o.budget);
    double ms = 0;
    auto r = timed([&] { return solve_parity(game, n, d, kind); }, ms);
    return report_json(game, r, ms);
}

Json solve_mp_cmd(const Options& o) {
    auto game = mp_game(read_file(o.in));
    double ms = 0;
    auto r = timed([&] { return solve_mp(game, set_kind(o.set), o.n, o.N); }, ms);
    return report_json(game, r, ms);
}

Json solve_parity_or_mp_cmd(const Options& o) {
    auto g = import_weighted(read_file(o.in));
    if (!std::holds_alternative<Game<ParityWeight>>(g)) throw InvalidInput("expected a 'mpg dim=1 parity' game");
    const auto& game = std::get<Game<ParityWeight>>(g);
    double ms = 0;
    auto r = timed([&] { return solve_parity_or_mp(game, o.n, o.d, o.N, set_kind(o.set)); }, ms);
    return report_json(game, r, ms);
}

Json solve_disj_mp_cmd(const Options& o) {
    auto g = import_weighted(read_file(o.in));
    if (!std::holds_alternative<Game<WeightVector>>(g)) throw InvalidInput("expected a 'mpg dim=<d>' game with d >= 2");
    const auto& game = std::get<Game<WeightVector>>(g);
    double ms = 0;
    auto r = timed([&] { return solve_disj_mp(game, o.n, o.N); }, ms);
    return report_json(game, r, ms);
}

Json build_tree_cmd(const Options& o) {
    if (o.n < 0 || o.d < 2 || o.d % 2 != 0) throw InvalidInput("build-tree needs --n >= 0 and an even --d >= 2");
    auto t = build_universal_tree(o.n, o.d / 2);
    if (!o.out.empty()) write_file(o.out, write_tree(t));
    return {{"height", t.height}, {"size", t.size()}, {"leaves", t.leaves}};
}

Json build_mp_set_cmd(const std::string& which, const Options& o) {
    if (o.n < 1) throw InvalidInput("build-mp-set needs --n >= 1");
    IntegerGraphSpec spec;
    if (which == "sums") {
        auto W = o.weights.empty() ? symmetric_weights(std::max<std::int64_t>(o.N, 0)) : parse_weights(o.weights);
        spec = universal_set_sums(o.n, W);
    } else {
        if (o.N < 0) throw InvalidInput("--N is required");
        spec = which == "digits" ? universal_set_digits(o.n, o.N) : universal_set_interval(o.n, o.N);
    }
    if (!o.out.empty()) write_file(o.out, write_int_set(spec, o.n));
    return {{"n", o.n}, {"N", spec.N()}, {"W", spec.W}, {"size", spec.A.size()}, {"A", spec.A}};
}

template <class C>
Json saturate_json(const ColoredGraph<C>& g, const std::vector<C>& alphabet) {
    auto s = saturate(g, alphabet);
    auto order = linear_order(s);
    Json edges = Json::array();
    for (const auto& e : s.edges()) {
        std::ostringstream c;
        c << e.color;
        edges.push_back({e.source, c.str(), e.target});
    }
    return {{"vertices", s.size()}, {"edges_in", g.edge_count()}, {"edges_out", s.edge_count()},
            {"order", order}, {"linear", check_linear(s, order)}, {"edges", edges}};
}

std::int64_t weight_bound(std::int64_t given, std::int64_t actual) {
    if (given >= 0 && actual > given) throw InvalidInput("weight exceeds N");
    return given >= 0 ? given : actual;
}

Json saturate_cmd(const Options& o) {
    auto text = read_file(o.in);
    if (!is_weighted(text)) {
        auto game = import_pgsolver(text);
        int d = o.d < 0 ? even_ceiling(max_priority(game.graph())) : o.d;
        return saturate_json(game.graph(), parity_alphabet(d));
    }
    return std::visit(
        [&](const auto& game) -> Json {
            using C = typename std::decay_t<decltype(game)>::color_type;
            const auto& g = game.graph();
            if constexpr (std::is_same_v<C, Weight>) {
                return saturate_json(g, weight_alphabet(weight_bound(o.N, max_abs_weight(g))));
            } else if constexpr (std::is_same_v<C, ParityWeight>) {
                int top = 0;
                std::int64_t m = 0;
                for (const auto& e : g.edges()) {
                    top = std::max(top, e.color.priority);
                    m = std::max<std::int64_t>(m, std::abs(e.color.weight));
                }
                return saturate_json(g, parity_weight_alphabet(o.d < 0 ? even_ceiling(top) : o.d, weight_bound(o.N, m)));
            } else {
                std::int64_t m = 0;
                std::size_t dim = 0;
                for (const auto& e : g.edges()) {
                    dim = e.color.dim();
                    for (auto w : e.color.values) m = std::max<std::int64_t>(m, std::abs(w));
                }
                if (dim == 0) throw InvalidInput("graph has no edges to infer the dimension from");
                return saturate_json(g, weight_vector_alphabet(dim, weight_bound(o.N, m)));
            }
        },
        import_weighted(text));
}

Json check_universal_cmd(const Options& o) {
    if (!o.in.empty()) {
        auto text = read_file(o.in);
        std::istringstream first(text);
        std::string word;
        first >> word;
        if (word == "height") {
            auto t = read_tree(text);
            if (o.n < 0) throw InvalidInput("--n is required");
            return {{"kind", "tree"}, {"n", o.n}, {"size", t.size()}, {"universal", check_universal_parity(t, o.n, o.budget)}};
        }
        auto file = read_int_set(text);
        int n = o.n < 0 ? file.n : o.n;
        return {{"kind", "integer set"},
                {"n", n},
                {"size", file.spec.A.size()},
                {"universal", check_universal_mp(file.spec, n, file.spec.W, o.budget)}};
    }
    if (o.n < 0) throw InvalidInput("--n is required");
    if (o.set == "tree") {
        if (o.d < 2 || o.d % 2 != 0) throw InvalidInput("--d must be even and >= 2");
        auto t = build_universal_tree(o.n, o.d / 2);
        return {{"kind", "tree"}, {"n", o.n}, {"size", t.size()}, {"universal", check_universal_parity(t, o.n, o.budget)}};
    }
    if (o.N < 0) throw InvalidInput("--N is required");
    auto W = o.weights.empty() ? symmetric_weights(o.N) : parse_weights(o.weights);
    auto spec = mp_universal_set(o.n, o.N, set_kind(o.set), W);
    if (o.set != "sums") W = spec.W;
    return {{"kind", o.set}, {"n", o.n}, {"size", spec.A.size()}, {"universal", check_universal_mp(spec, o.n, W, o.budget)}};
}

Json oracle_cmd(const Options& o) {
    auto text = read_file(o.in);
    double ms = 0;
    std::vector<bool> winning;
    if (!is_weighted(text)) {
        auto game = import_pgsolver(text);
        winning = timed([&] { return brute_force_solve(game, o.budget); }, ms);
    } else {
        winning = std::visit([&](const auto& game) { return timed([&] { return brute_force_solve(game, o.budget); }, ms); },
                             import_weighted(text));
    }
    return {{"winning", winning_json(winning)}, {"stats", {{"wall_ms", ms}}}};
}

Json bench_cmd(const Options& o) {
    std::mt19937_64 rng(o.seed);
    const std::size_t n = o.n < 1 ? 8 : static_cast<std::size_t>(o.n);
    const int d = o.d < 0 ? 4 : o.d;
    const std::int64_t N = o.N < 0 ? 3 : o.N;
    RandomGameShape shape{n, n, 1, 3};
    struct Totals {
        std::size_t lifts = 0, edge_touches = 0, q_size = 0, won = 0;
        double wall_ms = 0;
    };
    std::map<std::string, Totals> totals;
    auto add = [&](const std::string& key, const std::function<SolveReport()>& solve) {
        double ms = 0;
        SolveReport r = timed(solve, ms);
        auto& t = totals[key];
        t.lifts += r.lifts;
        t.edge_touches += r.edge_touches;
        t.q_size = std::max(t.q_size, r.q_size);
        for (bool b : r.winning) t.won += b;
        t.wall_ms += ms;
    };
    for (int i = 0; i < o.count; ++i) {
        auto pg = random_parity_game(rng, shape, d);
        add("parity_tree", [&] { return solve_parity(pg, -1, d, ParityGraphKind::Tree); });
        add("parity_exp", [&] { return solve_parity(pg, -1, d, ParityGraphKind::Exponential); });
        auto mg = random_mp_game(rng, shape, N);
        add("mp_interval", [&] { return solve_mp(mg, MpSetKind::Interval, -1, N); });
        add("mp_digits", [&] { return solve_mp(mg, MpSetKind::Digits, -1, N); });
    }
    Json results = Json::object();
    for (const auto& [k, t] : totals)
        results[k] = {{"vertices_won", t.won},
                      {"lifts", t.lifts},
                      {"edge_touches", t.edge_touches},
                      {"q_size", t.q_size},
                      {"wall_ms", t.wall_ms}};
    return {{"seed", o.seed}, {"games", o.count}, {"vertices", n}, {"d", d}, {"N", N}, {"results", results}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal graph toolkit: solve parity and mean payoff games, build and check universal objects."};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("UNIVGRAPH_BUDGET")) o.budget = std::strtoull(env, nullptr, 10);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "Size bound n (defaults to the number of vertices)");
        sub->add_option("--d", o.d, "Even priority bound d");
        sub->add_option("--N", o.N, "Largest absolute weight N");
        sub->add_option("--in", o.in, "Input file");
        sub->add_option("--out", o.out, "Also write the built object to this file");
        sub->add_option("--set", o.set, "Mean payoff set: interval, digits or sums (tree for check-universal)");
        sub->add_option("--weights", o.weights, "Comma-separated weight set for the sums set");
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--budget", o.budget, "Work budget for exhaustive steps (also UNIVGRAPH_BUDGET)");
        sub->add_flag("--json", o.pretty, "Pretty-print the JSON output");
    };

    std::string command;
    std::string set_choice;
    const std::pair<const char*, const char*> subcommands[] = {
        {"solve-parity", "Solve a PGSolver parity game"},
        {"solve-mp", "Solve a mean payoff game (threshold 0)"},
        {"solve-parity-or-mp", "Solve a game whose edges carry a priority and a weight"},
        {"solve-disj-mp", "Solve a disjunction of mean payoff objectives"},
        {"build-tree", "Build a small universal tree"},
        {"build-seq", "Print the sequence used by the sequential product"},
        {"saturate", "Saturate a game graph"},
        {"check-universal", "Check a tree or integer set for universality"},
        {"oracle", "Solve a game by exhaustive search"},
        {"bench", "Compare solvers on random games"}};
    for (const auto& [name, help] : subcommands) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        sub->callback([&command, name] { command = name; });
        if (std::string(name) == "solve-parity") sub->add_option("--graph", o.graph, "Universal graph: tree or exp");
        if (std::string(name) == "bench") sub->add_option("--count", o.count, "Number of random games per objective");
    }
    auto* mpset = app.add_subcommand("build-mp-set", "Build a mean payoff universal set");
    common(mpset);
    mpset->add_option("kind", set_choice, "interval, sums or digits")
        ->required()
        ->check(CLI::IsMember({"interval", "sums", "digits"}));
    mpset->callback([&command] { command = "build-mp-set"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (o.budget == 0) o.budget = kDefaultOracleBudget;

    try {
        Json out;
        if (command == "solve-parity") out = solve_parity_cmd(o);
        else if (command == "solve-mp") out = solve_mp_cmd(o);
        else if (command == "solve-parity-or-mp") out = solve_parity_or_mp_cmd(o);
        else if (command == "solve-disj-mp") out = solve_disj_mp_cmd(o);
        else if (command == "build-tree") out = build_tree_cmd(o);
        else if (command == "build-mp-set") out = build_mp_set_cmd(set_choice, o);
        else if (command == "build-seq") {
            if (o.n < 0) throw InvalidInput("--n is required");
            out = universal_sequence(o.n);
        } else if (command == "saturate") out = saturate_cmd(o);
        else if (command == "check-universal") out = check_universal_cmd(o);
        else if (command == "oracle") out = oracle_cmd(o);
        else if (command == "bench") out = bench_cmd(o);
        std::cout << (o.pretty ? out.dump(2) : out.dump()) << '\n';
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error, " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
