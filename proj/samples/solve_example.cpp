// Solves a small parity game and a small mean payoff game, then prints the
// winning regions and the strategies found.

#include <iostream>

#include "univgraph/univgraph.hpp"

using namespace univgraph;

int main() {
    // Vertex 0 (Eve) either loops with priority 1 or moves to 1.
    // Vertex 1 (Adam) returns to 0 with priority 2 or moves to 2 with priority 3; 2 loops with 0.
    Game<Priority> parity(ColoredGraph<Priority>(3, {{0, {1}, 0}, {0, {0}, 1}, {1, {2}, 0}, {1, {3}, 2}, {2, {0}, 2}}),
                          {Player::Eve, Player::Adam, Player::Eve});
    auto pr = solve_parity(parity);
    std::cout << "parity: universal tree with " << pr.q_size << " leaves, " << pr.lifts << " lifts\n";
    for (Vertex v = 0; v < parity.size(); ++v) {
        std::cout << "  vertex " << v << (pr.winning[v] ? " won by Eve" : " won by Adam");
        if (pr.winning[v] && parity.is_eve(v)) std::cout << ", move to " << parity.graph().edge(pr.strategy.at(v)).target;
        std::cout << '\n';
    }

    auto mp = import_weighted("mpg dim=1;\n0 0 (1::-2) (2::1);\n1 1 (1::-1) (0::3);\n2 1 (2::0) (0::-1);\n");
    const auto& game = std::get<Game<Weight>>(mp);
    for (auto kind : {MpSetKind::Interval, MpSetKind::Digits}) {
        auto r = solve_mp(game, kind);
        std::cout << (kind == MpSetKind::Interval ? "mean payoff, interval set" : "mean payoff, digit set") << " of size "
                  << r.q_size << ": Eve wins";
        for (Vertex v = 0; v < game.size(); ++v)
            if (r.winning[v]) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return 0;
}
