#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "univgraph/errors.hpp"
#include "univgraph/graph.hpp"
#include "univgraph/mp_universal.hpp"
#include "univgraph/parity_universal.hpp"

namespace univgraph {

namespace detail {

struct Statement {
    std::string text;
    std::size_t line;
};

// Splits on ';' outside double quotes. Trailing text without ';' is kept.
inline std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    std::string cur;
    std::size_t line = 1, start = 1;
    bool quoted = false, blank = true;
    for (char ch : text) {
        if (blank && !std::isspace(static_cast<unsigned char>(ch))) {
            start = line;
            blank = false;
        }
        if (ch == '\n') ++line;
        if (ch == '"') quoted = !quoted;
        if (ch == ';' && !quoted) {
            out.push_back({cur, start});
            cur.clear();
            blank = true;
            continue;
        }
        cur += ch;
    }
    if (quoted) throw ParseError("unterminated string", start);
    if (cur.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back({cur, start});
    return out;
}

inline std::int64_t parse_int(const std::string& s, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
    }
}

inline std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

// Renumbers sparse ids densely in increasing order.
inline std::map<std::int64_t, Vertex> densify(const std::vector<std::int64_t>& ids) {
    std::map<std::int64_t, Vertex> dense;
    for (auto id : ids) dense.emplace(id, 0);
    Vertex next = 0;
    for (auto& [id, v] : dense) v = next++;
    return dense;
}

inline Player parse_owner(const std::string& s, std::size_t line) {
    if (s == "0") return Player::Eve;
    if (s == "1") return Player::Adam;
    throw ParseError("owner must be 0 or 1, got '" + s + "'", line);
}

}  // namespace detail

/// PGSolver format. Owner 0 is Eve; each vertex's priority is put on its outgoing edges.
inline Game<Priority> import_pgsolver(const std::string& text) {
    struct Row {
        std::int64_t id;
        int priority;
        Player owner;
        std::vector<std::int64_t> succ;
        std::size_t line;
    };
    std::vector<Row> rows;
    for (const auto& st : detail::split_statements(text)) {
        std::string body = detail::trim(st.text);
        if (body.empty()) continue;
        // Drop an optional trailing name.
        if (auto q = body.find('"'); q != std::string::npos) body = detail::trim(body.substr(0, q));
        std::istringstream in(body);
        std::string first;
        in >> first;
        if (first == "parity" || first == "start") continue;
        std::string prio, owner, succ, extra;
        if (!(in >> prio >> owner >> succ)) throw ParseError("expected '<id> <priority> <owner> <successors>'", st.line);
        if (in >> extra) throw ParseError("unexpected token '" + extra + "'", st.line);
        Row r{detail::parse_int(first, st.line, "vertex id"),
              static_cast<int>(detail::parse_int(prio, st.line, "priority")), detail::parse_owner(owner, st.line), {},
              st.line};
        if (r.priority < 0) throw ParseError("negative priority", st.line);
        for (const auto& s : detail::split(succ, ',')) r.succ.push_back(detail::parse_int(s, st.line, "successor"));
        rows.push_back(std::move(r));
    }
    std::vector<std::int64_t> ids;
    for (const auto& r : rows) ids.push_back(r.id);
    auto dense = detail::densify(ids);
    if (dense.size() != rows.size()) throw ParseError("duplicate vertex id", rows.empty() ? 0 : rows.back().line);
    std::vector<Player> owner(dense.size());
    std::vector<Edge<Priority>> edges;
    for (const auto& r : rows) {
        Vertex v = dense.at(r.id);
        owner[v] = r.owner;
        for (auto s : r.succ) {
            auto it = dense.find(s);
            if (it == dense.end()) throw ParseError("dangling successor " + std::to_string(s), r.line);
            edges.push_back({v, {r.priority}, it->second});
        }
    }
    return {ColoredGraph<Priority>(dense.size(), std::move(edges)), std::move(owner)};
}

/// Writes PGSolver text. Needs every vertex to have moves, all with one priority.
inline std::string export_pgsolver(const Game<Priority>& game) {
    const auto& g = game.graph();
    std::ostringstream out;
    out << "parity " << (g.size() == 0 ? 0 : g.size() - 1) << ";\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        auto es = g.out_edges(v);
        if (es.empty()) throw InvalidInput("PGSolver format cannot express sink " + std::to_string(v));
        int p = es.front().color.value;
        out << v << ' ' << p << ' ' << (game.is_eve(v) ? 0 : 1) << ' ';
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (es[i].color.value != p)
                throw InvalidInput("vertex " + std::to_string(v) + " has edges of different priorities");
            if (i == 0 || es[i].target != es[i - 1].target) out << (i ? "," : "") << es[i].target;
        }
        out << ";\n";
    }
    return out.str();
}

using WeightedGame = std::variant<Game<Weight>, Game<WeightVector>, Game<ParityWeight>>;

/// Format: header `mpg dim=<d> [parity];`, then `<id> <owner> (<succ>:<p>:<w1>,...,<wd>)+;`
/// with the priority field left empty unless the header says parity.
inline WeightedGame import_weighted(const std::string& text) {
    auto statements = detail::split_statements(text);
    std::size_t k = 0;
    while (k < statements.size() && detail::trim(statements[k].text).empty()) ++k;
    if (k == statements.size()) throw ParseError("missing 'mpg' header", 1);
    std::size_t dim = 0;
    bool parity = false;
    {
        std::istringstream in(detail::trim(statements[k].text));
        std::string word;
        in >> word;
        if (word != "mpg") throw ParseError("missing 'mpg' header", statements[k].line);
        while (in >> word) {
            if (word.rfind("dim=", 0) == 0) {
                auto d = detail::parse_int(word.substr(4), statements[k].line, "dimension");
                if (d < 1) throw ParseError("dimension must be positive", statements[k].line);
                dim = static_cast<std::size_t>(d);
            } else if (word == "parity") {
                parity = true;
            } else {
                throw ParseError("unknown header field '" + word + "'", statements[k].line);
            }
        }
        if (dim == 0) throw ParseError("header needs dim=<d>", statements[k].line);
        if (parity && dim != 1) throw ParseError("parity is only supported with dim=1", statements[k].line);
    }

    struct Arc {
        std::int64_t succ;
        int priority;
        std::vector<std::int64_t> w;
    };
    struct Row {
        std::int64_t id;
        Player owner;
        std::vector<Arc> arcs;
        std::size_t line;
    };
    std::vector<Row> rows;
    for (++k; k < statements.size(); ++k) {
        const auto& st = statements[k];
        std::string body = detail::trim(st.text);
        if (body.empty()) continue;
        auto paren = body.find('(');
        std::istringstream head(body.substr(0, paren));
        std::string id, owner, extra;
        if (!(head >> id >> owner)) throw ParseError("expected '<id> <owner> (...)'", st.line);
        if (head >> extra) throw ParseError("unexpected token '" + extra + "'", st.line);
        Row r{detail::parse_int(id, st.line, "vertex id"), detail::parse_owner(owner, st.line), {}, st.line};
        std::size_t pos = paren;
        while (pos != std::string::npos && pos < body.size()) {
            if (std::isspace(static_cast<unsigned char>(body[pos]))) {
                ++pos;
                continue;
            }
            if (body[pos] != '(') throw ParseError("expected '('", st.line);
            auto close = body.find(')', pos);
            if (close == std::string::npos) throw ParseError("missing ')'", st.line);
            auto fields = detail::split(body.substr(pos + 1, close - pos - 1), ':');
            if (fields.size() != 3) throw ParseError("edge needs '<succ>:<p>:<weights>'", st.line);
            Arc a{detail::parse_int(fields[0], st.line, "successor"), 0, {}};
            if (parity) {
                if (fields[1].empty()) throw ParseError("missing priority", st.line);
                a.priority = static_cast<int>(detail::parse_int(fields[1], st.line, "priority"));
                if (a.priority < 0) throw ParseError("negative priority", st.line);
            } else if (!fields[1].empty()) {
                throw ParseError("priority given without 'parity' header", st.line);
            }
            for (const auto& w : detail::split(fields[2], ',')) a.w.push_back(detail::parse_int(w, st.line, "weight"));
            if (a.w.size() != dim)
                throw ParseError("expected " + std::to_string(dim) + " weights, got " + std::to_string(a.w.size()),
                                 st.line);
            r.arcs.push_back(std::move(a));
            pos = close + 1;
        }
        rows.push_back(std::move(r));
    }

    std::vector<std::int64_t> ids;
    for (const auto& r : rows) ids.push_back(r.id);
    auto dense = detail::densify(ids);
    if (dense.size() != rows.size()) throw ParseError("duplicate vertex id", rows.empty() ? 0 : rows.back().line);
    std::vector<Player> owner(dense.size());
    for (const auto& r : rows) owner[dense.at(r.id)] = r.owner;
    auto target = [&](const Row& r, const Arc& a) {
        auto it = dense.find(a.succ);
        if (it == dense.end()) throw ParseError("dangling successor " + std::to_string(a.succ), r.line);
        return it->second;
    };
    auto build = [&](auto color_of) {
        using C = decltype(color_of(std::declval<const Arc&>()));
        std::vector<Edge<C>> edges;
        for (const auto& r : rows)
            for (const auto& a : r.arcs) edges.push_back({dense.at(r.id), color_of(a), target(r, a)});
        return Game<C>(ColoredGraph<C>(dense.size(), std::move(edges)), owner);
    };
    if (parity) return build([](const Arc& a) { return ParityWeight{a.priority, a.w[0]}; });
    if (dim == 1) return build([](const Arc& a) { return Weight{a.w[0]}; });
    return build([](const Arc& a) { return WeightVector{a.w}; });
}

namespace detail {

template <class C, class Write>
std::string export_weighted_impl(const Game<C>& game, const std::string& header, Write write) {
    std::ostringstream out;
    out << header << ";\n";
    const auto& g = game.graph();
    for (Vertex v = 0; v < g.size(); ++v) {
        out << v << ' ' << (game.is_eve(v) ? 0 : 1);
        for (const auto& e : g.out_edges(v)) {
            out << " (" << e.target << ':';
            write(out, e.color);
            out << ')';
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace detail

inline std::string export_weighted(const Game<Weight>& game) {
    return detail::export_weighted_impl(game, "mpg dim=1", [](std::ostream& os, const Weight& c) { os << ':' << c.value; });
}

inline std::string export_weighted(const Game<ParityWeight>& game) {
    return detail::export_weighted_impl(game, "mpg dim=1 parity", [](std::ostream& os, const ParityWeight& c) {
        os << c.priority << ':' << c.weight;
    });
}

inline std::string export_weighted(const Game<WeightVector>& game) {
    std::size_t dim = 0;
    for (const auto& e : game.graph().edges()) dim = e.color.dim();
    if (dim == 0) dim = 2;
    return detail::export_weighted_impl(game, "mpg dim=" + std::to_string(dim),
                                        [](std::ostream& os, const WeightVector& c) {
                                            os << ':';
                                            for (std::size_t i = 0; i < c.values.size(); ++i)
                                                os << (i ? "," : "") << c.values[i];
                                        });
}

/// `height <h>` then one leaf per line, coordinates comma-separated ("()" for height 0).
inline std::string write_tree(const UniversalTree& t) {
    std::ostringstream out;
    out << "height " << t.height << '\n';
    for (const auto& leaf : t.leaves) {
        if (leaf.empty()) out << "()";
        for (std::size_t i = 0; i < leaf.size(); ++i) out << (i ? "," : "") << leaf[i];
        out << '\n';
    }
    return out.str();
}

inline UniversalTree read_tree(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<int> height;
    std::vector<Leaf> leaves;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(line);
        if (line.empty()) continue;
        if (!height) {
            std::istringstream h(line);
            std::string word, value, extra;
            if (!(h >> word >> value) || word != "height" || (h >> extra))
                throw ParseError("expected 'height <h>'", lineno);
            height = static_cast<int>(detail::parse_int(value, lineno, "height"));
            continue;
        }
        Leaf leaf;
        if (line != "()")
            for (const auto& x : detail::split(line, ',')) leaf.push_back(static_cast<int>(detail::parse_int(x, lineno, "coordinate")));
        if (static_cast<int>(leaf.size()) != *height) throw ParseError("leaf length differs from height", lineno);
        leaves.push_back(std::move(leaf));
    }
    if (!height) throw ParseError("missing height header", lineno);
    return UniversalTree(*height, std::move(leaves));
}

/// `n=<n> N=<N> W=<w1,...>` then the sorted elements of A, one per line.
inline std::string write_int_set(const IntegerGraphSpec& spec, int n) {
    std::ostringstream out;
    out << "n=" << n << " N=" << spec.N() << " W=";
    for (std::size_t i = 0; i < spec.W.size(); ++i) out << (i ? "," : "") << spec.W[i];
    out << '\n';
    for (auto a : spec.A) out << a << '\n';
    return out.str();
}

struct IntSetFile {
    int n = 0;
    IntegerGraphSpec spec;
};

inline IntSetFile read_int_set(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    IntSetFile out;
    std::vector<std::int64_t> A, W;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(line);
        if (line.empty()) continue;
        if (!header) {
            std::istringstream h(line);
            std::string field;
            while (h >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) throw ParseError("bad header field '" + field + "'", lineno);
                auto key = field.substr(0, eq), value = field.substr(eq + 1);
                if (key == "n") out.n = static_cast<int>(detail::parse_int(value, lineno, "n"));
                else if (key == "N") detail::parse_int(value, lineno, "N");
                else if (key == "W")
                    for (const auto& w : detail::split(value, ',')) W.push_back(detail::parse_int(w, lineno, "weight"));
                else throw ParseError("unknown header field '" + key + "'", lineno);
            }
            header = true;
            continue;
        }
        A.push_back(detail::parse_int(line, lineno, "element"));
    }
    if (!header) throw ParseError("missing header", lineno);
    out.spec = IntegerGraphSpec(std::move(A), std::move(W));
    return out;
}

}  // namespace univgraph
