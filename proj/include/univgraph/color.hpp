#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace univgraph {

/// The single colour of safety games.
struct Unit {
    auto operator<=>(const Unit&) const = default;
};

/// Parity priority in [0,d].
struct Priority {
    int value = 0;
    auto operator<=>(const Priority&) const = default;
};

/// Mean payoff weight.
struct Weight {
    std::int64_t value = 0;
    auto operator<=>(const Weight&) const = default;
};

/// Colour of parity-or-mean-payoff games: a priority paired with a weight.
struct ParityWeight {
    int priority = 0;
    std::int64_t weight = 0;
    auto operator<=>(const ParityWeight&) const = default;
};

/// Colour of disjunctions of mean payoff objectives, one weight per dimension.
struct WeightVector {
    std::vector<std::int64_t> values;
    auto operator<=>(const WeightVector&) const = default;

    std::size_t dim() const noexcept { return values.size(); }
};

inline std::ostream& operator<<(std::ostream& os, const Unit&) { return os << "e"; }
inline std::ostream& operator<<(std::ostream& os, const Priority& c) { return os << c.value; }
inline std::ostream& operator<<(std::ostream& os, const Weight& c) { return os << c.value; }
inline std::ostream& operator<<(std::ostream& os, const ParityWeight& c) {
    return os << '(' << c.priority << ',' << c.weight << ')';
}
inline std::ostream& operator<<(std::ostream& os, const WeightVector& c) {
    os << '(';
    for (std::size_t i = 0; i < c.values.size(); ++i) os << (i ? "," : "") << c.values[i];
    return os << ')';
}

/// The neutral letter of each colour family. WeightVector needs its dimension.
inline Unit neutral_color(const Unit&) { return {}; }
inline Priority neutral_color(const Priority&) { return {0}; }
inline Weight neutral_color(const Weight&) { return {0}; }
inline ParityWeight neutral_color(const ParityWeight&) { return {0, 0}; }
inline WeightVector neutral_color(const WeightVector& like) {
    return {std::vector<std::int64_t>(like.dim(), 0)};
}

/// Alphabet helpers. All ranges are inclusive.
inline std::vector<Priority> parity_alphabet(int d) {
    std::vector<Priority> out;
    for (int p = 0; p <= d; ++p) out.push_back({p});
    return out;
}

inline std::vector<Weight> weight_alphabet(std::int64_t max_abs) {
    std::vector<Weight> out;
    for (std::int64_t w = -max_abs; w <= max_abs; ++w) out.push_back({w});
    return out;
}

inline std::vector<ParityWeight> parity_weight_alphabet(int d, std::int64_t max_abs) {
    std::vector<ParityWeight> out;
    for (int p = 0; p <= d; ++p)
        for (std::int64_t w = -max_abs; w <= max_abs; ++w) out.push_back({p, w});
    return out;
}

/// All vectors of [-max_abs, max_abs]^dim, in lexicographic order.
inline std::vector<WeightVector> weight_vector_alphabet(std::size_t dim, std::int64_t max_abs) {
    std::vector<WeightVector> out;
    std::vector<std::int64_t> cur(dim, -max_abs);
    while (true) {
        out.push_back({cur});
        std::size_t i = dim;
        while (i > 0 && cur[i - 1] == max_abs) cur[--i] = -max_abs;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

}  // namespace univgraph
