#ifndef JKPOWER_TESTS_HELPERS_HPP
#define JKPOWER_TESTS_HELPERS_HPP

#include <vector>

#include "jkpower/game.hpp"

namespace jkpower::testing {

// The running 2-player (3,3) example: v(0,0)=v(1,0)=0, v(0,1)=v(1,1)=1,
// everything else 2. Canonical index order is (0,0),(0,1),(0,2),(1,0),...
inline JKGame example1_game() {
    return build_table_game(GameShape{2, 3, 3}, {0, 1, 2, 0, 1, 2, 2, 2, 2});
}

// Twin games with equal average games: the top-point game and the game that
// is top everywhere except the origin.
inline JKGame top_point_game(const GameShape& shape) {
    const std::uint64_t cells = shape.table_cells();
    std::vector<int> values(cells, 0);
    values.back() = shape.k - 1;
    return build_table_game(shape, std::move(values));
}

inline JKGame off_origin_game(const GameShape& shape) {
    const std::uint64_t cells = shape.table_cells();
    std::vector<int> values(cells, shape.k - 1);
    values.front() = 0;
    return build_table_game(shape, std::move(values));
}

inline std::vector<JKGame> random_suite(const GameShape& shape, int count,
                                        std::uint64_t seed_base = 1000) {
    std::vector<JKGame> suite;
    suite.reserve(count);
    for (int i = 0; i < count; ++i)
        suite.push_back(random_monotone_game(shape, seed_base + i));
    return suite;
}

// All monotone tables of a small shape, by brute force over value tables.
inline std::vector<JKGame> exhaustive_suite(const GameShape& shape) {
    const std::uint64_t cells = shape.table_cells();
    std::vector<JKGame> suite;
    std::vector<int> values(cells, 0);
    while (true) {
        try {
            suite.push_back(build_table_game(shape, values));
        } catch (const ValidationError&) {
        }
        std::size_t pos = 0;
        while (pos < cells && values[pos] == shape.k - 1) values[pos++] = 0;
        if (pos == cells) break;
        ++values[pos];
    }
    return suite;
}

}  // namespace jkpower::testing

#endif
