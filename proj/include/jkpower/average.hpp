#ifndef JKPOWER_AVERAGE_HPP
#define JKPOWER_AVERAGE_HPP

#include "jkpower/game.hpp"
#include "jkpower/tu.hpp"

namespace jkpower {

/// C(v,T): the expected output swing of coalition T between full and zero
/// support, averaged uniformly over the other players' inputs and scaled to
/// [0,1]. The sum runs over J^{N\T} only; the T-coordinates are irrelevant.
Rational c_function(const JKGame& v, Coalition t, std::uint64_t cap = kDefaultTableCap);

/// The average game: S -> C(v,S) for every coalition.
TUGame average_game(const JKGame& v, std::uint64_t cap = kDefaultTableCap);

/// Closed form for point-veto games: prod_{i not in S} (j - a_i)/j when S
/// meets the vetoers, else 0 (and 1 on the grand coalition).
TUGame average_point_veto(const GameShape& shape, const Profile& veto);

/// The TU game v_a(S) = [v(top_S, a_{-S}) - v(0_S, a_{-S})] / (k-1).
TUGame va_game(const JKGame& v, const Profile& a);

/// Coalition-wise weighted combination of the term averages.
TUGame average_of_combo(const GameCombo& combo, std::uint64_t cap = kDefaultTableCap);

}  // namespace jkpower

#endif
