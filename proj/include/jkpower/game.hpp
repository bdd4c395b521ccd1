#ifndef JKPOWER_GAME_HPP
#define JKPOWER_GAME_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "jkpower/errors.hpp"
#include "jkpower/rational.hpp"

namespace jkpower {

/// Default cap on the number of explicit table cells (j^n).
inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 24;

/// Input levels of all players; entry i is the level of player i in {0,..,j-1}.
using Profile = std::vector<int>;

/// Coalition bitmask; player i corresponds to bit i.
using Coalition = std::uint32_t;

struct GameShape {
    int n = 0;  ///< players, >= 1
    int j = 0;  ///< input levels, >= 2
    int k = 0;  ///< output levels, >= 2

    bool operator==(const GameShape&) const = default;

    /// j^n, throws SizeCapExceeded beyond the cap.
    std::uint64_t table_cells(std::uint64_t cap = kDefaultTableCap) const;
};

/// Canonical linear index of a profile: player 0 is most significant, so
/// lexicographic order on profiles equals index order.
std::uint64_t profile_index(const GameShape& shape, const Profile& x);
Profile profile_from_index(const GameShape& shape, std::uint64_t idx);

/// Componentwise x <= y.
bool profile_leq(const Profile& x, const Profile& y);

struct ExplicitTable {
    std::vector<int> values;  ///< indexed by canonical profile index

    bool operator==(const ExplicitTable&) const = default;
};

struct PointVeto {
    Profile veto;  ///< nonzero threshold a; output is k-1 iff a <= x

    bool operator==(const PointVeto&) const = default;
};

struct VetoSet {
    /// Antichain of nonzero thresholds; output is k-1 iff some member <= x.
    std::vector<Profile> thresholds;

    bool operator==(const VetoSet&) const = default;
};

struct Weighted {
    Rational quota;                 ///< positive
    std::vector<Rational> weights;  ///< nonnegative, one per player; j=k=2 only

    bool operator==(const Weighted&) const = default;
};

/// A validated (j,k) simple game: a monotone map J^n -> K with v(0)=0 and
/// v(top)=k-1, in one of several structured representations.
class JKGame {
  public:
    using Body = std::variant<ExplicitTable, PointVeto, VetoSet, Weighted>;

    JKGame(GameShape shape, Body body);

    const GameShape& shape() const { return shape_; }
    const Body& body() const { return body_; }

    int eval(const Profile& x) const;

    /// eval with the value at coordinates in `fixed_mask` overridden to
    /// `fixed_level` (used heavily by the averaging formulas).
    int eval_masked(const Profile& x, Coalition fixed_mask, int fixed_level) const;

    bool operator==(const JKGame&) const = default;

  private:
    GameShape shape_;
    Body body_;
};

/// Formal weighted combination of games over a common shape.
struct GameCombo {
    std::vector<std::pair<Rational, JKGame>> terms;
};

JKGame build_table_game(const GameShape& shape, std::vector<int> values,
                        std::uint64_t cap = kDefaultTableCap);
JKGame build_point_veto(const GameShape& shape, Profile veto);
/// w^S: point veto demanding level j-1 from every member of S.
JKGame build_ws(const GameShape& shape, Coalition s);
JKGame build_veto_set(const GameShape& shape, std::vector<Profile> thresholds);
JKGame build_weighted(const GameShape& shape, Rational quota, std::vector<Rational> weights);

/// Materializes any representation as an explicit table.
JKGame to_table(const JKGame& game, std::uint64_t cap = kDefaultTableCap);

/// Pointwise max / min. Both VetoSet operands take the lattice shortcut;
/// anything else is materialized as a table.
JKGame or_game(const JKGame& u, const JKGame& v, std::uint64_t cap = kDefaultTableCap);
JKGame and_game(const JKGame& u, const JKGame& v, std::uint64_t cap = kDefaultTableCap);

/// Antichain reduction of E union E'.
std::vector<Profile> veto_join(const std::vector<Profile>& e1, const std::vector<Profile>& e2);
/// Antichain reduction of the componentwise maxima {max(a,b) : a in E, b in E'}.
std::vector<Profile> veto_meet(const std::vector<Profile>& e1, const std::vector<Profile>& e2);
/// Minimal elements of E under componentwise <=; the induced game is unchanged.
std::vector<Profile> normalize_veto_set(std::vector<Profile> e);

/// Vetoers N^a: players with a positive threshold coordinate.
Coalition vetoer_set(const Profile& veto);

bool is_null_player(const JKGame& game, int i);
bool are_equivalent(const JKGame& game, int i, int h);

/// (pi v)(x) = v(pi x) with (pi x)_i = x_{pi(i)}; pi maps positions to players.
JKGame permute_game(const JKGame& game, const std::vector<int>& pi,
                    std::uint64_t cap = kDefaultTableCap);

/// Deterministic monotone table game: uniform draws repaired in canonical
/// index order, endpoints forced, then repaired again.
JKGame random_monotone_game(const GameShape& shape, std::uint64_t seed,
                            std::uint64_t cap = kDefaultTableCap);

Rational combo_eval(const GameCombo& combo, const Profile& x);

}  // namespace jkpower

#endif
