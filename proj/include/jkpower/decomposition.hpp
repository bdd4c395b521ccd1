#ifndef JKPOWER_DECOMPOSITION_HPP
#define JKPOWER_DECOMPOSITION_HPP

#include <map>
#include <optional>

#include "jkpower/average.hpp"
#include "jkpower/game.hpp"
#include "jkpower/tu.hpp"

namespace jkpower {

/// Convex decomposition of a game into veto games with nested supports.
struct VetoDecomposition {
    /// (alpha_t, F_t); weights positive and summing to 1, supports nested
    /// F_1 contains F_2 contains ...
    std::vector<std::pair<Rational, std::vector<Profile>>> terms;

    GameCombo to_combo(const GameShape& shape) const;
};

/// Sorts the support {x : v(x) > 0} by (value, coordinate sum, lex) and
/// assigns level-difference weights; zero-weight terms are dropped.
VetoDecomposition convex_veto_decomposition(const JKGame& v, std::uint64_t cap = kDefaultTableCap);

/// Coefficients over nonempty coalitions (indexed by bitmask).
using BasisCoefficients = std::vector<Rational>;

/// Unique coefficients x_S with g = sum_S x_S * avg(w^S), solved exactly in
/// unanimity coordinates. For j = 2 the family is linearly dependent and any
/// consistent solution is returned (free variables set to zero).
BasisCoefficients ws_basis_decompose(const TUGame& g, const GameShape& shape);

/// Leading unanimity coefficient of avg(w^C): the Moebius sum
/// sum_{S in 2^C, S nonempty} (-1)^{|C\S|} avg(w^C)(S), computed from the
/// point-veto closed form. Independent of the ambient player set.
Rational alpha_leading(Coalition c, int j);

/// Resolves an index value for u from per-coalition base values via the
/// avg(w^S)-basis coefficients of its average game. With the default bases
/// (uniform on S) the result is the Shapley-Shubik index of u.
PowerVector reconstruct_index_via_ac(
    const JKGame& u,
    const std::optional<std::map<Coalition, PowerVector>>& base_values = std::nullopt);

}  // namespace jkpower

#endif
