#ifndef JKPOWER_INDICES_HPP
#define JKPOWER_INDICES_HPP

#include <functional>

#include "jkpower/average.hpp"
#include "jkpower/decomposition.hpp"
#include "jkpower/game.hpp"
#include "jkpower/tu.hpp"

namespace jkpower {

/// A power index as a closure over games.
using PowerIndex = std::function<PowerVector(const JKGame&)>;

/// A full roll call: an ordering of the players together with their votes.
struct RollCall {
    std::vector<int> order;  ///< order[p] = player speaking at position p
    Profile votes;
};

/// Number of output levels excluded for sure by player i's vote: the drop of
/// the reachable-outcome interval when i speaks. Nonnegative; sums to k-1
/// over the players of any fixed roll call.
int uncertainty_reduction(const JKGame& v, const RollCall& rc, int i);

enum class RollCallMethod {
    kUncertaintySum,  ///< interval-length drops summed directly
    kPivotCount,      ///< literal per-h pivot counting
};

/// Shapley-Shubik index by full roll-call enumeration (permutations in
/// lexicographic order, profiles in canonical index order). Both methods
/// agree on every game.
PowerVector phi_rollcall(const JKGame& v,
                         RollCallMethod method = RollCallMethod::kUncertaintySum,
                         std::uint64_t summand_budget = 1000000000ULL);

/// Shapley-Shubik index via the average game shortcut.
PowerVector phi(const JKGame& v, std::uint64_t cap = kDefaultTableCap);

/// Parametric index: Shapley value of v_a. Satisfies the standard axioms for
/// constant a; computable for arbitrary a.
PowerVector phi_parametric(const JKGame& v, const Profile& a);

/// Classical Shapley-Shubik index of a simple (2,2) game by swing counting.
PowerVector ssi_simple(const JKGame& v);

/// Equal division: 1/n per player regardless of the game.
PowerVector equal_division(const JKGame& v);

/// Counterexample indices used to show the axioms are independent.
PowerIndex scaled_index(const Rational& lambda);                 // violates (E) unless lambda=1
PowerIndex blend_equal_division_index(const Rational& lambda);   // violates (NP) unless lambda=1
PowerIndex parametric_index(Profile a);                          // violates (AC) for suitable a
PowerIndex basis_weighted_index(int favored_player);             // violates (S)

}  // namespace jkpower

#endif
