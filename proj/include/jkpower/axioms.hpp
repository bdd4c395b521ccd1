#ifndef JKPOWER_AXIOMS_HPP
#define JKPOWER_AXIOMS_HPP

#include <string>
#include <vector>

#include "jkpower/indices.hpp"

namespace jkpower {

enum class Axiom {
    kPositivity,
    kAnonymity,
    kSymmetry,
    kEfficiency,
    kNullPlayer,
    kTransfer,
    kConvexity,
    kLinearity,
    kAverageConvexity,
};

std::string axiom_name(Axiom axiom);

/// Verdict of one axiom check over a suite. A violation always carries a
/// reproducible witness: the games, weights, and player that re-fail on
/// replay.
struct AxiomReport {
    Axiom axiom;
    bool holds = true;
    bool vacuous = false;  ///< AC only: no combination met the precondition
    std::string detail;
    std::vector<std::pair<Rational, JKGame>> witness_left;
    std::vector<std::pair<Rational, JKGame>> witness_right;
    int witness_player = -1;
    int checked_instances = 0;
};

/// Runs one axiom against an index closure over a common-shape suite.
/// Anonymity samples permutations (seeded; exhaustive for n <= 4), the
/// convexity/linearity checks assert only on combinations that are valid
/// games, and average convexity runs over generated equal-average pairs.
AxiomReport check_axiom(Axiom axiom, const PowerIndex& index, const std::vector<JKGame>& suite,
                        std::uint64_t seed = 0);

/// Checks sum_t alpha_t F(u_t) = sum_t beta_t F(v_t) given that the two
/// convex systems have equal combined average games. If the averages differ
/// the check is vacuous, not failed.
AxiomReport check_average_convexity(const PowerIndex& index,
                                    const std::vector<std::pair<Rational, JKGame>>& left,
                                    const std::vector<std::pair<Rational, JKGame>>& right);

/// Equal-average convex-system pairs from three recipes: the twin games with
/// identical averages, the basis rearrangement of a game's average, and the
/// convex veto decomposition against the game itself.
std::vector<std::pair<std::vector<std::pair<Rational, JKGame>>,
                      std::vector<std::pair<Rational, JKGame>>>>
ac_witness_generator(const GameShape& shape, std::uint64_t seed);

/// Basis rearrangement of one game per the characterization argument:
/// (1/varpi) u + sum_{E2} (-x_S/varpi) w^S  vs  sum_{E1} (x_S/varpi) w^S.
std::pair<std::vector<std::pair<Rational, JKGame>>, std::vector<std::pair<Rational, JKGame>>>
ac_basis_rearrangement(const JKGame& u);

}  // namespace jkpower

#endif
