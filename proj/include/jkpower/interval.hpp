#ifndef JKPOWER_INTERVAL_HPP
#define JKPOWER_INTERVAL_HPP

#include <functional>

#include "jkpower/axioms.hpp"
#include "jkpower/tu.hpp"

namespace jkpower {

struct IntervalStep {
    std::vector<Rational> threshold;  ///< in [0,1]^n
    Rational level;                   ///< in (0,1]
};

/// Interval simple game given by finitely many threshold/level pairs:
/// v(x) = max{level : threshold <= x}, default 0. Monotone by construction;
/// validation forces v(1)=1 and v(0)=0.
class StepIntervalGame {
  public:
    StepIntervalGame(int n, std::vector<IntervalStep> steps);

    int players() const { return n_; }
    const std::vector<IntervalStep>& steps() const { return steps_; }

    Rational eval(const std::vector<Rational>& x) const;
    double eval(const std::vector<double>& x) const;

    /// Minimal threshold antichain of the upper level set {v >= level},
    /// shared canonical form for equality-style predicates.
    std::vector<std::vector<Rational>> layer_antichain(const Rational& level) const;
    std::vector<Rational> distinct_levels() const;  ///< positive, ascending

  private:
    int n_;
    std::vector<IntervalStep> steps_;
};

/// C^S: worth 1 iff every member of S votes exactly 1.
StepIntervalGame cs_game(int n, Coalition s);
/// Single-step point-veto analogue u^a.
StepIntervalGame interval_point_veto(std::vector<Rational> threshold);

bool interval_is_null_player(const StepIntervalGame& v, int i);
bool interval_are_equivalent(const StepIntervalGame& v, int i, int h);

/// Exact average game by layer-cake decomposition and inclusion-exclusion
/// over box unions; capped at 2^|steps| <= 2^30 terms per layer.
TUGame interval_average_closed(const StepIntervalGame& v);

/// Shapley-Shubik index of the average game; exact.
PowerVector psi(const StepIntervalGame& v);

/// Arbitrary monotone evaluator for the Monte Carlo path.
struct BlackBoxIntervalGame {
    int n;
    std::function<double(const std::vector<double>&)> evaluator;
};

BlackBoxIntervalGame black_box(const StepIntervalGame& v);

struct MCEstimate {
    std::vector<double> value;
    std::vector<double> std_error;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Unbiased estimator of psi with shared samples across coalitions and
/// counter-based per-sample randomness; reproducible for fixed (seed,
/// samples). Spot-checks monotonicity on sampled comparable pairs.
MCEstimate psi_monte_carlo(const BlackBoxIntervalGame& v, std::uint64_t samples,
                           std::uint64_t seed);

/// Parametric index at the constant profile (alpha,...,alpha): exact
/// permutation sum for n <= 10, seeded permutation sampling above.
PowerVector psi_parametric(const StepIntervalGame& v, const Rational& alpha,
                           std::uint64_t sampled_permutations = 20000,
                           std::uint64_t seed = 0);

using IntervalPowerIndex = std::function<PowerVector(const StepIntervalGame&)>;

IntervalPowerIndex psi_index();
IntervalPowerIndex interval_scaled_index(const Rational& lambda);
IntervalPowerIndex interval_blend_equal_division_index(const Rational& lambda);
IntervalPowerIndex interval_parametric_index(const Rational& alpha);
IntervalPowerIndex interval_basis_weighted_index(int favored_player);

/// Reconstruction of psi from the unanimity basis of the average game (the
/// average of C^S is exactly gamma_S).
PowerVector psi_reconstruct_via_basis(const StepIntervalGame& u);

/// Reruns (E), (S), (NP), (AC) in the interval setting.
std::vector<AxiomReport> interval_axiom_suite(const IntervalPowerIndex& index,
                                              const std::vector<StepIntervalGame>& suite);

AxiomReport interval_check_average_convexity(
    const IntervalPowerIndex& index,
    const std::vector<std::pair<Rational, StepIntervalGame>>& left,
    const std::vector<std::pair<Rational, StepIntervalGame>>& right);

}  // namespace jkpower

#endif
