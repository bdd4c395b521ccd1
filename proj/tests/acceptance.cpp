// Acceptance gate: one pass/fail line per criterion, all checks exact unless
// a tolerance is stated inline. Exits nonzero if any criterion fails.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "jkpower/axioms.hpp"
#include "jkpower/indices.hpp"
#include "jkpower/interval.hpp"
#include "jkpower/spec_io.hpp"

using namespace jkpower;
using namespace jkpower::testing;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("criterion %2d: %s  %s%s%s\n", criterion, ok ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

const PowerIndex kPhi = [](const JKGame& v) { return phi(v); };

std::vector<JKGame> criterion4_random_suite() {
    std::vector<JKGame> suite;
    int shape_cycle = 0;
    for (int t = 0; t < 200; ++t) {
        const int j = 2 + shape_cycle % 3;
        const int k = 2 + (shape_cycle / 3) % 3;
        shape_cycle = (shape_cycle + 1) % 9;
        suite.push_back(random_monotone_game(GameShape{3, j, k}, 9000 + t));
    }
    return suite;
}

std::vector<JKGame> structured_333_suite() {
    std::vector<JKGame> suite = random_suite(GameShape{3, 3, 3}, 10, 7000);
    suite.push_back(build_point_veto(GameShape{3, 3, 3}, {2, 2, 0}));  // null player
    suite.push_back(build_ws(GameShape{3, 3, 3}, 0b011));              // equivalent pair
    suite.push_back(build_ws(GameShape{3, 3, 3}, 0b111));
    return suite;
}

StepIntervalGame random_step_game(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int count = 2 + static_cast<int>(rng() % 2);
    std::vector<IntervalStep> steps;
    for (int t = 0; t < count; ++t) {
        IntervalStep step;
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            step.threshold.emplace_back(static_cast<int>(rng() % 5), 4);
            nonzero = nonzero || step.threshold.back() != 0;
        }
        if (!nonzero) step.threshold[rng() % n] = Rational(1, 4);
        step.level = Rational(t + 1, count);
        steps.push_back(std::move(step));
    }
    return StepIntervalGame(n, std::move(steps));
}

bool check_criterion_1() {
    const PowerVector want{Rational(5, 12), Rational(7, 12)};
    const JKGame v = example1_game();
    return phi_rollcall(v, RollCallMethod::kUncertaintySum) == want &&
           phi_rollcall(v, RollCallMethod::kPivotCount) == want &&
           shapley_value(average_game(v)) == want && phi(v) == want;
}

bool check_criterion_2() {
    const TUGame avg = average_game(example1_game());
    return avg(0) == 0 && avg(0b01) == Rational(1, 2) && avg(0b10) == Rational(2, 3) &&
           avg(0b11) == 1;
}

bool check_criterion_3() {
    for (const int j : {3, 4}) {
        const GameShape shape{3, j, j};
        const JKGame ub = build_point_veto(shape, {1, j - 1, 0});
        if (phi(ub) != PowerVector{Rational(1, j), Rational(j - 1, j), Rational(0)})
            return false;
        const PowerIndex param = parametric_index(Profile(3, j - 2));
        if (param(ub) != PowerVector{Rational(0), Rational(1), Rational(0)}) return false;

        const std::vector<std::pair<Rational, JKGame>> left{{Rational(1), ub}};
        const std::vector<std::pair<Rational, JKGame>> right{
            {Rational(1, j), build_ws(shape, 0b001)},
            {Rational(j - 1, j), build_ws(shape, 0b010)}};
        const AxiomReport bad = check_average_convexity(param, left, right);
        if (bad.holds || bad.vacuous) return false;
        const AxiomReport good = check_average_convexity(kPhi, left, right);
        if (!good.holds || good.vacuous) return false;
    }
    return true;
}

bool check_criterion_4(const std::vector<std::vector<JKGame>>& grids,
                       const std::vector<JKGame>& random_games, std::string& detail) {
    std::size_t checked = 0;
    const auto agree = [](const JKGame& v) {
        const PowerVector a = phi_rollcall(v, RollCallMethod::kUncertaintySum);
        return a == phi_rollcall(v, RollCallMethod::kPivotCount) && a == phi(v) &&
               a == shapley_value(average_game(v));
    };
    for (const auto& grid : grids)
        for (const JKGame& v : grid) {
            if (!agree(v)) return false;
            ++checked;
        }
    for (const JKGame& v : random_games) {
        if (!agree(v)) return false;
        ++checked;
    }
    std::ostringstream os;
    os << checked << " games, three paths each";
    detail = os.str();
    return true;
}

const std::vector<Axiom> kAllAxioms{
    Axiom::kPositivity, Axiom::kAnonymity,  Axiom::kSymmetry,  Axiom::kEfficiency,
    Axiom::kNullPlayer, Axiom::kTransfer,   Axiom::kConvexity, Axiom::kLinearity,
    Axiom::kAverageConvexity};

bool check_criterion_5(const std::vector<std::vector<JKGame>>& grids, std::string& detail) {
    for (const auto& grid : grids)
        for (Axiom axiom : kAllAxioms)
            if (!check_axiom(axiom, kPhi, grid).holds) {
                detail = "full index failed " + axiom_name(axiom);
                return false;
            }
    // independence: run on a three-level suite so the parametric profile
    // (j-2,...) is meaningful
    const auto suite = structured_333_suite();
    const std::vector<std::pair<PowerIndex, Axiom>> table{
        {scaled_index(Rational(2)), Axiom::kEfficiency},
        {blend_equal_division_index(Rational(1, 2)), Axiom::kNullPlayer},
        {parametric_index(Profile(3, 1)), Axiom::kAverageConvexity},
        {basis_weighted_index(0), Axiom::kSymmetry},
    };
    const std::vector<Axiom> core{Axiom::kEfficiency, Axiom::kNullPlayer, Axiom::kSymmetry,
                                  Axiom::kAverageConvexity};
    for (const auto& [index, designated] : table)
        for (Axiom axiom : core)
            if (check_axiom(axiom, index, suite).holds != (axiom != designated)) {
                detail = "independence pattern broken at " + axiom_name(axiom);
                return false;
            }
    return true;
}

bool check_criterion_6(const std::vector<std::vector<JKGame>>& grids,
                       const std::vector<JKGame>& random_games) {
    std::vector<const JKGame*> all;
    for (const auto& grid : grids)
        for (const JKGame& v : grid) all.push_back(&v);
    for (const JKGame& v : random_games) all.push_back(&v);

    for (const JKGame* vp : all) {
        const JKGame& v = *vp;
        const GameShape& shape = v.shape();
        const GameCombo combo = convex_veto_decomposition(v).to_combo(shape);
        const std::uint64_t cells = shape.table_cells();
        for (std::uint64_t idx = 0; idx < cells; ++idx) {
            const Profile x = profile_from_index(shape, idx);
            if (combo_eval(combo, x) != v.eval(x)) return false;
        }

        const TUGame avg = average_game(v);
        const BasisCoefficients coeffs = ws_basis_decompose(avg, shape);
        TUGame rebuilt(shape.n);
        for (Coalition s = 1; s < (Coalition{1} << shape.n); ++s) {
            if (coeffs[s] == 0) continue;
            Profile a(shape.n, 0);
            for (int i = 0; i < shape.n; ++i)
                if (s & (Coalition{1} << i)) a[i] = shape.j - 1;
            const TUGame ws = average_point_veto(shape, a);
            for (Coalition t = 1; t <= rebuilt.full(); ++t) rebuilt(t) += coeffs[s] * ws(t);
        }
        if (rebuilt != avg) return false;

        if (reconstruct_index_via_ac(v) != phi(v)) return false;
    }
    return true;
}

bool check_criterion_7(std::string& detail) {
    for (int n = 1; n <= 3; ++n)
        for (int j = 2; j <= 4; ++j)
            for (int k = 2; k <= 3; ++k) {
                const GameShape shape{n, j, k};
                const std::uint64_t cells = shape.table_cells();
                for (std::uint64_t idx = 1; idx < cells; ++idx) {
                    const Profile a = profile_from_index(shape, idx);
                    if (average_point_veto(shape, a) !=
                        average_game(build_point_veto(shape, a))) {
                        detail = "closed form disagrees with enumeration";
                        return false;
                    }
                }
            }
    for (int j = 2; j <= 5; ++j)
        for (int c = 1; c <= 5; ++c)
            if (alpha_leading((Coalition{1} << c) - 1, j) == 0) {
                std::ostringstream os;
                os << "leading coefficient vanishes at j=" << j << ", |C|=" << c
                   << " (the two-level family is linearly dependent there)";
                detail = os.str();
                return false;
            }
    return true;
}

bool check_criterion_8() {
    const GameShape shape{4, 2, 2};
    const std::vector<int> weights{3, 2, 1, 1};
    const JKGame game = build_weighted(
        shape, Rational(4), {Rational(3), Rational(2), Rational(1), Rational(1)});

    // oracle: direct enumeration of the 24 player orderings
    std::vector<int> order{0, 1, 2, 3};
    std::vector<int> pivots(4, 0);
    do {
        int w = 0;
        for (int i : order) {
            w += weights[i];
            if (w >= 4) {
                ++pivots[i];
                break;
            }
        }
    } while (std::next_permutation(order.begin(), order.end()));
    PowerVector oracle;
    for (int i = 0; i < 4; ++i) oracle.emplace_back(pivots[i], 24);

    return ssi_simple(game) == oracle && phi(to_table(game)) == oracle &&
           oracle == PowerVector{Rational(1, 2), Rational(1, 6), Rational(1, 6), Rational(1, 6)};
}

bool check_criterion_9(std::string& detail) {
    for (int n = 1; n <= 5; ++n)
        for (Coalition s = 1; s < (Coalition{1} << n); ++s) {
            if (interval_average_closed(cs_game(n, s)) != unanimity_game(n, s)) {
                detail = "average of a coalition game is not the unanimity game";
                return false;
            }
            const PowerVector p = psi(cs_game(n, s));
            const int size = std::popcount(s);
            for (int i = 0; i < n; ++i)
                if (p[i] != ((s >> i) & 1 ? Rational(1, size) : Rational(0))) {
                    detail = "psi of a coalition game is not uniform";
                    return false;
                }
        }

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const StepIntervalGame v = random_step_game(3, 4000 + seed);
        const PowerVector exact = psi(v);
        const MCEstimate est = psi_monte_carlo(black_box(v), 100000, seed);
        for (int i = 0; i < 3; ++i) {
            const double gap = std::abs(est.value[i] - static_cast<double>(exact[i]));
            if (gap > 4.0 * est.std_error[i] + 1e-12) {
                std::ostringstream os;
                os << "monte carlo off by " << gap << " at seed " << seed;
                detail = os.str();
                return false;
            }
        }
    }

    std::vector<StepIntervalGame> suite;
    suite.push_back(cs_game(3, 0b011));
    suite.push_back(cs_game(3, 0b111));
    suite.push_back(interval_point_veto({Rational(1, 3), Rational(2, 3), Rational(0)}));
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        suite.push_back(random_step_game(3, 100 + seed));

    for (const AxiomReport& r : interval_axiom_suite(psi_index(), suite))
        if (!r.holds) {
            detail = "psi failed " + axiom_name(r.axiom);
            return false;
        }
    const std::vector<std::pair<IntervalPowerIndex, Axiom>> table{
        {interval_scaled_index(Rational(2)), Axiom::kEfficiency},
        {interval_blend_equal_division_index(Rational(1, 2)), Axiom::kNullPlayer},
        {interval_parametric_index(Rational(1, 2)), Axiom::kAverageConvexity},
        {interval_basis_weighted_index(0), Axiom::kSymmetry},
    };
    for (const auto& [index, designated] : table)
        for (const AxiomReport& r : interval_axiom_suite(index, suite))
            if (r.holds != (r.axiom != designated)) {
                detail = "interval independence pattern broken at " + axiom_name(r.axiom);
                return false;
            }
    return true;
}

bool check_criterion_10(std::string& detail) {
    const Rational h(1, 2);
    const std::vector<StepIntervalGame> games{
        StepIntervalGame(2, {{{h, h}, Rational(1)}}),
        StepIntervalGame(2, {{{h, Rational(0)}, h}, {{h, h}, Rational(1)}}),
        StepIntervalGame(2, {{{Rational(1), h}, Rational(1)}}),
        StepIntervalGame(
            2, {{{h, Rational(0)}, h}, {{Rational(0), h}, h}, {{h, h}, Rational(1)}}),
        StepIntervalGame(3, {{{h, h, Rational(0)}, h}, {{h, h, h}, Rational(1)}}),
    };
    for (std::size_t g = 0; g < games.size(); ++g) {
        const StepIntervalGame& v = games[g];
        const int n = v.players();
        const PowerVector exact = psi(v);
        double prev_gap = 2.0;
        for (const int j : {3, 5, 9}) {
            const GameShape shape{n, j, j};
            std::vector<int> table(shape.table_cells());
            for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
                std::vector<Rational> point;
                for (int c : profile_from_index(shape, idx)) point.emplace_back(c, j - 1);
                const Rational scaled = v.eval(point) * (j - 1);
                table[idx] = static_cast<int>(
                    boost::multiprecision::numerator(scaled).convert_to<long long>());
            }
            const PowerVector p = phi(build_table_game(shape, table));
            double gap = 0.0;
            for (int i = 0; i < n; ++i)
                gap = std::max(gap, std::abs(static_cast<double>(p[i] - exact[i])));
            if (gap > prev_gap) {
                std::ostringstream os;
                os << "gap grew from " << prev_gap << " to " << gap << " on game " << g;
                detail = os.str();
                return false;
            }
            prev_gap = gap;
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<GameShape> grid_shapes{
        {2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {2, 3, 3}};
    std::vector<std::vector<JKGame>> grids;
    for (const GameShape& shape : grid_shapes) grids.push_back(exhaustive_suite(shape));
    const std::vector<JKGame> random_games = criterion4_random_suite();

    std::string detail;

    report(1, check_criterion_1(), "golden index of the running example via all paths");
    report(2, check_criterion_2(), "golden average-game values of the running example");
    report(3, check_criterion_3(), "counterexample pair and its convexity verdicts");

    detail.clear();
    report(4, check_criterion_4(grids, random_games, detail),
           "three-path agreement on exhaustive grids and 200 random games", detail);

    detail.clear();
    report(5, check_criterion_5(grids, detail),
           "axiom suite for the full index plus the four independence patterns", detail);

    report(6, check_criterion_6(grids, random_games),
           "decomposition round-trips and index reconstruction on every suite game");

    detail.clear();
    report(7, check_criterion_7(detail),
           "point-veto closed form vs enumeration; nonzero leading coefficients", detail);

    report(8, check_criterion_8(), "classical weighted-game anchor with ordering oracle");

    detail.clear();
    report(9, check_criterion_9(detail),
           "interval module: unanimity averages, monte carlo at four sigma, axiom patterns",
           detail);

    detail.clear();
    report(10, check_criterion_10(detail),
           "discretized games approach the interval index as the grid refines", detail);

    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
