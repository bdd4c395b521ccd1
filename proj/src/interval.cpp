#include "jkpower/interval.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

namespace jkpower {

namespace {

bool vec_leq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<std::vector<Rational>> minimal_elements(std::vector<std::vector<Rational>> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<std::vector<Rational>> minimal;
    for (const auto& a : set) {
        const bool dominated = std::any_of(set.begin(), set.end(), [&](const auto& b) {
            return b != a && vec_leq(b, a);
        });
        if (!dominated) minimal.push_back(a);
    }
    return minimal;
}

std::vector<Rational> shapley_weights(int n) {
    std::vector<Rational> fact(n + 1);
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    std::vector<Rational> weight(n + 1);
    for (int s = 1; s <= n; ++s) weight[s] = fact[s - 1] * fact[n - s] / fact[n];
    return weight;
}

// Volume in [0,1]^{coords} of the union of upper boxes {x >= a} by
// inclusion-exclusion.
Rational box_union_volume(const std::vector<const std::vector<Rational>*>& boxes,
                          const std::vector<int>& coords) {
    if (boxes.size() > 30) throw SizeCapExceeded("inclusion-exclusion capped at 30 boxes");
    Rational total = 0;
    const std::uint32_t subsets = std::uint32_t{1} << boxes.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        Rational vol = 1;
        for (int c : coords) {
            Rational hi = 0;
            for (std::size_t b = 0; b < boxes.size(); ++b)
                if (mask & (std::uint32_t{1} << b)) hi = std::max(hi, (*boxes[b])[c]);
            vol *= 1 - hi;
            if (vol == 0) break;
        }
        total += (std::popcount(mask) % 2 == 1) ? vol : -vol;
    }
    return total;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t seed, std::uint64_t sample, int coord) {
    const std::uint64_t z =
        splitmix64(seed ^ splitmix64(sample * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL +
                                     static_cast<std::uint64_t>(coord) * 0x9e3779b97f4a7c15ULL));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

StepIntervalGame::StepIntervalGame(int n, std::vector<IntervalStep> steps) : n_(n) {
    if (n < 1) throw ValidationError("interval game needs n >= 1");
    bool has_top_level = false;
    for (auto& step : steps) {
        if (static_cast<int>(step.threshold.size()) != n)
            throw ShapeMismatch("threshold length != n");
        for (const Rational& c : step.threshold)
            if (c < 0 || c > 1) throw ValidationError("threshold coordinate outside [0,1]");
        if (step.level < 0 || step.level > 1)
            throw ValidationError("level outside [0,1]");
        if (step.level == 0) continue;  // no-op step
        const bool zero_threshold =
            std::all_of(step.threshold.begin(), step.threshold.end(),
                        [](const Rational& c) { return c == 0; });
        if (zero_threshold)
            throw ValidationError("a zero threshold with positive level breaks v(0)=0");
        has_top_level = has_top_level || step.level == 1;
        steps_.push_back(std::move(step));
    }
    if (!has_top_level)
        throw ValidationError("some step must carry level 1 so that v(1)=1");
}

Rational StepIntervalGame::eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != n_) throw ShapeMismatch("point length != n");
    Rational best = 0;
    for (const auto& step : steps_)
        if (step.level > best && vec_leq(step.threshold, x)) best = step.level;
    return best;
}

double StepIntervalGame::eval(const std::vector<double>& x) const {
    double best = 0.0;
    for (const auto& step : steps_) {
        const double level = static_cast<double>(step.level);
        if (level <= best) continue;
        bool ok = true;
        for (int i = 0; i < n_ && ok; ++i)
            ok = static_cast<double>(step.threshold[i]) <= x[i];
        if (ok) best = level;
    }
    return best;
}

std::vector<std::vector<Rational>> StepIntervalGame::layer_antichain(const Rational& level) const {
    std::vector<std::vector<Rational>> set;
    for (const auto& step : steps_)
        if (step.level >= level) set.push_back(step.threshold);
    return minimal_elements(std::move(set));
}

std::vector<Rational> StepIntervalGame::distinct_levels() const {
    std::vector<Rational> levels;
    for (const auto& step : steps_) levels.push_back(step.level);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

StepIntervalGame cs_game(int n, Coalition s) {
    if (s == 0) throw ValidationError("C^S needs a nonempty coalition");
    std::vector<Rational> threshold(n, Rational(0));
    for (int i = 0; i < n; ++i)
        if (s & (Coalition{1} << i)) threshold[i] = 1;
    return StepIntervalGame(n, {{std::move(threshold), Rational(1)}});
}

StepIntervalGame interval_point_veto(std::vector<Rational> threshold) {
    const int n = static_cast<int>(threshold.size());
    return StepIntervalGame(n, {{std::move(threshold), Rational(1)}});
}

bool interval_is_null_player(const StepIntervalGame& v, int i) {
    for (const Rational& level : v.distinct_levels())
        for (const auto& a : v.layer_antichain(level))
            if (a[i] != 0) return false;
    return true;
}

bool interval_are_equivalent(const StepIntervalGame& v, int i, int h) {
    if (i == h) return true;
    for (const Rational& level : v.distinct_levels()) {
        auto original = v.layer_antichain(level);
        auto swapped = original;
        for (auto& a : swapped) std::swap(a[i], a[h]);
        std::sort(swapped.begin(), swapped.end());
        if (swapped != original) return false;
    }
    return true;
}

TUGame interval_average_closed(const StepIntervalGame& v) {
    const int n = v.players();
    TUGame g(n);
    const std::vector<Rational> levels = v.distinct_levels();

    for (Coalition s = 1; s <= g.full(); ++s) {
        std::vector<int> free_coords;
        for (int i = 0; i < n; ++i)
            if (!(s & (Coalition{1} << i))) free_coords.push_back(i);

        Rational value = 0;
        Rational prev_level = 0;
        for (const Rational& level : levels) {
            const auto layer = v.layer_antichain(level);
            // top term: coordinates in S pinned to 1 satisfy any threshold
            std::vector<const std::vector<Rational>*> boxes;
            for (const auto& a : layer) boxes.push_back(&a);
            const Rational vol_top = box_union_volume(boxes, free_coords);
            // bottom term: only thresholds with support disjoint from S survive
            std::vector<const std::vector<Rational>*> surviving;
            for (const auto& a : layer) {
                bool disjoint = true;
                for (int i = 0; i < n && disjoint; ++i)
                    if ((s & (Coalition{1} << i)) && a[i] != 0) disjoint = false;
                if (disjoint) surviving.push_back(&a);
            }
            const Rational vol_bot = box_union_volume(surviving, free_coords);
            value += (level - prev_level) * (vol_top - vol_bot);
            prev_level = level;
        }
        g(s) = value;
    }
    return g;
}

PowerVector psi(const StepIntervalGame& v) {
    return shapley_value(interval_average_closed(v));
}

BlackBoxIntervalGame black_box(const StepIntervalGame& v) {
    return {v.players(), [v](const std::vector<double>& x) { return v.eval(x); }};
}

MCEstimate psi_monte_carlo(const BlackBoxIntervalGame& v, std::uint64_t samples,
                           std::uint64_t seed) {
    if (samples < 1) throw BadParam("need at least one sample");
    const int n = v.n;
    const Coalition full = (Coalition{1} << n) - 1;
    std::vector<double> weight(n + 1, 0.0);
    {
        const auto exact = shapley_weights(n);
        for (int s = 1; s <= n; ++s) weight[s] = static_cast<double>(exact[s]);
    }

    std::vector<long double> sum(n, 0.0L), sumsq(n, 0.0L);
    std::vector<double> x(n), masked(n), d(std::size_t{1} << n);
    constexpr double kTol = 1e-9;
    for (std::uint64_t m = 0; m < samples; ++m) {
        for (int i = 0; i < n; ++i) x[i] = unit_double(seed, m, i);
        const double mid = v.evaluator(x);
        for (Coalition t = 0; t <= full; ++t) {
            masked = x;
            for (int i = 0; i < n; ++i)
                if (t & (Coalition{1} << i)) masked[i] = 1.0;
            const double hi = v.evaluator(masked);
            masked = x;
            for (int i = 0; i < n; ++i)
                if (t & (Coalition{1} << i)) masked[i] = 0.0;
            const double lo = v.evaluator(masked);
            d[t] = hi - lo;
            // comparable triples lo <= mid <= hi double as a monotonicity
            // spot check on the caller's evaluator
            if (m < 64 && (hi < mid - kTol || mid < lo - kTol))
                throw MonotonicitySpotCheckFailed("evaluator is not monotone on sampled pairs");
        }
        if (m < 64 && (std::abs(d[full] - 1.0) > kTol || std::abs(d[0]) > kTol))
            throw MonotonicitySpotCheckFailed("evaluator violates the boundary values");
        for (int i = 0; i < n; ++i) {
            double y = 0.0;
            for (Coalition t = 1; t <= full; ++t) {
                if (!(t & (Coalition{1} << i))) continue;
                y += weight[std::popcount(t)] * (d[t] - d[t & ~(Coalition{1} << i)]);
            }
            sum[i] += y;
            sumsq[i] += static_cast<long double>(y) * y;
        }
    }

    MCEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.value.resize(n);
    est.std_error.resize(n);
    for (int i = 0; i < n; ++i) {
        const long double mean = sum[i] / static_cast<long double>(samples);
        est.value[i] = static_cast<double>(mean);
        if (samples > 1) {
            long double var = (sumsq[i] - static_cast<long double>(samples) * mean * mean) /
                              static_cast<long double>(samples - 1);
            if (var < 0) var = 0;
            est.std_error[i] = static_cast<double>(
                std::sqrt(static_cast<double>(var / static_cast<long double>(samples))));
        } else {
            est.std_error[i] = 0.0;
        }
    }
    return est;
}

namespace {

PowerVector psi_parametric_orders(const StepIntervalGame& v, const Rational& alpha,
                                  const std::vector<std::vector<int>>& orders) {
    const int n = v.players();
    std::vector<Rational> totals(n, Rational(0));
    std::vector<Rational> point(n);
    const auto bracket = [&](const std::vector<int>& order, int spoken) {
        for (int i = 0; i < n; ++i) point[i] = alpha;
        for (int p = 0; p < spoken; ++p) point[order[p]] = alpha;
        std::vector<Rational> hi = point, lo = point;
        for (int p = spoken; p < n; ++p) {
            hi[order[p]] = 1;
            lo[order[p]] = 0;
        }
        return v.eval(hi) - v.eval(lo);
    };
    for (const auto& order : orders) {
        Rational before = bracket(order, 0);
        for (int p = 0; p < n; ++p) {
            const Rational after = bracket(order, p + 1);
            totals[order[p]] += before - after;
            before = after;
        }
    }
    for (Rational& t : totals) t /= static_cast<int>(orders.size());
    return totals;
}

}  // namespace

PowerVector psi_parametric(const StepIntervalGame& v, const Rational& alpha,
                           std::uint64_t sampled_permutations, std::uint64_t seed) {
    if (alpha < 0 || alpha > 1) throw BadParam("alpha must lie in [0,1]");
    const int n = v.players();
    std::vector<std::vector<int>> orders;
    if (n <= 10) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        do orders.push_back(order);
        while (std::next_permutation(order.begin(), order.end()));
    } else {
        std::mt19937_64 rng(seed);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (std::uint64_t t = 0; t < sampled_permutations; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            orders.push_back(order);
        }
    }
    return psi_parametric_orders(v, alpha, orders);
}

IntervalPowerIndex psi_index() {
    return [](const StepIntervalGame& v) { return psi(v); };
}

IntervalPowerIndex interval_scaled_index(const Rational& lambda) {
    return [lambda](const StepIntervalGame& v) {
        PowerVector p = psi(v);
        for (Rational& x : p) x *= lambda;
        return p;
    };
}

IntervalPowerIndex interval_blend_equal_division_index(const Rational& lambda) {
    return [lambda](const StepIntervalGame& v) {
        PowerVector p = psi(v);
        const Rational ed(1, v.players());
        for (Rational& x : p) x = lambda * x + (1 - lambda) * ed;
        return p;
    };
}

IntervalPowerIndex interval_parametric_index(const Rational& alpha) {
    return [alpha](const StepIntervalGame& v) { return psi_parametric(v, alpha); };
}

IntervalPowerIndex interval_basis_weighted_index(int favored_player) {
    return [favored_player](const StepIntervalGame& u) {
        const int n = u.players();
        if (favored_player < 0 || favored_player >= n)
            throw BadParam("favored player outside the player set");
        const auto y = unanimity_decompose(interval_average_closed(u));
        const Coalition grand = (Coalition{1} << n) - 1;
        PowerVector result(n, Rational(0));
        for (Coalition s = 1; s <= grand; ++s) {
            if (y[s] == 0) continue;
            for (int i = 0; i < n; ++i) {
                Rational base;
                if (s == grand) {
                    base = (i == favored_player) ? Rational(2, n + 1) : Rational(1, n + 1);
                } else {
                    base = (s & (Coalition{1} << i)) ? Rational(1, std::popcount(s)) : Rational(0);
                }
                result[i] += y[s] * base;
            }
        }
        return result;
    };
}

PowerVector psi_reconstruct_via_basis(const StepIntervalGame& u) {
    const int n = u.players();
    const auto y = unanimity_decompose(interval_average_closed(u));
    PowerVector result(n, Rational(0));
    for (Coalition s = 1; s < (Coalition{1} << n); ++s) {
        if (y[s] == 0) continue;
        const PowerVector base = psi(cs_game(n, s));
        for (int i = 0; i < n; ++i) result[i] += y[s] * base[i];
    }
    return result;
}

AxiomReport interval_check_average_convexity(
    const IntervalPowerIndex& index,
    const std::vector<std::pair<Rational, StepIntervalGame>>& left,
    const std::vector<std::pair<Rational, StepIntervalGame>>& right) {
    AxiomReport report{Axiom::kAverageConvexity};
    const auto convex = [](const auto& sys) {
        Rational total = 0;
        for (const auto& [w, g] : sys) {
            if (w < 0) return false;
            total += w;
        }
        return total == 1;
    };
    if (left.empty() || right.empty() || !convex(left) || !convex(right))
        throw PreconditionNotMet("both sides must be convex weight systems");

    const int n = left.front().second.players();
    const auto combine_avg = [n](const auto& sys) {
        TUGame total(n);
        for (const auto& [w, g] : sys) {
            const TUGame avg = interval_average_closed(g);
            for (Coalition s = 1; s <= total.full(); ++s) total(s) += w * avg(s);
        }
        return total;
    };
    if (combine_avg(left) != combine_avg(right)) {
        report.vacuous = true;
        report.detail = "combined average games differ; nothing to check";
        return report;
    }

    report.checked_instances = 1;
    PowerVector lhs(n, Rational(0)), rhs(n, Rational(0));
    for (const auto& [w, g] : left) {
        const PowerVector p = index(g);
        for (int i = 0; i < n; ++i) lhs[i] += w * p[i];
    }
    for (const auto& [w, g] : right) {
        const PowerVector p = index(g);
        for (int i = 0; i < n; ++i) rhs[i] += w * p[i];
    }
    for (int i = 0; i < n; ++i)
        if (lhs[i] != rhs[i]) {
            report.holds = false;
            report.witness_player = i;
            report.detail = "equal averages but unequal index combinations at player " +
                            std::to_string(i);
            return report;
        }
    return report;
}

std::vector<AxiomReport> interval_axiom_suite(const IntervalPowerIndex& index,
                                              const std::vector<StepIntervalGame>& suite) {
    std::vector<AxiomReport> reports;

    {
        AxiomReport report{Axiom::kEfficiency};
        for (const auto& v : suite) {
            ++report.checked_instances;
            Rational total = 0;
            for (const Rational& x : index(v)) total += x;
            if (total != 1) {
                report.holds = false;
                report.detail = "components sum to " + to_fraction_string(total);
                break;
            }
        }
        reports.push_back(report);
    }
    {
        AxiomReport report{Axiom::kSymmetry};
        for (const auto& v : suite) {
            const PowerVector p = index(v);
            for (int i = 0; i < v.players() && report.holds; ++i)
                for (int h = i + 1; h < v.players(); ++h) {
                    if (!interval_are_equivalent(v, i, h)) continue;
                    ++report.checked_instances;
                    if (p[i] != p[h]) {
                        report.holds = false;
                        report.detail = "equivalent players " + std::to_string(i) + "," +
                                        std::to_string(h) + " differ";
                        break;
                    }
                }
            if (!report.holds) break;
        }
        reports.push_back(report);
    }
    {
        AxiomReport report{Axiom::kNullPlayer};
        for (const auto& v : suite) {
            const PowerVector p = index(v);
            for (int i = 0; i < v.players(); ++i) {
                if (!interval_is_null_player(v, i)) continue;
                ++report.checked_instances;
                if (p[i] != 0) {
                    report.holds = false;
                    report.detail = "null player " + std::to_string(i) + " receives " +
                                    to_fraction_string(p[i]);
                    break;
                }
            }
            if (!report.holds) break;
        }
        reports.push_back(report);
    }
    {
        AxiomReport report{Axiom::kAverageConvexity};
        using System = std::vector<std::pair<Rational, StepIntervalGame>>;
        std::vector<std::pair<System, System>> witnesses;
        for (const auto& u : suite) {
            // basis rearrangement: (1/varpi) u + sum_{E2} (-y_S/varpi) C^S
            // versus sum_{E1} (y_S/varpi) C^S
            const int n = u.players();
            const auto y = unanimity_decompose(interval_average_closed(u));
            Rational varpi = 0;
            for (Coalition s = 1; s < (Coalition{1} << n); ++s)
                if (y[s] > 0) varpi += y[s];
            if (varpi <= 0) continue;
            System left = {{Rational(1) / varpi, u}};
            System right;
            for (Coalition s = 1; s < (Coalition{1} << n); ++s) {
                if (y[s] > 0) right.emplace_back(y[s] / varpi, cs_game(n, s));
                if (y[s] < 0) left.emplace_back(-y[s] / varpi, cs_game(n, s));
            }
            witnesses.push_back({std::move(left), std::move(right)});
        }
        if (!suite.empty() && suite.front().players() >= 2) {
            // the parametric-index violation pair: a point-veto game whose
            // average splits across two C^S games
            const int n = suite.front().players();
            std::vector<Rational> b(n, Rational(0));
            b[0] = Rational(1, 3);
            b[1] = Rational(2, 3);
            System left = {{Rational(1), interval_point_veto(b)}};
            System right = {{Rational(1, 3), cs_game(n, 0b01)},
                            {Rational(2, 3), cs_game(n, 0b10)}};
            witnesses.push_back({std::move(left), std::move(right)});
        }
        for (const auto& [left, right] : witnesses) {
            const AxiomReport sub = interval_check_average_convexity(index, left, right);
            if (sub.vacuous) continue;
            report.checked_instances += sub.checked_instances;
            if (!sub.holds) {
                report = sub;
                break;
            }
        }
        reports.push_back(report);
    }
    return reports;
}

}  // namespace jkpower
