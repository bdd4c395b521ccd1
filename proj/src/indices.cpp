#include "jkpower/indices.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace jkpower {

namespace {

// Reachable-outcome interval [lo, hi] once the first `spoken` positions of
// the order have voted.
std::pair<int, int> reachable_interval(const JKGame& v, const std::vector<int>& order,
                                       const Profile& x, int spoken) {
    const GameShape& shape = v.shape();
    Coalition pending = 0;
    for (int p = spoken; p < shape.n; ++p) pending |= Coalition{1} << order[p];
    return {v.eval_masked(x, pending, 0), v.eval_masked(x, pending, shape.j - 1)};
}

}  // namespace

int uncertainty_reduction(const JKGame& v, const RollCall& rc, int i) {
    const GameShape& shape = v.shape();
    if (static_cast<int>(rc.order.size()) != shape.n)
        throw ShapeMismatch("roll-call order length != n");
    const auto it = std::find(rc.order.begin(), rc.order.end(), i);
    if (it == rc.order.end()) throw ValidationError("player not in roll-call order");
    const int pos = static_cast<int>(it - rc.order.begin());
    const auto [lo_before, hi_before] = reachable_interval(v, rc.order, rc.votes, pos);
    const auto [lo_after, hi_after] = reachable_interval(v, rc.order, rc.votes, pos + 1);
    return (hi_before - lo_before) - (hi_after - lo_after);
}

PowerVector phi_rollcall(const JKGame& v, RollCallMethod method, std::uint64_t summand_budget) {
    const GameShape& shape = v.shape();
    const int n = shape.n;
    const std::uint64_t cells = shape.table_cells();
    std::uint64_t permutations = 1;
    for (int i = 2; i <= n; ++i) permutations *= static_cast<std::uint64_t>(i);
    if (permutations > summand_budget / cells)
        throw SizeCapExceeded("n! * j^n exceeds the roll-call enumeration budget");

    std::vector<std::int64_t> totals(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        for (std::uint64_t idx = 0; idx < cells; ++idx) {
            const Profile x = profile_from_index(shape, idx);
            auto [lo, hi] = reachable_interval(v, order, x, 0);
            for (int p = 0; p < n; ++p) {
                const auto [lo2, hi2] = reachable_interval(v, order, x, p + 1);
                if (method == RollCallMethod::kUncertaintySum) {
                    totals[order[p]] += (hi - lo) - (hi2 - lo2);
                } else {
                    // Player order[p] is an h-pivot iff h was undecided before
                    // the vote and decided after it.
                    for (int h = 1; h <= shape.k - 1; ++h) {
                        const bool open_before = lo < h && h <= hi;
                        const bool open_after = lo2 < h && h <= hi2;
                        if (open_before && !open_after) totals[order[p]] += 1;
                    }
                }
                lo = lo2;
                hi = hi2;
            }
        }
    } while (std::next_permutation(order.begin(), order.end()));

    const BigInt denom = BigInt(permutations) * cells * (shape.k - 1);
    PowerVector result(n);
    for (int i = 0; i < n; ++i) result[i] = Rational(BigInt(totals[i]), denom);
    return result;
}

PowerVector phi(const JKGame& v, std::uint64_t cap) {
    return shapley_value(average_game(v, cap));
}

PowerVector phi_parametric(const JKGame& v, const Profile& a) {
    return shapley_value(va_game(v, a));
}

PowerVector ssi_simple(const JKGame& v) {
    const GameShape& shape = v.shape();
    if (shape.j != 2 || shape.k != 2)
        throw ShapeMismatch("the classical index applies to (2,2) games only");
    const int n = shape.n;
    TUGame g(n);
    for (Coalition s = 1; s <= g.full(); ++s) {
        Profile x(n, 0);
        for (int i = 0; i < n; ++i)
            if (s & (Coalition{1} << i)) x[i] = 1;
        g(s) = v.eval(x);
    }
    return shapley_value(g);
}

PowerVector equal_division(const JKGame& v) {
    return PowerVector(v.shape().n, Rational(1, v.shape().n));
}

PowerIndex scaled_index(const Rational& lambda) {
    return [lambda](const JKGame& v) {
        PowerVector p = phi(v);
        for (Rational& x : p) x *= lambda;
        return p;
    };
}

PowerIndex blend_equal_division_index(const Rational& lambda) {
    return [lambda](const JKGame& v) {
        PowerVector p = phi(v);
        const Rational ed(1, v.shape().n);
        for (Rational& x : p) x = lambda * x + (1 - lambda) * ed;
        return p;
    };
}

PowerIndex parametric_index(Profile a) {
    return [a = std::move(a)](const JKGame& v) { return phi_parametric(v, a); };
}

PowerIndex basis_weighted_index(int favored_player) {
    if (favored_player < 0) throw BadParam("favored player index must be nonnegative");
    return [favored_player](const JKGame& u) {
        const int n = u.shape().n;
        if (favored_player >= n) throw BadParam("favored player outside the player set");
        const BasisCoefficients x = ws_basis_decompose(average_game(u), u.shape());
        const Coalition grand = (Coalition{1} << n) - 1;
        PowerVector result(n, Rational(0));
        for (Coalition s = 1; s <= grand; ++s) {
            if (x[s] == 0) continue;
            for (int i = 0; i < n; ++i) {
                Rational base;
                if (s == grand) {
                    base = (i == favored_player) ? Rational(2, n + 1) : Rational(1, n + 1);
                } else {
                    base = (s & (Coalition{1} << i)) ? Rational(1, std::popcount(s)) : Rational(0);
                }
                result[i] += x[s] * base;
            }
        }
        return result;
    };
}

}  // namespace jkpower
