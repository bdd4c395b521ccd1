#include "jkpower/average.hpp"

#include <bit>

namespace jkpower {

Rational c_function(const JKGame& v, Coalition t, std::uint64_t cap) {
    const GameShape& shape = v.shape();
    if (t >> shape.n) throw ShapeMismatch("coalition outside the player set");
    if (t == 0) return 0;

    std::vector<int> free_players;
    for (int i = 0; i < shape.n; ++i)
        if (!(t & (Coalition{1} << i))) free_players.push_back(i);

    std::uint64_t outer = 1;
    for (std::size_t i = 0; i < free_players.size(); ++i) {
        outer *= static_cast<std::uint64_t>(shape.j);
        if (outer > cap) throw SizeCapExceeded("j^{n-|T|} exceeds the enumeration cap");
    }

    BigInt total = 0;
    Profile x(shape.n, 0);
    for (std::uint64_t idx = 0; idx < outer; ++idx) {
        std::uint64_t rest = idx;
        for (int p : free_players) {
            x[p] = static_cast<int>(rest % static_cast<std::uint64_t>(shape.j));
            rest /= static_cast<std::uint64_t>(shape.j);
        }
        total += v.eval_masked(x, t, shape.j - 1) - v.eval_masked(x, t, 0);
    }
    return Rational(total, BigInt(outer) * (shape.k - 1));
}

TUGame average_game(const JKGame& v, std::uint64_t cap) {
    TUGame g(v.shape().n);
    for (Coalition s = 1; s <= g.full(); ++s) g(s) = c_function(v, s, cap);
    return g;
}

TUGame average_point_veto(const GameShape& shape, const Profile& veto) {
    if (static_cast<int>(veto.size()) != shape.n)
        throw ShapeMismatch("veto length != n");
    bool nonzero = false;
    for (int a : veto) {
        if (a < 0 || a >= shape.j) throw ShapeMismatch("veto level out of range");
        nonzero = nonzero || a > 0;
    }
    if (!nonzero) throw ZeroVeto("point veto must be nonzero");

    const Coalition vetoers = vetoer_set(veto);
    TUGame g(shape.n);
    for (Coalition s = 1; s <= g.full(); ++s) {
        if (s == g.full()) {
            g(s) = 1;
            continue;
        }
        if ((s & vetoers) == 0) continue;
        Rational prod = 1;
        for (int i = 0; i < shape.n; ++i)
            if (!(s & (Coalition{1} << i)))
                prod *= Rational(shape.j - veto[i], shape.j);
        g(s) = prod;
    }
    return g;
}

TUGame va_game(const JKGame& v, const Profile& a) {
    const GameShape& shape = v.shape();
    if (static_cast<int>(a.size()) != shape.n) throw ShapeMismatch("parameter length != n");
    TUGame g(shape.n);
    for (Coalition s = 1; s <= g.full(); ++s) {
        const int hi = v.eval_masked(a, s, shape.j - 1);
        const int lo = v.eval_masked(a, s, 0);
        g(s) = Rational(hi - lo, shape.k - 1);
    }
    return g;
}

TUGame average_of_combo(const GameCombo& combo, std::uint64_t cap) {
    if (combo.terms.empty()) throw ValidationError("empty combination");
    std::vector<std::pair<Rational, TUGame>> averaged;
    averaged.reserve(combo.terms.size());
    for (const auto& [weight, game] : combo.terms)
        averaged.emplace_back(weight, average_game(game, cap));
    return tu_linear_combo(combo.terms.front().second.shape().n, averaged);
}

}  // namespace jkpower
