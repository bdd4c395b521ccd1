#include "jkpower/tu.hpp"

#include <bit>

namespace jkpower {

TUGame::TUGame(int n) : n_(n) {
    if (n < 1 || n > 30) throw ValidationError("TU game needs 1 <= n <= 30");
    values_.assign(std::size_t{1} << n, Rational(0));
}

TUGame::TUGame(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
    if (n < 1 || n > 30) throw ValidationError("TU game needs 1 <= n <= 30");
    if (values_.size() != (std::size_t{1} << n))
        throw ValidationError("TU value table must have 2^n entries");
    if (values_[0] != 0) throw ValidationError("TU game must vanish on the empty coalition");
}

int gamma_eval(Coalition s, Coalition t) {
    if (s == 0) throw ValidationError("unanimity game needs a nonempty coalition");
    return (s & t) == s ? 1 : 0;
}

TUGame unanimity_game(int n, Coalition s) {
    TUGame g(n);
    for (Coalition t = 1; t <= g.full(); ++t) g(t) = gamma_eval(s, t);
    return g;
}

TUGame tu_linear_combo(int n, const std::vector<std::pair<Rational, TUGame>>& terms) {
    TUGame out(n);
    for (const auto& [weight, g] : terms) {
        if (g.players() != n) throw ShapeMismatch("TU combo over mixed player counts");
        for (Coalition s = 1; s <= out.full(); ++s) out(s) += weight * g(s);
    }
    return out;
}

PowerVector shapley_value(const TUGame& g, int player_cap) {
    const int n = g.players();
    if (n > player_cap) throw SizeCapExceeded("Shapley value player cap exceeded");

    std::vector<Rational> fact(n + 1);
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    std::vector<Rational> weight(n + 1);  // weight[s] = (s-1)!(n-s)!/n!
    for (int s = 1; s <= n; ++s) weight[s] = fact[s - 1] * fact[n - s] / fact[n];

    PowerVector phi(n, Rational(0));
    for (Coalition s = 1; s <= g.full(); ++s) {
        const int size = std::popcount(s);
        for (int i = 0; i < n; ++i) {
            const Coalition bit = Coalition{1} << i;
            if (!(s & bit)) continue;
            phi[i] += weight[size] * (g(s) - g(s & ~bit));
        }
    }
    return phi;
}

std::vector<Rational> unanimity_decompose(const TUGame& g) {
    const std::size_t size = std::size_t{1} << g.players();
    std::vector<Rational> coeffs(size, Rational(0));
    for (Coalition s = 1; s < size; ++s) {
        // y_S = sum_{T subset S} (-1)^{|S\T|} g(T)
        Rational y = 0;
        for (Coalition t = s;; t = (t - 1) & s) {
            const int sign = (std::popcount(s ^ t) % 2 == 0) ? 1 : -1;
            y += sign * g(t);
            if (t == 0) break;
        }
        coeffs[s] = y;
    }
    return coeffs;
}

TUGame from_unanimity(int n, const std::vector<Rational>& coeffs) {
    TUGame g(n);
    if (coeffs.size() != (std::size_t{1} << n))
        throw ValidationError("coefficient table must have 2^n entries");
    for (Coalition t = 1; t <= g.full(); ++t) {
        Rational total = 0;
        for (Coalition s = t;; s = (s - 1) & t) {
            if (s != 0) total += coeffs[s];
            if (s == 0) break;
        }
        g(t) = total;
    }
    return g;
}

}  // namespace jkpower
