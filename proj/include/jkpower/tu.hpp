#ifndef JKPOWER_TU_HPP
#define JKPOWER_TU_HPP

#include <vector>

#include "jkpower/errors.hpp"
#include "jkpower/game.hpp"
#include "jkpower/rational.hpp"

namespace jkpower {

/// Rational-valued coalition function with value 0 on the empty coalition.
/// Coalitions are bitmasks with player i at bit i.
class TUGame {
  public:
    explicit TUGame(int n);
    TUGame(int n, std::vector<Rational> values);

    int players() const { return n_; }
    Coalition full() const { return (Coalition{1} << n_) - 1; }

    const Rational& operator()(Coalition s) const { return values_[s]; }
    Rational& operator()(Coalition s) { return values_[s]; }
    const std::vector<Rational>& values() const { return values_; }

    bool operator==(const TUGame&) const = default;

  private:
    int n_;
    std::vector<Rational> values_;  // size 2^n, values_[0] == 0
};

/// gamma_S(T) = 1 iff S is a subset of T; S must be nonempty.
int gamma_eval(Coalition s, Coalition t);
TUGame unanimity_game(int n, Coalition s);

TUGame tu_linear_combo(int n, const std::vector<std::pair<Rational, TUGame>>& terms);

/// Exact Shapley value by the marginal-sum formula with precomputed
/// (s-1)!(n-s)!/n! weights.
PowerVector shapley_value(const TUGame& g, int player_cap = 20);

/// Moebius inversion: coefficients y_S over nonempty S with
/// g = sum_S y_S * gamma_S.
std::vector<Rational> unanimity_decompose(const TUGame& g);

/// Inverse of unanimity_decompose.
TUGame from_unanimity(int n, const std::vector<Rational>& coeffs);

}  // namespace jkpower

#endif
