#include <bit>

#include "doctest.h"
#include "helpers.hpp"
#include "jkpower/decomposition.hpp"
#include "jkpower/indices.hpp"

using namespace jkpower;
using namespace jkpower::testing;

namespace {

bool supports_nested(const VetoDecomposition& dec) {
    for (std::size_t t = 0; t + 1 < dec.terms.size(); ++t) {
        for (const Profile& x : dec.terms[t + 1].second) {
            bool found = false;
            for (const Profile& y : dec.terms[t].second) found = found || x == y;
            if (!found) return false;
        }
    }
    return true;
}

void check_reconstruction(const JKGame& v) {
    const VetoDecomposition dec = convex_veto_decomposition(v);
    Rational total = 0;
    for (const auto& [alpha, support] : dec.terms) {
        CHECK(alpha > 0);
        CHECK_FALSE(support.empty());
        total += alpha;
    }
    CHECK(total == 1);
    CHECK(supports_nested(dec));

    const GameCombo combo = dec.to_combo(v.shape());
    const std::uint64_t cells = v.shape().table_cells();
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        const Profile x = profile_from_index(v.shape(), idx);
        CHECK(combo_eval(combo, x) == v.eval(x));
    }
}

}  // namespace

TEST_CASE("a point veto decomposes into a single full-weight term") {
    const GameShape shape{3, 3, 3};
    const JKGame u = build_point_veto(shape, {1, 2, 0});
    const VetoDecomposition dec = convex_veto_decomposition(u);
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0].first == 1);
    // the support is exactly the upper set of the veto profile
    for (const Profile& x : dec.terms[0].second) CHECK(u.eval(x) == 2);
    check_reconstruction(u);
}

TEST_CASE("the running example splits into two half-weight layers") {
    const VetoDecomposition dec = convex_veto_decomposition(example1_game());
    REQUIRE(dec.terms.size() == 2);
    CHECK(dec.terms[0].first == Rational(1, 2));
    CHECK(dec.terms[1].first == Rational(1, 2));
    CHECK(dec.terms[0].second.size() > dec.terms[1].second.size());
    check_reconstruction(example1_game());
}

TEST_CASE("random games reconstruct pointwise with convex nested weights") {
    for (const GameShape shape : {GameShape{2, 3, 4}, GameShape{3, 3, 3}, GameShape{3, 2, 2}})
        for (std::uint64_t seed = 0; seed < 15; ++seed)
            check_reconstruction(random_monotone_game(shape, seed));
}

TEST_CASE("decomposed combos keep the original average game") {
    const GameShape shape{3, 3, 3};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const JKGame v = random_monotone_game(shape, 50 + seed);
        const GameCombo combo = convex_veto_decomposition(v).to_combo(shape);
        CHECK(average_of_combo(combo) == average_game(v));
    }
}

TEST_CASE("basis coefficients of a basis element are its indicator") {
    for (const int j : {2, 3, 4}) {
        const GameShape shape{3, j, 3};
        for (Coalition c = 1; c < 8; ++c) {
            const TUGame target = average_game(build_ws(shape, c));
            const BasisCoefficients x = ws_basis_decompose(target, shape);
            if (j >= 3) {
                // unique solution: exactly the indicator of c
                for (Coalition s = 1; s < 8; ++s) CHECK(x[s] == (s == c ? 1 : 0));
            } else {
                // the family is linearly dependent for two input levels, so
                // only reconstruction is guaranteed
                TUGame rebuilt(3);
                for (Coalition s = 1; s < 8; ++s) {
                    if (x[s] == 0) continue;
                    const TUGame ws = average_game(build_ws(shape, s));
                    for (Coalition t = 1; t < 8; ++t) rebuilt(t) += x[s] * ws(t);
                }
                CHECK(rebuilt == target);
            }
        }
    }
}

TEST_CASE("basis coefficients of the two-veto mixture average") {
    for (const int j : {3, 4}) {
        const GameShape shape{3, j, j};
        const TUGame target = average_point_veto(shape, {1, j - 1, 0});
        const BasisCoefficients x = ws_basis_decompose(target, shape);
        CHECK(x[0b001] == Rational(1, j));
        CHECK(x[0b010] == Rational(j - 1, j));
        for (Coalition s = 1; s < 8; ++s)
            if (s != 0b001 && s != 0b010) CHECK(x[s] == 0);
    }
}

TEST_CASE("every suite average decomposes and reconstructs in the basis") {
    const GameShape shape{3, 3, 3};
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const TUGame target = average_game(random_monotone_game(shape, 200 + seed));
        const BasisCoefficients x = ws_basis_decompose(target, shape);
        TUGame rebuilt(3);
        for (Coalition s = 1; s < 8; ++s) {
            if (x[s] == 0) continue;
            const TUGame ws = average_point_veto(shape, Profile{
                (s & 1) ? 2 : 0, (s & 2) ? 2 : 0, (s & 4) ? 2 : 0});
            for (Coalition t = 1; t < 8; ++t) rebuilt(t) += x[s] * ws(t);
        }
        CHECK(rebuilt == target);
        // the positive part is never empty because the average hits 1 at N
        Rational positive = 0;
        for (Coalition s = 1; s < 8; ++s)
            if (x[s] > 0) positive += x[s];
        CHECK(positive > 0);
    }
}

TEST_CASE("leading coefficient values and the singleton anchor") {
    CHECK(alpha_leading(0b1, 2) == 1);
    CHECK(alpha_leading(0b1, 5) == 1);
    CHECK(alpha_leading(0b11, 3) == Rational(1, 3));
    CHECK_THROWS_AS(alpha_leading(0, 3), ValidationError);
    CHECK_THROWS_AS(alpha_leading(0b1, 1), ValidationError);
}

TEST_CASE("leading coefficients match the derived closed form") {
    // alpha_C = ((j-1)^c - (-1)^c) / j^c, from expanding the Moebius sum of
    // the point-veto average; zero exactly when j=2 and |C| is even
    for (int j = 2; j <= 5; ++j)
        for (int c = 1; c <= 5; ++c) {
            Rational num = 1, den = 1;
            for (int t = 0; t < c; ++t) {
                num *= j - 1;
                den *= j;
            }
            num -= (c % 2 == 0) ? 1 : -1;
            const Coalition mask = (Coalition{1} << c) - 1;
            CHECK(alpha_leading(mask, j) == num / den);
            if (j >= 3) CHECK(alpha_leading(mask, j) != 0);
            if (j == 2) CHECK((alpha_leading(mask, j) == 0) == (c % 2 == 0));
        }
}

TEST_CASE("index reconstruction through the basis equals phi") {
    CHECK(reconstruct_index_via_ac(example1_game()) ==
          PowerVector{Rational(5, 12), Rational(7, 12)});

    const GameShape shape{3, 3, 3};
    for (Coalition c = 1; c < 8; ++c) {
        std::map<Coalition, PowerVector> bases;
        for (Coalition s = 1; s < 8; ++s)
            bases[s] = PowerVector{Rational(int(s)), Rational(0), Rational(0)};
        CHECK(reconstruct_index_via_ac(build_ws(shape, c), bases) == bases[c]);
    }

    for (const GameShape sh : {GameShape{3, 3, 3}, GameShape{2, 4, 3}, GameShape{3, 2, 2}})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const JKGame v = random_monotone_game(sh, 400 + seed);
            CHECK(reconstruct_index_via_ac(v) == phi(v));
        }
}

TEST_CASE("basis solve rejects malformed targets") {
    TUGame bad(2);
    bad(0) = 1;
    CHECK_THROWS_AS(ws_basis_decompose(bad, GameShape{2, 3, 3}), ValidationError);
    CHECK_THROWS_AS(ws_basis_decompose(TUGame(2), GameShape{3, 3, 3}), ShapeMismatch);
    CHECK_THROWS_AS(ws_basis_decompose(TUGame(13), GameShape{13, 3, 3}), SizeCapExceeded);
}
