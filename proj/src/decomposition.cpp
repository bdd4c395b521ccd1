#include "jkpower/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace jkpower {

GameCombo VetoDecomposition::to_combo(const GameShape& shape) const {
    GameCombo combo;
    for (const auto& [alpha, support] : terms)
        combo.terms.emplace_back(alpha, build_veto_set(shape, support));
    return combo;
}

VetoDecomposition convex_veto_decomposition(const JKGame& v, std::uint64_t cap) {
    const GameShape& shape = v.shape();
    const std::uint64_t cells = shape.table_cells(cap);

    struct Entry {
        int value;
        int coord_sum;
        Profile x;
    };
    std::vector<Entry> support;
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        Profile x = profile_from_index(shape, idx);
        const int value = v.eval(x);
        if (value > 0) {
            const int sum = std::accumulate(x.begin(), x.end(), 0);
            support.push_back({value, sum, std::move(x)});
        }
    }
    // The coordinate sum is a strictly monotone witness of <=, so this order
    // places x^t before x^s whenever x^t <= x^s.
    std::sort(support.begin(), support.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.value, a.coord_sum, a.x) < std::tie(b.value, b.coord_sum, b.x);
    });

    VetoDecomposition out;
    int prev_value = 0;
    for (std::size_t t = 0; t < support.size(); ++t) {
        const Rational alpha(support[t].value - prev_value, shape.k - 1);
        prev_value = support[t].value;
        if (alpha == 0) continue;
        std::vector<Profile> tail;
        tail.reserve(support.size() - t);
        for (std::size_t s = t; s < support.size(); ++s) tail.push_back(support[s].x);
        out.terms.emplace_back(alpha, std::move(tail));
    }
    return out;
}

namespace {

Profile ws_profile(const GameShape& shape, Coalition s) {
    Profile a(shape.n, 0);
    for (int i = 0; i < shape.n; ++i)
        if (s & (Coalition{1} << i)) a[i] = shape.j - 1;
    return a;
}

}  // namespace

BasisCoefficients ws_basis_decompose(const TUGame& g, const GameShape& shape) {
    const int n = shape.n;
    if (g.players() != n) throw ShapeMismatch("TU game and shape disagree on n");
    if (n > 12) throw SizeCapExceeded("dense basis solve capped at n <= 12");
    if (g(0) != 0) throw ValidationError("target must vanish on the empty coalition");

    const std::size_t dim = (std::size_t{1} << n) - 1;  // nonempty coalitions
    // Columns: unanimity coordinates of avg(w^S); right-hand side: those of g.
    std::vector<std::vector<Rational>> mat(dim, std::vector<Rational>(dim + 1, Rational(0)));
    for (Coalition s = 1; s <= dim; ++s) {
        const auto coeffs = unanimity_decompose(average_point_veto(shape, ws_profile(shape, s)));
        for (Coalition t = 1; t <= dim; ++t) mat[t - 1][s - 1] = coeffs[t];
    }
    const auto rhs = unanimity_decompose(g);
    for (Coalition t = 1; t <= dim; ++t) mat[t - 1][dim] = rhs[t];

    // Exact Gaussian elimination; free columns get coefficient zero.
    std::vector<std::size_t> pivot_col_of_row(dim, dim);
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < dim; ++col) {
        std::size_t pivot = row;
        while (pivot < dim && mat[pivot][col] == 0) ++pivot;
        if (pivot == dim) continue;
        std::swap(mat[row], mat[pivot]);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            const Rational factor = mat[r][col] / mat[row][col];
            for (std::size_t c = col; c <= dim; ++c) mat[r][c] -= factor * mat[row][c];
        }
        pivot_col_of_row[row] = col;
        ++row;
    }
    for (std::size_t r = row; r < dim; ++r)
        if (mat[r][dim] != 0) throw SingularSystem("inconsistent basis system");

    BasisCoefficients x(std::size_t{1} << n, Rational(0));
    for (std::size_t r = 0; r < row; ++r) {
        const std::size_t col = pivot_col_of_row[r];
        x[col + 1] = mat[r][dim] / mat[r][col];
    }
    return x;
}

Rational alpha_leading(Coalition c, int j) {
    if (c == 0) throw ValidationError("alpha_leading needs a nonempty coalition");
    if (j < 2) throw ValidationError("alpha_leading needs j >= 2");
    // Work on the players of C only; coordinates outside C contribute unit
    // factors in the closed form, so the value is ambient-independent.
    const int cn = std::popcount(c);
    const GameShape shape{cn, j, 2};
    const TUGame wc = average_point_veto(shape, Profile(cn, j - 1));
    const Coalition full = wc.full();
    Rational alpha = 0;
    for (Coalition s = 1; s <= full; ++s) {
        const int sign = (std::popcount(full ^ s) % 2 == 0) ? 1 : -1;
        alpha += sign * wc(s);
    }
    return alpha;
}

PowerVector reconstruct_index_via_ac(
    const JKGame& u, const std::optional<std::map<Coalition, PowerVector>>& base_values) {
    const GameShape& shape = u.shape();
    const int n = shape.n;
    const BasisCoefficients x = ws_basis_decompose(average_game(u), shape);

    Rational positive_mass = 0;  // varpi, the total weight of E_1
    for (Coalition s = 1; s < (Coalition{1} << n); ++s)
        if (x[s] > 0) positive_mass += x[s];
    if (positive_mass <= 0)
        throw ValidationError("decomposition has no positive part; average game is degenerate");

    PowerVector result(n, Rational(0));
    for (Coalition s = 1; s < (Coalition{1} << n); ++s) {
        if (x[s] == 0) continue;
        PowerVector base;
        if (base_values) {
            const auto it = base_values->find(s);
            if (it == base_values->end())
                throw ValidationError("missing base value for a coalition");
            base = it->second;
        } else {
            base.assign(n, Rational(0));
            const int size = std::popcount(s);
            for (int i = 0; i < n; ++i)
                if (s & (Coalition{1} << i)) base[i] = Rational(1, size);
        }
        for (int i = 0; i < n; ++i) result[i] += x[s] * base[i];
    }
    return result;
}

}  // namespace jkpower
