#include "jkpower/game.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace jkpower {

namespace {

std::string profile_str(const Profile& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ")";
    return os.str();
}

void check_shape(const GameShape& shape) {
    if (shape.n < 1 || shape.j < 2 || shape.k < 2)
        throw ValidationError("invalid shape: need n>=1, j>=2, k>=2");
}

void check_profile(const GameShape& shape, const Profile& x) {
    if (static_cast<int>(x.size()) != shape.n)
        throw ShapeMismatch("profile length != n");
    for (int v : x)
        if (v < 0 || v >= shape.j) throw ShapeMismatch("profile level out of range");
}

bool is_zero(const Profile& x) {
    return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
}

}  // namespace

std::uint64_t GameShape::table_cells(std::uint64_t cap) const {
    check_shape(*this);
    std::uint64_t cells = 1;
    for (int i = 0; i < n; ++i) {
        if (cells > cap / static_cast<std::uint64_t>(j))
            throw SizeCapExceeded("j^n exceeds the enumeration cap");
        cells *= static_cast<std::uint64_t>(j);
    }
    if (cells > cap) throw SizeCapExceeded("j^n exceeds the enumeration cap");
    return cells;
}

std::uint64_t profile_index(const GameShape& shape, const Profile& x) {
    check_profile(shape, x);
    std::uint64_t idx = 0;
    for (int i = 0; i < shape.n; ++i)
        idx = idx * static_cast<std::uint64_t>(shape.j) + static_cast<std::uint64_t>(x[i]);
    return idx;
}

Profile profile_from_index(const GameShape& shape, std::uint64_t idx) {
    Profile x(shape.n);
    for (int i = shape.n - 1; i >= 0; --i) {
        x[i] = static_cast<int>(idx % static_cast<std::uint64_t>(shape.j));
        idx /= static_cast<std::uint64_t>(shape.j);
    }
    return x;
}

bool profile_leq(const Profile& x, const Profile& y) {
    if (x.size() != y.size()) throw ShapeMismatch("comparing profiles of different length");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

JKGame::JKGame(GameShape shape, Body body) : shape_(shape), body_(std::move(body)) {
    check_shape(shape_);
}

int JKGame::eval(const Profile& x) const {
    check_profile(shape_, x);
    const int top = shape_.k - 1;
    if (const auto* t = std::get_if<ExplicitTable>(&body_)) {
        return t->values[profile_index(shape_, x)];
    }
    if (const auto* p = std::get_if<PointVeto>(&body_)) {
        return profile_leq(p->veto, x) ? top : 0;
    }
    if (const auto* vs = std::get_if<VetoSet>(&body_)) {
        for (const Profile& a : vs->thresholds)
            if (profile_leq(a, x)) return top;
        return 0;
    }
    const auto& w = std::get<Weighted>(body_);
    Rational total = 0;
    for (int i = 0; i < shape_.n; ++i)
        if (x[i] > 0) total += w.weights[i];
    return total >= w.quota ? 1 : 0;
}

int JKGame::eval_masked(const Profile& x, Coalition fixed_mask, int fixed_level) const {
    Profile y = x;
    for (int i = 0; i < shape_.n; ++i)
        if (fixed_mask & (Coalition{1} << i)) y[i] = fixed_level;
    return eval(y);
}

JKGame build_table_game(const GameShape& shape, std::vector<int> values, std::uint64_t cap) {
    const std::uint64_t cells = shape.table_cells(cap);
    if (values.size() != cells)
        throw ValidationError("value list length != j^n");
    for (int v : values)
        if (v < 0 || v >= shape.k) throw ValidationError("table value out of output range");
    if (values.front() != 0)
        throw BoundaryViolation("v(0,...,0) must be 0");
    if (values.back() != shape.k - 1)
        throw BoundaryViolation("v(top) must be k-1");
    // Covers of the componentwise order: decrement one coordinate. Checking
    // each profile against its n immediate predecessors suffices.
    std::vector<std::uint64_t> stride(shape.n);
    stride[shape.n - 1] = 1;
    for (int i = shape.n - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * static_cast<std::uint64_t>(shape.j);
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        for (int i = 0; i < shape.n; ++i) {
            const int level = static_cast<int>((idx / stride[i]) % static_cast<std::uint64_t>(shape.j));
            if (level == 0) continue;
            const std::uint64_t pred = idx - stride[i];
            if (values[pred] > values[idx]) {
                throw MonotonicityViolation(
                    "monotonicity violated: v" + profile_str(profile_from_index(shape, pred)) +
                    " > v" + profile_str(profile_from_index(shape, idx)));
            }
        }
    }
    return JKGame(shape, ExplicitTable{std::move(values)});
}

JKGame build_point_veto(const GameShape& shape, Profile veto) {
    check_profile(shape, veto);
    if (is_zero(veto)) throw ZeroVeto("point veto must be nonzero");
    return JKGame(shape, PointVeto{std::move(veto)});
}

JKGame build_ws(const GameShape& shape, Coalition s) {
    if (s == 0) throw ZeroVeto("w^S requires a nonempty coalition");
    Profile a(shape.n, 0);
    for (int i = 0; i < shape.n; ++i)
        if (s & (Coalition{1} << i)) a[i] = shape.j - 1;
    return build_point_veto(shape, std::move(a));
}

JKGame build_veto_set(const GameShape& shape, std::vector<Profile> thresholds) {
    for (const Profile& a : thresholds) check_profile(shape, a);
    thresholds = normalize_veto_set(std::move(thresholds));
    return JKGame(shape, VetoSet{std::move(thresholds)});
}

JKGame build_weighted(const GameShape& shape, Rational quota, std::vector<Rational> weights) {
    if (shape.j != 2 || shape.k != 2)
        throw ShapeMismatch("weighted representation requires j=k=2");
    if (quota <= 0) throw ValidationError("quota must be positive");
    if (static_cast<int>(weights.size()) != shape.n)
        throw ShapeMismatch("weight count != n");
    Rational total = 0;
    for (const Rational& w : weights) {
        if (w < 0) throw ValidationError("weights must be nonnegative");
        total += w;
    }
    if (total < quota)
        throw BoundaryViolation("grand coalition must meet the quota");
    return JKGame(shape, Weighted{std::move(quota), std::move(weights)});
}

JKGame to_table(const JKGame& game, std::uint64_t cap) {
    if (std::holds_alternative<ExplicitTable>(game.body())) return game;
    const std::uint64_t cells = game.shape().table_cells(cap);
    std::vector<int> values(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx)
        values[idx] = game.eval(profile_from_index(game.shape(), idx));
    return JKGame(game.shape(), ExplicitTable{std::move(values)});
}

namespace {

JKGame pointwise_binary(const JKGame& u, const JKGame& v, bool take_max, std::uint64_t cap) {
    if (u.shape() != v.shape()) throw ShapeMismatch("operands have different shapes");
    if (std::holds_alternative<VetoSet>(u.body()) && std::holds_alternative<VetoSet>(v.body())) {
        const auto& e1 = std::get<VetoSet>(u.body()).thresholds;
        const auto& e2 = std::get<VetoSet>(v.body()).thresholds;
        return JKGame(u.shape(), VetoSet{take_max ? veto_join(e1, e2) : veto_meet(e1, e2)});
    }
    const std::uint64_t cells = u.shape().table_cells(cap);
    std::vector<int> values(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        const Profile x = profile_from_index(u.shape(), idx);
        const int a = u.eval(x), b = v.eval(x);
        values[idx] = take_max ? std::max(a, b) : std::min(a, b);
    }
    return JKGame(u.shape(), ExplicitTable{std::move(values)});
}

}  // namespace

JKGame or_game(const JKGame& u, const JKGame& v, std::uint64_t cap) {
    return pointwise_binary(u, v, true, cap);
}

JKGame and_game(const JKGame& u, const JKGame& v, std::uint64_t cap) {
    return pointwise_binary(u, v, false, cap);
}

std::vector<Profile> normalize_veto_set(std::vector<Profile> e) {
    if (e.empty()) throw ValidationError("veto set must be nonempty");
    std::erase_if(e, [](const Profile& a) { return is_zero(a); });
    if (e.empty()) throw EmptyAfterValidation("veto set contains only the zero profile");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    std::vector<Profile> minimal;
    for (const Profile& a : e) {
        const bool dominated = std::any_of(e.begin(), e.end(), [&](const Profile& b) {
            return b != a && profile_leq(b, a);
        });
        if (!dominated) minimal.push_back(a);
    }
    return minimal;
}

std::vector<Profile> veto_join(const std::vector<Profile>& e1, const std::vector<Profile>& e2) {
    std::vector<Profile> all = e1;
    all.insert(all.end(), e2.begin(), e2.end());
    return normalize_veto_set(std::move(all));
}

std::vector<Profile> veto_meet(const std::vector<Profile>& e1, const std::vector<Profile>& e2) {
    std::vector<Profile> maxima;
    for (const Profile& a : e1)
        for (const Profile& b : e2) {
            if (a.size() != b.size()) throw ShapeMismatch("veto sets of different arity");
            Profile c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
            maxima.push_back(std::move(c));
        }
    return normalize_veto_set(std::move(maxima));
}

Coalition vetoer_set(const Profile& veto) {
    Coalition s = 0;
    for (std::size_t i = 0; i < veto.size(); ++i)
        if (veto[i] > 0) s |= Coalition{1} << i;
    return s;
}

bool is_null_player(const JKGame& game, int i) {
    const GameShape& shape = game.shape();
    if (i < 0 || i >= shape.n) throw ValidationError("player index out of range");
    if (const auto* p = std::get_if<PointVeto>(&game.body()))
        return p->veto[i] == 0;
    const std::uint64_t cells = shape.table_cells();
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        Profile x = profile_from_index(shape, idx);
        if (x[i] != 0) continue;
        const int base = game.eval(x);
        for (int y = 1; y < shape.j; ++y) {
            x[i] = y;
            if (game.eval(x) != base) return false;
        }
    }
    return true;
}

bool are_equivalent(const JKGame& game, int i, int h) {
    const GameShape& shape = game.shape();
    if (i < 0 || i >= shape.n || h < 0 || h >= shape.n)
        throw ValidationError("player index out of range");
    if (i == h) return true;
    if (const auto* p = std::get_if<PointVeto>(&game.body()))
        return p->veto[i] == p->veto[h];
    const std::uint64_t cells = shape.table_cells();
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        Profile x = profile_from_index(shape, idx);
        if (x[i] >= x[h]) continue;  // each unordered pair once
        Profile y = x;
        std::swap(y[i], y[h]);
        if (game.eval(x) != game.eval(y)) return false;
    }
    return true;
}

JKGame permute_game(const JKGame& game, const std::vector<int>& pi, std::uint64_t cap) {
    const GameShape& shape = game.shape();
    if (static_cast<int>(pi.size()) != shape.n) throw ShapeMismatch("permutation length != n");
    const std::uint64_t cells = shape.table_cells(cap);
    std::vector<int> values(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        const Profile x = profile_from_index(shape, idx);
        Profile px(shape.n);
        for (int i = 0; i < shape.n; ++i) px[i] = x[pi[i]];
        values[idx] = game.eval(px);
    }
    return JKGame(shape, ExplicitTable{std::move(values)});
}

JKGame random_monotone_game(const GameShape& shape, std::uint64_t seed, std::uint64_t cap) {
    const std::uint64_t cells = shape.table_cells(cap);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> level(0, shape.k - 1);
    std::vector<int> values(cells);
    for (auto& v : values) v = level(rng);

    std::vector<std::uint64_t> stride(shape.n);
    stride[shape.n - 1] = 1;
    for (int i = shape.n - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * static_cast<std::uint64_t>(shape.j);
    const auto repair = [&] {
        for (std::uint64_t idx = 0; idx < cells; ++idx) {
            const Profile x = profile_from_index(shape, idx);
            for (int i = 0; i < shape.n; ++i)
                if (x[i] > 0) values[idx] = std::max(values[idx], values[idx - stride[i]]);
        }
    };
    repair();
    values.front() = 0;
    values.back() = shape.k - 1;
    repair();
    return build_table_game(shape, std::move(values), cap);
}

Rational combo_eval(const GameCombo& combo, const Profile& x) {
    Rational total = 0;
    for (const auto& [weight, game] : combo.terms)
        total += weight * game.eval(x);
    return total;
}

}  // namespace jkpower
