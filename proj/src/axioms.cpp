#include "jkpower/axioms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>

namespace jkpower {

namespace {

using ConvexSystem = std::vector<std::pair<Rational, JKGame>>;

AxiomReport violation(Axiom axiom, std::string detail, const JKGame& game, int player = -1) {
    AxiomReport report;
    report.axiom = axiom;
    report.holds = false;
    report.detail = std::move(detail);
    report.witness_left = {{Rational(1), game}};
    report.witness_player = player;
    return report;
}

Rational component_sum(const PowerVector& p) {
    Rational total = 0;
    for (const auto& x : p) total += x;
    return total;
}

AxiomReport check_positivity(const PowerIndex& index, const std::vector<JKGame>& suite) {
    AxiomReport report{Axiom::kPositivity};
    for (const JKGame& v : suite) {
        ++report.checked_instances;
        const PowerVector p = index(v);
        bool any_nonzero = false;
        for (int i = 0; i < v.shape().n; ++i) {
            if (p[i] < 0) return violation(Axiom::kPositivity, "negative component", v, i);
            any_nonzero = any_nonzero || p[i] != 0;
        }
        if (!any_nonzero) return violation(Axiom::kPositivity, "index vanishes entirely", v);
    }
    return report;
}

AxiomReport check_anonymity(const PowerIndex& index, const std::vector<JKGame>& suite,
                            std::uint64_t seed) {
    AxiomReport report{Axiom::kAnonymity};
    std::mt19937_64 rng(seed);
    for (const JKGame& v : suite) {
        const int n = v.shape().n;
        std::vector<std::vector<int>> perms;
        if (n <= 4) {
            std::vector<int> pi(n);
            std::iota(pi.begin(), pi.end(), 0);
            do perms.push_back(pi);
            while (std::next_permutation(pi.begin(), pi.end()));
        } else {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    std::vector<int> pi(n);
                    std::iota(pi.begin(), pi.end(), 0);
                    std::swap(pi[a], pi[b]);
                    perms.push_back(pi);
                }
            for (int t = 0; t < 20; ++t) {
                std::vector<int> pi(n);
                std::iota(pi.begin(), pi.end(), 0);
                std::shuffle(pi.begin(), pi.end(), rng);
                perms.push_back(pi);
            }
        }
        const PowerVector p = index(v);
        for (const auto& pi : perms) {
            ++report.checked_instances;
            const PowerVector q = index(permute_game(v, pi));
            for (int i = 0; i < n; ++i)
                if (q[pi[i]] != p[i])
                    return violation(Axiom::kAnonymity, "relabeling changed the index", v, i);
        }
    }
    return report;
}

AxiomReport check_symmetry(const PowerIndex& index, const std::vector<JKGame>& suite) {
    AxiomReport report{Axiom::kSymmetry};
    for (const JKGame& v : suite) {
        const PowerVector p = index(v);
        for (int i = 0; i < v.shape().n; ++i)
            for (int h = i + 1; h < v.shape().n; ++h) {
                if (!are_equivalent(v, i, h)) continue;
                ++report.checked_instances;
                if (p[i] != p[h]) {
                    std::ostringstream os;
                    os << "equivalent players " << i << " and " << h << " get "
                       << to_fraction_string(p[i]) << " vs " << to_fraction_string(p[h]);
                    return violation(Axiom::kSymmetry, os.str(), v, i);
                }
            }
    }
    return report;
}

AxiomReport check_efficiency(const PowerIndex& index, const std::vector<JKGame>& suite) {
    AxiomReport report{Axiom::kEfficiency};
    for (const JKGame& v : suite) {
        ++report.checked_instances;
        const Rational total = component_sum(index(v));
        if (total != 1)
            return violation(Axiom::kEfficiency,
                             "components sum to " + to_fraction_string(total), v);
    }
    return report;
}

AxiomReport check_null_player(const PowerIndex& index, const std::vector<JKGame>& suite) {
    AxiomReport report{Axiom::kNullPlayer};
    for (const JKGame& v : suite) {
        const PowerVector p = index(v);
        for (int i = 0; i < v.shape().n; ++i) {
            if (!is_null_player(v, i)) continue;
            ++report.checked_instances;
            if (p[i] != 0)
                return violation(Axiom::kNullPlayer,
                                 "null player receives " + to_fraction_string(p[i]), v, i);
        }
    }
    return report;
}

AxiomReport check_transfer(const PowerIndex& index, const std::vector<JKGame>& suite,
                           std::uint64_t seed) {
    AxiomReport report{Axiom::kTransfer};
    // All pairs for small suites, a seeded random sample otherwise.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (suite.size() <= 30) {
        for (std::size_t a = 0; a < suite.size(); ++a)
            for (std::size_t b = a; b < suite.size(); ++b) pairs.emplace_back(a, b);
    } else {
        std::mt19937_64 rng(seed + 17);
        for (int t = 0; t < 300; ++t)
            pairs.emplace_back(rng() % suite.size(), rng() % suite.size());
    }
    for (const auto& [a, b] : pairs) {
        {
            ++report.checked_instances;
            const JKGame& u = suite[a];
            const JKGame& v = suite[b];
            const PowerVector lhs_u = index(u), lhs_v = index(v);
            const PowerVector rhs_or = index(or_game(u, v)), rhs_and = index(and_game(u, v));
            for (int i = 0; i < u.shape().n; ++i)
                if (lhs_u[i] + lhs_v[i] != rhs_or[i] + rhs_and[i]) {
                    AxiomReport bad = violation(Axiom::kTransfer, "transfer identity fails", u, i);
                    bad.witness_left = {{Rational(1), u}, {Rational(1), v}};
                    return bad;
                }
        }
    }
    return report;
}

// Valid two-term combinations: alpha*u + beta*v whose pointwise values are
// integers and pass game validation. Assertions happen only on those.
AxiomReport check_combination(Axiom axiom, const PowerIndex& index,
                              const std::vector<JKGame>& suite) {
    AxiomReport report{axiom};
    if (suite.empty()) return report;
    const GameShape shape = suite.front().shape();
    const std::uint64_t cells = shape.table_cells();

    std::vector<std::pair<JKGame, JKGame>> pairs;
    if (suite.size() <= 30) {
        for (std::size_t a = 0; a < suite.size(); ++a)
            for (std::size_t b = a + 1; b < suite.size(); ++b)
                pairs.emplace_back(suite[a], suite[b]);
    } else {
        std::mt19937_64 rng(suite.size());
        for (int t = 0; t < 200; ++t)
            pairs.emplace_back(suite[rng() % suite.size()], suite[rng() % suite.size()]);
    }
    // {0,k-1}-valued veto pairs mix to valid games whenever alpha*(k-1) is
    // an integer, so add a few to guarantee nonvacuous coverage for k >= 3.
    for (int i = 0; i + 1 < shape.n; ++i)
        pairs.emplace_back(build_ws(shape, Coalition{1} << i),
                           build_ws(shape, Coalition{1} << (i + 1)));
    pairs.emplace_back(build_ws(shape, 1), build_ws(shape, (Coalition{1} << shape.n) - 1));

    for (const auto& [u, v] : pairs) {
        for (int m = 0; m <= shape.k - 1; ++m) {
            const Rational alpha(m, shape.k - 1);
            const Rational beta = 1 - alpha;
            std::vector<int> values;
            values.reserve(cells);
            bool integral = true;
            for (std::uint64_t idx = 0; idx < cells && integral; ++idx) {
                const Profile x = profile_from_index(shape, idx);
                const Rational w = alpha * u.eval(x) + beta * v.eval(x);
                if (boost::multiprecision::denominator(w) != 1) {
                    integral = false;
                    break;
                }
                values.push_back(static_cast<int>(boost::multiprecision::numerator(w)));
            }
            if (!integral) continue;
            JKGame mixed = [&]() -> JKGame {
                try {
                    return build_table_game(shape, values);
                } catch (const ValidationError&) {
                    return u;  // unreachable: mixtures of valid games stay valid
                }
            }();
            ++report.checked_instances;
            const PowerVector lhs = index(mixed);
            const PowerVector pu = index(u), pv = index(v);
            for (int i = 0; i < shape.n; ++i)
                if (lhs[i] != alpha * pu[i] + beta * pv[i]) {
                    AxiomReport bad = violation(axiom, "combination identity fails", mixed, i);
                    bad.witness_left = {{alpha, u}, {beta, v}};
                    bad.witness_right = {{Rational(1), mixed}};
                    return bad;
                }
        }
    }
    return report;
}

}  // namespace

std::string axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::kPositivity: return "P";
        case Axiom::kAnonymity: return "A";
        case Axiom::kSymmetry: return "S";
        case Axiom::kEfficiency: return "E";
        case Axiom::kNullPlayer: return "NP";
        case Axiom::kTransfer: return "T";
        case Axiom::kConvexity: return "C";
        case Axiom::kLinearity: return "L";
        case Axiom::kAverageConvexity: return "AC";
    }
    return "?";
}

AxiomReport check_average_convexity(const PowerIndex& index, const ConvexSystem& left,
                                    const ConvexSystem& right) {
    AxiomReport report{Axiom::kAverageConvexity};
    const auto convex = [](const ConvexSystem& sys) {
        Rational total = 0;
        for (const auto& [w, g] : sys) {
            if (w < 0) return false;
            total += w;
        }
        return total == 1;
    };
    if (left.empty() || right.empty() || !convex(left) || !convex(right))
        throw PreconditionNotMet("both sides must be convex weight systems");

    const TUGame avg_left = average_of_combo(GameCombo{left});
    const TUGame avg_right = average_of_combo(GameCombo{right});
    if (avg_left != avg_right) {
        report.vacuous = true;
        report.detail = "combined average games differ; nothing to check";
        return report;
    }

    report.checked_instances = 1;
    const int n = left.front().second.shape().n;
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
            report.witness_left = left;
            report.witness_right = right;
            report.witness_player = i;
            report.detail = "equal averages but unequal index combinations at player " +
                            std::to_string(i);
            return report;
        }
    return report;
}

std::pair<std::vector<std::pair<Rational, JKGame>>, std::vector<std::pair<Rational, JKGame>>>
ac_basis_rearrangement(const JKGame& u) {
    const GameShape& shape = u.shape();
    const BasisCoefficients x = ws_basis_decompose(average_game(u), shape);
    Rational varpi = 0;
    for (Coalition s = 1; s < (Coalition{1} << shape.n); ++s)
        if (x[s] > 0) varpi += x[s];
    ConvexSystem left = {{Rational(1) / varpi, u}};
    ConvexSystem right;
    for (Coalition s = 1; s < (Coalition{1} << shape.n); ++s) {
        if (x[s] > 0) right.emplace_back(x[s] / varpi, build_ws(shape, s));
        if (x[s] < 0) left.emplace_back(-x[s] / varpi, build_ws(shape, s));
    }
    return {std::move(left), std::move(right)};
}

std::vector<std::pair<std::vector<std::pair<Rational, JKGame>>,
                      std::vector<std::pair<Rational, JKGame>>>>
ac_witness_generator(const GameShape& shape, std::uint64_t seed) {
    std::vector<std::pair<ConvexSystem, ConvexSystem>> pairs;

    // (i) twin games with identical averages
    {
        const std::uint64_t cells = shape.table_cells();
        std::vector<int> top_only(cells, 0);
        top_only.back() = shape.k - 1;
        std::vector<int> off_origin(cells, shape.k - 1);
        off_origin.front() = 0;
        pairs.push_back({{{Rational(1), build_table_game(shape, top_only)}},
                         {{Rational(1), build_table_game(shape, off_origin)}}});
    }

    // (ii) basis rearrangement of two seeded games
    for (std::uint64_t offset = 0; offset < 2; ++offset)
        pairs.push_back(ac_basis_rearrangement(random_monotone_game(shape, seed + offset)));

    // (iii) a game against its convex veto decomposition
    {
        const JKGame u = random_monotone_game(shape, seed + 2);
        const GameCombo combo = convex_veto_decomposition(u).to_combo(shape);
        pairs.push_back({{{Rational(1), u}}, combo.terms});
    }
    return pairs;
}

AxiomReport check_axiom(Axiom axiom, const PowerIndex& index, const std::vector<JKGame>& suite,
                        std::uint64_t seed) {
    switch (axiom) {
        case Axiom::kPositivity: return check_positivity(index, suite);
        case Axiom::kAnonymity: return check_anonymity(index, suite, seed);
        case Axiom::kSymmetry: return check_symmetry(index, suite);
        case Axiom::kEfficiency: return check_efficiency(index, suite);
        case Axiom::kNullPlayer: return check_null_player(index, suite);
        case Axiom::kTransfer: return check_transfer(index, suite, seed);
        case Axiom::kConvexity: return check_combination(Axiom::kConvexity, index, suite);
        case Axiom::kLinearity: return check_combination(Axiom::kLinearity, index, suite);
        case Axiom::kAverageConvexity: {
            AxiomReport report{Axiom::kAverageConvexity};
            if (suite.empty()) return report;
            const GameShape shape = suite.front().shape();
            auto witnesses = ac_witness_generator(shape, seed);
            const std::size_t stride = suite.size() <= 60 ? 1 : suite.size() / 60;
            for (std::size_t g = 0; g < suite.size(); g += stride)
                witnesses.push_back(ac_basis_rearrangement(suite[g]));
            for (const auto& [left, right] : witnesses) {
                const AxiomReport sub = check_average_convexity(index, left, right);
                if (sub.vacuous) continue;
                report.checked_instances += sub.checked_instances;
                if (!sub.holds) return sub;
            }
            return report;
        }
    }
    throw BadParam("unknown axiom");
}

}  // namespace jkpower
