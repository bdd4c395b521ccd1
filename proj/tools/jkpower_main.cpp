#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jkpower/axioms.hpp"
#include "jkpower/indices.hpp"
#include "jkpower/spec_io.hpp"

using namespace jkpower;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCap = 4;

struct LoadedInput {
    ParsedSpec spec;
    std::string digest;
};

LoadedInput load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string raw = buffer.str();
    json doc;
    try {
        doc = json::parse(raw);
    } catch (const json::parse_error& e) {
        throw SpecParseError(e.what());
    }
    return {parse_spec(doc), input_digest(raw)};
}

const JKGame& require_game(const LoadedInput& input) {
    if (!input.spec.game) throw SpecParseError("this command needs a single (j,k) game spec");
    return *input.spec.game;
}

const StepIntervalGame& require_interval(const LoadedInput& input) {
    if (!input.spec.interval) throw SpecParseError("this command needs an interval-step spec");
    return *input.spec.interval;
}

json tu_to_json(const TUGame& g) {
    json obj = json::object();
    for (Coalition s = 0; s <= g.full(); ++s) {
        std::string members;
        for (int i = 0; i < g.players(); ++i)
            if (s & (Coalition{1} << i)) {
                if (!members.empty()) members += ",";
                members += std::to_string(i + 1);
            }
        obj["{" + members + "}"] = to_fraction_string(g(s));
    }
    return obj;
}

Profile parse_profile_arg(const std::string& csv) {
    Profile out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw SpecParseError("bad integer in vector argument: " + item);
        }
    if (out.empty()) throw SpecParseError("empty vector argument");
    return out;
}

void print_report(const std::string& command, const std::string& digest, json results,
                  std::chrono::steady_clock::time_point start) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << make_report(command, digest, std::move(results), elapsed).dump(2) << "\n";
}

std::vector<JKGame> load_suite(const std::string& name) {
    std::vector<JKGame> suite;
    if (name == "builtin") {
        for (auto& [label, game] : builtin_suite()) suite.push_back(std::move(game));
        return suite;
    }
    std::ifstream in(name);
    if (!in) throw SpecParseError("cannot open " + name);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecParseError(e.what());
    }
    if (!doc.contains("games") || !doc["games"].is_array())
        throw SpecParseError("suite file needs a games array");
    for (const auto& entry : doc["games"]) {
        ParsedSpec spec = parse_spec(entry);
        if (!spec.game) throw SpecParseError("suite entries must be single (j,k) games");
        suite.push_back(std::move(*spec.game));
    }
    return suite;
}

PowerIndex named_index(const std::string& name, const std::string& a_csv, int favored) {
    if (name == "phi") return [](const JKGame& v) { return phi(v); };
    if (name == "scaled-2") return scaled_index(Rational(2));
    if (name == "blend-half") return blend_equal_division_index(Rational(1, 2));
    if (name == "parametric") {
        if (a_csv.empty())
            return [](const JKGame& v) {
                const int j = v.shape().j;
                if (j < 3) throw BadParam("default parametric profile needs j >= 3");
                return phi_parametric(v, Profile(v.shape().n, j - 2));
            };
        const Profile a = parse_profile_arg(a_csv);
        return [a](const JKGame& v) { return phi_parametric(v, a); };
    }
    if (name == "basis-weighted") return basis_weighted_index(favored);
    throw SpecParseError("unknown index name: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact power-index computations for multi-level voting games"};
    app.require_subcommand(1);

    std::string input_path;
    std::string a_csv;
    std::string alpha_str = "1/2";
    std::string method = "closed";
    std::string rollcall_method = "uncertainty";
    std::string suite_name = "builtin";
    std::string index_name = "phi";
    bool emit_specs = false;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    int favored = 0;

    auto* validate = app.add_subcommand("validate", "Parse and validate a game spec");
    validate->add_option("input", input_path)->required();

    auto* phi_cmd = app.add_subcommand("phi", "Shapley-Shubik index via the average game");
    phi_cmd->add_option("input", input_path)->required();

    auto* rollcall_cmd = app.add_subcommand("phi-rollcall", "Index by roll-call enumeration");
    rollcall_cmd->add_option("input", input_path)->required();
    rollcall_cmd->add_option("--method", rollcall_method)
        ->check(CLI::IsMember({"uncertainty", "pivot"}));

    auto* param_cmd = app.add_subcommand("phi-param", "Parametric index at profile a");
    param_cmd->add_option("input", input_path)->required();
    param_cmd->add_option("--a", a_csv, "comma-separated input levels")->required();

    auto* ssi_cmd = app.add_subcommand("ssi", "Classical index of a simple game");
    ssi_cmd->add_option("input", input_path)->required();

    auto* average_cmd = app.add_subcommand("average", "Average TU game of a spec");
    average_cmd->add_option("input", input_path)->required();

    auto* dveto_cmd = app.add_subcommand("decompose-veto", "Convex veto decomposition");
    dveto_cmd->add_option("input", input_path)->required();
    dveto_cmd->add_flag("--emit-specs", emit_specs, "emit the decomposition as a combo spec");

    auto* dbasis_cmd = app.add_subcommand("decompose-basis",
                                          "Average game in the veto-average basis");
    dbasis_cmd->add_option("input", input_path)->required();

    auto* recon_cmd = app.add_subcommand("reconstruct-ac",
                                         "Index reconstruction from basis coefficients");
    recon_cmd->add_option("input", input_path)->required();

    auto* axioms_cmd = app.add_subcommand("axioms", "Run the axiom checks on a suite");
    axioms_cmd->add_option("--suite", suite_name, "path to a suite file, or 'builtin'");
    axioms_cmd->add_option("--index", index_name)
        ->check(CLI::IsMember({"phi", "scaled-2", "blend-half", "parametric", "basis-weighted"}));
    axioms_cmd->add_option("--a", a_csv, "profile for the parametric index");
    axioms_cmd->add_option("--favored", favored, "favored player for basis-weighted");

    auto* psi_cmd = app.add_subcommand("psi", "Interval-game index");
    psi_cmd->add_option("input", input_path)->required();
    psi_cmd->add_option("--method", method)->check(CLI::IsMember({"closed", "mc"}));
    psi_cmd->add_option("--samples", samples);
    psi_cmd->add_option("--seed", seed);

    auto* psi_param_cmd = app.add_subcommand("psi-param", "Interval parametric index");
    psi_param_cmd->add_option("input", input_path)->required();
    psi_param_cmd->add_option("--alpha", alpha_str, "common vote as p/q");

    CLI11_PARSE(app, argc, argv);
    const auto start = std::chrono::steady_clock::now();

    try {
        if (validate->parsed()) {
            const LoadedInput input = load_input(input_path);
            json results;
            results["valid"] = true;
            results["kind"] = input.spec.game ? "game"
                              : input.spec.combo ? "combo"
                                                 : "interval-step";
            print_report("validate", input.digest, results, start);
        } else if (phi_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            PowerVector p;
            if (input.spec.game) {
                p = phi(*input.spec.game);
            } else if (input.spec.combo) {
                p = shapley_value(average_of_combo(*input.spec.combo));
            } else {
                throw SpecParseError("phi needs a (j,k) game or combo spec");
            }
            print_report("phi", input.digest, json{{"phi", rationals_to_json(p)}}, start);
        } else if (rollcall_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            const auto m = rollcall_method == "pivot" ? RollCallMethod::kPivotCount
                                                      : RollCallMethod::kUncertaintySum;
            const PowerVector p = phi_rollcall(require_game(input), m);
            print_report("phi-rollcall", input.digest, json{{"phi", rationals_to_json(p)}},
                         start);
        } else if (param_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            const PowerVector p = phi_parametric(require_game(input), parse_profile_arg(a_csv));
            print_report("phi-param", input.digest, json{{"phi", rationals_to_json(p)}}, start);
        } else if (ssi_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            const PowerVector p = ssi_simple(require_game(input));
            print_report("ssi", input.digest, json{{"ssi", rationals_to_json(p)}}, start);
        } else if (average_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            const TUGame avg = input.spec.combo ? average_of_combo(*input.spec.combo)
                                                : average_game(require_game(input));
            print_report("average", input.digest, json{{"average", tu_to_json(avg)}}, start);
        } else if (dveto_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            const JKGame& game = require_game(input);
            const VetoDecomposition dec = convex_veto_decomposition(game);
            json results;
            if (emit_specs) {
                results["spec"] = emit_combo_spec(game.shape(), dec.to_combo(game.shape()));
            } else {
                json terms = json::array();
                for (const auto& [weight, support] : dec.terms)
                    terms.push_back({{"weight", to_fraction_string(weight)},
                                     {"thresholds", support}});
                results["terms"] = std::move(terms);
            }
            print_report("decompose-veto", input.digest, results, start);
        } else if (dbasis_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            const JKGame& game = require_game(input);
            const BasisCoefficients coeffs =
                ws_basis_decompose(average_game(game), game.shape());
            json obj = json::object();
            for (Coalition s = 1; s < coeffs.size(); ++s)
                if (coeffs[s] != 0) obj[std::to_string(s)] = to_fraction_string(coeffs[s]);
            print_report("decompose-basis", input.digest, json{{"coefficients", obj}}, start);
        } else if (recon_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            const PowerVector p = reconstruct_index_via_ac(require_game(input));
            print_report("reconstruct-ac", input.digest, json{{"index", rationals_to_json(p)}},
                         start);
        } else if (axioms_cmd->parsed()) {
            const std::vector<JKGame> suite = load_suite(suite_name);
            const PowerIndex index = named_index(index_name, a_csv, favored);
            // the checks assume a common shape, so partition first
            std::vector<std::vector<JKGame>> groups;
            for (const JKGame& game : suite) {
                auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& grp) {
                    return grp.front().shape() == game.shape();
                });
                if (it == groups.end())
                    groups.push_back({game});
                else
                    it->push_back(game);
            }
            json reports = json::array();
            for (Axiom axiom :
                 {Axiom::kPositivity, Axiom::kAnonymity, Axiom::kSymmetry, Axiom::kEfficiency,
                  Axiom::kNullPlayer, Axiom::kTransfer, Axiom::kConvexity, Axiom::kLinearity,
                  Axiom::kAverageConvexity}) {
                AxiomReport merged{axiom};
                merged.vacuous = true;
                for (const auto& group : groups) {
                    if (index_name == "parametric" && a_csv.empty() && group.front().shape().j < 3)
                        continue;  // default profile (j-2,...) is undefined
                    const AxiomReport r = check_axiom(axiom, index, group);
                    merged.checked_instances += r.checked_instances;
                    merged.vacuous = merged.vacuous && r.vacuous;
                    if (!r.holds && merged.holds) {
                        merged.holds = false;
                        merged.detail = r.detail;
                    }
                }
                reports.push_back({{"axiom", axiom_name(merged.axiom)},
                                   {"holds", merged.holds},
                                   {"vacuous", merged.vacuous},
                                   {"checked_instances", merged.checked_instances},
                                   {"detail", merged.detail}});
            }
            print_report("axioms", input_digest(suite_name + "|" + index_name),
                         json{{"reports", reports}}, start);
        } else if (psi_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            const StepIntervalGame& v = require_interval(input);
            json results;
            if (method == "mc") {
                const MCEstimate est = psi_monte_carlo(black_box(v), samples, seed);
                results["psi"] = est.value;
                results["std_error"] = est.std_error;
                results["samples"] = est.samples;
                results["seed"] = est.seed;
            } else {
                results["psi"] = rationals_to_json(psi(v));
            }
            print_report("psi", input.digest, results, start);
        } else if (psi_param_cmd->parsed()) {
            const LoadedInput input = load_input(input_path);
            Rational alpha;
            try {
                alpha = parse_fraction(alpha_str);
            } catch (const std::invalid_argument& e) {
                throw SpecParseError(e.what());
            }
            const PowerVector p = psi_parametric(require_interval(input), alpha);
            print_report("psi-param", input.digest, json{{"psi", rationals_to_json(p)}}, start);
        }
    } catch (const SpecParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SizeCapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
