#include "jkpower/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace jkpower {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& value) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_float()) {
        // floats allowed only for interval thresholds; snap to a dyadic exactly
        const double d = value.get<double>();
        if (d < -1e6 || d > 1e6) throw SpecParseError("float out of range");
        Rational r(static_cast<long long>(d * (1LL << 32)), (1LL << 32));
        return r;
    }
    if (value.is_string()) {
        try {
            return parse_fraction(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SpecParseError(e.what());
        }
    }
    throw SpecParseError("expected a rational as \"p/q\" string");
}

json rational_to_json(const Rational& value) { return to_fraction_string(value); }

GameShape shape_from_json(const json& doc) {
    for (const char* field : {"n", "j", "k"})
        if (!doc.contains(field) || !doc[field].is_number_integer())
            throw SpecParseError(std::string("missing integer field ") + field);
    return GameShape{doc["n"].get<int>(), doc["j"].get<int>(), doc["k"].get<int>()};
}

Profile profile_from_json(const json& arr) {
    if (!arr.is_array()) throw SpecParseError("expected an integer vector");
    Profile p;
    for (const auto& c : arr) {
        if (!c.is_number_integer()) throw SpecParseError("profile entries must be integers");
        p.push_back(c.get<int>());
    }
    return p;
}

JKGame game_from_json(const json& doc);

GameCombo combo_from_json(const json& doc, GameShape& shape_out) {
    if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty())
        throw SpecParseError("combo needs a nonempty terms array");
    GameCombo combo;
    for (const auto& term : doc["terms"]) {
        if (!term.contains("weight") || !term.contains("game"))
            throw SpecParseError("each combo term needs weight and game");
        combo.terms.emplace_back(rational_from_json(term["weight"]),
                                 game_from_json(term["game"]));
    }
    shape_out = combo.terms.front().second.shape();
    for (const auto& [w, g] : combo.terms)
        if (!(g.shape() == shape_out)) throw SpecParseError("combo terms differ in shape");
    return combo;
}

StepIntervalGame interval_from_json(const json& doc) {
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw SpecParseError("interval-step spec needs integer n");
    const int n = doc["n"].get<int>();
    if (!doc.contains("steps") || !doc["steps"].is_array())
        throw SpecParseError("interval-step spec needs a steps array");
    std::vector<IntervalStep> steps;
    for (const auto& s : doc["steps"]) {
        if (!s.contains("threshold") || !s["threshold"].is_array() || !s.contains("level"))
            throw SpecParseError("each step needs threshold array and level");
        IntervalStep step;
        for (const auto& c : s["threshold"]) step.threshold.push_back(rational_from_json(c));
        step.level = rational_from_json(s["level"]);
        steps.push_back(std::move(step));
    }
    return StepIntervalGame(n, std::move(steps));
}

JKGame game_from_json(const json& doc) {
    if (!doc.contains("type") || !doc["type"].is_string())
        throw SpecParseError("missing string field type");
    const std::string type = doc["type"].get<std::string>();
    const GameShape shape = shape_from_json(doc);

    if (type == "table") {
        if (!doc.contains("values") || !doc["values"].is_array())
            throw SpecParseError("table spec needs a values array");
        std::vector<int> values;
        for (const auto& v : doc["values"]) {
            if (!v.is_number_integer()) throw SpecParseError("table values must be integers");
            values.push_back(v.get<int>());
        }
        return build_table_game(shape, std::move(values));
    }
    if (type == "point-veto") {
        if (!doc.contains("a")) throw SpecParseError("point-veto spec needs vector a");
        return build_point_veto(shape, profile_from_json(doc["a"]));
    }
    if (type == "veto-set") {
        if (!doc.contains("thresholds") || !doc["thresholds"].is_array())
            throw SpecParseError("veto-set spec needs a thresholds array");
        std::vector<Profile> thresholds;
        for (const auto& t : doc["thresholds"]) thresholds.push_back(profile_from_json(t));
        return build_veto_set(shape, std::move(thresholds));
    }
    if (type == "weighted") {
        if (!doc.contains("quota") || !doc.contains("weights") || !doc["weights"].is_array())
            throw SpecParseError("weighted spec needs quota and weights");
        std::vector<Rational> weights;
        for (const auto& w : doc["weights"]) weights.push_back(rational_from_json(w));
        return build_weighted(shape, rational_from_json(doc["quota"]), std::move(weights));
    }
    throw SpecParseError("unknown game type: " + type);
}

}  // namespace

ParsedSpec parse_spec(const json& doc) {
    if (!doc.is_object()) throw SpecParseError("top-level document must be an object");
    if (!doc.contains("type") || !doc["type"].is_string())
        throw SpecParseError("missing string field type");
    const std::string type = doc["type"].get<std::string>();

    ParsedSpec spec;
    if (type == "interval-step") {
        spec.interval = interval_from_json(doc);
    } else if (type == "combo") {
        spec.combo = combo_from_json(doc, spec.combo_shape);
    } else {
        spec.game = game_from_json(doc);
    }
    return spec;
}

ParsedSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecParseError(e.what());
    }
    return parse_spec(doc);
}

json emit_spec(const JKGame& g) {
    json doc;
    doc["n"] = g.shape().n;
    doc["j"] = g.shape().j;
    doc["k"] = g.shape().k;
    if (const auto* table = std::get_if<ExplicitTable>(&g.body())) {
        doc["type"] = "table";
        doc["values"] = table->values;
    } else if (const auto* pv = std::get_if<PointVeto>(&g.body())) {
        doc["type"] = "point-veto";
        doc["a"] = pv->veto;
    } else if (const auto* vs = std::get_if<VetoSet>(&g.body())) {
        doc["type"] = "veto-set";
        doc["thresholds"] = vs->thresholds;
    } else if (const auto* w = std::get_if<Weighted>(&g.body())) {
        doc["type"] = "weighted";
        doc["quota"] = rational_to_json(w->quota);
        json weights = json::array();
        for (const auto& x : w->weights) weights.push_back(rational_to_json(x));
        doc["weights"] = weights;
    }
    return doc;
}

json emit_combo_spec(const GameShape& shape, const GameCombo& combo) {
    json doc;
    doc["type"] = "combo";
    doc["n"] = shape.n;
    doc["j"] = shape.j;
    doc["k"] = shape.k;
    json terms = json::array();
    for (const auto& [weight, game] : combo.terms) {
        json term;
        term["weight"] = rational_to_json(weight);
        term["game"] = emit_spec(game);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

json emit_interval_spec(const StepIntervalGame& v) {
    json doc;
    doc["type"] = "interval-step";
    doc["n"] = v.players();
    json steps = json::array();
    for (const auto& step : v.steps()) {
        json s;
        json threshold = json::array();
        for (const auto& c : step.threshold) threshold.push_back(rational_to_json(c));
        s["threshold"] = std::move(threshold);
        s["level"] = rational_to_json(step.level);
        steps.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps);
    return doc;
}

json rationals_to_json(const PowerVector& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(rational_to_json(v));
    return arr;
}

PowerVector rationals_from_json(const json& values) {
    PowerVector out;
    for (const auto& v : values) out.push_back(rational_from_json(v));
    return out;
}

std::string input_digest(const std::string& raw) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : raw) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json make_report(const std::string& command, const std::string& digest, json results,
                 double elapsed_seconds) {
    json report;
    report["schema"] = "v1";
    report["command"] = command;
    report["input_digest"] = digest;
    report["results"] = std::move(results);
    report["elapsed_seconds"] = elapsed_seconds;
    return report;
}

std::vector<std::pair<std::string, JKGame>> builtin_suite() {
    std::vector<std::pair<std::string, JKGame>> suite;
    suite.emplace_back("running-example",
                       build_table_game({2, 3, 3}, {0, 1, 2, 0, 1, 2, 2, 2, 2}));
    // twin pair with equal averages: top only at the top profile versus top
    // everywhere off the origin
    {
        const GameShape shape{2, 3, 3};
        std::vector<int> u(9, 0), v(9, 2);
        u.back() = 2;
        v.front() = 0;
        suite.emplace_back("twin-top", build_table_game(shape, std::move(u)));
        suite.emplace_back("twin-off-origin", build_table_game(shape, std::move(v)));
    }
    suite.emplace_back("point-veto-counterexample", build_point_veto({3, 3, 3}, {1, 2, 0}));
    suite.emplace_back("three-veto-antichain",
                       build_veto_set({3, 5, 2}, {{1, 2, 3}, {2, 1, 3}, {4, 1, 2}}));
    suite.emplace_back("weighted-4-3211",
                       build_weighted({4, 2, 2}, Rational(4),
                                      {Rational(3), Rational(2), Rational(1), Rational(1)}));
    return suite;
}

}  // namespace jkpower
