#include "doctest.h"
#include "jkpower/indices.hpp"
#include "jkpower/spec_io.hpp"

using namespace jkpower;
using nlohmann::json;

TEST_CASE("each spec type parses into the expected game") {
    const auto table = parse_spec(json::parse(
        R"({"type":"table","n":2,"j":3,"k":3,"values":[0,1,2,0,1,2,2,2,2]})"));
    REQUIRE(table.game.has_value());
    CHECK(table.game->eval({2, 1}) == 2);

    const auto veto = parse_spec(json::parse(
        R"({"type":"point-veto","n":3,"j":5,"k":3,"a":[1,2,3]})"));
    REQUIRE(veto.game.has_value());
    CHECK(veto.game->eval({1, 2, 3}) == 2);
    CHECK(veto.game->eval({1, 2, 2}) == 0);

    const auto veto_set = parse_spec(json::parse(
        R"({"type":"veto-set","n":2,"j":3,"k":2,"thresholds":[[2,0],[0,2]]})"));
    REQUIRE(veto_set.game.has_value());
    CHECK(veto_set.game->eval({2, 0}) == 1);
    CHECK(veto_set.game->eval({1, 1}) == 0);

    const auto weighted = parse_spec(json::parse(
        R"({"type":"weighted","n":4,"j":2,"k":2,"quota":"4","weights":["3","2","1","1"]})"));
    REQUIRE(weighted.game.has_value());
    CHECK(ssi_simple(*weighted.game) ==
          PowerVector{Rational(1, 2), Rational(1, 6), Rational(1, 6), Rational(1, 6)});

    const auto combo = parse_spec(json::parse(R"({
        "type":"combo","n":2,"j":3,"k":3,
        "terms":[{"weight":"1/2","game":{"type":"point-veto","n":2,"j":3,"k":3,"a":[1,1]}},
                 {"weight":"1/2","game":{"type":"point-veto","n":2,"j":3,"k":3,"a":[2,2]}}]})"));
    REQUIRE(combo.combo.has_value());
    CHECK(combo.combo_shape == GameShape{2, 3, 3});
    CHECK(combo_eval(*combo.combo, {1, 1}) == 1);

    const auto interval = parse_spec(json::parse(R"({
        "type":"interval-step","n":2,
        "steps":[{"threshold":["1/4","3/4"],"level":"1"}]})"));
    REQUIRE(interval.interval.has_value());
    CHECK(psi(*interval.interval) == PowerVector{Rational(1, 4), Rational(3, 4)});

    // float thresholds are accepted for interval games
    const auto floats = parse_spec(json::parse(R"({
        "type":"interval-step","n":2,
        "steps":[{"threshold":[0.25,0.5],"level":1}]})"));
    REQUIRE(floats.interval.has_value());
    CHECK(floats.interval->eval({Rational(1, 4), Rational(1, 2)}) == 1);
}

TEST_CASE("malformed documents raise parse errors, invalid games validation errors") {
    CHECK_THROWS_AS(parse_spec(json::parse(R"([1,2,3])")), SpecParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"n":2,"j":2,"k":2})")), SpecParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"type":"mystery","n":2,"j":2,"k":2})")),
                    SpecParseError);
    CHECK_THROWS_AS(
        parse_spec(json::parse(R"({"type":"table","n":2,"j":2,"k":2,"values":"no"})")),
        SpecParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(
                        R"({"type":"point-veto","n":2,"j":2,"k":2,"a":[1,"x"]})")),
                    SpecParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({
        "type":"combo","n":2,"j":2,"k":2,
        "terms":[{"weight":"1/2","game":{"type":"point-veto","n":2,"j":2,"k":2,"a":[1,1]}},
                 {"weight":"1/2","game":{"type":"point-veto","n":3,"j":2,"k":2,"a":[1,1,1]}}]})")),
                    SpecParseError);
    CHECK_THROWS_AS(parse_spec(json::parse(
                        R"({"type":"weighted","n":2,"j":2,"k":2,"quota":"1/0","weights":["1","1"]})")),
                    SpecParseError);

    // schema-valid but game-invalid: boundary violation surfaces as validation
    CHECK_THROWS_AS(
        parse_spec(json::parse(R"({"type":"table","n":2,"j":2,"k":2,"values":[1,1,1,1]})")),
        BoundaryViolation);
    CHECK_THROWS_AS(parse_spec_file("/nonexistent/path.json"), SpecParseError);
}

TEST_CASE("emit and re-parse is the identity on every representation") {
    const std::vector<JKGame> games{
        build_table_game(GameShape{2, 3, 3}, {0, 1, 2, 0, 1, 2, 2, 2, 2}),
        build_point_veto(GameShape{3, 4, 3}, {1, 3, 0}),
        build_veto_set(GameShape{3, 5, 2}, {{1, 2, 3}, {2, 1, 3}, {4, 1, 2}}),
        build_weighted(GameShape{4, 2, 2}, Rational(4),
                       {Rational(3), Rational(2), Rational(1), Rational(1)}),
    };
    for (const JKGame& g : games) {
        const auto round = parse_spec(emit_spec(g));
        REQUIRE(round.game.has_value());
        CHECK(*round.game == g);
    }

    const GameCombo combo{{{Rational(1, 3), games[1]}, {Rational(2, 3), games[1]}}};
    const auto round = parse_spec(emit_combo_spec(games[1].shape(), combo));
    REQUIRE(round.combo.has_value());
    CHECK(round.combo->terms.size() == 2);
    CHECK(round.combo->terms[0].first == Rational(1, 3));

    const StepIntervalGame step(2, {{{Rational(1, 4), Rational(3, 4)}, Rational(1, 2)},
                                    {{Rational(1, 2), Rational(1)}, Rational(1)}});
    const auto iround = parse_spec(emit_interval_spec(step));
    REQUIRE(iround.interval.has_value());
    CHECK(interval_average_closed(*iround.interval) == interval_average_closed(step));
}

TEST_CASE("rational vectors survive the wire exactly") {
    const PowerVector p{Rational(5, 12), Rational(-7, 3), Rational(0), Rational(4)};
    const json arr = rationals_to_json(p);
    CHECK(arr[0] == "5/12");
    CHECK(arr[3] == "4");
    CHECK(rationals_from_json(arr) == p);
}

TEST_CASE("digest and report envelope are deterministic") {
    CHECK(input_digest("abc") == input_digest("abc"));
    CHECK(input_digest("abc") != input_digest("abd"));

    const json report = make_report("phi", "deadbeef", json{{"phi", json::array()}}, 0.25);
    CHECK(report["schema"] == "v1");
    CHECK(report["command"] == "phi");
    CHECK(report["input_digest"] == "deadbeef");
    CHECK(report["elapsed_seconds"] == 0.25);
}

TEST_CASE("the builtin suite ships the golden games") {
    const auto suite = builtin_suite();
    REQUIRE(suite.size() == 6);

    const auto find = [&](const std::string& name) -> const JKGame& {
        for (const auto& [label, game] : suite)
            if (label == name) return game;
        FAIL("missing builtin game ", name);
        return suite.front().second;
    };

    CHECK(phi(find("running-example")) == PowerVector{Rational(5, 12), Rational(7, 12)});
    CHECK(average_game(find("twin-top")) == average_game(find("twin-off-origin")));
    CHECK(find("twin-top") != find("twin-off-origin"));
    CHECK(phi(find("point-veto-counterexample")) ==
          PowerVector{Rational(1, 3), Rational(2, 3), Rational(0)});
    CHECK(ssi_simple(find("weighted-4-3211")) ==
          PowerVector{Rational(1, 2), Rational(1, 6), Rational(1, 6), Rational(1, 6)});
    CHECK(std::get_if<VetoSet>(&find("three-veto-antichain").body()) != nullptr);
}
