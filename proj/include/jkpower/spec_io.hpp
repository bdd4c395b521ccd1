#ifndef JKPOWER_SPEC_IO_HPP
#define JKPOWER_SPEC_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "jkpower/decomposition.hpp"
#include "jkpower/interval.hpp"

namespace jkpower {

/// Malformed document or schema mismatch; distinct from ValidationError so
/// the CLI can map the two onto different exit codes.
class SpecParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One parsed input file: exactly one of the three alternatives is set.
struct ParsedSpec {
    std::optional<JKGame> game;
    std::optional<GameCombo> combo;
    GameShape combo_shape{0, 0, 0};
    std::optional<StepIntervalGame> interval;
};

ParsedSpec parse_spec(const nlohmann::json& doc);
ParsedSpec parse_spec_file(const std::string& path);

nlohmann::json emit_spec(const JKGame& g);
nlohmann::json emit_combo_spec(const GameShape& shape, const GameCombo& combo);
nlohmann::json emit_interval_spec(const StepIntervalGame& v);

nlohmann::json rationals_to_json(const PowerVector& values);
PowerVector rationals_from_json(const nlohmann::json& values);

/// FNV-1a over the raw input bytes, reported in ResultReport.
std::string input_digest(const std::string& raw);

/// Report envelope shared by all CLI commands.
nlohmann::json make_report(const std::string& command, const std::string& digest,
                           nlohmann::json results, double elapsed_seconds);

/// The golden games used when a suite is named "builtin": the running
/// (3,3) example, the equal-average twin pair, the point-veto AC
/// counterexample, the three-veto antichain from the preliminaries, and the
/// weighted game [4;3,2,1,1].
std::vector<std::pair<std::string, JKGame>> builtin_suite();

}  // namespace jkpower

#endif
