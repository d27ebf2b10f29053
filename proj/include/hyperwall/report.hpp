#pragma once

#include "hyperwall/cone.hpp"
#include "hyperwall/enumeration.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperwall {

using Json = nlohmann::ordered_json;

struct InputOptions {
    std::optional<std::vector<WallTarget>> targets;
    std::optional<Integer> level_cap;
};

/// {"picard_basis": [[23 ints], ...], "g": [r ints], "m": [r ints], "options": {...}}
struct InputDocument {
    std::vector<AmbientVector> picard_basis;
    PicardVector g;
    std::optional<PicardVector> m;
    InputOptions options;
};

/// Throws ValidationError naming the offending field; unknown fields are rejected.
InputDocument parse_input(const Json& doc);
/// Parses text first; JSON syntax errors carry line and column.
InputDocument parse_input_text(const std::string& text);
Json to_json(const InputDocument& in);

/// "-2:1,-2:2,-10:2"
std::vector<WallTarget> parse_targets(const std::string& spec);

/// Integers within 2^53 become JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& z);
Integer integer_from_json(const Json& j, const std::string& where);

/// Report builders. Each returns {"command", ["input"], "result"} with a
/// fixed field order; rationals are "p/q" strings.
Json report_lattice_info();
Json report_walls(const InputDocument& in, unsigned threads = 1);
Json report_ample(const InputDocument& in, unsigned threads = 1);
Json report_nef_threshold(const InputDocument& in, unsigned threads = 1);
Json report_classify(const InputDocument& in, const AmbientVector& rho);
Json report_lagrangian();

/// Re-runs the command echoed in a report.
Json rerun(const Json& report, unsigned threads = 1);

/// Human-readable rendering of a report.
std::string render_text(const Json& report);

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitPrecondition = 3;

/// Thread budget from HYPERWALL_THREADS (defaults to hardware concurrency).
unsigned thread_budget();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cli

}  // namespace hyperwall
