#pragma once

// JSON reports for the command-line front end. Keys are sorted (nlohmann's
// default object type), integers are JSON numbers when they fit in 64 bits and
// decimal strings otherwise, and rationals are strings "p/q".

#include "hsing/bigint.hpp"
#include "hsing/decompose.hpp"
#include "hsing/weight_sequence.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace hsing {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

struct Config {
    std::uint64_t node_limit = 0;  // partition search; 0 = unlimited
    long window = 6;               // cohomology window L
    long max_n = 3;                // exhaustive batteries: sequences of length <= max_n + 1
    long max_entry = 6;
    long max_d = 8;
};

/// Reads {"node_limit", "window", "max_n", "max_entry", "max_d"}; unknown keys are rejected.
Config load_config(const std::string& path);
Json config_json(const Config& c);

Json integer_json(const Integer& a);
Json rational_json(const Rational& q);
Json sequence_json(const WeightSequence& d);
Json certificate_json(const PartitionCertificate& c);

/// Parses "D4" or "A2xA3" (tensor product of Dynkin quivers).
std::vector<ADEType> parse_quiver_spec(const std::string& text);

Json analyze_results(const WeightSequence& d, const Config& cfg);
Json group_results(const WeightSequence& d);
Json decompose_results(const WeightSequence& d, const Config& cfg);
Json sod_results(const WeightSequence& d);
Json quiver_results(const std::string& spec);
Json mf_results(long d, const Config& cfg);
/// Orbit identity for x^d ⊞ y^d over Z ⊟ Z restricted along the diagonal.
Json orbit_results(long d, const Config& cfg);

/// {"schema_version", "command", "input", "results", "provenance"}.
Json make_report(const std::string& command, Json input, Json results, Json provenance = Json::object());

std::string render_text(const Json& report);

}  // namespace hsing
