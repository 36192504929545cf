#pragma once

#include "canopy/game.hpp"
#include "canopy/schmidt.hpp"
#include "canopy/target.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace canopy {

using Json = nlohmann::json;

/// Invalid configuration (unknown constructor, bad parameter): CLI exit 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

IndexSet index_set_from_json(const Json& j);
TreeOracle tree_from_json(const Json& j);
TargetOracle target_from_json(const Json& j);
SchmidtConfig schmidt_from_json(const Json& j);

Json ball_to_json(const Ball& b);

/// Dispatch on config["cmd"] and produce the results payload. Deterministic
/// given (config, seed).
Json run_results(const Json& config, std::uint64_t seed);

/// Full report envelope: id, config echo, results, wall clock, version.
Json run_experiment(const Json& config, std::uint64_t seed);

extern const char* kLibraryVersion;

}  // namespace canopy
