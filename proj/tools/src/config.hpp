#pragma once

#include <string>

#include "rothkit/increment.hpp"
#include "rothkit/serialize.hpp"

namespace rothkit::cli {

// Every key a config file may carry; flags use the same names.
Json default_config(const std::string& command);

// Overlays `layer` onto `base`; unknown keys or wrong value types throw Parse.
void merge_config(Json& base, const Json& layer);

// The resolved constants object, applied on top of the library defaults.
// Unknown keys throw Parse.
void apply_constants(const Json& constants, IncrementParams& params);

// IncrementParams with cfg's m, epsilon, delta, trials, seed and constants.
IncrementParams params_from(const Json& cfg);

// Resolved constants as reported, so reports are self-describing.
Json constants_json(const IncrementParams& params);

Json tool_json();

}  // namespace rothkit::cli
