#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "semigap/errors.hpp"

namespace semigap {

/// Executes one CLI invocation (argv without the program name).
/// Returns 0 on success, 1 on domain errors (the error name is printed
/// as a single diagnostic line on err), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            Int size_guard = kDefaultSizeGuard);

/// Size guard from the SIZE_GUARD environment variable, or the default
/// when unset or unusable.
Int resolve_size_guard();

/// Integers below 2^53 in magnitude stay JSON numbers; anything larger
/// becomes a decimal string so no reader loses precision.
nlohmann::json json_int(Int value);
nlohmann::json json_int_array(const std::vector<Int>& values);

}  // namespace semigap
