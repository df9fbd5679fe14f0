// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>

#include "run_config.hpp"

namespace utdirac::cli {

/// Run one named reproduction recipe, printing PASS/FAIL lines with measured
/// values and tolerances. Returns the number of failed checks.
int run_reproduce(const std::string& target, const RunConfig& cfg, std::ostream& os);

} // namespace utdirac::cli
