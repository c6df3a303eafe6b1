#pragma once

#include <string>

#include "headorder/document.hpp"

namespace headorder::cli {

// Indented plain text; integer matrices print one row per line.
std::string render_pretty(const Json& report);

}  // namespace headorder::cli
