#pragma once

#include <string>
#include <string_view>

#include "cachelab/model.hpp"

namespace cachelab {

/// Line format: '#' comments and blank lines are skipped; all
/// "file <id> <size> <cost>" lines come first, then "req <id>" and "tick".
/// Throws ParseError carrying the 1-based line number.
Trace parse_trace(std::string_view text);

/// Canonical text; parse_trace(emit_trace(t)) == t.
std::string emit_trace(const Trace& trace);

Trace load_trace(const std::string& path);
void save_trace(const std::string& path, const Trace& trace);

}  // namespace cachelab
