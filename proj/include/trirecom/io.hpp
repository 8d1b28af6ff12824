// trirecom: JSON state/trace files and SVG rendering.
#pragma once

#include <string>

#include "trirecom/trace.hpp"

namespace trirecom {

inline constexpr int kTraceFormatVersion = 1;

/// {"format":"trirecom-state","version":1,"n":..,"k":[..],"labels":[..]}
std::string state_to_json(const Partition& p);
/// {"format":"trirecom-trace","version":1,"n":..,"k":[..],"source":[..],
///  "steps":[{"untouched":d,"after":[..],"note":".."}]}
std::string trace_to_json(const Trace& t);
/// Both throw std::invalid_argument on malformed or unsupported input.
Partition state_from_json(const std::string& text);
Trace trace_from_json(const std::string& text);

std::string read_file(const std::string& path);
/// Writes via a temporary file and rename so readers never see partial output.
void write_file(const std::string& path, const std::string& contents);

/// Triangle drawn with the top-left corner vertex leftmost and a vertical
/// right edge; districts 1/2/3 red/blue/yellow.
std::string render_svg(const Partition& p, const std::string& caption = {});
/// One frame per state along the trace, laid out in rows.
std::string render_svg(const Trace& t);

}  // namespace trirecom
