#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "edf/analysis.hpp"
#include "edf/model.hpp"
#include "edf/trace.hpp"

namespace edf {

/// Input file errors carry the location (line/column or JSON pointer path)
/// of the offending element.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Canonical JSON: integers only, keys sorted, compact separators, trailing
// newline. Emit -> parse -> emit is byte-identical. Task, CPU and job
// numbers are 1-based in files.

TaskSystem parse_task_system(const std::string& text);
TaskSystem load_task_system(const std::filesystem::path& path);
std::string canonical_task_system_json(const TaskSystem& system);

/// Optional block embedded in trace files so renderers can draw hyperperiod
/// gridlines and release/deadline marks without the original input file.
struct TraceMeta {
    ticks max_offset = 0;
    ticks hyperperiod = 0;
    std::vector<PeriodicTask> tasks;
};

struct TraceDocument {
    ScheduleTrace trace;
    std::optional<TraceMeta> meta;
};

std::string trace_json(const ScheduleTrace& trace, const std::optional<TraceMeta>& meta);
TraceDocument parse_trace_json(const std::string& text);
TraceDocument load_trace(const std::filesystem::path& path);

std::string report_json(const AnalysisReport& report);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace edf
