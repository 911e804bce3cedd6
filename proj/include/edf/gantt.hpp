#pragma once

#include <string>

#include "edf/task_io.hpp"
#include "edf/trace.hpp"

namespace edf {

struct GanttWindow {
    ticks from = 0;
    ticks to = 0;
};

/// One row per CPU, one column per tick; task indices as glyphs, '.' = idle.
/// Throws std::out_of_range when the window is not within [0, horizon].
std::string render_ascii(const ScheduleTrace& trace, GanttWindow window);

/// One horizontal band per CPU, segments colored by task. With metadata,
/// draws hyperperiod gridlines at o_max + k*P plus per-task release (solid)
/// and deadline (hollow) marks. Output is deterministic: fixed palette keyed
/// by task index, no timestamps.
std::string render_svg(const ScheduleTrace& trace,
                       const std::optional<TraceMeta>& meta, GanttWindow window);

}  // namespace edf
