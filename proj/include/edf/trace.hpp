#pragma once

#include <optional>
#include <vector>

#include "edf/model.hpp"

namespace edf {

/// Half-open run [start, end) of one CPU: either a job or idle (no job).
struct Segment {
    ticks start = 0;
    ticks end = 0;
    std::optional<JobId> job;

    bool operator==(const Segment&) const = default;
};

enum class EventKind { Complete, Release, Miss };

struct TraceEvent {
    ticks at = 0;
    EventKind kind = EventKind::Release;
    JobId job;

    bool operator==(const TraceEvent&) const = default;
};

/// A job that reached its absolute deadline with work left.
struct Miss {
    JobId job;
    ticks at = 0;

    bool operator==(const Miss&) const = default;
};

/// Run-length encoded record of one simulation. Lane j holds CPU j's
/// segments, contiguous and covering [0, horizon). Events are kept in
/// canonical order: (time, kind, task, job number), completions first at
/// equal times since a completion at t belongs to the tick ending at t.
struct ScheduleTrace {
    int cpus = 0;
    ticks horizon = 0;
    std::vector<std::vector<Segment>> lanes;
    std::vector<TraceEvent> events;

    /// Extends lane `cpu` with one tick [t, t+1); merges with the previous
    /// segment when the occupant is unchanged.
    void append_tick(int cpu, ticks t, std::optional<JobId> occupant);

    /// Occupant of CPU `cpu` during [t, t+1). Requires 0 <= t < horizon.
    std::optional<JobId> occupant(int cpu, ticks t) const;

    /// Number of CPUs busy during [t, t+1).
    int busy_cpus(ticks t) const;

    void sort_events();

    bool operator==(const ScheduleTrace&) const = default;
};

}  // namespace edf
