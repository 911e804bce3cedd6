#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edf {

/// Discrete time. All timing parameters are integer CPU ticks.
using ticks = std::int64_t;

// Checked tick arithmetic. Overflow raises std::overflow_error instead of
// wrapping; feasibility horizons are products of user-controlled values.
ticks checked_add(ticks a, ticks b);
ticks checked_mul(ticks a, ticks b);
ticks checked_lcm(ticks a, ticks b);

/// A periodic constrained-deadline task: first release at `offset`, a job
/// every `period` ticks, each needing up to `wcet` ticks of service no later
/// than `deadline` ticks after its release (deadline <= period).
struct PeriodicTask {
    ticks offset = 0;
    ticks wcet = 1;
    ticks deadline = 1;
    ticks period = 1;

    bool operator==(const PeriodicTask&) const = default;
};

/// Identifies one release of a task: `task` is the 0-based position in the
/// system's task list, `number` counts releases starting from 1.
struct JobId {
    std::size_t task = 0;
    ticks number = 1;

    auto operator<=>(const JobId&) const = default;
};

struct TaskSystem {
    std::vector<PeriodicTask> tasks;
    int cpus = 1;

    bool operator==(const TaskSystem&) const = default;
};

struct Violation {
    std::optional<std::size_t> task;  // empty for system-level violations
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks every model constraint and reports the complete list of
/// violations; callers decide whether to abort.
ValidationReport validate(const TaskSystem& system);

// Derived quantities. Recomputed from the task list on every call so they
// can never drift from the fields they are derived from.
ticks max_offset(const TaskSystem& system);
ticks hyperperiod(const TaskSystem& system);   // lcm of all periods
ticks total_wcet(const TaskSystem& system);    // sum of all wcets

/// Simulation horizon that is guaranteed to contain a repeating
/// configuration for any schedulable system:
/// max_offset + (total_wcet + 1) * hyperperiod.
ticks feasibility_bound(const TaskSystem& system);

/// Service demand per hyperperiod, sum of wcet * (hyperperiod / period).
/// Exceeds cpus * hyperperiod exactly when total utilization exceeds m.
ticks demand_per_hyperperiod(const TaskSystem& system);

ticks release_time(const TaskSystem& system, JobId job);
ticks absolute_deadline(const TaskSystem& system, JobId job);

/// True when every task has the same offset.
bool is_synchronous(const TaskSystem& system);

}  // namespace edf
