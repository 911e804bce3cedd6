#pragma once

#include <optional>
#include <vector>

#include "edf/execution.hpp"
#include "edf/model.hpp"
#include "edf/policy.hpp"
#include "edf/trace.hpp"

namespace edf {

struct SimulationResult {
    ScheduleTrace trace;
    std::optional<Miss> miss;
};

/// CPU placement for one tick. Jobs that ran in the previous tick and are
/// selected again keep their CPU; the remaining selected jobs fill free CPUs
/// in priority order, lowest CPU index first.
std::vector<std::optional<JobId>> assign_cpus(
    const std::vector<std::optional<JobId>>& previous,
    const std::vector<JobId>& selected_by_priority);

/// Deterministic tick-by-tick simulator.
///
/// Each tick [t, t+1) proceeds in two phases. begin_tick() releases the jobs
/// due at t and records a miss for every active job whose absolute deadline
/// is t (a job must finish by the end of [d-1, d)). finish_tick() ranks the
/// active jobs under the policy, runs the min(m, active) highest-priority
/// jobs for one tick, retires completed jobs, and advances time. Drivers
/// may inspect state between the two phases, e.g. to sample configurations
/// at t or to stop on a miss with the trace covering exactly [0, t).
class Engine {
public:
    Engine(const TaskSystem& system, PriorityPolicy policy, ExecutionModel exec);

    ticks now() const { return now_; }
    bool tick_begun() const { return tick_begun_; }

    void begin_tick();
    void finish_tick();
    void step() {
        if (!tick_begun_)
            begin_tick();
        finish_tick();
    }

    const std::optional<Miss>& first_miss() const { return first_miss_; }

    /// Per-task service received since each task's latest release <= now().
    /// Meaningful once begin_tick() has applied the releases due at now().
    const std::vector<ticks>& execution_since_release() const { return exec_since_release_; }

    const std::vector<ActiveJob>& active_jobs() const { return active_; }

    /// Finalizes and returns the trace over [0, now()).
    SimulationResult finish();

private:
    const TaskSystem& system_;
    PriorityPolicy policy_;
    ExecutionModel exec_;
    ticks now_ = 0;
    bool tick_begun_ = false;
    std::vector<ActiveJob> active_;
    std::vector<ticks> next_release_;
    std::vector<ticks> next_number_;
    std::vector<ticks> exec_since_release_;
    std::vector<std::optional<JobId>> running_;
    std::optional<Miss> first_miss_;
    ScheduleTrace trace_;
};

/// Runs the engine for ticks 0 .. horizon-1 and reports the first job, if
/// any, that reached its absolute deadline incomplete at a time < horizon.
/// With stop_on_miss the run halts at the miss tick and the trace covers
/// only the ticks executed before it.
SimulationResult simulate(const TaskSystem& system, PriorityPolicy policy,
                          const ExecutionModel& exec, ticks horizon,
                          bool stop_on_miss);

}  // namespace edf
