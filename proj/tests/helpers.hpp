#pragma once

#include <map>
#include <set>
#include <vector>

#include "edf/engine.hpp"
#include "edf/execution.hpp"
#include "edf/model.hpp"
#include "edf/trace.hpp"

namespace edf::test {

inline TaskSystem make_system(std::vector<PeriodicTask> tasks, int cpus) {
    return TaskSystem{std::move(tasks), cpus};
}

/// All jobs released strictly before `horizon`, with their budgets.
inline std::vector<ActiveJob> jobs_released_before(const TaskSystem& system,
                                                   const ExecutionModel& exec,
                                                   ticks horizon) {
    std::vector<ActiveJob> jobs;
    for (std::size_t i = 0; i < system.tasks.size(); ++i) {
        for (ticks number = 1;; ++number) {
            const JobId id{i, number};
            const ticks release = release_time(system, id);
            if (release >= horizon)
                break;
            jobs.push_back({id, release, absolute_deadline(system, id),
                            exec.budget(system, id), 0});
        }
    }
    return jobs;
}

/// Service job `id` received in trace ticks [0, t).
inline ticks service_before(const ScheduleTrace& trace, JobId id, ticks t) {
    ticks total = 0;
    for (const auto& lane : trace.lanes)
        for (const Segment& seg : lane) {
            if (!seg.job || !(*seg.job == id))
                continue;
            const ticks hi = std::min(seg.end, t);
            if (seg.start < hi)
                total += hi - seg.start;
        }
    return total;
}

/// First-principles schedule checks on a finished trace:
/// lanes contiguous over [0, horizon); no job on two CPUs at once; at every
/// tick either all CPUs are busy or every active job is running.
struct TraceAudit {
    bool lanes_cover_horizon = true;
    bool no_parallel_execution = true;
    bool work_conserving = true;

    bool all_ok() const {
        return lanes_cover_horizon && no_parallel_execution && work_conserving;
    }
};

inline TraceAudit audit_trace(const TaskSystem& system, const ExecutionModel& exec,
                              const ScheduleTrace& trace) {
    TraceAudit audit;

    for (const auto& lane : trace.lanes) {
        ticks expected = 0;
        for (const Segment& seg : lane) {
            if (seg.start != expected || seg.end <= seg.start)
                audit.lanes_cover_horizon = false;
            expected = seg.end;
        }
        if (expected != trace.horizon)
            audit.lanes_cover_horizon = false;
    }

    const auto jobs = jobs_released_before(system, exec, trace.horizon);
    for (ticks t = 0; t < trace.horizon; ++t) {
        std::set<JobId> running;
        int busy = 0;
        for (int cpu = 0; cpu < trace.cpus; ++cpu) {
            const auto occ = trace.occupant(cpu, t);
            if (!occ)
                continue;
            ++busy;
            if (!running.insert(*occ).second)
                audit.no_parallel_execution = false;
        }
        int active = 0;
        for (const ActiveJob& job : jobs)
            if (job.release <= t && service_before(trace, job.id, t) < job.budget)
                ++active;
        if (busy != std::min<int>(trace.cpus, active))
            audit.work_conserving = false;
    }
    return audit;
}

/// True when two active jobs with equal absolute deadlines coexist anywhere
/// in the run (the priority tie-breaker fired).
inline bool has_deadline_tie(const TaskSystem& system, const ExecutionModel& exec,
                             const ScheduleTrace& trace) {
    const auto jobs = jobs_released_before(system, exec, trace.horizon);
    for (ticks t = 0; t < trace.horizon; ++t) {
        std::set<ticks> deadlines;
        for (const ActiveJob& job : jobs) {
            if (job.release > t || service_before(trace, job.id, t) >= job.budget)
                continue;
            if (!deadlines.insert(job.abs_deadline).second)
                return true;
        }
    }
    return false;
}

}  // namespace edf::test
