#include "edf/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace edf {

namespace {

struct NaiveJob {
    JobId id;
    ticks release = 0;
    ticks deadline = 0;
    ticks budget = 0;
    ticks executed = 0;
};

// Every job of every task released at or before t, recomputed from scratch.
std::vector<NaiveJob> released_jobs(const TaskSystem& system,
                                    const ExecutionModel& exec, ticks t) {
    std::vector<NaiveJob> jobs;
    for (std::size_t i = 0; i < system.tasks.size(); ++i) {
        for (ticks number = 1;; ++number) {
            const JobId id{i, number};
            const ticks release = release_time(system, id);
            if (release > t)
                break;
            jobs.push_back({id, release, absolute_deadline(system, id),
                            exec.budget(system, id), 0});
        }
    }
    return jobs;
}

}  // namespace

SimulationResult oracle_simulate(const TaskSystem& system, PriorityPolicy policy,
                                 const ExecutionModel& exec, ticks horizon,
                                 bool stop_on_miss) {
    if (horizon < 0)
        throw std::invalid_argument("horizon must be >= 0");
    const std::size_t m = static_cast<std::size_t>(system.cpus);

    // grid[t][cpu] is the job that ran on cpu during [t, t+1).
    std::vector<std::vector<std::optional<JobId>>> grid;
    std::vector<TraceEvent> events;
    std::optional<Miss> first_miss;
    ticks simulated = 0;

    for (ticks t = 0; t < horizon; ++t) {
        std::vector<NaiveJob> jobs = released_jobs(system, exec, t);

        // Progress so far, recounted from the whole grid every tick.
        std::map<JobId, ticks> service;
        for (const auto& row : grid)
            for (const auto& cell : row)
                if (cell)
                    ++service[*cell];
        for (NaiveJob& job : jobs)
            job.executed = service.count(job.id) ? service[job.id] : 0;

        for (const NaiveJob& job : jobs)
            if (job.release == t)
                events.push_back({t, EventKind::Release, job.id});

        bool missed_now = false;
        for (const NaiveJob& job : jobs) {
            if (job.deadline == t && job.executed < job.budget) {
                events.push_back({t, EventKind::Miss, job.id});
                if (!first_miss)
                    first_miss = Miss{job.id, t};
                missed_now = true;
            }
        }
        if (missed_now && stop_on_miss)
            break;

        std::vector<NaiveJob> active;
        for (const NaiveJob& job : jobs)
            if (job.executed < job.budget)
                active.push_back(job);

        std::sort(active.begin(), active.end(), [&](const NaiveJob& a, const NaiveJob& b) {
            if (policy == PriorityPolicy::Edf)
                return std::tie(a.deadline, a.id.task, a.id.number) <
                       std::tie(b.deadline, b.id.task, b.id.number);
            const ticks la = a.deadline - t - (a.budget - a.executed);
            const ticks lb = b.deadline - t - (b.budget - b.executed);
            return std::tie(la, a.deadline, a.id.task, a.id.number) <
                   std::tie(lb, b.deadline, b.id.task, b.id.number);
        });
        if (active.size() > m)
            active.resize(m);

        std::vector<std::optional<JobId>> row(m);
        std::vector<bool> placed(active.size(), false);
        if (t > 0) {
            const auto& prev = grid.back();
            for (std::size_t cpu = 0; cpu < m; ++cpu) {
                if (!prev[cpu])
                    continue;
                for (std::size_t s = 0; s < active.size(); ++s) {
                    if (!placed[s] && active[s].id == *prev[cpu]) {
                        row[cpu] = active[s].id;
                        placed[s] = true;
                        break;
                    }
                }
            }
        }
        for (std::size_t s = 0, cpu = 0; s < active.size(); ++s) {
            if (placed[s])
                continue;
            while (row[cpu])
                ++cpu;
            row[cpu] = active[s].id;
        }

        // Everything left in `active` got a CPU this tick.
        for (const NaiveJob& job : active)
            if (job.executed + 1 == job.budget)
                events.push_back({t + 1, EventKind::Complete, job.id});

        grid.push_back(std::move(row));
        simulated = t + 1;
    }

    ScheduleTrace trace;
    trace.cpus = system.cpus;
    trace.horizon = simulated;
    trace.lanes.resize(m);
    for (ticks t = 0; t < simulated; ++t)
        for (std::size_t cpu = 0; cpu < m; ++cpu)
            trace.append_tick(static_cast<int>(cpu), t,
                              grid[static_cast<std::size_t>(t)][cpu]);
    trace.events = std::move(events);
    trace.sort_events();
    return {std::move(trace), first_miss};
}

AnalysisReport oracle_exact_report(const TaskSystem& system) {
    const ValidationReport valid = validate(system);
    if (!valid.ok())
        throw std::invalid_argument("invalid task system:\n" + valid.to_string());

    AnalysisReport report;
    report.hyperperiod = hyperperiod(system);
    report.max_offset = max_offset(system);
    report.total_wcet = total_wcet(system);
    report.feasibility_bound = feasibility_bound(system);

    SimulationResult run = oracle_simulate(system, PriorityPolicy::Edf,
                                           ExecutionModel::worst_case(),
                                           report.feasibility_bound, true);
    if (run.miss) {
        report.verdict = *run.miss;
        return report;
    }
    // Engine runs check deadlines at the final instant too; mirror that by
    // looking for a job whose deadline is exactly the bound and whose
    // service in the trace falls short.
    for (std::size_t i = 0; i < system.tasks.size(); ++i) {
        const PeriodicTask& task = system.tasks[i];
        const ticks release = report.feasibility_bound - task.deadline;
        if (release < task.offset || (release - task.offset) % task.period != 0)
            continue;
        const JobId id{i, (release - task.offset) / task.period + 1};
        ticks service = 0;
        for (ticks t = release; t < report.feasibility_bound; ++t)
            for (int cpu = 0; cpu < run.trace.cpus; ++cpu) {
                const auto occ = run.trace.occupant(cpu, t);
                if (occ && *occ == id)
                    ++service;
            }
        if (service < ExecutionModel::worst_case().budget(system, id)) {
            report.verdict = Miss{id, report.feasibility_bound};
            return report;
        }
    }
    std::optional<SteadyInfo> steady;
    for (ticks t = report.max_offset; t <= report.feasibility_bound;
         t += report.hyperperiod) {
        report.configurations.push_back(oracle_configuration(system, run.trace, t));
        const std::size_t k = report.configurations.size() - 1;
        if (k >= 1 && !steady &&
            report.configurations[k - 1].same_values(report.configurations[k]))
            steady = SteadyInfo{static_cast<ticks>(k), t - report.hyperperiod};
    }
    if (!steady)
        throw std::logic_error("oracle run found no repeated configuration");
    report.verdict = Schedulable{steady};
    return report;
}

Configuration oracle_configuration(const TaskSystem& system,
                                   const ScheduleTrace& trace, ticks t) {
    if (t < max_offset(system))
        throw std::domain_error("configuration undefined before all tasks are released");
    if (t > trace.horizon)
        throw std::invalid_argument("sampling instant beyond trace horizon");

    Configuration config{t, std::vector<ticks>(system.tasks.size(), 0)};
    for (std::size_t i = 0; i < system.tasks.size(); ++i) {
        const PeriodicTask& task = system.tasks[i];
        // Latest release at or before t, found by walking job numbers.
        ticks last = task.offset;
        for (ticks number = 2; task.offset + (number - 1) * task.period <= t; ++number)
            last = task.offset + (number - 1) * task.period;
        // Count this task's service tick by tick over [last, t).
        for (ticks s = last; s < t; ++s)
            for (int cpu = 0; cpu < trace.cpus; ++cpu) {
                const auto occ = trace.occupant(cpu, s);
                if (occ && occ->task == i)
                    ++config.executed[i];
            }
    }
    return config;
}

}  // namespace edf
