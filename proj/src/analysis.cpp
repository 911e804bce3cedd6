#include "edf/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace edf {

namespace {

void require_valid(const TaskSystem& system) {
    const ValidationReport report = validate(system);
    if (!report.ok())
        throw std::invalid_argument("invalid task system:\n" + report.to_string());
}

ticks latest_release_at_or_before(const TaskSystem& system, std::size_t task, ticks t) {
    const PeriodicTask& tk = system.tasks[task];
    if (t < tk.offset)
        throw std::domain_error("configuration undefined before the task's first release");
    const ticks jobs_before = (t - tk.offset) / tk.period;  // number - 1
    return tk.offset + jobs_before * tk.period;
}

}  // namespace

bool config_dominates(const Configuration& a, const Configuration& b) {
    if (a.executed.size() != b.executed.size())
        throw std::invalid_argument("configurations have different task counts");
    for (std::size_t i = 0; i < a.executed.size(); ++i)
        if (a.executed[i] < b.executed[i])
            return false;
    return true;
}

ticks execution_since_release(const TaskSystem& system, const ScheduleTrace& trace,
                              std::size_t task, ticks t) {
    if (t > trace.horizon)
        throw std::invalid_argument("sampling instant beyond trace horizon");
    const ticks r = latest_release_at_or_before(system, task, t);
    ticks total = 0;
    for (const auto& lane : trace.lanes) {
        for (const Segment& seg : lane) {
            if (!seg.job || seg.job->task != task)
                continue;
            const ticks lo = std::max(seg.start, r);
            const ticks hi = std::min(seg.end, t);
            if (lo < hi)
                total += hi - lo;
        }
    }
    return total;
}

Configuration configuration_at(const TaskSystem& system, const ScheduleTrace& trace,
                               ticks t) {
    if (t < max_offset(system))
        throw std::domain_error("configuration undefined before all tasks are released");
    Configuration config{t, {}};
    config.executed.reserve(system.tasks.size());
    for (std::size_t i = 0; i < system.tasks.size(); ++i)
        config.executed.push_back(execution_since_release(system, trace, i, t));
    return config;
}

bool is_schedulable(const Verdict& v) {
    return std::holds_alternative<Schedulable>(v);
}

namespace {

Configuration sample_engine_configuration(const Engine& engine, ticks t) {
    return Configuration{t, engine.execution_since_release()};
}

struct SteadyRun {
    std::optional<Miss> miss;
    std::optional<SteadyInfo> steady;       // first match, if any
    std::vector<Configuration> samples;     // at max_offset + k*P
    Engine engine;
};

// Shared driver: simulates with per-tick deadline checks, sampling the
// configuration at every instant max_offset + k*P up to the feasibility
// bound. Stops at the first miss always, and at the first configuration
// match when early_exit is set.
SteadyRun run_with_steady_detection(const TaskSystem& system, PriorityPolicy policy,
                                    const ExecutionModel& exec, bool early_exit) {
    const ticks o_max = max_offset(system);
    const ticks period = hyperperiod(system);
    const ticks bound = feasibility_bound(system);

    SteadyRun run{std::nullopt, std::nullopt, {}, Engine(system, policy, exec)};
    for (ticks t = 0;; ++t) {
        run.engine.begin_tick();
        if (run.engine.first_miss()) {
            run.miss = run.engine.first_miss();
            break;
        }
        if (t >= o_max && (t - o_max) % period == 0) {
            run.samples.push_back(sample_engine_configuration(run.engine, t));
            const ticks k = (t - o_max) / period;
            if (k >= 1 && !run.steady &&
                run.samples[k - 1].same_values(run.samples[k])) {
                run.steady = SteadyInfo{k, t - period};
                if (early_exit)
                    break;
            }
        }
        if (t == bound)
            break;
        run.engine.finish_tick();
    }
    return run;
}

}  // namespace

AnalysisReport exact_test_report(const TaskSystem& system, ExactTestOptions options) {
    require_valid(system);

    AnalysisReport report;
    report.hyperperiod = hyperperiod(system);
    report.max_offset = max_offset(system);
    report.total_wcet = total_wcet(system);
    report.feasibility_bound = feasibility_bound(system);

    SteadyRun run = run_with_steady_detection(system, PriorityPolicy::Edf,
                                              ExecutionModel::worst_case(),
                                              options.early_exit);
    report.configurations = std::move(run.samples);

    if (run.miss) {
        report.verdict = *run.miss;
        return report;
    }
    if (!run.steady)
        throw std::logic_error(
            "no repeated configuration within the feasibility bound; "
            "this contradicts the bound's guarantee for miss-free schedules");
    if (!options.early_exit) {
        // Literal full-horizon variant: decide on the final pair. The first
        // match makes the schedule periodic, so the final pair must match
        // too; anything else is an engine defect.
        const auto& all = report.configurations;
        if (all.size() < 2 || !all[all.size() - 2].same_values(all.back()))
            throw std::logic_error("steady phase detected but final configurations differ");
    }
    report.verdict = Schedulable{run.steady};
    return report;
}

Verdict exact_test(const TaskSystem& system) {
    return exact_test_report(system).verdict;
}

Verdict synchronous_test(const TaskSystem& system) {
    require_valid(system);
    if (!is_synchronous(system))
        throw std::invalid_argument("synchronous_test requires all offsets to be equal");

    const ticks c = system.tasks.front().offset;
    const ticks end = checked_add(c, hyperperiod(system));

    Engine engine(system, PriorityPolicy::Edf, ExecutionModel::worst_case());
    for (ticks t = 0; t < end; ++t) {
        engine.begin_tick();
        if (engine.first_miss())
            return *engine.first_miss();
        engine.finish_tick();
    }
    // Jobs released in [c, c+P) have deadlines <= c+P; check that boundary.
    engine.begin_tick();
    if (engine.first_miss())
        return *engine.first_miss();
    return Schedulable{SteadyInfo{1, c}};
}

Verdict predictability_probe(const TaskSystem& system, const ExecutionModel& exec) {
    require_valid(system);
    SimulationResult result = simulate(system, PriorityPolicy::Edf, exec,
                                       feasibility_bound(system), true);
    if (result.miss)
        return *result.miss;
    return Schedulable{std::nullopt};
}

LeungVerdict leung_test(const TaskSystem& system) {
    require_valid(system);
    const ticks o_max = max_offset(system);
    const ticks period = hyperperiod(system);
    const ticks end = checked_add(o_max, checked_mul(2, period));

    Engine engine(system, PriorityPolicy::Edf, ExecutionModel::worst_case());
    std::optional<Configuration> at_one;
    for (ticks t = 0; t < end; ++t) {
        engine.begin_tick();
        if (engine.first_miss())
            return LeungRejectByMiss{*engine.first_miss()};
        if (t == o_max + period)
            at_one = sample_engine_configuration(engine, t);
        engine.finish_tick();
    }
    engine.begin_tick();  // sample at o_max + 2P; misses at that instant are
                          // outside the procedure's window
    const Configuration at_two = sample_engine_configuration(engine, end);

    if (at_one->same_values(at_two))
        return LeungAccept{};
    LeungRejectByConfigMismatch mismatch{*at_one, at_two, {}};
    for (std::size_t i = 0; i < system.tasks.size(); ++i)
        mismatch.delta.push_back(at_two.executed[i] - at_one->executed[i]);
    return mismatch;
}

SimulationResult simulate_to_steady(const TaskSystem& system, PriorityPolicy policy,
                                    const ExecutionModel& exec) {
    require_valid(system);
    SteadyRun run = run_with_steady_detection(system, policy, exec, true);
    return run.engine.finish();
}

}  // namespace edf
