#include "edf/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace edf {

std::vector<std::optional<JobId>> assign_cpus(
    const std::vector<std::optional<JobId>>& previous,
    const std::vector<JobId>& selected_by_priority) {
    const std::size_t m = previous.size();
    if (selected_by_priority.size() > m)
        throw std::invalid_argument("more selected jobs than CPUs");

    std::vector<std::optional<JobId>> out(m);
    std::vector<bool> placed(selected_by_priority.size(), false);

    for (std::size_t cpu = 0; cpu < m; ++cpu) {
        if (!previous[cpu])
            continue;
        for (std::size_t s = 0; s < selected_by_priority.size(); ++s) {
            if (!placed[s] && selected_by_priority[s] == *previous[cpu]) {
                out[cpu] = selected_by_priority[s];
                placed[s] = true;
                break;
            }
        }
    }
    std::size_t cpu = 0;
    for (std::size_t s = 0; s < selected_by_priority.size(); ++s) {
        if (placed[s])
            continue;
        while (out[cpu])
            ++cpu;
        out[cpu] = selected_by_priority[s];
    }
    return out;
}

Engine::Engine(const TaskSystem& system, PriorityPolicy policy, ExecutionModel exec)
    : system_(system),
      policy_(policy),
      exec_(exec),
      next_release_(system.tasks.size()),
      next_number_(system.tasks.size(), 1),
      exec_since_release_(system.tasks.size(), 0),
      running_(static_cast<std::size_t>(system.cpus)) {
    for (std::size_t i = 0; i < system.tasks.size(); ++i)
        next_release_[i] = system.tasks[i].offset;
    trace_.cpus = system.cpus;
    trace_.lanes.resize(static_cast<std::size_t>(system.cpus));
}

void Engine::begin_tick() {
    if (tick_begun_)
        throw std::logic_error("begin_tick called twice");
    tick_begun_ = true;

    for (std::size_t i = 0; i < system_.tasks.size(); ++i) {
        if (next_release_[i] != now_)
            continue;
        const JobId id{i, next_number_[i]};
        active_.push_back({id, now_, absolute_deadline(system_, id),
                           exec_.budget(system_, id), 0});
        trace_.events.push_back({now_, EventKind::Release, id});
        exec_since_release_[i] = 0;
        next_release_[i] = checked_add(now_, system_.tasks[i].period);
        ++next_number_[i];
    }

    std::vector<JobId> missed;
    for (const ActiveJob& job : active_)
        if (job.abs_deadline == now_ && job.executed < job.budget)
            missed.push_back(job.id);
    std::sort(missed.begin(), missed.end());
    for (const JobId& id : missed) {
        trace_.events.push_back({now_, EventKind::Miss, id});
        if (!first_miss_)
            first_miss_ = Miss{id, now_};
    }
}

void Engine::finish_tick() {
    if (!tick_begun_)
        throw std::logic_error("finish_tick without begin_tick");

    std::vector<std::size_t> order(active_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return higher_priority(policy_, active_[a], active_[b], now_);
    });

    const std::size_t slots =
        std::min(order.size(), static_cast<std::size_t>(system_.cpus));
    std::vector<JobId> selected;
    selected.reserve(slots);
    for (std::size_t s = 0; s < slots; ++s)
        selected.push_back(active_[order[s]].id);

    running_ = assign_cpus(running_, selected);

    for (int cpu = 0; cpu < system_.cpus; ++cpu) {
        const auto& occupant = running_[static_cast<std::size_t>(cpu)];
        trace_.append_tick(cpu, now_, occupant);
        if (!occupant)
            continue;
        auto it = std::find_if(active_.begin(), active_.end(),
                               [&](const ActiveJob& j) { return j.id == *occupant; });
        ++it->executed;
        ++exec_since_release_[occupant->task];
    }

    std::vector<JobId> done;
    for (const ActiveJob& job : active_)
        if (job.executed == job.budget)
            done.push_back(job.id);
    std::sort(done.begin(), done.end());
    for (const JobId& id : done)
        trace_.events.push_back({now_ + 1, EventKind::Complete, id});
    std::erase_if(active_, [](const ActiveJob& j) { return j.executed == j.budget; });

    ++now_;
    tick_begun_ = false;
}

SimulationResult Engine::finish() {
    trace_.horizon = now_;
    trace_.sort_events();
    return {std::move(trace_), first_miss_};
}

SimulationResult simulate(const TaskSystem& system, PriorityPolicy policy,
                          const ExecutionModel& exec, ticks horizon,
                          bool stop_on_miss) {
    if (horizon < 0)
        throw std::invalid_argument("horizon must be >= 0");
    Engine engine(system, policy, exec);
    for (ticks t = 0; t < horizon; ++t) {
        engine.begin_tick();
        if (stop_on_miss && engine.first_miss())
            break;
        engine.finish_tick();
    }
    return engine.finish();
}

}  // namespace edf
