#include "edf/trace.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace edf {

void ScheduleTrace::append_tick(int cpu, ticks t, std::optional<JobId> occupant) {
    auto& lane = lanes.at(static_cast<std::size_t>(cpu));
    if (!lane.empty() && lane.back().end == t && lane.back().job == occupant) {
        lane.back().end = t + 1;
        return;
    }
    if (!lane.empty() && lane.back().end != t)
        throw std::logic_error("trace lane must stay contiguous");
    lane.push_back({t, t + 1, occupant});
}

std::optional<JobId> ScheduleTrace::occupant(int cpu, ticks t) const {
    const auto& lane = lanes.at(static_cast<std::size_t>(cpu));
    auto it = std::upper_bound(lane.begin(), lane.end(), t,
                               [](ticks v, const Segment& s) { return v < s.start; });
    if (it == lane.begin())
        throw std::out_of_range("tick before trace start");
    --it;
    if (t >= it->end)
        throw std::out_of_range("tick beyond trace horizon");
    return it->job;
}

int ScheduleTrace::busy_cpus(ticks t) const {
    int busy = 0;
    for (int cpu = 0; cpu < cpus; ++cpu)
        if (occupant(cpu, t).has_value())
            ++busy;
    return busy;
}

void ScheduleTrace::sort_events() {
    std::stable_sort(events.begin(), events.end(),
                     [](const TraceEvent& a, const TraceEvent& b) {
                         return std::tie(a.at, a.kind, a.job.task, a.job.number) <
                                std::tie(b.at, b.kind, b.job.task, b.job.number);
                     });
}

}  // namespace edf
