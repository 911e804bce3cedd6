#include "edf/model.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edf {

ticks checked_add(ticks a, ticks b) {
    ticks out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("tick arithmetic overflow in addition");
    return out;
}

ticks checked_mul(ticks a, ticks b) {
    ticks out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("tick arithmetic overflow in multiplication");
    return out;
}

ticks checked_lcm(ticks a, ticks b) {
    const ticks g = std::gcd(a, b);
    if (g == 0)
        return 0;
    return checked_mul(a / g, b);
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations) {
        if (v.task)
            out << "task " << (*v.task + 1) << ": ";
        out << v.field << ": " << v.message << "\n";
    }
    return out.str();
}

ValidationReport validate(const TaskSystem& system) {
    ValidationReport report;
    auto add = [&](std::optional<std::size_t> task, std::string field, std::string message) {
        report.violations.push_back({task, std::move(field), std::move(message)});
    };

    if (system.tasks.empty())
        add(std::nullopt, "tasks", "task list must not be empty");
    if (system.cpus < 1)
        add(std::nullopt, "cpus", "cpu count must be >= 1");

    for (std::size_t i = 0; i < system.tasks.size(); ++i) {
        const PeriodicTask& t = system.tasks[i];
        if (t.offset < 0)
            add(i, "offset", "offset must be >= 0");
        if (t.wcet < 1)
            add(i, "wcet", "wcet must be >= 1");
        if (t.deadline < 1)
            add(i, "deadline", "deadline must be >= 1");
        if (t.period < 1)
            add(i, "period", "period must be >= 1");
        if (t.deadline >= 1 && t.period >= 1 && t.deadline > t.period)
            add(i, "deadline", "deadline exceeds period");
    }
    return report;
}

ticks max_offset(const TaskSystem& system) {
    ticks best = 0;
    for (const auto& t : system.tasks)
        best = std::max(best, t.offset);
    return best;
}

ticks hyperperiod(const TaskSystem& system) {
    ticks lcm = 1;
    for (const auto& t : system.tasks)
        lcm = checked_lcm(lcm, t.period);
    return lcm;
}

ticks total_wcet(const TaskSystem& system) {
    ticks sum = 0;
    for (const auto& t : system.tasks)
        sum = checked_add(sum, t.wcet);
    return sum;
}

ticks feasibility_bound(const TaskSystem& system) {
    const ticks p = hyperperiod(system);
    const ticks reps = checked_add(total_wcet(system), 1);
    return checked_add(max_offset(system), checked_mul(reps, p));
}

ticks demand_per_hyperperiod(const TaskSystem& system) {
    const ticks p = hyperperiod(system);
    ticks demand = 0;
    for (const auto& t : system.tasks)
        demand = checked_add(demand, checked_mul(t.wcet, p / t.period));
    return demand;
}

ticks release_time(const TaskSystem& system, JobId job) {
    const PeriodicTask& t = system.tasks.at(job.task);
    return checked_add(t.offset, checked_mul(job.number - 1, t.period));
}

ticks absolute_deadline(const TaskSystem& system, JobId job) {
    return checked_add(release_time(system, job), system.tasks.at(job.task).deadline);
}

bool is_synchronous(const TaskSystem& system) {
    for (const auto& t : system.tasks)
        if (t.offset != system.tasks.front().offset)
            return false;
    return true;
}

}  // namespace edf
