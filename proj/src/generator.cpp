#include "edf/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace edf {

namespace {

// Uniform double in [0, 1) from the raw engine output; bit-stable across
// standard libraries, unlike std::uniform_real_distribution.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ticks bounded_draw(std::mt19937_64& rng, ticks lo, ticks hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<ticks>(rng() % span);
}

}  // namespace

TaskSystem generate_task_system(const GeneratorSpec& spec) {
    if (spec.task_count < 1)
        throw std::invalid_argument("task_count must be >= 1");
    if (spec.cpu_count < 1)
        throw std::invalid_argument("cpu_count must be >= 1");
    if (spec.period_pool.empty())
        throw std::invalid_argument("period pool must not be empty");
    for (ticks p : spec.period_pool)
        if (p < 1)
            throw std::invalid_argument("periods must be >= 1");
    if (spec.max_offset < 0)
        throw std::invalid_argument("max_offset must be >= 0");
    if (!(spec.utilization_target > 0.0) ||
        spec.utilization_target > static_cast<double>(spec.cpu_count))
        throw std::invalid_argument("utilization target must be in (0, cpus]");

    const ticks longest = *std::max_element(spec.period_pool.begin(), spec.period_pool.end());
    const double n = static_cast<double>(spec.task_count);
    if (spec.utilization_target < n / static_cast<double>(longest))
        throw std::invalid_argument(
            "utilization target below " + std::to_string(spec.task_count) + "/" +
            std::to_string(longest) + "; every task needs wcet >= 1");
    if (spec.utilization_target > n)
        throw std::invalid_argument(
            "utilization target above task count; wcet cannot exceed period");

    std::mt19937_64 rng(spec.seed);

    // Split the target utilization into task shares by sorted uniform
    // spacings, then realize each share as an integer wcet.
    std::vector<double> cuts(static_cast<std::size_t>(spec.task_count) - 1);
    for (double& c : cuts)
        c = unit_draw(rng) * spec.utilization_target;
    std::sort(cuts.begin(), cuts.end());

    TaskSystem system;
    system.cpus = spec.cpu_count;
    double prev = 0.0;
    for (int i = 0; i < spec.task_count; ++i) {
        const double next = (i + 1 == spec.task_count) ? spec.utilization_target
                                                       : cuts[static_cast<std::size_t>(i)];
        const double share = next - prev;
        prev = next;

        PeriodicTask task;
        task.period = spec.period_pool[rng() % spec.period_pool.size()];
        task.offset = bounded_draw(rng, 0, spec.max_offset);
        task.wcet = std::clamp<ticks>(
            static_cast<ticks>(std::llround(share * static_cast<double>(task.period))),
            1, task.period);
        task.deadline = (spec.deadline_mode == DeadlineMode::Implicit)
                            ? task.period
                            : bounded_draw(rng, task.wcet, task.period);
        system.tasks.push_back(task);
    }
    return system;
}

}  // namespace edf
