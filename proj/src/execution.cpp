#include "edf/execution.hpp"

#include <algorithm>

namespace edf {

namespace {

// splitmix64 finalizer; stable across platforms, unlike the standard
// library's distribution implementations.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

ticks ExecutionModel::budget(const TaskSystem& system, JobId job) const {
    const ticks wcet = system.tasks.at(job.task).wcet;
    if (std::holds_alternative<WorstCase>(kind_))
        return wcet;
    if (const auto* s = std::get_if<Shortened>(&kind_))
        return std::max<ticks>(1, wcet - s->delta);
    const auto& seeded = std::get<Seeded>(kind_);
    std::uint64_t h = mix64(seeded.seed);
    h = mix64(h ^ static_cast<std::uint64_t>(job.task));
    h = mix64(h ^ static_cast<std::uint64_t>(job.number));
    return 1 + static_cast<ticks>(h % static_cast<std::uint64_t>(wcet));
}

}  // namespace edf
