#pragma once

#include <cstdint>
#include <vector>

#include "edf/model.hpp"

namespace edf {

enum class DeadlineMode { Implicit, Constrained };

/// Recipe for one random task system. Generation is a pure function of the
/// spec (same seed, same system) and always yields a system that passes
/// validation.
struct GeneratorSpec {
    std::uint64_t seed = 0;
    int task_count = 1;
    int cpu_count = 1;
    std::vector<ticks> period_pool;
    ticks max_offset = 0;
    double utilization_target = 0.5;  // in (0, cpu_count]
    DeadlineMode deadline_mode = DeadlineMode::Implicit;
};

/// Throws std::invalid_argument when the spec cannot be met, e.g. a target
/// utilization above the platform capacity or below task_count / max period
/// (every task needs wcet >= 1).
TaskSystem generate_task_system(const GeneratorSpec& spec);

}  // namespace edf
