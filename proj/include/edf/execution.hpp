#pragma once

#include <cstdint>
#include <variant>

#include "edf/model.hpp"

namespace edf {

/// Assigns each job its actual execution time in [1, wcet]. The default
/// model charges every job its full wcet. Budgets are pure functions of the
/// job id, so independent simulators agree on them without shared state.
class ExecutionModel {
public:
    /// Every job runs for exactly its task's wcet.
    static ExecutionModel worst_case() { return ExecutionModel{WorstCase{}}; }

    /// Every job runs for max(1, wcet - delta).
    static ExecutionModel shortened_by(ticks delta) { return ExecutionModel{Shortened{delta}}; }

    /// Per-job budget drawn uniformly from [1, wcet], keyed by
    /// (seed, task, job number).
    static ExecutionModel seeded_random(std::uint64_t seed) { return ExecutionModel{Seeded{seed}}; }

    ticks budget(const TaskSystem& system, JobId job) const;

private:
    struct WorstCase {};
    struct Shortened { ticks delta; };
    struct Seeded { std::uint64_t seed; };

    using Kind = std::variant<WorstCase, Shortened, Seeded>;

    explicit ExecutionModel(Kind kind) : kind_(kind) {}

    Kind kind_;
};

}  // namespace edf
