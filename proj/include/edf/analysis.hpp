#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "edf/engine.hpp"
#include "edf/model.hpp"
#include "edf/trace.hpp"

namespace edf {

/// Per-task service received since each task's latest release at or before
/// `sampled_at`. Defined only from max_offset on; a task released exactly at
/// the sampling instant contributes 0.
struct Configuration {
    ticks sampled_at = 0;
    std::vector<ticks> executed;

    bool same_values(const Configuration& other) const { return executed == other.executed; }
};

/// True iff a.executed[i] >= b.executed[i] for every task.
bool config_dominates(const Configuration& a, const Configuration& b);

/// Service task `task` received in [r, t) where r is its latest release <= t.
/// Requires offset_i <= t <= trace.horizon.
ticks execution_since_release(const TaskSystem& system, const ScheduleTrace& trace,
                              std::size_t task, ticks t);

/// Full configuration at time t. Requires max_offset <= t <= trace.horizon.
Configuration configuration_at(const TaskSystem& system, const ScheduleTrace& trace,
                               ticks t);

struct SteadyInfo {
    /// Smallest k >= 1 with equal configurations at max_offset + (k-1)*P and
    /// max_offset + k*P.
    ticks steady_k = 0;
    /// The earlier of the two matching instants; the schedule repeats with
    /// period P from here on.
    ticks periodic_from = 0;

    bool operator==(const SteadyInfo&) const = default;
};

struct Schedulable {
    /// Present for the exact test; probes that only look for misses leave it
    /// empty.
    std::optional<SteadyInfo> steady;
};

using Verdict = std::variant<Schedulable, Miss>;

bool is_schedulable(const Verdict& v);

struct ExactTestOptions {
    /// Stop at the first pair of matching configurations one hyperperiod
    /// apart. Determinism plus request-dependence make the schedule repeat
    /// from the first match, so later ticks cannot change the verdict. When
    /// false, runs the full horizon and decides on the final pair.
    bool early_exit = true;
};

struct AnalysisReport {
    Verdict verdict = Schedulable{};
    ticks hyperperiod = 0;
    ticks max_offset = 0;
    ticks total_wcet = 0;
    ticks feasibility_bound = 0;
    /// Configurations sampled at max_offset + k*P, in order of k.
    std::vector<Configuration> configurations;
};

/// Exact schedulability decision for worst-case global-EDF: simulates up to
/// feasibility_bound; any job reaching its deadline incomplete decides
/// "miss", a repeated configuration one hyperperiod apart decides
/// "schedulable". One of the two occurs within the horizon.
AnalysisReport exact_test_report(const TaskSystem& system, ExactTestOptions options = {});
Verdict exact_test(const TaskSystem& system);

/// Shortcut when all offsets are equal: the schedule repeats from offset + P,
/// so only [offset, offset + P) needs checking (all jobs released there have
/// deadlines at or before offset + P). Throws on asynchronous input.
Verdict synchronous_test(const TaskSystem& system);

/// Simulates [0, feasibility_bound) under an arbitrary execution model and
/// reports whether any deadline was missed. Shrinking budgets below wcet
/// never turns a schedulable system unschedulable; this probe exists to
/// exercise exactly that property.
Verdict predictability_probe(const TaskSystem& system, const ExecutionModel& exec);

// ---------------------------------------------------------------------------
// leung_test: INCORRECT two-hyperperiod test, kept as an executable
// demonstration of why it fails. It checks deadlines up to max_offset + 2P
// and compares the configurations at max_offset + P and max_offset + 2P.
// There are schedulable systems whose configurations still differ at those
// two instants, which this procedure wrongly rejects. Never use its output
// to decide schedulability; the verdict type is kept separate on purpose.
// ---------------------------------------------------------------------------

struct LeungAccept {};
struct LeungRejectByMiss {
    Miss miss;
};
struct LeungRejectByConfigMismatch {
    Configuration first;           // at max_offset + P
    Configuration second;          // at max_offset + 2P
    std::vector<ticks> delta;      // second - first, per task
};
using LeungVerdict = std::variant<LeungAccept, LeungRejectByMiss, LeungRejectByConfigMismatch>;

LeungVerdict leung_test(const TaskSystem& system);

/// Simulates until the steady phase is detected (trace then covers
/// [0, periodic_from + P)), a miss stops the run, or feasibility_bound is
/// reached. Supports both policies; with LLF the bound may be hit without a
/// match and the trace simply covers the full horizon.
SimulationResult simulate_to_steady(const TaskSystem& system, PriorityPolicy policy,
                                    const ExecutionModel& exec);

}  // namespace edf
