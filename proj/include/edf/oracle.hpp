#pragma once

#include "edf/analysis.hpp"
#include "edf/engine.hpp"

namespace edf {

/// Reference simulator for cross-validation. Same contract as simulate(),
/// but every tick recomputes the released-job set, per-job progress and the
/// priority order from scratch, with no state carried between ticks beyond
/// the raw per-tick grid. It deliberately shares no scheduling code with the
/// engine; only the model and trace types are reused.
SimulationResult oracle_simulate(const TaskSystem& system, PriorityPolicy policy,
                                 const ExecutionModel& exec, ticks horizon,
                                 bool stop_on_miss);

/// Reference reimplementation of configuration_at; counts service tick by
/// tick instead of walking run-length segments.
Configuration oracle_configuration(const TaskSystem& system,
                                   const ScheduleTrace& trace, ticks t);

/// Full-horizon schedulability decision built on the naive simulator and
/// oracle_configuration, with no early exit. Slow; exists to cross-check
/// exact_test_report and to back the CLI's hidden --use-oracle flag.
AnalysisReport oracle_exact_report(const TaskSystem& system);

}  // namespace edf
