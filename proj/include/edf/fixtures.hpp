#pragma once

#include <optional>
#include <string_view>

#include "edf/model.hpp"

namespace edf::fixtures {

/// Three tasks on two CPUs whose schedule keeps changing across the first
/// two hyperperiods after all offsets have passed: schedulable, but the
/// two-hyperperiod test rejects it.
TaskSystem ce1();

/// Four tasks on two CPUs at full utilization whose steady phase arrives
/// only after many hyperperiods.
TaskSystem ce2();

std::optional<TaskSystem> by_name(std::string_view name);

}  // namespace edf::fixtures
