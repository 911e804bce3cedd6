#include "edf/fixtures.hpp"

namespace edf::fixtures {

TaskSystem ce1() {
    return TaskSystem{{{0, 2, 3, 3}, {4, 3, 4, 4}, {1, 3, 6, 6}}, 2};
}

TaskSystem ce2() {
    return TaskSystem{{{225, 90, 161, 161},
                       {115, 40, 161, 161},
                       {0, 72, 161, 161},
                       {129, 120, 161, 161}},
                      2};
}

std::optional<TaskSystem> by_name(std::string_view name) {
    if (name == "ce1")
        return ce1();
    if (name == "ce2")
        return ce2();
    return std::nullopt;
}

}  // namespace edf::fixtures
