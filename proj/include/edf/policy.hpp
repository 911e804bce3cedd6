#pragma once

#include <cstddef>
#include <tuple>

#include "edf/model.hpp"

namespace edf {

enum class PriorityPolicy { Edf, Llf };

/// One release currently in the system: released, not yet completed.
struct ActiveJob {
    JobId id;
    ticks release = 0;
    ticks abs_deadline = 0;
    ticks budget = 0;    // execution requirement of this release
    ticks executed = 0;  // service received so far, 0 <= executed <= budget
};

// Priority keys are lexicographic tuples; smaller means higher priority.
// Ties on the primary component break by (task index, job number), which is
// a pure function of the job and shifts uniformly one hyperperiod later:
// adding P to every deadline and P/T_i to every job number preserves the
// order, so corresponding jobs are ranked identically in every hyperperiod.

using EdfKey = std::tuple<ticks, std::size_t, ticks>;

inline EdfKey edf_key(const ActiveJob& job) {
    return {job.abs_deadline, job.id.task, job.id.number};
}

inline ticks laxity(const ActiveJob& job, ticks now) {
    return job.abs_deadline - now - (job.budget - job.executed);
}

using LlfKey = std::tuple<ticks, ticks, std::size_t, ticks>;

inline LlfKey llf_key(const ActiveJob& job, ticks now) {
    return {laxity(job, now), job.abs_deadline, job.id.task, job.id.number};
}

inline bool higher_priority(PriorityPolicy policy, const ActiveJob& a,
                            const ActiveJob& b, ticks now) {
    if (policy == PriorityPolicy::Edf)
        return edf_key(a) < edf_key(b);
    return llf_key(a, now) < llf_key(b, now);
}

}  // namespace edf
