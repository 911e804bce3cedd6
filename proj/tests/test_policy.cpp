#include <vector>

#include "doctest.h"
#include "edf/policy.hpp"

using namespace edf;

namespace {

ActiveJob job(std::size_t task, ticks number, ticks deadline, ticks budget,
              ticks executed = 0) {
    return {{task, number}, 0, deadline, budget, executed};
}

}  // namespace

TEST_CASE("edf ranks by absolute deadline first") {
    // ce1 at t=4: task 1's job has deadline 6, task 2's job deadline 8.
    const ActiveJob a = job(0, 2, 6, 2);
    const ActiveJob b = job(1, 1, 8, 3);
    CHECK(edf_key(a) < edf_key(b));
}

TEST_CASE("edf deadline ties break by task index, then job number") {
    CHECK(edf_key(job(0, 4, 12, 2)) < edf_key(job(1, 2, 12, 3)));
    CHECK(edf_key(job(2, 1, 12, 1)) < edf_key(job(2, 2, 12, 1)));
}

TEST_CASE("edf key is a pure function") {
    const ActiveJob a = job(1, 3, 9, 2, 1);
    CHECK(edf_key(a) == edf_key(a));
    const ActiveJob copy = a;
    CHECK(edf_key(copy) == edf_key(a));
}

TEST_CASE("edf order is total over distinct jobs") {
    std::vector<ActiveJob> jobs;
    for (std::size_t task = 0; task < 3; ++task)
        for (ticks number = 1; number <= 3; ++number)
            for (ticks deadline : {5, 8})
                jobs.push_back(job(task, number, deadline, 1));
    for (const auto& a : jobs)
        for (const auto& b : jobs) {
            if (a.id == b.id)
                continue;
            CHECK((edf_key(a) < edf_key(b)) != (edf_key(b) < edf_key(a)));
        }
}

TEST_CASE("edf order is stable one hyperperiod later") {
    // Shifting both jobs by a hyperperiod adds P to deadlines and P/T to job
    // numbers; the relative order must be unchanged.
    const ticks P = 12;
    const std::vector<ticks> periods = {3, 4, 6};
    for (std::size_t ti = 0; ti < periods.size(); ++ti)
        for (std::size_t tj = 0; tj < periods.size(); ++tj)
            for (ticks di = 4; di <= 16; ++di)
                for (ticks dj = 4; dj <= 16; ++dj)
                    for (ticks ni = 1; ni <= 2; ++ni)
                        for (ticks nj = 1; nj <= 2; ++nj) {
                            const ActiveJob a = job(ti, ni, di, 1);
                            const ActiveJob b = job(tj, nj, dj, 1);
                            if (a.id == b.id)
                                continue;
                            const ActiveJob a2 = job(ti, ni + P / periods[ti], di + P, 1);
                            const ActiveJob b2 = job(tj, nj + P / periods[tj], dj + P, 1);
                            CHECK((edf_key(a) < edf_key(b)) ==
                                  (edf_key(a2) < edf_key(b2)));
                        }
}

TEST_CASE("laxity is deadline minus now minus remaining work") {
    CHECK(laxity(job(1, 1, 8, 3, 0), 4) == 1);
    CHECK(laxity(job(0, 1, 10, 4, 1), 7) == 0);  // remaining = deadline - now
}

TEST_CASE("llf ties break by deadline, then task index") {
    const ActiveJob a = job(0, 1, 9, 2);   // laxity at 5: 9-5-2 = 2
    const ActiveJob b = job(1, 1, 10, 3);  // laxity at 5: 10-5-3 = 2
    CHECK(llf_key(a, 5) < llf_key(b, 5));

    const ActiveJob c = job(0, 1, 9, 2);
    const ActiveJob d = job(1, 1, 9, 2);  // same laxity, same deadline
    CHECK(llf_key(c, 5) < llf_key(d, 5));
}

TEST_CASE("llf order shifts with the hyperperiod like edf") {
    const ticks P = 12;
    const ActiveJob a = job(0, 1, 9, 2);
    const ActiveJob b = job(1, 1, 8, 1);
    const ActiveJob a2 = job(0, 1 + P / 3, 9 + P, 2);
    const ActiveJob b2 = job(1, 1 + P / 4, 8 + P, 1);
    CHECK((llf_key(a, 5) < llf_key(b, 5)) == (llf_key(a2, 5 + P) < llf_key(b2, 5 + P)));
}
