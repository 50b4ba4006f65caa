#pragma once

#include <vector>

#include "pvarea/area.hpp"
#include "pvarea/interval.hpp"
#include "pvarea/pv.hpp"

namespace pvarea {

// Positions where proc holds semaphore sem, as disjoint increasing intervals
// [x, y[ over 1-based instruction positions. Computed by the take/release
// recurrence: starting after position 0, alternately seek the next P(sem)
// then the next V(sem); a P with no matching V yields a final [x, inf[.
// A P while already holding and a V while not holding are skipped over, so
// redundant operations do not affect the result.
std::vector<Interval> busy_intervals(const Process& proc, std::uint32_t sem);

// Union, over every semaphore s of arity a and every choice of a processes
// with one busy interval of s each, of the cube constraining those
// coordinates to the chosen intervals (full elsewhere): the positions where
// some semaphore is requested beyond capacity. Duplicate and dominated cubes
// are dropped; the survivors still need not be maximal cubes of the union.
CubeList forbidden_cubes(const Program& prog);

// Canonical state space: [0, inf)^N minus the forbidden cubes, N = number
// of processes.
Area state_space(const Program& prog);

}  // namespace pvarea
