#include "pvarea/semantics.hpp"

namespace pvarea {

std::vector<Interval> busy_intervals(const Process& proc, std::uint32_t sem) {
  const std::size_t len = proc.body.size();
  std::vector<Interval> out;
  std::size_t from = 0;  // first position to consider is from + 1
  while (from < len) {
    std::size_t x = from;
    while (x < len && proc.body[x] != Instruction{Op::P, sem}) ++x;
    if (x == len) break;
    std::size_t y = x + 1;
    while (y < len && proc.body[y] != Instruction{Op::V, sem}) ++y;
    if (y == len) {
      out.emplace_back(static_cast<Endpoint>(x + 1), kInf);
      break;
    }
    out.emplace_back(static_cast<Endpoint>(x + 1), static_cast<Endpoint>(y + 1));
    from = y + 1;
  }
  return out;
}

CubeList forbidden_cubes(const Program& prog) {
  const std::size_t n = prog.procs.size();
  CubeList out(n);

  std::vector<Endpoint> planes(2 * n);
  auto reset_full = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      planes[i] = 0;
      planes[n + i] = kInf;
    }
  };

  for (std::uint32_t s = 0; s < prog.sems.size(); ++s) {
    const std::uint32_t arity = prog.sems[s].arity;
    std::vector<std::uint32_t> holder;
    std::vector<std::vector<Interval>> busy;
    for (std::uint32_t p = 0; p < n; ++p) {
      std::vector<Interval> b = busy_intervals(prog.procs[p], s);
      if (b.empty()) continue;
      holder.push_back(p);
      busy.push_back(std::move(b));
    }
    if (holder.size() < arity) continue;

    // One cube per size-arity subset of holders and per choice of one busy
    // interval for each member. Subsets beyond size arity would only add
    // dominated cubes.
    std::vector<std::uint32_t> pick(arity);
    for (std::uint32_t i = 0; i < arity; ++i) pick[i] = i;
    while (true) {
      std::vector<std::uint32_t> choice(arity, 0);
      while (true) {
        reset_full();
        for (std::uint32_t i = 0; i < arity; ++i) {
          const Interval& iv = busy[pick[i]][choice[i]];
          planes[holder[pick[i]]] = iv.lo();
          planes[n + holder[pick[i]]] = iv.hi();
        }
        out.push_raw(planes.data());

        std::uint32_t j = arity;
        while (j > 0 && choice[j - 1] + 1 == busy[pick[j - 1]].size()) --j;
        if (j == 0) break;
        ++choice[j - 1];
        for (std::uint32_t t = j; t < arity; ++t) choice[t] = 0;
      }

      std::uint32_t j = arity;
      while (j > 0 &&
             pick[j - 1] + 1 > holder.size() - (arity - (j - 1))) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::uint32_t t = j; t < arity; ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  out.prune_dominated();
  return out;
}

Area state_space(const Program& prog) {
  return complement_area(prog.procs.size(), forbidden_cubes(prog));
}

}  // namespace pvarea
