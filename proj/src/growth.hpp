#pragma once

// Decomposition by growing principal subcuboids from the trivial one.
// Shared by the sum-system route (axis sets only) and the tensor route.

#include <limits>
#include <string>
#include <vector>

#include "addsys/core.hpp"
#include "addsys/factorisation.hpp"

namespace addsys::detail {

// axis(j, k): a_{j,k}, the entry k steps along axis j (both 0-based).
// is_principal(sub): whether the root subcuboid with dims `sub` holds <prod sub>.
template <class Axis, class Principal>
std::vector<Step> grow_chain(const std::vector<Int>& dims, Axis&& axis, Principal&& is_principal) {
  const std::size_t m = dims.size();
  std::vector<Int> sub(m, 1);
  Int covered = 1;
  std::vector<Step> steps;
  while (sub != dims) {
    // The smallest missing integer sits just outside the subcuboid on an axis.
    std::size_t dir = m;
    Int mu = std::numeric_limits<Int>::max();
    int ties = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (sub[j] >= dims[j]) continue;
      const Int v = axis(j, sub[j]);
      if (v < mu) {
        mu = v;
        dir = j;
        ties = 1;
      } else if (v == mu) {
        ++ties;
      }
    }
    if (dir == m || ties != 1)
      throw InternalContradiction("next missing integer is not on exactly one axis");
    if (mu != covered)
      throw InternalContradiction("axis value " + std::to_string(mu) + " where " + std::to_string(covered) +
                                  " was expected");

    // Copy s of the current block starts at s * covered on axis dir, which
    // bounds the factor; the largest principal extension is the fused step.
    const Int base = sub[dir];
    Int run = 1;
    while (base * (run + 1) <= dims[dir] && axis(dir, base * run) == checked_mul(run, covered)) ++run;
    Int chosen = 0;
    for (Int t = run; t >= 2; --t) {
      if (dims[dir] % (base * t) != 0) continue;
      sub[dir] = base * t;
      if (is_principal(sub)) {
        chosen = t;
        break;
      }
    }
    if (chosen == 0) throw InternalContradiction("no principal extension in direction " + std::to_string(dir + 1));
    steps.push_back(Step{static_cast<int>(dir + 1), chosen});
    covered *= chosen;
  }
  return steps;
}

}  // namespace addsys::detail
