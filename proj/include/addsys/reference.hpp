#pragma once

// Serial reference versions of the parallel kernels. Straightforward loops,
// kept for cross-checking in tests and as the benchmark baseline.

#include <span>
#include <vector>

#include "addsys/core.hpp"
#include "addsys/cuboid.hpp"
#include "addsys/sumsystem.hpp"

namespace addsys::reference {

/// Odometer over index tuples, then sort.
std::vector<Int> minkowski_sum(std::span<const ComponentSet> sets, const Limits& limits = {});

/// Sort then walk against the progression.
VerificationReport covers_progression(std::span<const Int> values, const Progression& p);

Cuboid building_op(int direction, Int copies, const Cuboid& m);

VerificationReport verify_property_V(const Cuboid& m);

/// Schoolbook product of the characteristic polynomials.
std::vector<Int> characteristic_product(const SumSystem& ss, const Limits& limits = {});

}  // namespace addsys::reference
