#pragma once

// Sum-and-distance systems and their correspondence with sum systems.
//
// Even-cardinality sum systems pair with non-inclusive systems, whose
// signed sums cover consecutive odd integers. Odd-cardinality sum systems
// pair with inclusive systems, which also count the elements themselves
// (and 0) and cover consecutive integers.

#include <string>
#include <vector>

#include "addsys/core.hpp"
#include "addsys/sumsystem.hpp"

namespace addsys {

enum class Flavour { NonInclusive, Inclusive };

std::string to_string(Flavour f);
Flavour parse_flavour(const std::string& s);

/// Nonempty parts of strictly positive integers.
class SdsSystem {
 public:
  SdsSystem(Flavour flavour, std::vector<ComponentSet> parts);

  Flavour flavour() const noexcept { return flavour_; }
  const std::vector<ComponentSet>& parts() const noexcept { return parts_; }
  std::size_t order() const noexcept { return parts_.size(); }

  friend bool operator==(const SdsSystem&, const SdsSystem&) = default;

 private:
  Flavour flavour_;
  std::vector<ComponentSet> parts_;
};

/// Signed-sum form. Non-inclusive: sum_j (A_j u -A_j) is the odd progression
/// from -(2^m P - 1) to 2^m P - 1, P = prod |A_j|. Inclusive: sum_j
/// (A_j u {0} u -A_j) is the integers centred on 0, Q = prod (2|A_j| + 1) of them.
VerificationReport verify_sds(const SdsSystem& s, const Limits& limits = {});

/// Two-part absolute-value form: {|a +- b|} (plus the a and b themselves when
/// inclusive) against {1, 3, ...} or {1, 2, ...}. Throws InputError unless m = 2.
VerificationReport verify_sds_two_part(const SdsSystem& s);

SumSystem sds_to_sumsys_noninclusive(const SdsSystem& s, const Limits& limits = {});
SdsSystem sumsys_to_sds_noninclusive(const SumSystem& ss, const Limits& limits = {});
SumSystem sds_to_sumsys_inclusive(const SdsSystem& s, const Limits& limits = {});
SdsSystem sumsys_to_sds_inclusive(const SumSystem& ss, const Limits& limits = {});

/// Dispatches on the SDS flavour.
SumSystem sds_to_sumsys(const SdsSystem& s, const Limits& limits = {});
/// Flavour from part-cardinality parity; mixed parity is an InputError.
Flavour infer_flavour(const SumSystem& ss);
SdsSystem sumsys_to_sds(const SumSystem& ss, Flavour flavour, const Limits& limits = {});

}  // namespace addsys
