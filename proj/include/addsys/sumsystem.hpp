#pragma once

#include <vector>

#include "addsys/core.hpp"
#include "addsys/factorisation.hpp"

namespace addsys {

/// m >= 1 component sets, each of cardinality >= 2. Whether they actually
/// form a sum system is a question for verify_sum_system.
class SumSystem {
 public:
  SumSystem() = default;
  explicit SumSystem(std::vector<ComponentSet> parts);

  const std::vector<ComponentSet>& parts() const noexcept { return parts_; }
  const ComponentSet& part(std::size_t j) const { return parts_.at(j); }
  std::size_t order() const noexcept { return parts_.size(); }
  std::vector<Int> dims() const;

  friend bool operator==(const SumSystem&, const SumSystem&) = default;

 private:
  std::vector<ComponentSet> parts_;
};

/// A_j = sum over steps l in direction j of (f_1 ... f_{l-1}) * <f_l>.
SumSystem build_sum_system(const Jof& jof);

/// Sum of the parts equals <prod n_j>, each value once.
VerificationReport verify_sum_system(const SumSystem& ss, const Limits& limits = {});

/// cs equals max(cs) - cs as a set. Witness: first x whose reflection is absent.
VerificationReport check_palindromic(const ComponentSet& cs);

/// Parity (0 even, 1 odd) of max A_j per part. Throws VerificationFailed
/// unless `ss` is a sum system.
std::vector<int> parity_signature(const SumSystem& ss, const Limits& limits = {});

/// All maxima even when every cardinality is odd, otherwise exactly one odd
/// maximum.
VerificationReport check_parity_dichotomy(const SumSystem& ss, const Limits& limits = {});

/// Product of the characteristic polynomials sum_{a in A_j} x^a is the
/// all-ones vector of length prod n_j. Witness: first bad coefficient index,
/// or the product degree under violated == "degree".
VerificationReport polynomial_check(const SumSystem& ss, const Limits& limits = {});

/// Recovers the canonical JOF with build_sum_system(result) == ss. Part
/// order is kept as given.
Jof decompose_sum_system(const SumSystem& ss, const Limits& limits = {});

/// Exact coefficient vector of prod_j sum_{a in A_j} x^a.
std::vector<Int> characteristic_product(const SumSystem& ss, const Limits& limits = {});

}  // namespace addsys
