#pragma once

// Dense order-m integer tensors ("cuboids"), the building operators that
// generate principal reversible cuboids, and their verification.
//
// Storage is row-major with direction 1 fastest: the linear offset of the
// 1-based multiindex k is sum_j (k_j - 1) * n_1 * ... * n_{j-1}.

#include <span>
#include <vector>

#include "addsys/core.hpp"
#include "addsys/factorisation.hpp"
#include "addsys/sumsystem.hpp"

namespace addsys {

class Cuboid {
 public:
  Cuboid() : dims_{1}, entries_{0} {}
  Cuboid(std::vector<Int> dims, std::vector<Int> entries);
  /// All-`value` cuboid with the given dims.
  static Cuboid filled(std::vector<Int> dims, Int value);

  const std::vector<Int>& dims() const noexcept { return dims_; }
  const std::vector<Int>& entries() const noexcept { return entries_; }
  std::size_t order() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return entries_.size(); }
  Int stride(std::size_t j) const { return strides_[j]; }

  Int at(std::span<const Int> multiindex) const { return entries_[offset(multiindex)]; }
  Int operator[](std::size_t linear) const { return entries_[linear]; }
  std::size_t offset(std::span<const Int> multiindex) const;
  /// 1-based multiindex of a linear offset.
  std::vector<Int> multiindex(std::size_t linear) const;

  friend bool operator==(const Cuboid& a, const Cuboid& b) {
    return a.dims_ == b.dims_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<Int> dims_;
  std::vector<Int> strides_;
  std::vector<Int> entries_;
};

/// (v (x)_j M) at n^ + l n_j e_j equals v_{l+1} M_{n^}. Direction is 1-based.
Cuboid kron_dir(std::span<const Int> v, int direction, const Cuboid& m);

/// Entrywise sum of equally shaped cuboids.
Cuboid add(const Cuboid& a, const Cuboid& b);

/// B_{j,k}(M): k copies of M along direction j, copy l offset by l * |M|.
Cuboid building_op(int direction, Int copies, const Cuboid& m);

Cuboid trivial_cuboid(std::size_t order);

/// B_{j_L,f_L} ... B_{j_1,f_1}((0)). Dimensions of 1 are rejected.
Cuboid build_cuboid(const Jof& jof, const Limits& limits = {});

/// Entries on the coordinate axes through the root. Throws
/// VerificationFailed unless `m` is principal reversible.
SumSystem axis_sets(const Cuboid& m, const Limits& limits = {});

/// M_k = sum_j a_{j,k_j}; inverse of axis_sets.
Cuboid cuboid_from_sumsystem(const SumSystem& ss, const Limits& limits = {});

/// M_k = sum_j M_{1+(k_j-1)e_j} - (m-1) M_{1} everywhere. Witness: multiindex.
VerificationReport verify_property_V(const Cuboid& m);

/// Line reversal symmetry: along every line, entry(l) + entry(n_j+1-l) is
/// constant. Witness: direction then multiindex.
VerificationReport verify_property_R(const Cuboid& m);

/// Strictly increasing lines in every direction, entry set <prod n_j>,
/// property (V), then (R). Monotonicity witness: direction then the
/// multiindex of the entry that fails to exceed its predecessor.
VerificationReport verify_reversible(const Cuboid& m);

/// Canonical JOF with build_cuboid(result) == m, found on the tensor itself.
Jof decompose_cuboid(const Cuboid& m, const Limits& limits = {});

}  // namespace addsys
