#pragma once

// Square matrices built from two-part sum-and-distance systems: reversible
// squares (even and odd side), associated magic squares and most perfect
// squares. Entries are held in doubled units because the weight (n^2+1)/2
// is a half-integer for even n.

#include <string>
#include <vector>

#include "addsys/core.hpp"

namespace addsys {

class SquareMatrix {
 public:
  SquareMatrix(Int n, std::vector<Int> doubled);
  static SquareMatrix from_plain(const std::vector<std::vector<Int>>& rows);

  Int n() const noexcept { return n_; }
  /// 0-based row i, column j.
  Int doubled(Int i, Int j) const { return doubled_[static_cast<std::size_t>(i * n_ + j)]; }
  /// Exact halving; throws InternalContradiction on an odd doubled entry.
  Int at(Int i, Int j) const;
  std::vector<std::vector<Int>> plain() const;
  const std::vector<Int>& doubled_entries() const noexcept { return doubled_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  Int n_;
  std::vector<Int> doubled_;
};

enum class SquareKind { Reversible, Associated, MostPerfect };

std::string to_string(SquareKind k);
/// Accepts reversible, associated (or magic), most-perfect (or mostperfect).
SquareKind parse_square_kind(const std::string& s);

/// Side 2nu from a non-inclusive two-part SDS with |a| = |b| = nu.
SquareMatrix reversible_square_even(const ComponentSet& a, const ComponentSet& b);

/// Side 2nu+1 from an inclusive two-part SDS with |a| = |b| = nu.
SquareMatrix reversible_square_odd(const ComponentSet& a, const ComponentSet& b);

/// Sign vectors alternating +1, -1, ... of length nu.
std::vector<Int> alternating_signs(std::size_t nu);

/// Side 2nu, nu even; v and w are +-1 vectors summing to zero.
SquareMatrix associated_magic_square(const ComponentSet& a, const ComponentSet& b, const std::vector<Int>& v,
                                     const std::vector<Int>& w);

/// Side 2nu, nu even; {a2}, {b2} is a non-inclusive SDS (the doubled vectors).
SquareMatrix most_perfect_square(const ComponentSet& a2, const ComponentSet& b2);

/// Entry set {1..n^2} plus the clauses of `kind`:
///   reversible   - (R) on every row and column, (V);
///   associated   - equal row and column sums, centrally opposite pairs n^2+1;
///   most-perfect - equal row and column sums, every 2x2 block (toroidal)
///                  sums to 2(n^2+1), pairs n/2 apart on diagonals sum to n^2+1.
/// Witnesses are 1-based (row, column).
VerificationReport verify_square(const SquareMatrix& m, SquareKind kind);

}  // namespace addsys
