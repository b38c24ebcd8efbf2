#pragma once

// Joint ordered factorisations of a dimension vector: validation,
// enumeration, counting, canonical form and the `j:f,...` text syntax.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addsys/core.hpp"

namespace addsys {

/// One building step: stack `factor` copies along `direction` (1-based).
struct Step {
  int direction = 1;
  Int factor = 2;

  friend auto operator<=>(const Step&, const Step&) = default;
};

struct Jof {
  std::vector<Step> steps;
  std::vector<Int> dims;

  std::size_t order() const noexcept { return dims.size(); }
  friend bool operator==(const Jof&, const Jof&) = default;
};

/// Checks direction range, factor >= 2, the per-direction product clause and
/// the adjacent-direction clause, in that order.
VerificationReport validate_jof(const std::vector<Step>& steps, const std::vector<Int>& dims);
inline VerificationReport validate_jof(const Jof& jof) { return validate_jof(jof.steps, jof.dims); }

/// Depth-first stream over every JOF of `dims`, in lexicographic order of
/// the step sequence with (direction, factor) ordering. Single consumer.
class JofEnumerator {
 public:
  explicit JofEnumerator(std::vector<Int> dims);

  std::optional<Jof> next();

 private:
  struct Frame {
    std::vector<Step> candidates;
    std::size_t pos = 0;
  };
  std::vector<Step> candidates_after(int last_direction) const;

  std::vector<Int> dims_;
  std::vector<Int> remaining_;
  std::size_t open_directions_ = 0;
  std::vector<Step> path_;
  std::vector<Frame> stack_;
};

std::vector<Jof> enumerate_jofs(const std::vector<Int>& dims);

/// Number of JOFs of `dims` by memoised recursion; matches the length of the
/// enumeration.
std::uint64_t count_jofs(const std::vector<Int>& dims);

/// Fuses adjacent same-direction steps (B_{j,a} B_{j,b} = B_{j,ab}) until the
/// adjacent-direction clause holds. Requires the product clause.
Jof canonicalise(const std::vector<Step>& steps, const std::vector<Int>& dims);

/// Parses `1:5,2:2,...`. The order m is the largest direction named; dims are
/// the per-direction products.
Jof parse_jof(std::string_view text);
std::string format_jof(const Jof& jof);

std::vector<Int> positive_divisors_from_two(Int n);

}  // namespace addsys
