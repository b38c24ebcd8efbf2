#pragma once

// Integer set and progression primitives shared by every verifier.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace addsys {

using Int = std::int64_t;

/// Resource limits applied before anything proportional to a product of
/// cardinalities is materialised.
struct Limits {
  std::uint64_t max_product = 100'000'000;
};

enum class ErrorKind { Input, Overflow, Cap, Verification, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};
struct OverflowError : Error {
  explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(ErrorKind::Cap, what) {}
};
// Raised when an input violates a mathematical precondition that only
// shows up on inspection (e.g. a decomposition meets a non-sum-system).
struct InternalContradiction : Error {
  explicit InternalContradiction(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

/// Outcome of a verifier. `violated` names the first failing invariant;
/// `witness` holds the offending value, index or multiindex.
struct VerificationReport {
  bool passed = true;
  std::optional<std::string> violated;
  std::vector<Int> witness;
  std::map<std::string, std::string> notes;

  static VerificationReport ok() { return {}; }
  static VerificationReport fail(std::string invariant, std::vector<Int> witness = {}) {
    VerificationReport r;
    r.passed = false;
    r.violated = std::move(invariant);
    r.witness = std::move(witness);
    return r;
  }
  explicit operator bool() const noexcept { return passed; }
};

struct VerificationFailed : Error {
  explicit VerificationFailed(VerificationReport r, const std::string& context)
      : Error(ErrorKind::Verification, context + ": " + r.violated.value_or("?")), report(std::move(r)) {}
  VerificationReport report;
};

// Checked 64-bit arithmetic. Overflow throws OverflowError.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_product(std::span<const Int> values);

/// start + k*step for 0 <= k < count.
struct Progression {
  Int start = 0;
  Int step = 1;
  Int count = 1;

  Progression() = default;
  Progression(Int start, Int step, Int count);

  Int last() const;  // checked
  bool contains(Int x) const;
};

/// Strictly increasing list of non-negative integers.
class ComponentSet {
 public:
  ComponentSet() = default;
  explicit ComponentSet(std::vector<Int> elements);
  ComponentSet(std::initializer_list<Int> elements) : ComponentSet(std::vector<Int>(elements)) {}

  const std::vector<Int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  Int operator[](std::size_t i) const { return elements_[i]; }
  Int max() const { return elements_.back(); }
  bool contains(Int x) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const ComponentSet&, const ComponentSet&) = default;

 private:
  std::vector<Int> elements_;
};

ComponentSet progression_set(const Progression& p);

/// All prod |A_j| sums, one per index tuple, sorted with duplicates kept.
std::vector<Int> minkowski_sum(std::span<const ComponentSet> sets, const Limits& limits = {});

/// Same expansion over arbitrary signed term lists, in index-tuple order
/// (last list varies fastest). Not sorted.
std::vector<Int> sumset_values(std::span<const std::vector<Int>> terms, const Limits& limits = {});

/// Sorted multiset against a progression, each element expected once.
/// On failure the witness is the smallest value whose multiplicity differs.
VerificationReport is_progression(std::span<const Int> sorted, const Progression& p);

/// Unsorted multiset against a progression via a presence-count array.
/// Same witness rule as is_progression.
VerificationReport covers_progression(std::span<const Int> values, const Progression& p);

/// Expands the sumset of `terms` and checks it against `target`.
VerificationReport sumset_matches(std::span<const std::vector<Int>> terms, const Progression& target,
                                  const Limits& limits = {});

std::vector<std::vector<Int>> as_terms(std::span<const ComponentSet> sets);

// Product of cardinalities, checked against the cap.
std::uint64_t capped_product(std::span<const std::size_t> sizes, const Limits& limits);

}  // namespace addsys
