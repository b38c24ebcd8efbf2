#include "addsys/core.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

namespace addsys {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

Int checked_product(std::span<const Int> values) {
  Int p = 1;
  for (Int v : values) p = checked_mul(p, v);
  return p;
}

Progression::Progression(Int start_, Int step_, Int count_) : start(start_), step(step_), count(count_) {
  if (step < 1) throw InputError("progression step must be >= 1");
  if (count < 1) throw InputError("progression count must be >= 1");
  (void)last();
}

Int Progression::last() const { return checked_add(start, checked_mul(count - 1, step)); }

bool Progression::contains(Int x) const {
  if (x < start) return false;
  // x >= start, so the unsigned difference is exact.
  const auto diff = static_cast<std::uint64_t>(x) - static_cast<std::uint64_t>(start);
  if (diff % static_cast<std::uint64_t>(step) != 0) return false;
  return diff / static_cast<std::uint64_t>(step) < static_cast<std::uint64_t>(count);
}

ComponentSet::ComponentSet(std::vector<Int> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 0) throw InputError("component set elements must be non-negative");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw InputError("component set must be strictly increasing");
  }
}

bool ComponentSet::contains(Int x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

ComponentSet progression_set(const Progression& p) {
  if (p.start < 0) throw InputError("component sets hold non-negative integers");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(p.count));
  for (Int k = 0; k < p.count; ++k) out.push_back(p.start + k * p.step);  // bounded by p.last()
  return ComponentSet(std::move(out));
}

std::uint64_t capped_product(std::span<const std::size_t> sizes, const Limits& limits) {
  std::uint64_t p = 1;
  for (std::size_t s : sizes) {
    if (s == 0) return 0;
    if (__builtin_mul_overflow(p, static_cast<std::uint64_t>(s), &p) || p > limits.max_product)
      throw CapExceeded("product of cardinalities exceeds cap of " + std::to_string(limits.max_product));
  }
  return p;
}

std::vector<std::vector<Int>> as_terms(std::span<const ComponentSet> sets) {
  std::vector<std::vector<Int>> terms;
  terms.reserve(sets.size());
  for (const auto& s : sets) terms.push_back(s.elements());
  return terms;
}

std::vector<Int> sumset_values(std::span<const std::vector<Int>> terms, const Limits& limits) {
  std::vector<std::size_t> sizes;
  for (const auto& t : terms) sizes.push_back(t.size());
  const std::uint64_t total = capped_product(sizes, limits);

  // A bound on |sum| that fits means no individual sum can overflow.
  Int bound = 0;
  for (const auto& t : terms) {
    Int m = 0;
    for (Int x : t) {
      if (x == std::numeric_limits<Int>::min()) throw OverflowError("term magnitude overflow");
      m = std::max(m, std::abs(x));
    }
    bound = checked_add(bound, m);
  }

  std::vector<Int> cur{0};
  cur.reserve(total);
  std::vector<Int> next;
  for (const auto& t : terms) {
    const auto width = static_cast<std::int64_t>(t.size());
    const auto rows = static_cast<std::int64_t>(cur.size());
    next.assign(static_cast<std::size_t>(rows * width), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
      const Int base = cur[i];
      Int* out = next.data() + i * width;
      for (std::int64_t k = 0; k < width; ++k) out[k] = base + t[k];
    }
    cur.swap(next);
  }
  if (terms.empty()) return {0};
  return cur;
}

std::vector<Int> minkowski_sum(std::span<const ComponentSet> sets, const Limits& limits) {
  auto terms = as_terms(sets);
  auto values = sumset_values(terms, limits);
  std::sort(values.begin(), values.end());
  return values;
}

VerificationReport is_progression(std::span<const Int> sorted, const Progression& p) {
  const std::size_t n = sorted.size();
  std::size_t i = 0;
  Int k = 0;
  while (i < n || k < p.count) {
    const bool have_target = k < p.count;
    const Int expected = have_target ? p.start + k * p.step : 0;
    if (i < n && have_target && sorted[i] == expected) {
      ++i;
      ++k;
      continue;
    }
    if (i < n && (!have_target || sorted[i] < expected)) return VerificationReport::fail("target_mismatch", {sorted[i]});
    return VerificationReport::fail("target_mismatch", {expected});
  }
  return VerificationReport::ok();
}

namespace {
// Dense presence array is sized to the target; beyond this and above the
// multiset size, fall back to sorting.
constexpr std::uint64_t kDensePresenceLimit = 100'000'000;
}  // namespace

VerificationReport covers_progression(std::span<const Int> values, const Progression& p) {
  const auto count = static_cast<std::uint64_t>(p.count);
  if (count > kDensePresenceLimit && count > values.size()) {
    std::vector<Int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return is_progression(sorted, p);
  }

  std::vector<unsigned char> seen(count, 0);
  Int worst = std::numeric_limits<Int>::max();
  const auto n = static_cast<std::int64_t>(values.size());
  const auto ustep = static_cast<std::uint64_t>(p.step);
#pragma omp parallel for schedule(static) reduction(min : worst)
  for (std::int64_t i = 0; i < n; ++i) {
    const Int v = values[i];
    if (!p.contains(v)) {
      worst = std::min(worst, v);
      continue;
    }
    const auto idx = (static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(p.start)) / ustep;
    std::atomic_ref<unsigned char> slot(seen[idx]);
    unsigned char expected = 0;
    if (!slot.compare_exchange_strong(expected, 1)) worst = std::min(worst, v);
  }
  const auto m = static_cast<std::int64_t>(count);
  std::int64_t first_missing = m;
#pragma omp parallel for schedule(static) reduction(min : first_missing)
  for (std::int64_t i = 0; i < m; ++i)
    if (seen[i] == 0) first_missing = std::min(first_missing, i);
  if (first_missing < m) worst = std::min(worst, p.start + first_missing * p.step);

  if (worst == std::numeric_limits<Int>::max()) return VerificationReport::ok();
  return VerificationReport::fail("target_mismatch", {worst});
}

VerificationReport sumset_matches(std::span<const std::vector<Int>> terms, const Progression& target,
                                  const Limits& limits) {
  const auto values = sumset_values(terms, limits);
  return covers_progression(values, target);
}

}  // namespace addsys
