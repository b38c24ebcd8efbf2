#include "addsys/reference.hpp"

#include <algorithm>

namespace addsys::reference {

std::vector<Int> minkowski_sum(std::span<const ComponentSet> sets, const Limits& limits) {
  std::vector<std::size_t> sizes;
  for (const auto& s : sets) sizes.push_back(s.size());
  const auto total = capped_product(sizes, limits);
  std::vector<Int> out;
  out.reserve(total);
  if (total == 0) return out;
  std::vector<std::size_t> idx(sets.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    Int sum = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) sum = checked_add(sum, sets[j][idx[j]]);
    out.push_back(sum);
    for (std::size_t j = sets.size(); j-- > 0;) {
      if (++idx[j] < sets[j].size()) break;
      idx[j] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport covers_progression(std::span<const Int> values, const Progression& p) {
  std::vector<Int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return is_progression(sorted, p);
}

Cuboid building_op(int direction, Int copies, const Cuboid& m) {
  if (direction < 1 || static_cast<std::size_t>(direction) > m.order()) throw InputError("direction out of range");
  const auto j = static_cast<std::size_t>(direction - 1);
  auto dims = m.dims();
  const Int nj = dims[j];
  dims[j] = checked_mul(nj, copies);
  const auto size = static_cast<Int>(m.size());
  auto out = Cuboid::filled(dims, 0);
  std::vector<Int> entries(out.size());
  for (std::size_t r = 0; r < entries.size(); ++r) {
    auto k = out.multiindex(r);
    const Int l = (k[j] - 1) / nj;
    k[j] -= l * nj;
    entries[r] = checked_add(m.at(k), checked_mul(l, size));
  }
  return Cuboid(std::move(dims), std::move(entries));
}

VerificationReport verify_property_V(const Cuboid& c) {
  const auto m = static_cast<Int>(c.order());
  std::vector<Int> axis_index(c.order(), 1);
  for (std::size_t r = 0; r < c.size(); ++r) {
    const auto k = c.multiindex(r);
    __int128 expected = -static_cast<__int128>(m - 1) * c[0];
    for (std::size_t j = 0; j < c.order(); ++j) {
      std::fill(axis_index.begin(), axis_index.end(), 1);
      axis_index[j] = k[j];
      expected += c.at(axis_index);
    }
    if (expected != c[r]) return VerificationReport::fail("property_V", k);
  }
  return VerificationReport::ok();
}

std::vector<Int> characteristic_product(const SumSystem& ss, const Limits& limits) {
  Int degree = 0;
  for (const auto& p : ss.parts()) degree = checked_add(degree, p.max());
  if (static_cast<std::uint64_t>(degree) + 1 > limits.max_product) throw CapExceeded("degree exceeds cap");
  std::vector<Int> acc{1};
  for (const auto& part : ss.parts()) {
    std::vector<Int> next(acc.size() + static_cast<std::size_t>(part.max()), 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (Int a : part) next[i + static_cast<std::size_t>(a)] += acc[i];
    acc.swap(next);
  }
  return acc;
}

}  // namespace addsys::reference
