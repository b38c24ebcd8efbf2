#include "addsys/cuboid.hpp"

#include "growth.hpp"

namespace addsys {

namespace {

// Splits a cuboid around direction j (0-based): `inner` entries per step
// along j, `outer` repetitions of the whole j-line block.
struct Around {
  std::int64_t inner = 1;
  std::int64_t along = 1;
  std::int64_t outer = 1;
};

Around around(const std::vector<Int>& dims, std::size_t j) {
  Around a;
  for (std::size_t i = 0; i < j; ++i) a.inner *= dims[i];
  a.along = dims[j];
  for (std::size_t i = j + 1; i < dims.size(); ++i) a.outer *= dims[i];
  return a;
}

std::size_t checked_direction(int direction, std::size_t order) {
  if (direction < 1 || static_cast<std::size_t>(direction) > order)
    throw InputError("direction " + std::to_string(direction) + " out of range 1.." + std::to_string(order));
  return static_cast<std::size_t>(direction - 1);
}

std::vector<Int> with_direction_scaled(std::vector<Int> dims, std::size_t j, Int by) {
  dims[j] = checked_mul(dims[j], by);
  return dims;
}

}  // namespace

Cuboid::Cuboid(std::vector<Int> dims, std::vector<Int> entries) : dims_(std::move(dims)), entries_(std::move(entries)) {
  if (dims_.empty()) throw InputError("a cuboid needs at least one direction");
  Int total = 1;
  strides_.reserve(dims_.size());
  for (Int n : dims_) {
    if (n < 1) throw InputError("cuboid dimensions must be >= 1");
    strides_.push_back(total);
    total = checked_mul(total, n);
  }
  if (static_cast<std::size_t>(total) != entries_.size())
    throw InputError("cuboid has " + std::to_string(entries_.size()) + " entries, dims require " +
                     std::to_string(total));
  for (Int e : entries_)
    if (e < 0) throw InputError("cuboid entries must be non-negative");
}

Cuboid Cuboid::filled(std::vector<Int> dims, Int value) {
  Int total = 1;
  for (Int n : dims) total = checked_mul(total, std::max<Int>(n, 0));
  return Cuboid(std::move(dims), std::vector<Int>(static_cast<std::size_t>(total), value));
}

std::size_t Cuboid::offset(std::span<const Int> k) const {
  if (k.size() != dims_.size()) throw InputError("multiindex order mismatch");
  std::size_t off = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] < 1 || k[j] > dims_[j]) throw InputError("multiindex out of range");
    off += static_cast<std::size_t>((k[j] - 1) * strides_[j]);
  }
  return off;
}

std::vector<Int> Cuboid::multiindex(std::size_t linear) const {
  std::vector<Int> k(dims_.size());
  auto r = static_cast<Int>(linear);
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    k[j] = r % dims_[j] + 1;
    r /= dims_[j];
  }
  return k;
}

Cuboid kron_dir(std::span<const Int> v, int direction, const Cuboid& m) {
  const auto j = checked_direction(direction, m.order());
  if (v.empty()) throw InputError("Kronecker vector must be nonempty");
  const auto a = around(m.dims(), j);
  const auto reps = static_cast<std::int64_t>(v.size());
  const auto block = a.inner * a.along;  // one copy of M's j-block
  std::vector<Int> out(static_cast<std::size_t>(checked_mul(static_cast<Int>(m.size()), reps)));
  const auto& src = m.entries();
  bool overflow = false;
#pragma omp parallel for collapse(2) schedule(static) reduction(|| : overflow)
  for (std::int64_t o = 0; o < a.outer; ++o)
    for (std::int64_t l = 0; l < reps; ++l) {
      const Int* from = src.data() + o * block;
      Int* to = out.data() + (o * reps + l) * block;
      for (std::int64_t i = 0; i < block; ++i) overflow = __builtin_mul_overflow(v[l], from[i], &to[i]) || overflow;
    }
  if (overflow) throw OverflowError("64-bit overflow in Kronecker product");
  return Cuboid(with_direction_scaled(m.dims(), j, reps), std::move(out));
}

Cuboid add(const Cuboid& a, const Cuboid& b) {
  if (a.dims() != b.dims()) throw InputError("cuboid shapes differ");
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return Cuboid(a.dims(), std::move(out));
}

Cuboid building_op(int direction, Int copies, const Cuboid& m) {
  const auto j = checked_direction(direction, m.order());
  if (copies < 1) throw InputError("building operator needs k >= 1");
  const auto a = around(m.dims(), j);
  const auto block = a.inner * a.along;
  const auto size = static_cast<Int>(m.size());
  (void)checked_mul(size, copies);  // also bounds every offset l * size
  std::vector<Int> out(static_cast<std::size_t>(size * copies));
  const auto& src = m.entries();
  bool overflow = false;
#pragma omp parallel for collapse(2) schedule(static) reduction(|| : overflow)
  for (std::int64_t o = 0; o < a.outer; ++o)
    for (std::int64_t l = 0; l < copies; ++l) {
      const Int* from = src.data() + o * block;
      Int* to = out.data() + (o * copies + l) * block;
      const Int shift = l * size;
      for (std::int64_t i = 0; i < block; ++i) overflow = __builtin_add_overflow(from[i], shift, &to[i]) || overflow;
    }
  if (overflow) throw OverflowError("64-bit overflow in building operator");
  return Cuboid(with_direction_scaled(m.dims(), j, copies), std::move(out));
}

Cuboid trivial_cuboid(std::size_t order) {
  if (order == 0) throw InputError("order must be >= 1");
  return Cuboid(std::vector<Int>(order, 1), {0});
}

Cuboid build_cuboid(const Jof& jof, const Limits& limits) {
  if (auto r = validate_jof(jof); !r) throw InputError("invalid JOF: " + r.violated.value_or("?"));
  for (Int n : jof.dims)
    if (n < 2) throw InputError("every dimension must be >= 2 to build a cuboid");
  std::vector<std::size_t> sizes(jof.dims.begin(), jof.dims.end());
  (void)capped_product(sizes, limits);
  Cuboid m = trivial_cuboid(jof.order());
  for (const auto& s : jof.steps) m = building_op(s.direction, s.factor, m);
  return m;
}

SumSystem axis_sets(const Cuboid& m, const Limits&) {
  if (auto r = verify_reversible(m); !r) throw VerificationFailed(r, "axis_sets needs a principal reversible cuboid");
  std::vector<ComponentSet> parts;
  for (std::size_t j = 0; j < m.order(); ++j) {
    std::vector<Int> axis;
    for (Int k = 0; k < m.dims()[j]; ++k) axis.push_back(m[static_cast<std::size_t>(k * m.stride(j))]);
    parts.emplace_back(std::move(axis));
  }
  return SumSystem(std::move(parts));
}

Cuboid cuboid_from_sumsystem(const SumSystem& ss, const Limits& limits) {
  if (auto r = verify_sum_system(ss, limits); !r) throw VerificationFailed(r, "not a sum system");
  auto dims = ss.dims();
  std::vector<Int> entries(static_cast<std::size_t>(checked_product(dims)));
  const auto n = static_cast<std::int64_t>(entries.size());
  const auto m = dims.size();
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) {
    Int rest = r, sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
      sum += ss.part(j)[static_cast<std::size_t>(rest % dims[j])];
      rest /= dims[j];
    }
    entries[r] = sum;  // < prod n_j for a verified sum system
  }
  return Cuboid(std::move(dims), std::move(entries));
}

VerificationReport verify_property_V(const Cuboid& c) {
  const auto& dims = c.dims();
  const auto m = dims.size();
  const auto root = static_cast<__int128>(c[0]);
  const auto n = static_cast<std::int64_t>(c.size());
  std::int64_t first = n;
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t r = 0; r < n; ++r) {
    Int rest = r;
    __int128 expected = -static_cast<__int128>(m - 1) * root;
    for (std::size_t j = 0; j < m; ++j) {
      expected += c[static_cast<std::size_t>((rest % dims[j]) * c.stride(j))];
      rest /= dims[j];
    }
    if (expected != c[static_cast<std::size_t>(r)]) first = std::min(first, r);
  }
  if (first < n) return VerificationReport::fail("property_V", c.multiindex(static_cast<std::size_t>(first)));
  return VerificationReport::ok();
}

VerificationReport verify_property_R(const Cuboid& c) {
  const auto& dims = c.dims();
  const auto n = static_cast<std::int64_t>(c.size());
  for (std::size_t j = 0; j < dims.size(); ++j) {
    const Int stride = c.stride(j);
    const Int len = dims[j];
    std::int64_t first = n;
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::int64_t r = 0; r < n; ++r) {
      const Int pos = (r / stride) % len;
      const Int start = r - pos * stride;
      const Int mirror = start + (len - 1 - pos) * stride;
      const auto ends = static_cast<__int128>(c[start]) + c[start + (len - 1) * stride];
      if (static_cast<__int128>(c[r]) + c[mirror] != ends) first = std::min(first, r);
    }
    if (first < n) {
      auto w = c.multiindex(static_cast<std::size_t>(first));
      w.insert(w.begin(), static_cast<Int>(j + 1));
      return VerificationReport::fail("property_R", std::move(w));
    }
  }
  return VerificationReport::ok();
}

namespace {

VerificationReport check_monotone(const Cuboid& c) {
  const auto& dims = c.dims();
  const auto n = static_cast<std::int64_t>(c.size());
  for (std::size_t j = 0; j < dims.size(); ++j) {
    const Int stride = c.stride(j);
    std::int64_t first = n;
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::int64_t r = 0; r < n; ++r) {
      if ((r / stride) % dims[j] == 0) continue;
      if (c[r] <= c[r - stride]) first = std::min(first, r);
    }
    if (first < n) {
      auto w = c.multiindex(static_cast<std::size_t>(first));
      w.insert(w.begin(), static_cast<Int>(j + 1));
      return VerificationReport::fail("monotone", std::move(w));
    }
  }
  return VerificationReport::ok();
}

}  // namespace

VerificationReport verify_reversible(const Cuboid& c) {
  if (auto r = check_monotone(c); !r) return r;
  if (auto r = covers_progression(c.entries(), Progression(0, 1, static_cast<Int>(c.size()))); !r) {
    r.violated = "entry_set";
    return r;
  }
  if (auto r = verify_property_V(c); !r) return r;
  if (auto r = verify_property_R(c); !r)
    throw InternalContradiction("line reversal symmetry failed on a cuboid passing every other check");
  return VerificationReport::ok();
}

Jof decompose_cuboid(const Cuboid& c, const Limits&) {
  for (Int n : c.dims())
    if (n < 2) throw InputError("decomposition needs every dimension >= 2");
  if (auto r = verify_reversible(c); !r) throw VerificationFailed(r, "decompose needs a principal reversible cuboid");

  const auto& dims = c.dims();
  auto axis = [&](std::size_t j, Int k) { return c[static_cast<std::size_t>(k * c.stride(j))]; };
  auto is_principal = [&](const std::vector<Int>& sub) {
    const Int count = checked_product(sub);
    std::vector<Int> box(static_cast<std::size_t>(count));
    for (Int r = 0; r < count; ++r) {
      Int rest = r, off = 0;
      for (std::size_t j = 0; j < sub.size(); ++j) {
        off += (rest % sub[j]) * c.stride(j);
        rest /= sub[j];
      }
      box[static_cast<std::size_t>(r)] = c[static_cast<std::size_t>(off)];
    }
    return covers_progression(box, Progression(0, 1, count)).passed;
  };
  const auto steps = detail::grow_chain(dims, axis, is_principal);
  auto jof = canonicalise(steps, dims);
  if (build_cuboid(jof) != c) throw InternalContradiction("decomposition does not rebuild the input");
  return jof;
}

}  // namespace addsys
