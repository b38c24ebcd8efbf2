#include "addsys/sumsystem.hpp"

#include <algorithm>

#include "growth.hpp"

namespace addsys {

SumSystem::SumSystem(std::vector<ComponentSet> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("a sum system needs at least one part");
  for (std::size_t j = 0; j < parts_.size(); ++j)
    if (parts_[j].size() < 2)
      throw InputError("part " + std::to_string(j + 1) + " has cardinality < 2");
}

std::vector<Int> SumSystem::dims() const {
  std::vector<Int> d;
  d.reserve(parts_.size());
  for (const auto& p : parts_) d.push_back(static_cast<Int>(p.size()));
  return d;
}

SumSystem build_sum_system(const Jof& jof) {
  if (auto r = validate_jof(jof); !r) throw InputError("invalid JOF: " + r.violated.value_or("?"));
  for (Int n : jof.dims)
    if (n < 2) throw InputError("every dimension must be >= 2 to form a sum system");

  std::vector<std::vector<Int>> sets(jof.dims.size(), std::vector<Int>{0});
  Int stride = 1;  // f_1 ... f_{l-1}
  for (const auto& s : jof.steps) {
    auto& a = sets[static_cast<std::size_t>(s.direction - 1)];
    std::vector<Int> grown;
    grown.reserve(a.size() * static_cast<std::size_t>(s.factor));
    for (Int k = 0; k < s.factor; ++k) {
      const Int offset = checked_mul(k, stride);
      for (Int x : a) grown.push_back(checked_add(x, offset));
    }
    a = std::move(grown);
    stride = checked_mul(stride, s.factor);
  }
  std::vector<ComponentSet> parts;
  for (auto& a : sets) parts.emplace_back(std::move(a));
  return SumSystem(std::move(parts));
}

VerificationReport verify_sum_system(const SumSystem& ss, const Limits& limits) {
  std::vector<std::size_t> sizes;
  for (const auto& p : ss.parts()) sizes.push_back(p.size());
  const auto d = capped_product(sizes, limits);
  const auto terms = as_terms(ss.parts());
  return sumset_matches(terms, Progression(0, 1, static_cast<Int>(d)), limits);
}

VerificationReport check_palindromic(const ComponentSet& cs) {
  if (cs.empty()) throw InputError("palindromy is undefined for an empty set");
  const Int top = cs.max();
  for (Int x : cs)
    if (!cs.contains(top - x)) return VerificationReport::fail("palindromic", {x});
  return VerificationReport::ok();
}

std::vector<int> parity_signature(const SumSystem& ss, const Limits& limits) {
  if (auto r = verify_sum_system(ss, limits); !r) throw VerificationFailed(r, "parity_signature needs a sum system");
  std::vector<int> out;
  for (const auto& p : ss.parts()) out.push_back(static_cast<int>(p.max() & 1));
  return out;
}

VerificationReport check_parity_dichotomy(const SumSystem& ss, const Limits& limits) {
  const auto sig = parity_signature(ss, limits);
  const bool all_odd_sizes =
      std::all_of(ss.parts().begin(), ss.parts().end(), [](const ComponentSet& p) { return p.size() % 2 == 1; });
  const auto odd_maxima = std::count(sig.begin(), sig.end(), 1);
  if (all_odd_sizes && odd_maxima != 0) return VerificationReport::fail("parity_all_even", {odd_maxima});
  if (!all_odd_sizes && odd_maxima != 1) return VerificationReport::fail("parity_exactly_one_odd", {odd_maxima});
  return VerificationReport::ok();
}

std::vector<Int> characteristic_product(const SumSystem& ss, const Limits& limits) {
  Int degree = 0;
  for (const auto& p : ss.parts()) degree = checked_add(degree, p.max());
  if (static_cast<std::uint64_t>(degree) + 1 > limits.max_product)
    throw CapExceeded("product polynomial degree exceeds cap");

  std::vector<Int> acc{1};
  std::vector<Int> next;
  for (const auto& part : ss.parts()) {
    const auto& exps = part.elements();
    const auto len = static_cast<std::int64_t>(acc.size());
    const auto out_len = len + part.max();
    next.assign(static_cast<std::size_t>(out_len), 0);
    // Each output coefficient is independent: next[t] = sum_a acc[t - a].
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < out_len; ++t) {
      Int c = 0;
      for (Int a : exps) {
        if (a > t) break;
        if (t - a < len) c += acc[t - a];
      }
      next[t] = c;
    }
    acc.swap(next);
  }
  return acc;
}

VerificationReport polynomial_check(const SumSystem& ss, const Limits& limits) {
  std::vector<std::size_t> sizes;
  for (const auto& p : ss.parts()) sizes.push_back(p.size());
  const auto d = static_cast<Int>(capped_product(sizes, limits));
  Int degree = 0;
  for (const auto& p : ss.parts()) degree = checked_add(degree, p.max());
  if (static_cast<std::uint64_t>(degree) + 1 > limits.max_product)
    return VerificationReport::fail("degree", {degree});  // d <= cap, so degree != d - 1

  const auto coeffs = characteristic_product(ss, limits);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 1) return VerificationReport::fail("coefficient", {static_cast<Int>(i)});
  if (static_cast<Int>(coeffs.size()) != d) return VerificationReport::fail("degree", {degree});
  return VerificationReport::ok();
}

Jof decompose_sum_system(const SumSystem& ss, const Limits& limits) {
  if (auto r = verify_sum_system(ss, limits); !r) throw VerificationFailed(r, "decompose needs a sum system");
  const auto dims = ss.dims();

  auto axis = [&](std::size_t j, Int k) { return ss.part(j)[static_cast<std::size_t>(k)]; };
  auto is_principal = [&](const std::vector<Int>& sub) {
    std::vector<std::vector<Int>> prefixes;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      const auto& e = ss.part(j).elements();
      prefixes.emplace_back(e.begin(), e.begin() + sub[j]);
    }
    const Int target = checked_product(sub);
    return sumset_matches(prefixes, Progression(0, 1, target), limits).passed;
  };
  const auto steps = detail::grow_chain(dims, axis, is_principal);
  auto jof = canonicalise(steps, dims);
  if (build_sum_system(jof) != ss) throw InternalContradiction("decomposition does not rebuild the input");
  return jof;
}

}  // namespace addsys
