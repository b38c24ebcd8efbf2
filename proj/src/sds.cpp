#include "addsys/sds.hpp"

#include <algorithm>

namespace addsys {

std::string to_string(Flavour f) { return f == Flavour::Inclusive ? "inclusive" : "non-inclusive"; }

Flavour parse_flavour(const std::string& s) {
  if (s == "inclusive") return Flavour::Inclusive;
  if (s == "non-inclusive") return Flavour::NonInclusive;
  throw InputError("unknown flavour '" + s + "' (expected inclusive or non-inclusive)");
}

SdsSystem::SdsSystem(Flavour flavour, std::vector<ComponentSet> parts)
    : flavour_(flavour), parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("an SDS needs at least one part");
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j].empty()) throw InputError("SDS part " + std::to_string(j + 1) + " is empty");
    if (parts_[j][0] < 1) throw InputError("SDS part " + std::to_string(j + 1) + " must hold positive integers");
  }
}

namespace {

std::vector<Int> signed_copy(const ComponentSet& a, bool with_zero) {
  std::vector<Int> t;
  for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it) t.push_back(-*it);
  if (with_zero) t.push_back(0);
  t.insert(t.end(), a.begin(), a.end());
  return t;
}

void require_verified(const SdsSystem& s, const Limits& limits, Flavour expected) {
  if (s.flavour() != expected) throw InputError("expected a " + to_string(expected) + " SDS");
  if (auto r = verify_sds(s, limits); !r) throw VerificationFailed(r, "not a " + to_string(expected) + " SDS");
}

void require_parity(const SumSystem& ss, std::size_t want_mod2) {
  for (std::size_t j = 0; j < ss.order(); ++j)
    if (ss.part(j).size() % 2 != want_mod2)
      throw InputError("part " + std::to_string(j + 1) + " has " + (want_mod2 ? "even" : "odd") +
                       " cardinality; mixed-parity (hybrid) systems are not supported");
}

}  // namespace

VerificationReport verify_sds(const SdsSystem& s, const Limits& limits) {
  const bool inclusive = s.flavour() == Flavour::Inclusive;
  std::vector<std::vector<Int>> terms;
  for (const auto& p : s.parts()) terms.push_back(signed_copy(p, inclusive));
  std::vector<std::size_t> sizes;
  for (const auto& t : terms) sizes.push_back(t.size());
  const auto total = static_cast<Int>(capped_product(sizes, limits));
  const Progression target = inclusive ? Progression(-(total - 1) / 2, 1, total) : Progression(1 - total, 2, total);
  return sumset_matches(terms, target, limits);
}

VerificationReport verify_sds_two_part(const SdsSystem& s) {
  if (s.order() != 2) throw InputError("two-part check needs exactly two parts");
  const auto& a = s.parts()[0];
  const auto& b = s.parts()[1];
  std::vector<Int> values;
  for (Int x : a)
    for (Int y : b) {
      values.push_back(checked_add(x, y));
      values.push_back(x > y ? x - y : y - x);
    }
  const auto nm = static_cast<Int>(a.size() * b.size());
  if (s.flavour() == Flavour::Inclusive) {
    values.insert(values.end(), a.begin(), a.end());
    values.insert(values.end(), b.begin(), b.end());
    const auto count = checked_add(2 * nm, static_cast<Int>(a.size() + b.size()));
    return covers_progression(values, Progression(1, 1, count));
  }
  return covers_progression(values, Progression(1, 2, 2 * nm));
}

SumSystem sds_to_sumsys_noninclusive(const SdsSystem& s, const Limits& limits) {
  require_verified(s, limits, Flavour::NonInclusive);
  std::vector<ComponentSet> parts;
  for (const auto& a : s.parts()) {
    const Int top = a.max();
    std::vector<Int> out;
    for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it) out.push_back((top - *it) / 2);
    for (Int x : a) out.push_back((top + x) / 2);
    // A verified system has max +- a even for every a.
    parts.emplace_back(std::move(out));
  }
  return SumSystem(std::move(parts));
}

SdsSystem sumsys_to_sds_noninclusive(const SumSystem& ss, const Limits& limits) {
  require_parity(ss, 0);
  if (auto r = verify_sum_system(ss, limits); !r) throw VerificationFailed(r, "not a sum system");
  std::vector<ComponentSet> parts;
  for (const auto& p : ss.parts()) {
    const auto nu = p.size() / 2;
    std::vector<Int> out;
    for (std::size_t k = 1; k <= nu; ++k) out.push_back(p[nu - 1 + k] - p[nu - k]);
    parts.emplace_back(std::move(out));
  }
  return SdsSystem(Flavour::NonInclusive, std::move(parts));
}

SumSystem sds_to_sumsys_inclusive(const SdsSystem& s, const Limits& limits) {
  require_verified(s, limits, Flavour::Inclusive);
  std::vector<ComponentSet> parts;
  for (const auto& a : s.parts()) {
    const Int top = a.max();
    std::vector<Int> out;
    for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it) out.push_back(top - *it);
    out.push_back(top);
    for (Int x : a) out.push_back(checked_add(top, x));
    parts.emplace_back(std::move(out));
  }
  return SumSystem(std::move(parts));
}

SdsSystem sumsys_to_sds_inclusive(const SumSystem& ss, const Limits& limits) {
  require_parity(ss, 1);
  if (auto r = verify_sum_system(ss, limits); !r) throw VerificationFailed(r, "not a sum system");
  std::vector<ComponentSet> parts;
  for (std::size_t j = 0; j < ss.order(); ++j) {
    const auto& p = ss.part(j);
    const auto nu = p.size() / 2;
    std::vector<Int> out;
    for (std::size_t k = 1; k <= nu; ++k) {
      const Int diff = p[nu + k] - p[nu - k];
      if (diff % 2 != 0)
        throw InternalContradiction("part " + std::to_string(j + 1) + " gives a non-integer half-difference");
      out.push_back(diff / 2);
    }
    parts.emplace_back(std::move(out));
  }
  return SdsSystem(Flavour::Inclusive, std::move(parts));
}

SumSystem sds_to_sumsys(const SdsSystem& s, const Limits& limits) {
  return s.flavour() == Flavour::Inclusive ? sds_to_sumsys_inclusive(s, limits) : sds_to_sumsys_noninclusive(s, limits);
}

Flavour infer_flavour(const SumSystem& ss) {
  const auto odd = std::count_if(ss.parts().begin(), ss.parts().end(),
                                 [](const ComponentSet& p) { return p.size() % 2 == 1; });
  if (odd == 0) return Flavour::NonInclusive;
  if (static_cast<std::size_t>(odd) == ss.order()) return Flavour::Inclusive;
  for (std::size_t j = 0; j < ss.order(); ++j)
    if (ss.part(j).size() % 2 != ss.part(0).size() % 2)
      throw InputError("mixed-parity sum system: part " + std::to_string(j + 1) +
                       " differs in cardinality parity from part 1; hybrid systems are not supported");
  throw InputError("mixed-parity sum system");
}

SdsSystem sumsys_to_sds(const SumSystem& ss, Flavour flavour, const Limits& limits) {
  return flavour == Flavour::Inclusive ? sumsys_to_sds_inclusive(ss, limits) : sumsys_to_sds_noninclusive(ss, limits);
}

}  // namespace addsys
