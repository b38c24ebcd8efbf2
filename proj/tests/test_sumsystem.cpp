#include <gtest/gtest.h>

#include <random>

#include "addsys/reference.hpp"
#include "addsys/sumsystem.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace addsys;

namespace {

SumSystem make(const fixtures::Parts& parts) {
  std::vector<ComponentSet> sets;
  for (const auto& p : parts) sets.emplace_back(p);
  return SumSystem(sets);
}

fixtures::Parts raw(const SumSystem& ss) {
  fixtures::Parts out;
  for (const auto& p : ss.parts()) out.push_back(p.elements());
  return out;
}

// Base-q digits: part i is {0, q^i, ..., (q-1) q^i}.
SumSystem base_q(Int q, int k) {
  std::vector<ComponentSet> parts;
  Int w = 1;
  for (int i = 0; i < k; ++i, w *= q) parts.push_back(progression_set({0, w, q}));
  return SumSystem(parts);
}

}  // namespace

TEST(Build, WorkedSystems) {
  EXPECT_EQ(raw(build_sum_system(fixtures::kE1a)), fixtures::kE1aParts);
  EXPECT_EQ(raw(build_sum_system(fixtures::kE1b)), fixtures::kE1bParts);
  EXPECT_EQ(raw(build_sum_system(fixtures::kE2)), fixtures::kE2SumParts);
  EXPECT_EQ(raw(build_sum_system(fixtures::kE3)), fixtures::kE3SumParts);
  EXPECT_EQ(raw(build_sum_system(fixtures::kE4)), fixtures::kE4Parts);
  EXPECT_EQ(raw(build_sum_system(Jof{{{1, 7}}, {7}})), (fixtures::Parts{{0, 1, 2, 3, 4, 5, 6}}));
}

TEST(Build, RejectsInvalid) {
  EXPECT_THROW(build_sum_system(Jof{{{1, 2}, {1, 2}}, {4}}), InputError);
  EXPECT_THROW(build_sum_system(Jof{{{1, 2}}, {2, 1}}), InputError);
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_sum_system(build_sum_system(fixtures::kE1b)).passed);
  EXPECT_TRUE(verify_sum_system(base_q(10, 3)).passed);
  auto r = verify_sum_system(make({{0, 1}, {0, 1}}));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.violated, "target_mismatch");
  EXPECT_EQ(r.witness, std::vector<Int>{1});
}

TEST(Palindromic, Examples) {
  EXPECT_TRUE(check_palindromic({0, 5, 90, 95, 360, 365, 450, 455}).passed);
  EXPECT_TRUE(check_palindromic({0}).passed);
  auto r = check_palindromic({0, 1, 3});
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witness, std::vector<Int>{1});
}

TEST(Parity, Examples) {
  EXPECT_EQ(parity_signature(make(fixtures::kE3SumParts)), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(parity_signature(make(fixtures::kE2SumParts)), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(parity_signature(make({{0, 1}})), (std::vector<int>{1}));
  EXPECT_TRUE(check_parity_dichotomy(make(fixtures::kE2SumParts)).passed);
  EXPECT_THROW(parity_signature(make({{0, 1}, {0, 1}})), VerificationFailed);
}

TEST(Polynomial, Examples) {
  EXPECT_EQ(characteristic_product(make({{0, 1}, {0, 2}})), (std::vector<Int>{1, 1, 1, 1}));
  EXPECT_TRUE(polynomial_check(make({{0, 1}, {0, 2}})).passed);
  const auto ones = characteristic_product(build_sum_system(fixtures::kE1a));
  EXPECT_EQ(ones, std::vector<Int>(720, 1));
  // 1+x+x^2+x^3+x^4+x^6: the first non-unit coefficient is x^5.
  const auto bad = make({{0, 2}, {0, 1, 4}});
  EXPECT_EQ(characteristic_product(bad), (std::vector<Int>{1, 1, 1, 1, 1, 0, 1}));
  auto r = polynomial_check(bad);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.violated, "coefficient");
  EXPECT_EQ(r.witness, std::vector<Int>{5});
}

TEST(Polynomial, MatchesOracleAndReference) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    fixtures::Parts parts;
    const int m = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < m; ++j) {
      std::set<Int> s;
      const int k = 2 + static_cast<int>(rng() % 4);
      while (static_cast<int>(s.size()) < k) s.insert(static_cast<Int>(rng() % 25));
      parts.emplace_back(s.begin(), s.end());
    }
    const auto ss = make(parts);
    const auto got = characteristic_product(ss);
    ASSERT_EQ(got, oracle::poly_product(parts));
    ASSERT_EQ(got, reference::characteristic_product(ss));
    ASSERT_EQ(polynomial_check(ss).passed, oracle::is_sum_system(parts));
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_sum_system(make(fixtures::kE1aParts)), fixtures::kE1a);
  EXPECT_EQ(decompose_sum_system(make(fixtures::kE1bParts)), fixtures::kE1b);
  EXPECT_EQ(decompose_sum_system(make(fixtures::kE3SumParts)), fixtures::kE3);
  EXPECT_EQ(decompose_sum_system(base_q(10, 2)), (Jof{{{1, 10}, {2, 10}}, {10, 10}}));
  EXPECT_THROW(decompose_sum_system(make({{0, 1}, {0, 1}})), VerificationFailed);
}

TEST(Decompose, KeepsCallerPartOrder) {
  // Parts swapped relative to a JOF build: the labels follow the input.
  const auto ss = make({{0, 2}, {0, 1}});
  EXPECT_EQ(decompose_sum_system(ss), (Jof{{{2, 2}, {1, 2}}, {2, 2}}));
}

// Every JOF up to product 128: formula oracle, verification, palindromy,
// parity, polynomial equivalence and the decomposition round trip.
TEST(RoundTrip, AllJofsUpTo128) {
  std::size_t checked = 0;
  for (const auto& dims : oracle::dims_up_to(128)) {
    JofEnumerator e(dims);
    while (auto j = e.next()) {
      const auto ss = build_sum_system(*j);
      const auto expect = oracle::sum_system(oracle::steps_of(*j), dims.size());
      ASSERT_EQ(raw(ss), expect);
      ASSERT_TRUE(verify_sum_system(ss).passed);
      ASSERT_TRUE(polynomial_check(ss).passed);
      for (const auto& p : ss.parts()) ASSERT_TRUE(check_palindromic(p).passed);
      ASSERT_TRUE(check_parity_dichotomy(ss).passed);
      ASSERT_EQ(decompose_sum_system(ss), *j);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100000u);
}

TEST(RoundTrip, OracleAgreesOnSmallSystems) {
  for (const auto& dims : oracle::dims_up_to(48))
    for (const auto& j : enumerate_jofs(dims)) ASSERT_TRUE(oracle::is_sum_system(raw(build_sum_system(j))));
}
