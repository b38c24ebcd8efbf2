#include "addsys/factorisation.hpp"

#include <charconv>
#include <map>

namespace addsys {

namespace {

void require_enumerable(const std::vector<Int>& dims) {
  if (dims.empty()) throw InputError("dimension vector must have at least one entry");
  for (Int n : dims)
    if (n < 2) throw InputError("every dimension must be >= 2, got " + std::to_string(n));
}

}  // namespace

std::vector<Int> positive_divisors_from_two(Int n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d >= 2) small.push_back(d);
    if (d != n / d && n / d >= 2) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

VerificationReport validate_jof(const std::vector<Step>& steps, const std::vector<Int>& dims) {
  const auto m = static_cast<int>(dims.size());
  if (m < 1) return VerificationReport::fail("dims_nonempty");
  for (std::size_t l = 0; l < steps.size(); ++l) {
    if (steps[l].direction < 1 || steps[l].direction > m)
      return VerificationReport::fail("direction_range", {static_cast<Int>(l + 1)});
    if (steps[l].factor < 2) return VerificationReport::fail("factor_min", {static_cast<Int>(l + 1)});
  }
  std::vector<Int> prod(dims.size(), 1);
  for (const auto& s : steps) {
    auto& p = prod[static_cast<std::size_t>(s.direction - 1)];
    if (__builtin_mul_overflow(p, s.factor, &p)) return VerificationReport::fail("product", {s.direction});
  }
  for (int j = 0; j < m; ++j)
    if (prod[j] != dims[j]) return VerificationReport::fail("product", {j + 1});
  for (std::size_t l = 1; l < steps.size(); ++l)
    if (steps[l].direction == steps[l - 1].direction)
      return VerificationReport::fail("adjacent_direction", {static_cast<Int>(l + 1)});
  return VerificationReport::ok();
}

JofEnumerator::JofEnumerator(std::vector<Int> dims) : dims_(std::move(dims)), remaining_(dims_) {
  require_enumerable(dims_);
  open_directions_ = dims_.size();
  stack_.push_back(Frame{candidates_after(0), 0});
}

std::vector<Step> JofEnumerator::candidates_after(int last_direction) const {
  std::vector<Step> out;
  for (std::size_t j = 0; j < remaining_.size(); ++j) {
    const int dir = static_cast<int>(j + 1);
    if (dir == last_direction || remaining_[j] == 1) continue;
    for (Int f : positive_divisors_from_two(remaining_[j])) out.push_back(Step{dir, f});
  }
  return out;
}

std::optional<Jof> JofEnumerator::next() {
  auto undo = [this](const Step& s) {
    auto& r = remaining_[static_cast<std::size_t>(s.direction - 1)];
    if (r == 1) ++open_directions_;
    r *= s.factor;
  };
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.pos == top.candidates.size()) {
      stack_.pop_back();
      if (!path_.empty()) {
        undo(path_.back());
        path_.pop_back();
      }
      continue;
    }
    const Step s = top.candidates[top.pos++];
    auto& r = remaining_[static_cast<std::size_t>(s.direction - 1)];
    r /= s.factor;
    if (r == 1) --open_directions_;
    path_.push_back(s);
    if (open_directions_ == 0) {
      Jof out{path_, dims_};
      undo(s);
      path_.pop_back();
      return out;
    }
    stack_.push_back(Frame{candidates_after(s.direction), 0});
  }
  return std::nullopt;
}

std::vector<Jof> enumerate_jofs(const std::vector<Int>& dims) {
  std::vector<Jof> out;
  JofEnumerator e(dims);
  while (auto j = e.next()) out.push_back(std::move(*j));
  return out;
}

namespace {

using CountMemo = std::map<std::pair<std::vector<Int>, int>, std::uint64_t>;

std::uint64_t count_from(std::vector<Int>& remaining, int last, CountMemo& memo) {
  bool done = true;
  for (Int r : remaining) done = done && r == 1;
  if (done) return 1;
  auto key = std::make_pair(remaining, last);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < remaining.size(); ++j) {
    const int dir = static_cast<int>(j + 1);
    if (dir == last || remaining[j] == 1) continue;
    const Int r = remaining[j];
    for (Int f : positive_divisors_from_two(r)) {
      remaining[j] = r / f;
      if (__builtin_add_overflow(total, count_from(remaining, dir, memo), &total))
        throw OverflowError("JOF count exceeds 64 bits");
    }
    remaining[j] = r;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::uint64_t count_jofs(const std::vector<Int>& dims) {
  require_enumerable(dims);
  CountMemo memo;
  auto remaining = dims;
  return count_from(remaining, 0, memo);
}

Jof canonicalise(const std::vector<Step>& steps, const std::vector<Int>& dims) {
  std::vector<Step> merged;
  for (const auto& s : steps) {
    if (!merged.empty() && merged.back().direction == s.direction)
      merged.back().factor = checked_mul(merged.back().factor, s.factor);
    else
      merged.push_back(s);
  }
  auto report = validate_jof(merged, dims);
  if (!report) throw InputError("cannot canonicalise: " + report.violated.value_or("invalid"));
  return Jof{std::move(merged), dims};
}

Jof parse_jof(std::string_view text) {
  Jof jof;
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("malformed JOF '" + std::string(text) + "': " + why);
  };
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) throw fail("bad integer '" + std::string(s) + "'");
    return static_cast<Int>(v);
  };
  if (text.empty()) throw fail("empty");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(pos, comma - pos);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw fail("expected j:f");
    const Int dir = parse_int(item.substr(0, colon));
    const Int factor = parse_int(item.substr(colon + 1));
    if (dir < 1 || dir > 1'000'000) throw fail("direction out of range");
    if (factor < 2) throw fail("factor must be >= 2");
    jof.steps.push_back(Step{static_cast<int>(dir), factor});
    pos = comma + 1;
  }
  int m = 0;
  for (const auto& s : jof.steps) m = std::max(m, s.direction);
  jof.dims.assign(static_cast<std::size_t>(m), 1);
  for (const auto& s : jof.steps) {
    auto& d = jof.dims[static_cast<std::size_t>(s.direction - 1)];
    d = checked_mul(d, s.factor);
  }
  return jof;
}

std::string format_jof(const Jof& jof) {
  std::string out;
  for (const auto& s : jof.steps) {
    if (!out.empty()) out += ',';
    out += std::to_string(s.direction) + ':' + std::to_string(s.factor);
  }
  return out;
}

}  // namespace addsys
