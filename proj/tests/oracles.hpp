#pragma once

// Brute-force oracles written straight from the definitions. They share no
// code with the library beyond the plain value types.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "addsys/core.hpp"
#include "addsys/factorisation.hpp"

namespace oracle {

using addsys::Int;
using Steps = std::vector<std::pair<int, Int>>;

// Any direction != previous, any factor >= 2 dividing what remains.
inline void jofs_rec(std::vector<Int>& rem, int last, Steps& path, std::vector<Steps>& out) {
  if (std::all_of(rem.begin(), rem.end(), [](Int r) { return r == 1; })) {
    out.push_back(path);
    return;
  }
  for (int j = 0; j < static_cast<int>(rem.size()); ++j) {
    if (j + 1 == last) continue;
    for (Int f = 2; f <= rem[j]; ++f) {
      if (rem[j] % f) continue;
      rem[j] /= f;
      path.emplace_back(j + 1, f);
      jofs_rec(rem, j + 1, path, out);
      path.pop_back();
      rem[j] *= f;
    }
  }
}

inline std::vector<Steps> jofs(std::vector<Int> dims) {
  std::vector<Steps> out;
  Steps path;
  jofs_rec(dims, 0, path, out);
  return out;
}

// Counting without materialising, same recursion.
inline std::uint64_t count(std::vector<Int>& rem, int last) {
  if (std::all_of(rem.begin(), rem.end(), [](Int r) { return r == 1; })) return 1;
  std::uint64_t total = 0;
  for (int j = 0; j < static_cast<int>(rem.size()); ++j) {
    if (j + 1 == last) continue;
    for (Int f = 2; f <= rem[j]; ++f) {
      if (rem[j] % f) continue;
      rem[j] /= f;
      total += count(rem, j + 1);
      rem[j] *= f;
    }
  }
  return total;
}

// Every ordered dims vector with entries >= 2 and product <= bound, in
// increasing product order (ties in lexicographic order).
inline std::vector<std::vector<Int>> dims_up_to(Int bound) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  std::function<void(Int)> rec = [&](Int prod) {
    if (!cur.empty()) out.push_back(cur);
    for (Int d = 2; prod * d <= bound; ++d) {
      cur.push_back(d);
      rec(prod * d);
      cur.pop_back();
    }
  };
  rec(1);
  auto product = [](const std::vector<Int>& v) {
    Int p = 1;
    for (Int x : v) p *= x;
    return p;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const Int pa = product(a), pb = product(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

inline Steps steps_of(const addsys::Jof& jof) {
  Steps s;
  for (const auto& st : jof.steps) s.emplace_back(st.direction, st.factor);
  return s;
}

// A_j = sum over steps l in direction j of F_{l-1} * <f_l>, as sets.
inline std::vector<std::vector<Int>> sum_system(const Steps& steps, std::size_t m) {
  std::vector<std::set<Int>> parts(m, std::set<Int>{0});
  Int F = 1;
  for (auto [j, f] : steps) {
    std::set<Int> next;
    for (Int a : parts[j - 1])
      for (Int t = 0; t < f; ++t) next.insert(a + F * t);
    parts[j - 1] = next;
    F *= f;
  }
  std::vector<std::vector<Int>> out;
  for (auto& p : parts) out.emplace_back(p.begin(), p.end());
  return out;
}

// Every sum, recursively, counted into a map.
inline std::map<Int, int> sums(const std::vector<std::vector<Int>>& parts) {
  std::map<Int, int> counts;
  std::function<void(std::size_t, Int)> rec = [&](std::size_t j, Int acc) {
    if (j == parts.size()) {
      ++counts[acc];
      return;
    }
    for (Int a : parts[j]) rec(j + 1, acc + a);
  };
  rec(0, 0);
  return counts;
}

inline bool is_sum_system(const std::vector<std::vector<Int>>& parts) {
  Int P = 1;
  for (const auto& p : parts) P *= static_cast<Int>(p.size());
  const auto c = sums(parts);
  if (static_cast<Int>(c.size()) != P) return false;
  Int expect = 0;
  for (auto [v, k] : c)
    if (v != expect++ || k != 1) return false;
  return true;
}

// Signed sums: each part contributes +a or -a (and 0 when inclusive).
inline std::map<Int, int> signed_sums(const std::vector<std::vector<Int>>& parts, bool inclusive) {
  std::vector<std::vector<Int>> terms;
  for (const auto& p : parts) {
    std::vector<Int> t;
    for (Int a : p) {
      t.push_back(a);
      t.push_back(-a);
    }
    if (inclusive) t.push_back(0);
    terms.push_back(t);
  }
  return sums(terms);
}

inline bool is_sds(const std::vector<std::vector<Int>>& parts, bool inclusive) {
  const auto c = signed_sums(parts, inclusive);
  Int P = 1;
  for (const auto& p : parts) P *= inclusive ? 2 * static_cast<Int>(p.size()) + 1 : 2 * static_cast<Int>(p.size());
  if (static_cast<Int>(c.size()) != P) return false;
  Int expect = inclusive ? -(P - 1) / 2 : -(P - 1);
  for (auto [v, k] : c) {
    if (v != expect || k != 1) return false;
    expect += inclusive ? 1 : 2;
  }
  return true;
}

inline std::vector<Int> poly_product(const std::vector<std::vector<Int>>& parts) {
  std::map<Int, Int> acc{{0, 1}};
  for (const auto& p : parts) {
    std::map<Int, Int> next;
    for (auto [e, c] : acc)
      for (Int a : p) next[e + a] += c;
    acc = next;
  }
  std::vector<Int> out(static_cast<std::size_t>(acc.rbegin()->first + 1), 0);
  for (auto [e, c] : acc) out[static_cast<std::size_t>(e)] = c;
  return out;
}

// Dense tensor with its own indexing, direction 1 fastest.
struct Tensor {
  std::vector<Int> dims;
  std::vector<Int> data;

  std::size_t size() const {
    std::size_t s = 1;
    for (Int d : dims) s *= static_cast<std::size_t>(d);
    return s;
  }
  // 0-based multiindex.
  Int& at(const std::vector<Int>& k) { return data[lin(k)]; }
  Int at(const std::vector<Int>& k) const { return data[lin(k)]; }
  std::size_t lin(const std::vector<Int>& k) const {
    std::size_t off = 0, stride = 1;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      off += static_cast<std::size_t>(k[j]) * stride;
      stride *= static_cast<std::size_t>(dims[j]);
    }
    return off;
  }
  void each(const std::function<void(const std::vector<Int>&)>& f) const {
    std::vector<Int> k(dims.size(), 0);
    for (std::size_t n = 0; n < size(); ++n) {
      f(k);
      for (std::size_t j = 0; j < dims.size(); ++j) {
        if (++k[j] < dims[j]) break;
        k[j] = 0;
      }
    }
  }
};

// (v (x)_j M)_{n^ + l n_j e_j} = v_{l+1} M_{n^}; j is 0-based here.
inline Tensor kron_dir(const std::vector<Int>& v, std::size_t j, const Tensor& M) {
  Tensor out{M.dims, {}};
  out.dims[j] *= static_cast<Int>(v.size());
  out.data.assign(out.size(), 0);
  M.each([&](const std::vector<Int>& k) {
    for (std::size_t l = 0; l < v.size(); ++l) {
      auto kk = k;
      kk[j] += static_cast<Int>(l) * M.dims[j];
      out.at(kk) = v[l] * M.at(k);
    }
  });
  return out;
}

// Plain vector Kronecker product: (v (x) w)_{l1 |w| + l2} = v_l1 w_l2.
inline std::vector<Int> kron(const std::vector<Int>& v, const std::vector<Int>& w) {
  std::vector<Int> out;
  for (Int a : v)
    for (Int b : w) out.push_back(a * b);
  return out;
}

// B_{j,k}(M) = |M| <k> (x)_j 1 + 1_k (x)_j M.
inline Tensor building_op(std::size_t j, Int k, const Tensor& M) {
  std::vector<Int> ramp(static_cast<std::size_t>(k)), ones(static_cast<std::size_t>(k), 1);
  for (Int l = 0; l < k; ++l) ramp[static_cast<std::size_t>(l)] = l * static_cast<Int>(M.size());
  Tensor unit{M.dims, std::vector<Int>(M.size(), 1)};
  auto a = kron_dir(ramp, j, unit);
  auto b = kron_dir(ones, j, M);
  for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
  return a;
}

inline Tensor build(const Steps& steps, std::size_t m) {
  Tensor t{std::vector<Int>(m, 1), {0}};
  for (auto [j, f] : steps) t = building_op(static_cast<std::size_t>(j - 1), f, t);
  return t;
}

// (V) from the slice definition: in every order-2 slice, opposite corners of
// every axis-parallel rectangle have equal sums.
inline bool has_V(const Tensor& t) {
  const std::size_t m = t.dims.size();
  bool ok = true;
  t.each([&](const std::vector<Int>& k) {
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = a + 1; b < m && ok; ++b)
        for (Int x = k[a] + 1; x < t.dims[a] && ok; ++x)
          for (Int y = k[b] + 1; y < t.dims[b] && ok; ++y) {
            auto p = k, q = k, r = k;
            p[a] = x;
            q[b] = y;
            r[a] = x;
            r[b] = y;
            if (t.at(k) + t.at(r) != t.at(p) + t.at(q)) ok = false;
          }
  });
  return ok;
}

// (R): along every line, symmetric pairs share one sum.
inline bool has_R(const Tensor& t) {
  bool ok = true;
  for (std::size_t j = 0; j < t.dims.size(); ++j)
    t.each([&](const std::vector<Int>& k) {
      if (k[j] != 0) return;
      auto lo = k, hi = k;
      hi[j] = t.dims[j] - 1;
      const Int s = t.at(lo) + t.at(hi);
      for (Int l = 0; l < t.dims[j]; ++l) {
        auto p = k, q = k;
        p[j] = l;
        q[j] = t.dims[j] - 1 - l;
        if (t.at(p) + t.at(q) != s) ok = false;
      }
    });
  return ok;
}

inline bool increasing_lines(const Tensor& t) {
  bool ok = true;
  for (std::size_t j = 0; j < t.dims.size(); ++j)
    t.each([&](const std::vector<Int>& k) {
      if (k[j] == 0) return;
      auto p = k;
      --p[j];
      if (t.at(p) >= t.at(k)) ok = false;
    });
  return ok;
}

inline bool entries_are_range(const Tensor& t) {
  auto s = t.data;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<Int>(i)) return false;
  return true;
}

// Squares as plain row-major rows.
using Rows = std::vector<std::vector<Int>>;

inline Tensor as_tensor(const Rows& rows) {
  // Columns run along direction 1, rows along direction 2.
  const Int n = static_cast<Int>(rows.size());
  Tensor t{{n, n}, std::vector<Int>(static_cast<std::size_t>(n * n))};
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) t.at({j, i}) = rows[i][j];
  return t;
}

inline bool entries_one_to_n2(const Rows& rows) {
  std::vector<Int> all;
  for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<Int>(i) + 1) return false;
  return true;
}

inline bool magic_lines(const Rows& rows, Int target) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    Int r = 0, c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      r += rows[i][j];
      c += rows[j][i];
    }
    if (r != target || c != target) return false;
  }
  return true;
}

inline bool associated(const Rows& rows) {
  const std::size_t n = rows.size();
  const Int s = static_cast<Int>(n * n) + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i][j] + rows[n - 1 - i][n - 1 - j] != s) return false;
  return true;
}

inline bool most_perfect(const Rows& rows) {
  const std::size_t n = rows.size();
  const Int s = static_cast<Int>(n * n) + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t i1 = (i + 1) % n, j1 = (j + 1) % n;
      if (rows[i][j] + rows[i1][j] + rows[i][j1] + rows[i1][j1] != 2 * s) return false;
      // Both diagonal directions, wrapping.
      const std::size_t h = n / 2, ih = (i + h) % n;
      if (rows[i][j] + rows[ih][(j + h) % n] != s) return false;
      if (rows[i][j] + rows[ih][(j + n - h) % n] != s) return false;
    }
  return true;
}

}  // namespace oracle
