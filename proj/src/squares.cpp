#include "addsys/squares.hpp"

#include <algorithm>
#include <numeric>

#include "addsys/sds.hpp"

namespace addsys {

namespace {

using Mat = std::vector<std::vector<Int>>;

Mat zeros(std::size_t n) { return Mat(n, std::vector<Int>(n, 0)); }

Mat outer(const std::vector<Int>& x, const std::vector<Int>& y) {
  Mat m = zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k) m[i][k] = checked_mul(x[i], y[k]);
  return m;
}

Mat transpose(const Mat& m) {
  Mat t = zeros(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) t[k][i] = m[i][k];
  return t;
}

Mat flip_rows(Mat m) {  // J M
  std::reverse(m.begin(), m.end());
  return m;
}

Mat flip_cols(Mat m) {  // M J
  for (auto& row : m) std::reverse(row.begin(), row.end());
  return m;
}

Mat combine(const Mat& x, Int sx, const Mat& y, Int sy) {
  Mat m = zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) m[i][k] = checked_add(sx * x[i][k], sy * y[i][k]);
  return m;
}

// Doubled-unit weightless blocks [tl tr; bl br] plus 2w = n^2 + 1.
SquareMatrix assemble(const Mat& tl, const Mat& tr, const Mat& bl, const Mat& br) {
  const auto nu = static_cast<Int>(tl.size());
  const Int n = 2 * nu;
  const Int two_w = checked_add(checked_mul(n, n), 1);
  std::vector<Int> d(static_cast<std::size_t>(n * n));
  for (Int i = 0; i < nu; ++i)
    for (Int k = 0; k < nu; ++k) {
      d[static_cast<std::size_t>(i * n + k)] = checked_add(tl[i][k], two_w);
      d[static_cast<std::size_t>(i * n + nu + k)] = checked_add(tr[i][k], two_w);
      d[static_cast<std::size_t>((nu + i) * n + k)] = checked_add(bl[i][k], two_w);
      d[static_cast<std::size_t>((nu + i) * n + nu + k)] = checked_add(br[i][k], two_w);
    }
  return SquareMatrix(n, std::move(d));
}

std::size_t equal_sizes(const ComponentSet& a, const ComponentSet& b) {
  if (a.size() != b.size())
    throw InputError("square construction needs |a| = |b|, got " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  if (a.empty()) throw InputError("square construction needs nonempty sets");
  return a.size();
}

void require_sds(const ComponentSet& a, const ComponentSet& b, Flavour f) {
  SdsSystem s(f, {a, b});
  if (auto r = verify_sds(s); !r) throw VerificationFailed(r, "inputs are not a " + to_string(f) + " SDS");
}

void require_even_nu(std::size_t nu) {
  if (nu % 2 != 0) throw InputError("construction needs even nu, got " + std::to_string(nu));
}

void require_signs(const std::vector<Int>& s, std::size_t nu, const char* name) {
  if (s.size() != nu) throw InputError(std::string("sign vector ") + name + " must have length " + std::to_string(nu));
  for (Int x : s)
    if (x != 1 && x != -1) throw InputError(std::string("sign vector ") + name + " must hold +1/-1");
  if (std::accumulate(s.begin(), s.end(), Int{0}) != 0)
    throw InputError(std::string("sign vector ") + name + " must sum to 0");
}

}  // namespace

SquareMatrix::SquareMatrix(Int n, std::vector<Int> doubled) : n_(n), doubled_(std::move(doubled)) {
  if (n_ < 1) throw InputError("square side must be >= 1");
  if (static_cast<Int>(doubled_.size()) != checked_mul(n_, n_)) throw InputError("square needs n*n entries");
}

SquareMatrix SquareMatrix::from_plain(const std::vector<std::vector<Int>>& rows) {
  const auto n = static_cast<Int>(rows.size());
  std::vector<Int> d;
  for (const auto& r : rows) {
    if (static_cast<Int>(r.size()) != n) throw InputError("square rows must all have length n");
    for (Int x : r) d.push_back(checked_mul(x, 2));
  }
  return SquareMatrix(n, std::move(d));
}

Int SquareMatrix::at(Int i, Int j) const {
  const Int d = doubled(i, j);
  if (d % 2 != 0) throw InternalContradiction("square entry is not an integer");
  return d / 2;
}

std::vector<std::vector<Int>> SquareMatrix::plain() const {
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n_));
  for (Int i = 0; i < n_; ++i)
    for (Int j = 0; j < n_; ++j) rows[static_cast<std::size_t>(i)].push_back(at(i, j));
  return rows;
}

std::string to_string(SquareKind k) {
  switch (k) {
    case SquareKind::Reversible: return "reversible";
    case SquareKind::Associated: return "associated";
    case SquareKind::MostPerfect: return "most-perfect";
  }
  return "?";
}

SquareKind parse_square_kind(const std::string& s) {
  if (s == "reversible") return SquareKind::Reversible;
  if (s == "associated" || s == "magic") return SquareKind::Associated;
  if (s == "most-perfect" || s == "mostperfect") return SquareKind::MostPerfect;
  throw InputError("unknown square kind '" + s + "'");
}

SquareMatrix reversible_square_even(const ComponentSet& a, const ComponentSet& b) {
  const auto nu = equal_sizes(a, b);
  require_sds(a, b, Flavour::NonInclusive);
  Mat tl = zeros(nu), tr = zeros(nu), bl = zeros(nu), br = zeros(nu);
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t k = 0; k < nu; ++k) {
      const Int ar = a[nu - 1 - k], af = a[k];
      const Int br_ = b[nu - 1 - i], bf = b[i];
      tl[i][k] = ar + br_;   // J (1 a^T + b 1^T) J
      tr[i][k] = -af + br_;  // J (-1 a^T + b 1^T)
      bl[i][k] = ar - bf;    // (1 a^T - b 1^T) J
      br[i][k] = -af - bf;
    }
  return assemble(tl, tr, bl, br);
}

SquareMatrix reversible_square_odd(const ComponentSet& a, const ComponentSet& b) {
  const auto nu = static_cast<Int>(equal_sizes(a, b));
  require_sds(a, b, Flavour::Inclusive);
  const Int n = 2 * nu + 1;
  const Int two_w = checked_add(checked_mul(n, n), 1);
  auto A = [&](Int k) { return a[static_cast<std::size_t>(k)]; };
  auto B = [&](Int k) { return b[static_cast<std::size_t>(k)]; };
  std::vector<Int> d(static_cast<std::size_t>(n * n));
  auto put = [&](Int i, Int j, Int weightless) {
    d[static_cast<std::size_t>(i * n + j)] = checked_add(checked_mul(2, weightless), two_w);
  };
  for (Int i = 0; i < nu; ++i) {
    for (Int k = 0; k < nu; ++k) {
      put(i, k, A(nu - 1 - k) + B(nu - 1 - i));
      put(i, nu + 1 + k, -A(k) + B(nu - 1 - i));
      put(nu + 1 + i, k, A(nu - 1 - k) - B(i));
      put(nu + 1 + i, nu + 1 + k, -A(k) - B(i));
    }
    put(i, nu, B(nu - 1 - i));   // J b
    put(nu + 1 + i, nu, -B(i));  // -b
    put(nu, i, A(nu - 1 - i));   // (J a)^T
    put(nu, nu + 1 + i, -A(i));  // -a^T
  }
  put(nu, nu, 0);
  return SquareMatrix(n, std::move(d));
}

std::vector<Int> alternating_signs(std::size_t nu) {
  std::vector<Int> s(nu);
  for (std::size_t i = 0; i < nu; ++i) s[i] = i % 2 == 0 ? 1 : -1;
  return s;
}

SquareMatrix associated_magic_square(const ComponentSet& a, const ComponentSet& b, const std::vector<Int>& v,
                                     const std::vector<Int>& w) {
  const auto nu = equal_sizes(a, b);
  require_even_nu(nu);
  require_signs(v, nu, "v");
  require_signs(w, nu, "w");
  require_sds(a, b, Flavour::NonInclusive);
  const Mat V = outer(a.elements(), v);
  const Mat W = outer(b.elements(), w);
  const Mat jvt = flip_rows(transpose(V));  // J V^T
  const Mat wj = flip_cols(W);              // W J
  const Mat tl = flip_cols(flip_rows(combine(jvt, 1, wj, 1)));
  const Mat tr = flip_rows(combine(jvt, -1, wj, 1));
  const Mat bl = flip_cols(combine(jvt, 1, wj, -1));
  const Mat br = combine(jvt, -1, wj, -1);
  return assemble(tl, tr, bl, br);
}

SquareMatrix most_perfect_square(const ComponentSet& a2, const ComponentSet& b2) {
  const auto nu = equal_sizes(a2, b2);
  require_even_nu(nu);
  require_sds(a2, b2, Flavour::NonInclusive);
  const auto sigma = alternating_signs(nu);
  const Mat as = outer(a2.elements(), sigma);  // 2 a Sigma^T
  const Mat sb = outer(sigma, b2.elements());  // Sigma (2 b)^T
  return assemble(combine(as, 1, sb, 1), combine(as, 1, sb, -1), combine(as, -1, sb, 1), combine(as, -1, sb, -1));
}

namespace {

VerificationReport check_entry_set(const SquareMatrix& m) {
  const Int n = m.n();
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(n * n));
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) {
      if (m.doubled(i, j) % 2 != 0) return VerificationReport::fail("entry_set", {i + 1, j + 1});
      values.push_back(m.doubled(i, j) / 2);
    }
  auto r = covers_progression(values, Progression(1, 1, n * n));
  if (!r) r.violated = "entry_set";
  return r;
}

VerificationReport check_line_sums(const SquareMatrix& m) {
  const Int n = m.n();
  const Int target = checked_mul(n, checked_add(checked_mul(n, n), 1));  // doubled magic constant
  for (Int i = 0; i < n; ++i) {
    Int row = 0, col = 0;
    for (Int j = 0; j < n; ++j) {
      row = checked_add(row, m.doubled(i, j));
      col = checked_add(col, m.doubled(j, i));
    }
    if (row != target) return VerificationReport::fail("row_sum", {i + 1});
    if (col != target) return VerificationReport::fail("column_sum", {i + 1});
  }
  return VerificationReport::ok();
}

VerificationReport check_reversible(const SquareMatrix& m) {
  const Int n = m.n();
  for (Int i = 0; i < n; ++i)
    for (Int l = 0; l < n; ++l) {
      if (m.doubled(i, l) + m.doubled(i, n - 1 - l) != m.doubled(i, 0) + m.doubled(i, n - 1))
        return VerificationReport::fail("property_R_rows", {i + 1, l + 1});
      if (m.doubled(l, i) + m.doubled(n - 1 - l, i) != m.doubled(0, i) + m.doubled(n - 1, i))
        return VerificationReport::fail("property_R_columns", {l + 1, i + 1});
    }
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j)
      if (m.doubled(i, j) + m.doubled(0, 0) != m.doubled(i, 0) + m.doubled(0, j))
        return VerificationReport::fail("property_V", {i + 1, j + 1});
  return VerificationReport::ok();
}

VerificationReport check_associated(const SquareMatrix& m) {
  const Int n = m.n();
  const Int target = 2 * (n * n + 1);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j)
      if (m.doubled(i, j) + m.doubled(n - 1 - i, n - 1 - j) != target)
        return VerificationReport::fail("associated", {i + 1, j + 1});
  return VerificationReport::ok();
}

VerificationReport check_most_perfect(const SquareMatrix& m) {
  const Int n = m.n();
  if (n % 2 != 0) return VerificationReport::fail("even_side", {n});
  const Int pair = 2 * (n * n + 1);
  const Int half = n / 2;
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) {
      const Int i1 = (i + 1) % n, j1 = (j + 1) % n;
      if (m.doubled(i, j) + m.doubled(i, j1) + m.doubled(i1, j) + m.doubled(i1, j1) != 2 * pair)
        return VerificationReport::fail("block_2x2", {i + 1, j + 1});
    }
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j)
      if (m.doubled(i, j) + m.doubled((i + half) % n, (j + half) % n) != pair)
        return VerificationReport::fail("diagonal_pairs", {i + 1, j + 1});
  return VerificationReport::ok();
}

}  // namespace

VerificationReport verify_square(const SquareMatrix& m, SquareKind kind) {
  // Keeps the doubled sums below well inside 64 bits.
  if (m.n() > 1'000'000) throw CapExceeded("square side too large");
  for (Int x : m.doubled_entries())
    if (x < -(Int{1} << 50) || x > (Int{1} << 50)) return VerificationReport::fail("entry_set", {x / 2});
  if (auto r = check_entry_set(m); !r) return r;
  VerificationReport r;
  switch (kind) {
    case SquareKind::Reversible:
      r = check_reversible(m);
      break;
    case SquareKind::Associated:
      r = check_line_sums(m);
      if (r) r = check_associated(m);
      break;
    case SquareKind::MostPerfect:
      r = check_line_sums(m);
      if (r) r = check_most_perfect(m);
      r.notes["two_by_two"] = "toroidal";
      break;
  }
  return r;
}

}  // namespace addsys
