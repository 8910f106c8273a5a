#pragma once

// Deliberately naive reference implementations, independent of the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long mod(long long x, long long p) { return ((x % p) + p) % p; }

inline long long pow_mod(long long b, long long e, long long p) {
  long long r = 1;
  b = mod(b, p);
  for (; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

/// Rank over GF(p), p prime, by textbook elimination with Fermat inverses.
inline int rank_mod_p(Mat a, long long p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  int rank = 0;
  for (std::size_t c = 0, r = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && mod(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const long long inv = pow_mod(a[r][c], p - 2, p);
    for (auto& x : a[r]) x = mod(x * inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const long long f = mod(a[i][c], p);
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    ++r;
    ++rank;
  }
  return rank;
}

inline Mat mul_mod_p(const Mat& x, const Mat& y, long long p) {
  const std::size_t n = x.size();
  Mat r(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = mod(r[i][j] + x[i][k] * y[k][j], p);
  return r;
}

/// Jordan type of a nilpotent matrix: blocks of size >= i number rank(X^{i-1}) - rank(X^i).
inline std::vector<int> jordan_type(const Mat& x, long long p) {
  const std::size_t n = x.size();
  std::vector<int> ranks{static_cast<int>(n)};
  Mat power = x;
  for (std::size_t i = 1; i <= n; ++i) {
    ranks.push_back(rank_mod_p(power, p));
    power = mul_mod_p(power, x, p);
  }
  std::vector<int> at_least(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) at_least[i] = ranks[i - 1] - ranks[i];
  std::vector<int> parts;
  for (std::size_t i = n; i >= 1; --i)
    for (int k = 0; k < at_least[i] - at_least[i + 1]; ++k) parts.push_back(static_cast<int>(i));
  return parts;
}

/// Number of standard Young tableaux by removing the largest entry from a corner.
inline long long syt_count(std::vector<int> shape) {
  static std::map<std::vector<int>, long long> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  long long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (i + 1 == shape.size() || shape[i] > shape[i + 1]) {
      auto smaller = shape;
      --smaller[i];
      total += syt_count(smaller);
    }
  return memo[shape] = total;
}

/// All partitions of n, from the 2^(n-1) compositions sorted and deduplicated.
inline std::set<std::vector<int>> partitions_by_compositions(int n) {
  std::set<std::vector<int>> out;
  if (n == 0) return {std::vector<int>{}};
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::vector<int> parts{1};
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1U << i)) parts.push_back(1);
      else ++parts.back();
    }
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

/// Cells whose removal leaves a partition, found by trying every cell.
inline std::set<std::pair<int, int>> removable_by_trial(const std::vector<int>& parts) {
  std::set<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (int c = 1; c <= parts[r]; ++c) {
      // Removing (r+1, c) keeps a diagram only if it is the last cell of its row and column.
      auto rows = parts;
      if (c != rows[r]) continue;
      --rows[r];
      bool ok = true;
      for (std::size_t i = 0; i + 1 < rows.size(); ++i) ok = ok && rows[i] >= rows[i + 1];
      if (ok) cells.insert({static_cast<int>(r + 1), c});
    }
  return cells;
}

/// Integer polynomial (lowest coefficient first) exact division; empty optional-like flag on failure.
inline bool divides(const std::vector<long long>& g, std::vector<long long> f) {
  const int dg = static_cast<int>(g.size()) - 1;
  for (int k = static_cast<int>(f.size()) - 1; k >= dg; --k) {
    if (f[k] % g[dg] != 0) return false;
    const long long t = f[k] / g[dg];
    for (int i = 0; i <= dg; ++i) f[k - dg + i] -= t * g[i];
  }
  for (int i = 0; i < dg; ++i)
    if (f[i] != 0) return false;
  return true;
}

/// Whether a primitive f with nonzero constant term has a factor of degree 1..deg/2,
/// searching all candidate factors with coefficients in [-bound, bound].
inline bool has_proper_factor(const std::vector<long long>& f, long long bound) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    std::vector<long long> g(k + 1, -bound);
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i > k) {
        if (g[k] <= 0 || f[d] % g[k] != 0 || f[0] % (g[0] == 0 ? 1 : g[0]) != 0 || g[0] == 0) return false;
        return divides(g, f);
      }
      for (long long v = -bound; v <= bound; ++v) {
        g[i] = v;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return true;
  }
  return false;
}

/// Number of distinct roots of f modulo p.
inline int roots_mod_p(const std::vector<long long>& f, long long p) {
  int count = 0;
  for (long long x = 0; x < p; ++x) {
    long long v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = mod(v * x + f[i], p);
    if (v == 0) ++count;
  }
  return count;
}

/// Generic g2 matrix written out entrywise from the displayed template.
inline Mat g2_template(long long a, long long b, long long c, long long d, long long e, long long f) {
  return {
      {0, a, b, 2 * c, d, e, 0},      {0, 0, f, -2 * b, -c, 0, e}, {0, 0, 0, 2 * a, 0, -c, -d},
      {0, 0, 0, 0, a, b, c},          {0, 0, 0, 0, 0, f, -b},      {0, 0, 0, 0, 0, 0, a},
      {0, 0, 0, 0, 0, 0, 0},
  };
}

}  // namespace oracle
