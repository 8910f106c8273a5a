#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "kirillov/errors.hpp"
#include "kirillov/field.hpp"

namespace kirillov {

/// Dense square matrix over a finite field, row-major.
class FMatrix {
 public:
  FMatrix(FieldCtx ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n), a_(n * n, 0) {}
  FMatrix(FieldCtx ctx, std::size_t n, std::vector<Elem> entries)
      : ctx_(std::move(ctx)), n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) throw DimensionMismatch("FMatrix: entry count does not match dimension");
  }

  static FMatrix identity(const FieldCtx& ctx, std::size_t n) {
    FMatrix m(ctx, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
    return m;
  }

  const FieldCtx& field() const { return ctx_; }
  std::size_t dim() const { return n_; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const Elem> entries() const { return a_; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
  }

  friend bool operator==(const FMatrix& x, const FMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  friend FMatrix operator*(const FMatrix& x, const FMatrix& y) {
    if (x.n_ != y.n_) throw DimensionMismatch("FMatrix: dimension mismatch in product");
    const FieldCtx& f = x.ctx_;
    FMatrix r(f, x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const Elem xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) = f.add(r(i, j), f.mul(xik, y(k, j)));
      }
    return r;
  }

 private:
  FieldCtx ctx_;
  std::size_t n_;
  std::vector<Elem> a_;
};

inline FMatrix mat_pow(const FMatrix& m, unsigned e) {
  FMatrix r = FMatrix::identity(m.field(), m.dim());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

namespace detail {

// Fraction-free forward elimination on a row-major n x cols block; destroys its input.
template <class Field>
int eliminate_rank(const Field& f, Elem* a, std::size_t rows, std::size_t cols) {
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (std::size_t j = col; j < cols; ++j) std::swap(a[pivot * cols + j], a[row * cols + j]);
    const Elem pv = a[row * cols + col];
    for (std::size_t i = row + 1; i < rows; ++i) {
      const Elem factor = a[i * cols + col];
      if (factor == 0) continue;
      // row_i <- pv * row_i - factor * row_pivot
      for (std::size_t j = col; j < cols; ++j)
        a[i * cols + j] = f.sub(f.mul(pv, a[i * cols + j]), f.mul(factor, a[row * cols + j]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over the matrix's field.
inline int mat_rank(const FMatrix& m) {
  std::vector<Elem> work(m.entries().begin(), m.entries().end());
  return detail::eliminate_rank(m.field(), work.data(), m.dim(), m.dim());
}

/// (rank M, rank M^2, ..., rank M^(n-1)) for a nilpotent M.
inline std::vector<int> rank_sequence(const FMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<int> ranks;
  FMatrix power = m;
  for (std::size_t i = 1; i < n; ++i) {
    ranks.push_back(mat_rank(power));
    power = power * m;
  }
  if (n > 0 && !(n == 1 ? m.is_zero() : power.is_zero()))
    throw NotNilpotent("rank_sequence: matrix is not nilpotent");
  return ranks;
}

/// Rank-sequence evaluator for nilpotent matrices of dimension at most kMaxDim.
/// Reuses its scratch buffers, so one instance per worker thread.
class RankKernel {
 public:
  static constexpr std::size_t kMaxDim = 8;
  using Block = std::array<Elem, kMaxDim * kMaxDim>;

  RankKernel(FieldCtx ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n) {
    if (n > kMaxDim) throw TooLarge("RankKernel: dimension exceeds kernel capacity");
  }

  std::size_t dim() const { return n_; }

  /// Fills ranks[0..n-2] with rank X^i; stops early once a power vanishes.
  /// The input must be strictly upper triangular (row-major, n x n).
  void strict_upper_rank_sequence(const Block& x, std::span<int> ranks) {
    const std::size_t n = n_;
    std::fill(ranks.begin(), ranks.end(), 0);
    power_ = x;
    for (std::size_t i = 1; i < n; ++i) {
      // Entries of X^i vanish below the i-th superdiagonal.
      scratch_ = power_;
      const int r = detail::eliminate_rank(ctx_, scratch_.data(), n, n);
      ranks[i - 1] = r;
      if (r == 0) return;
      if (i + 1 < n) multiply_strict_upper(power_, x, i);
    }
  }

 private:
  // power <- power * x, where power = X^i has support on j - r >= i.
  void multiply_strict_upper(Block& power, const Block& x, std::size_t i) {
    const std::size_t n = n_;
    Block out{};
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = r + i; k < n; ++k) {
        const Elem prk = power[r * n + k];
        if (prk == 0) continue;
        for (std::size_t c = k + 1; c < n; ++c) {
          const Elem xkc = x[k * n + c];
          if (xkc != 0) out[r * n + c] = ctx_.add(out[r * n + c], ctx_.mul(prk, xkc));
        }
      }
    power = out;
  }

  FieldCtx ctx_;
  std::size_t n_;
  Block power_{}, scratch_{};
};

}  // namespace kirillov
