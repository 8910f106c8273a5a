#pragma once

// Integer partitions, Young-diagram cells and Jordan types.
//
// Coordinates are 1-based: row x counts from the top, column y from the left.
// A removable cell in column y sits at the bottom of that column, row λ'_y.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kirillov/bigint.hpp"
#include "kirillov/errors.hpp"

namespace kirillov {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidPartition("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("partition parts must be non-increasing");
    }
  }

  /// Parses "3,2,1,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return {};
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      std::string token(text.substr(pos, comma - pos));
      token.erase(0, token.find_first_not_of(" \t"));
      token.erase(token.find_last_not_of(" \t") + 1);
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad partition: '" + std::string(text) + "'");
      parts.push_back(std::stoi(token));
      pos = comma + 1;
    }
    try {
      return Partition(std::move(parts));
    } catch (const InvalidPartition& e) {
      throw ParseError("bad partition '" + std::string(text) + "': " + e.what());
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  /// Number of parts N.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// n = Σ λ_i.
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// λ_i with 1-based i; zero beyond the last part.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& x) { return os << x.to_string(); }

/// λ'_i = #{ j : λ_j ≥ i }.
inline Partition dual(const Partition& p) {
  std::vector<int> d;
  const int width = p.empty() ? 0 : p.parts().front();
  for (int i = 1; i <= width; ++i)
    d.push_back(static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(), [i](int x) { return x >= i; })));
  return Partition(std::move(d));
}

struct RemovableCell {
  std::size_t index = 0;  // position in removable_cells(), 0-based
  int row = 0;            // x
  int col = 0;            // y
  friend bool operator==(const RemovableCell&, const RemovableCell&) = default;
};

/// One cell per distinct part value, ordered by increasing column.
inline std::vector<RemovableCell> removable_cells(const Partition& p) {
  std::vector<RemovableCell> cells;
  const auto& parts = p.parts();
  // Walk from the bottom row upward so columns come out increasing.
  for (std::size_t i = parts.size(); i-- > 0;) {
    const bool last_of_value = i + 1 == parts.size() || parts[i + 1] < parts[i];
    if (last_of_value) cells.push_back({cells.size(), static_cast<int>(i) + 1, parts[i]});
  }
  return cells;
}

/// λ ↓ j: λ with the j-th removable cell deleted.
inline Partition remove_cell(const Partition& p, std::size_t j) {
  const auto cells = removable_cells(p);
  if (j >= cells.size()) throw IndexOutOfRange("remove_cell: no removable cell with index " + std::to_string(j));
  std::vector<int> parts = p.parts();
  auto& slot = parts[static_cast<std::size_t>(cells[j].row) - 1];
  if (--slot == 0) parts.erase(parts.begin() + cells[j].row - 1);
  return Partition(std::move(parts));
}

/// Jordan type of an n x n nilpotent matrix with ranks[i-1] = rank X^i.
/// Block size i occurs α_i = r_{i-1} - 2 r_i + r_{i+1} times, with r_0 = n.
inline Partition jordan_type_from_ranks(std::span<const int> ranks, int n) {
  auto r = [&](int i) -> long long {
    if (i <= 0) return n;
    return static_cast<std::size_t>(i) <= ranks.size() ? ranks[static_cast<std::size_t>(i) - 1] : 0;
  };
  if (n < 0) throw InvalidRankSequence("negative dimension");
  for (std::size_t i = static_cast<std::size_t>(std::max(n - 1, 0)); i < ranks.size(); ++i)
    if (ranks[i] != 0) throw InvalidRankSequence("rank of X^i must vanish for i >= n");
  std::vector<int> parts;
  long long total = 0;
  for (int i = n; i >= 1; --i) {
    const long long alpha = r(i - 1) - 2 * r(i) + r(i + 1);
    if (alpha < 0) throw InvalidRankSequence("negative block multiplicity for size " + std::to_string(i));
    for (long long k = 0; k < alpha; ++k) parts.push_back(i);
    total += alpha * i;
  }
  if (total != n) throw InvalidRankSequence("block sizes do not sum to the dimension");
  return Partition(std::move(parts));
}

/// dim V_λ = n! / Π hook lengths.
inline BigInt hook_dimension(const Partition& p) {
  const Partition d = dual(p);
  BigInt hooks = 1;
  for (std::size_t i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      const int arm = p.part(i) - j;
      const int leg = d.part(static_cast<std::size_t>(j)) - static_cast<int>(i);
      hooks *= arm + leg + 1;
    }
  return factorial(static_cast<unsigned>(p.size())) / hooks;
}

/// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace kirillov
