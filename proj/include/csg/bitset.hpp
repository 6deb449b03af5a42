#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace csg {

/// Fixed-universe dynamic bitset used for hyperplane index sets. Word
/// count is determined by the universe size given at construction.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool contains(const Bitset& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (other.w_[i] & ~w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (other.w_[i] & w_[i]) return true;
    return false;
  }
  int intersection_count(const Bitset& other) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] & other.w_[i]);
    return c;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  /// Lexicographic order on the index sequence (lowest index first).
  bool operator<(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) {
      if (w_[i] != o.w_[i]) {
        // Lower set bits compare first: reverse bits within the word so
        // that the smallest differing index decides.
        std::uint64_t d = w_[i] ^ o.w_[i];
        std::uint64_t low = d & (~d + 1);
        return w_[i] & low;  // the one holding the lowest differing bit wins
      }
    }
    return w_.size() < o.w_.size();
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (auto w : w_) h = h * 1099511628211ull + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace csg
