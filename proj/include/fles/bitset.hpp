#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fles {

/// Fixed-width dynamic bitset with in-place operations.
///
/// The enumeration and embedding kernels combine several masks per step
/// (`a & ~b & ~c`), so the fused helpers below avoid temporaries.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  void set(std::size_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void set_all() {
    std::fill(words_.begin(), words_.end(), ~uint64_t{0});
    if (bits_ & 63) words_.back() &= (uint64_t{1} << (bits_ & 63)) - 1;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  std::size_t count_and(const Bitset& o) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return n;
  }

  std::size_t find_first() const { return find_next_from(0); }
  std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }

  /// First index set in *this and clear in every mask of `excluded`.
  std::size_t find_first_excluding(std::initializer_list<const Bitset*> excluded) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t word = words_[w];
      for (const Bitset* e : excluded) word &= ~e->words_[w];
      if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    }
    return npos;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t word = words_[w];
      while (word) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        f(w * 64 + bit);
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) { return a.words_ <=> b.words_; }

  std::size_t hash() const {
    std::size_t h = bits_;
    for (auto w : words_) h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t find_next_from(std::size_t i) const {
    if (i >= bits_) return npos;
    std::size_t w = i >> 6;
    uint64_t word = words_[w] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
      if (++w >= words_.size()) return npos;
      word = words_[w];
    }
  }

  std::size_t bits_ = 0;
  std::vector<uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace fles
