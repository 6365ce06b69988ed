#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace siglat {

/// Fixed-width dynamic bit set used as the membership vector of a subgroup
/// over its parent group's element table.
class DynBitset {
 public:
  DynBitset() : nbits_(0) {}
  explicit DynBitset(int nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool subset_of(const DynBitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  DynBitset operator&(const DynBitset& o) const {
    DynBitset r(nbits_);
    for (size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  DynBitset operator|(const DynBitset& o) const {
    DynBitset r(nbits_);
    for (size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  bool operator==(const DynBitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const DynBitset& o) const { return !(*this == o); }

  // Canonical order: numeric comparison of the word array, low word first.
  bool operator<(const DynBitset& o) const { return words_ < o.words_; }

  /// Lowest set bit, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(int(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  /// Set bits as a sorted index list.
  std::vector<int> indices() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int nbits_;
  std::vector<uint64_t> words_;
};

struct DynBitsetHash {
  size_t operator()(const DynBitset& b) const { return b.hash(); }
};

}  // namespace siglat
