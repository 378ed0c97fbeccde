#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ufc {

/// Fixed-length packed bit string. Bits past `size()` in the last word are kept zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  static BitVector ones(std::size_t size) { return BitVector(size, true); }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1};
  }
  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }

  std::span<const Word> words() const noexcept { return words_; }

  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  BitVector& operator^=(const BitVector& other);
  /// this &= ~other
  BitVector& and_not(const BitVector& other);

  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  BitVector operator~() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::size_t hash() const noexcept;

 private:
  void clear_tail() noexcept;
  void check_same_size(const BitVector& other) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// popcount(x & y) without materializing the intersection.
std::size_t count_and(const BitVector& x, const BitVector& y);
/// popcount(x & ~y).
std::size_t count_and_not(const BitVector& x, const BitVector& y);

}  // namespace ufc
