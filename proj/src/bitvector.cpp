#include "ufc/bitvector.hpp"

#include "ufc/error.hpp"

namespace ufc {

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
  clear_tail();
}

void BitVector::clear_tail() noexcept {
  const std::size_t rem = size_ % kWordBits;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << rem) - 1;
  }
}

void BitVector::check_same_size(const BitVector& other) const {
  if (size_ != other.size_) {
    throw Error("bit-vector length mismatch: " + std::to_string(size_) + " vs " +
                std::to_string(other.size_));
  }
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::and_not(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (Word& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

std::size_t BitVector::hash() const noexcept {
  // FNV-1a over words, seeded with the length.
  std::uint64_t h = 1469598103934665603ULL ^ size_;
  for (Word w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::size_t count_and(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) throw Error("bit-vector length mismatch");
  const auto xw = x.words();
  const auto yw = y.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < xw.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(xw[i] & yw[i]));
  }
  return total;
}

std::size_t count_and_not(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) throw Error("bit-vector length mismatch");
  const auto xw = x.words();
  const auto yw = y.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < xw.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(xw[i] & ~yw[i]));
  }
  return total;
}

}  // namespace ufc
