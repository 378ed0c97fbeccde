#include <gtest/gtest.h>

#include <random>

#include "ufc/bitvector.hpp"
#include "ufc/error.hpp"

using ufc::BitVector;

TEST(BitVector, TailBitsStayClear) {
  BitVector ones = BitVector::ones(70);
  EXPECT_EQ(ones.count(), 70u);
  EXPECT_EQ((~ones).count(), 0u);
  EXPECT_EQ((~BitVector(70)).count(), 70u);
}

TEST(BitVector, OperationsMatchBoolLoop) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
    BitVector x(n), y(n);
    std::vector<bool> bx(n), by(n);
    for (std::size_t i = 0; i < n; ++i) {
      bx[i] = rng() & 1;
      by[i] = rng() & 1;
      x.set(i, bx[i]);
      y.set(i, by[i]);
    }
    std::size_t both = 0, only_x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      both += bx[i] && by[i];
      only_x += bx[i] && !by[i];
    }
    EXPECT_EQ(ufc::count_and(x, y), both);
    EXPECT_EQ((x & y).count(), both);
    EXPECT_EQ(ufc::count_and_not(x, y), only_x);
    BitVector z = x;
    z.and_not(y);
    EXPECT_EQ(z.count(), only_x);
    EXPECT_EQ((x | y).count() + both, x.count() + y.count());
  }
}

TEST(BitVector, LengthMismatchThrows) {
  BitVector x(10), y(11);
  EXPECT_THROW(x &= y, ufc::Error);
  EXPECT_THROW(ufc::count_and(x, y), ufc::Error);
}
