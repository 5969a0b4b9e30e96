#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dnacrypt {
namespace {

using testing::random_block;
using testing::random_bytes;
using testing::random_key;
using testing::rng;

TEST(ImprovedBlock, RoundTrip) {
  for (int t = 0; t < 1000; ++t) {
    const BitBlock p = random_block(8);
    const LegacyKey k = random_key(8);
    ASSERT_EQ(improved::decrypt_block(improved::encrypt_block(p, k), k), p);
  }
}

// With an all-zero key every index is swapped (cv == rv), and swapping all
// indices in order moves each off-diagonal cell twice, so only the S-box
// layer remains.
TEST(ImprovedBlock, ZeroKeyTrace) {
  const LegacyKey k{BitVector(8, 0), BitVector(8, 0), BitVector(8, 0)};
  const BitBlock p = random_block(8);
  BitBlock boxed = p;
  for (auto& row : boxed.bytes()) row = amino_sbox().forward[row];
  const BitBlock c = improved::encrypt_block(p, k);
  EXPECT_EQ(c, boxed);
  EXPECT_EQ(testing::oracle::transpose_steps(testing::oracle::to_matrix(boxed), BitVector(8, 1)),
            testing::oracle::to_matrix(boxed));
}

TEST(ImprovedBlock, MutatorFlipsDiagonal) {
  const BitBlock p = random_block(8);
  LegacyKey k = random_key(8);
  k.mv.assign(8, 0);
  LegacyKey k2 = k;
  k2.mv[5] = 1;
  const BitBlock a = improved::encrypt_block(p, k);
  const BitBlock b = improved::encrypt_block(p, k2);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(a.get(i, j) != b.get(i, j), i == 5 && j == 5);
}

TEST(ImprovedBlock, RejectsOtherSizes) {
  EXPECT_THROW(improved::encrypt_block(random_block(16), random_key(16)), ContractError);
  EXPECT_THROW(improved::encrypt(Bytes(8), random_key(16)), ContractError);
}

// The legacy diagonal relation q_ii ^ p_ii = rv_i ^ cv_i no longer holds.
TEST(ImprovedBlock, DiagonalNoLongerLeaksKey) {
  int holds = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const BitBlock p = random_block(8);
    const LegacyKey k = random_key(8);
    const BitBlock q = improved::encrypt_block(p, k);
    bool all = true;
    for (std::size_t i = 0; i < 8 && all; ++i) all = (q.get(i, i) ^ p.get(i, i)) == (k.rv[i] ^ k.cv[i]);
    holds += all;
  }
  // A random 8-bit coincidence rate is 1/256; allow generous slack.
  EXPECT_LT(holds, trials / 100);
}

TEST(ImprovedBlock, CiphertextBitFlipChangesPlaintext) {
  for (int t = 0; t < 500; ++t) {
    const BitBlock p = random_block(8);
    const LegacyKey k = random_key(8);
    BitBlock c = improved::encrypt_block(p, k);
    c.flip(rng()() % 8, rng()() % 8);
    EXPECT_NE(improved::decrypt_block(c, k), p);
  }
}

TEST(ImprovedCipher, RoundTripAllLengths) {
  const LegacyKey k = random_key(8);
  for (std::size_t len = 0; len <= 200; ++len) {
    const Bytes m = random_bytes(len);
    const Bytes c = improved::encrypt(m, k);
    ASSERT_EQ(c.size(), (len + 7) / 8 * 8);
    ASSERT_EQ(improved::decrypt(c, k, len), m);
  }
}

TEST(ImprovedCipher, BlocksFollowKeySchedule) {
  const LegacyKey k = random_key(8);
  const Bytes m = random_bytes(24);
  const Bytes c = improved::encrypt(m, k);
  LegacyKey kb = k;
  for (std::size_t b = 0; b < 3; ++b) {
    if (b > 0) kb = legacy::key_update(kb);
    const BitBlock e = improved::encrypt_block(BitBlock::from_bytes(8, std::span(m).subspan(8 * b, 8)), kb);
    EXPECT_TRUE(std::equal(e.bytes().begin(), e.bytes().end(), c.begin() + static_cast<std::ptrdiff_t>(8 * b)));
  }
}

TEST(ImprovedCipher, RejectsBadLengths) {
  const LegacyKey k = random_key(8);
  EXPECT_THROW(improved::decrypt(Bytes(7), k, 7), ContractError);
  EXPECT_THROW(improved::decrypt(Bytes(8), k, 9), ContractError);
}

}  // namespace
}  // namespace dnacrypt
