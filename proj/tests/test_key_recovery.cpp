#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dnacrypt {
namespace {

using testing::random_block;
using testing::random_bytes;
using testing::random_key;
using testing::rng;

BitBlock block_at(std::span<const std::uint8_t> data, std::size_t index, std::size_t side = 8) {
  const std::size_t bb = side * side / 8;
  return BitBlock::from_bytes(side, data.subspan(index * bb, bb));
}

TEST(RecoverDiagXor, EqualBlocksGiveZero) {
  const BitBlock p = random_block(8);
  EXPECT_EQ(attack::recover_diag_xor(p, p).s, BitVector(8, 0));
  EXPECT_THROW(attack::recover_diag_xor(p, BitBlock(16)), ContractError);
}

TEST(RecoverDiagXor, ExactForRandomKeys) {
  for (int t = 0; t < 256; ++t) {
    const LegacyKey k = random_key(8);
    const BitBlock p = random_block(8);
    EXPECT_EQ(attack::recover_diag_xor(p, legacy::encrypt_block(p, k)).s, SVector::from_key(k).s);
  }
}

TEST(OffDiagSystem, ShapeAndTruth) {
  for (int t = 0; t < 100; ++t) {
    const std::size_t side = t % 5 == 0 ? 16 : 8;
    const LegacyKey k = random_key(side);
    const BitBlock p = random_block(side);
    const BitBlock q = legacy::encrypt_block(p, k);
    const Gf2System sys = attack::build_offdiag_system(p, q, attack::recover_diag_xor(p, q));
    EXPECT_EQ(sys.equations().size(), side * (side - 1) + side);
    EXPECT_EQ(sys.unknown_count(), 2 * side);
    BitVector truth = k.rv;
    truth.insert(truth.end(), k.cv.begin(), k.cv.end());
    EXPECT_TRUE(sys.satisfied_by(truth));
  }
}

TEST(OffDiagSystem, IdentityPermutationWhenNoSwaps) {
  const BitBlock p = random_block(8);
  const BitBlock q = random_block(8);
  const Gf2System sys = attack::build_offdiag_system(p, q, SVector::from_s(BitVector(8, 0)));
  for (const auto& eq : sys.equations()) {
    const std::size_t i = eq.unknowns[0];
    const std::size_t j = eq.unknowns[1] - 8;
    if (i == j) continue;
    EXPECT_EQ(eq.rhs, p.get(i, j) ^ q.get(i, j));
  }
}

TEST(OffDiagSystem, ExactlyOneFreeVariable) {
  for (int t = 0; t < 100; ++t) {
    const LegacyKey k = random_key(8);
    const BitBlock p = random_block(8);
    const BitBlock q = legacy::encrypt_block(p, k);
    const Gf2Solution sol = solve_gf2(attack::build_offdiag_system(p, q, attack::recover_diag_xor(p, q)));
    EXPECT_EQ(sol.rank, 15u);
    EXPECT_EQ(sol.free_variables, std::vector<std::size_t>{0});  // r_0 pinned to 0
  }
}

TEST(RecoverRowColumn, ReturnsComplementClassRepresentative) {
  for (int t = 0; t < 100; ++t) {
    const LegacyKey k = random_key(8);
    const BitBlock p = random_block(8);
    const auto sol = attack::recover_row_column(p, legacy::encrypt_block(p, k));
    EXPECT_EQ(sol.key.rv[0], 0);
    const std::uint8_t flip = k.rv[0];
    for (std::size_t i = 0; i < 8; ++i) {
      EXPECT_EQ(sol.key.rv[i], k.rv[i] ^ flip);
      EXPECT_EQ(sol.key.cv[i], k.cv[i] ^ flip);
    }
  }
}

TEST(RecoverMv, FormulaInstanceWithZeroMv) {
  const LegacyKey k{testing::random_bits(8), testing::random_bits(8), BitVector(8, 0)};
  const LegacyKey next = legacy::key_update(k);
  const BitVector mv = attack::recover_mv({k.rv, k.cv}, {next.rv, next.cv});
  const SVector sv = SVector::from_key(k);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(mv[i], next.rv[i] ^ sv.ls[i]);
  EXPECT_EQ(mv, BitVector(8, 0));
}

TEST(RecoverMv, ReproducesLaterBlocks) {
  for (int t = 0; t < 100; ++t) {
    const LegacyKey k = random_key(8);
    const LegacyKey next = legacy::key_update(k);
    const BitVector mv = attack::recover_mv({k.rv, k.cv}, {next.rv, next.cv});
    EXPECT_EQ(mv, k.mv);
  }
}

// Complementing the whole next-block solution shifts both mv candidates
// equally, so the cross-check cannot tell; complementing only one vector is
// what trips it, and the aligned retry still yields an equivalent key.
TEST(RecoverMv, CrossCheckAndRetry) {
  for (int t = 0; t < 100; ++t) {
    const LegacyKey k = random_key(8);
    const LegacyKey next = legacy::key_update(k);

    attack::RowColumnKey whole{next.rv, next.cv};
    for (auto& b : whole.rv) b ^= 1u;
    for (auto& b : whole.cv) b ^= 1u;
    const BitVector shifted = attack::recover_mv({k.rv, k.cv}, whole);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(shifted[i], k.mv[i] ^ 1u);

    attack::RowColumnKey one_sided{next.rv, next.cv};
    for (auto& b : one_sided.rv) b ^= 1u;
    EXPECT_THROW(attack::recover_mv({k.rv, k.cv}, one_sided), attack::MvCrossCheckFailed);
    const BitVector mv = attack::recover_mv_aligned({k.rv, k.cv}, one_sided);
    const LegacyKey recovered{k.rv, k.cv, mv};
    const Bytes m = random_bytes(80);
    EXPECT_EQ(legacy::encrypt(m, recovered), legacy::encrypt(m, k));
  }
}

TEST(RecoverMv, UnrelatedVectorsFail) {
  attack::RowColumnKey a{BitVector(8, 0), BitVector(8, 0)};
  attack::RowColumnKey b{BitVector(8, 0), BitVector(8, 0)};
  b.cv[3] = 1;
  EXPECT_THROW(attack::recover_mv_aligned(a, b), attack::MvCrossCheckFailed);
}

TEST(FullBreak, RecoversPlaintextFromTwoKnownBlocks) {
  for (int t = 0; t < 100; ++t) {
    const LegacyKey k = random_key(8);
    const Bytes m = random_bytes(80);
    const Bytes c = legacy::encrypt(m, k);
    const auto result = attack::full_break(block_at(m, 0), block_at(c, 0), block_at(m, 1), block_at(c, 1), c, m.size());
    ASSERT_EQ(result.plaintext, m);
    EXPECT_EQ(result.recovered.pinned, std::vector<std::size_t>{0});
    // Functionally equivalent on fresh data even when not bitwise equal.
    const Bytes fresh = random_bytes(200);
    EXPECT_EQ(legacy::encrypt(fresh, result.recovered.key), legacy::encrypt(fresh, k));
  }
}

TEST(FullBreak, LargerBlocks) {
  const LegacyKey k = random_key(24);
  const Bytes m = random_bytes(72 * 5);
  const Bytes c = legacy::encrypt(m, k);
  const auto r = attack::full_break(block_at(m, 0, 24), block_at(c, 0, 24), block_at(m, 1, 24), block_at(c, 1, 24), c,
                                    m.size());
  EXPECT_EQ(r.plaintext, m);
}

TEST(FullBreak, LaterAnchorDecryptsForward) {
  const LegacyKey k = random_key(8);
  const Bytes m = random_bytes(8 * 10 - 3);
  const Bytes c = legacy::encrypt(m, k);
  const auto r =
      attack::full_break(block_at(m, 0), block_at(c, 0), block_at(m, 1), block_at(c, 1), c, m.size());
  EXPECT_EQ(r.plaintext, m);
  const auto later =
      attack::full_break(block_at(m, 4), block_at(c, 4), block_at(m, 5), block_at(c, 5), c, m.size(), 4);
  EXPECT_EQ(later.recovered.block_index, 4u);
  EXPECT_EQ(later.plaintext, Bytes(m.begin() + 32, m.end()));
}

TEST(FullBreak, TamperedCiphertextIsDetected) {
  int detected = 0;
  for (int t = 0; t < 64; ++t) {
    const LegacyKey k = random_key(8);
    const Bytes m = random_bytes(32);
    const Bytes c = legacy::encrypt(m, k);
    BitBlock q0 = block_at(c, 0);
    q0.flip(static_cast<std::size_t>(t) / 8, static_cast<std::size_t>(t) % 8);
    try {
      attack::full_break(block_at(m, 0), q0, block_at(m, 1), block_at(c, 1), c, m.size());
    } catch (const AttackFailed&) {
      ++detected;
    }
  }
  EXPECT_EQ(detected, 64);
}

TEST(FullBreak, FailsAgainstImprovedCipher) {
  int failed = 0;
  const int trials = 300;
  for (int t = 0; t < trials; ++t) {
    const LegacyKey k = random_key(8);
    const Bytes m = random_bytes(80);
    const Bytes c = improved::encrypt(m, k);
    try {
      attack::full_break(block_at(m, 0), block_at(c, 0), block_at(m, 1), block_at(c, 1), c, m.size());
    } catch (const AttackFailed&) {
      ++failed;
    }
  }
  EXPECT_GE(failed, trials * 99 / 100);
}

}  // namespace
}  // namespace dnacrypt
