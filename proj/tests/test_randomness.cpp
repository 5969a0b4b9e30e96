#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dnacrypt {
namespace {

BitVector parse_bits(std::string_view s) {
  BitVector out;
  for (char c : s) out.push_back(c == '1');
  return out;
}

// 100-bit sequence used by the NIST SP 800-22 worked examples.
constexpr std::string_view kEpsilon100 =
    "1100100100001111110110101010001000100001011010001100001000110100110001001100011001100010100010111000";

TEST(Monobit, NistExamples) {
  EXPECT_NEAR(randomness::monobit(parse_bits("1011010101")), 0.527089, 1e-6);
  EXPECT_NEAR(randomness::monobit(parse_bits(kEpsilon100)), 0.109599, 1e-6);
}

TEST(BlockFrequency, NistExamples) {
  EXPECT_NEAR(randomness::block_frequency(parse_bits("0110011010"), 3), 0.801252, 1e-6);
  EXPECT_NEAR(randomness::block_frequency(parse_bits(kEpsilon100), 10), 0.706438, 1e-6);
}

TEST(Runs, NistExamples) {
  EXPECT_NEAR(randomness::runs(parse_bits("1001101011")), 0.147232, 1e-6);
  EXPECT_NEAR(randomness::runs(parse_bits(kEpsilon100)), 0.500798, 1e-6);
}

TEST(Runs, FailsWhenFrequencyPrerequisiteFails) {
  EXPECT_EQ(randomness::runs(BitVector(1000, 1)), 0.0);
}

TEST(Subset, AlternatingSequence) {
  BitVector alt(randomness::kMinimumBits);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = static_cast<std::uint8_t>(i & 1u);
  const auto r = randomness::randomness_subset(alt);
  EXPECT_NEAR(r.monobit, 1.0, 1e-12);
  EXPECT_NEAR(r.block_frequency, 1.0, 1e-9);
  EXPECT_LT(r.runs, 1e-6);
  EXPECT_FALSE(r.passed());
}

TEST(Subset, AllZero) {
  const auto r = randomness::randomness_subset(BitVector(randomness::kMinimumBits, 0));
  EXPECT_LT(r.monobit, 1e-6);
  EXPECT_LT(r.block_frequency, 1e-6);
  EXPECT_FALSE(r.passed());
}

TEST(Subset, RandomBitsPass) {
  const auto r = randomness::randomness_subset(bits_from_bytes(testing::random_bytes(1 << 17)));
  EXPECT_TRUE(r.passed());
}

TEST(Subset, MinimumLength) {
  EXPECT_THROW(randomness::randomness_subset(BitVector(randomness::kMinimumBits - 1)), ContractError);
}

}  // namespace
}  // namespace dnacrypt
