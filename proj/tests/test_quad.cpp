#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace dnacrypt {
namespace {

using testing::random_quads;
using testing::rng;

TEST(BioXor, TableEntries) {
  EXPECT_EQ(bioxor(Quad::A, Quad::G), Quad::G);
  EXPECT_EQ(bioxor(Quad::T, Quad::T), Quad::A);
  EXPECT_EQ(bioxor(Quad::C, Quad::G), Quad::T);  // 01 ^ 10 = 11
}

TEST(BioXor, KleinFourGroupLaws) {
  for (Quad a : kAllQuads) {
    EXPECT_EQ(bioxor(a, a), Quad::A);
    EXPECT_EQ(bioxor(Quad::A, a), a);
    for (Quad b : kAllQuads) {
      EXPECT_EQ(bioxor(a, b), bioxor(b, a));
      for (Quad c : kAllQuads) EXPECT_EQ(bioxor(a, bioxor(b, c)), bioxor(bioxor(a, b), c));
    }
  }
}

TEST(BioMul, TableEntries) {
  EXPECT_EQ(biomul(Quad::A, Quad::T), Quad::A);
  EXPECT_EQ(biomul(Quad::C, Quad::G), Quad::G);
  EXPECT_EQ(biomul(Quad::G, Quad::G), Quad::T);  // x^2 = x + 1
}

TEST(BioMul, FieldLaws) {
  for (Quad a : kAllQuads) {
    EXPECT_EQ(biomul(Quad::A, a), Quad::A);
    EXPECT_EQ(biomul(Quad::C, a), a);
    for (Quad b : kAllQuads) {
      EXPECT_EQ(biomul(a, b), biomul(b, a));
      for (Quad c : kAllQuads) {
        EXPECT_EQ(biomul(a, biomul(b, c)), biomul(biomul(a, b), c));
        EXPECT_EQ(biomul(a, bioxor(b, c)), bioxor(biomul(a, b), biomul(a, c)));
      }
    }
  }
}

TEST(BioMul, NonzeroElementsFormCyclicGroupOfOrderThree) {
  // G generates {C, G, T}; every nonzero element has an inverse.
  EXPECT_EQ(biomul(Quad::G, Quad::G), Quad::T);
  EXPECT_EQ(biomul(biomul(Quad::G, Quad::G), Quad::G), Quad::C);
  for (Quad a : {Quad::C, Quad::G, Quad::T}) {
    int inverses = 0;
    for (Quad b : {Quad::C, Quad::G, Quad::T}) inverses += biomul(a, b) == Quad::C;
    EXPECT_EQ(inverses, 1);
    EXPECT_EQ(biomul(biomul(a, a), a), Quad::C);
  }
}

TEST(Transcribe, ComplementMap) {
  EXPECT_EQ(transcribe(Quad::A), Quad::T);
  EXPECT_EQ(transcribe(Quad::C), Quad::G);
  EXPECT_EQ(transcribe(Quad::G), Quad::C);
  EXPECT_EQ(transcribe(Quad::T), Quad::A);
  std::set<Quad> image;
  for (Quad q : kAllQuads) {
    EXPECT_EQ(transcribe(transcribe(q)), q);
    image.insert(transcribe(q));
  }
  EXPECT_EQ(image.size(), 4u);
}

TEST(ParallelAdd, ZeroIsIdentity) {
  const Quad64 zero{};
  const Quad64 v = random_quads<64>();
  EXPECT_EQ(parallel_add(zero, v), v);
}

TEST(ParallelAdd, OverflowStaysInsideLane) {
  Quad64 u{}, v{};
  for (std::size_t i = 0; i < 16; ++i) u[i] = Quad::T;
  v[0] = Quad::C;
  u[16] = Quad::G;  // lane 1 content that must not change
  const Quad64 out = parallel_add(u, v);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(out[i], Quad::A) << i;
  EXPECT_EQ(out[16], Quad::G);
  for (std::size_t i = 17; i < 64; ++i) EXPECT_EQ(out[i], Quad::A) << i;
}

TEST(ParallelAdd, MatchesIntegerOracle) {
  for (int t = 0; t < 20000; ++t) {
    const Quad64 u = random_quads<64>();
    const Quad64 v = random_quads<64>();
    ASSERT_EQ(parallel_add(u, v), testing::oracle::parallel_add(u, v));
  }
}

TEST(ParallelAdd, LaneIsolation) {
  for (int t = 0; t < 500; ++t) {
    const Quad64 u = random_quads<64>();
    const Quad64 v = random_quads<64>();
    Quad64 u2 = u;
    const std::size_t lane = rng()() % 4;
    u2[lane * 16 + rng()() % 16] = quad_from_code(static_cast<unsigned>(rng()()));
    const Quad64 a = parallel_add(u, v);
    const Quad64 b = parallel_add(u2, v);
    for (std::size_t i = 0; i < 64; ++i) {
      if (i / 16 != lane) {
        ASSERT_EQ(a[i], b[i]);
      }
    }
  }
}

TEST(ParallelAdd, SpanOverloadChecksLength) {
  const QuadVector u(64, Quad::C), v(63, Quad::C);
  EXPECT_THROW(parallel_add(u, v), ContractError);
  const QuadVector w(64, Quad::C);
  EXPECT_NO_THROW(parallel_add(u, w));
}

TEST(MessageCoding, PairsMapToLetters) {
  const BitVector bits{0, 0, 0, 1, 1, 0, 1, 1};
  EXPECT_EQ(to_string(encode_message(bits)), "ATCG");
  EXPECT_TRUE(encode_message(BitVector{}).empty());
  EXPECT_TRUE(decode_message(QuadVector{}).empty());
  EXPECT_THROW(encode_message(BitVector{1, 0, 1}), ContractError);
}

TEST(MessageCoding, DecodeInvertsEncode) {
  for (int t = 0; t < 200; ++t) {
    const BitVector m = testing::random_bits(2 * (rng()() % 300));
    EXPECT_EQ(decode_message(encode_message(m)), m);
    const Bytes b = testing::random_bytes(rng()() % 100);
    EXPECT_EQ(decode_message_bytes(encode_message_bytes(b)), b);
  }
}

TEST(MessageCoding, ByteFormAgreesWithBitForm) {
  const Bytes b = testing::random_bytes(64);
  EXPECT_EQ(encode_message_bytes(b), encode_message(bits_from_bytes(b)));
}

TEST(ParseDna, InternalCode) {
  EXPECT_EQ(parse_dna_string("AT"), (BitVector{0, 0, 1, 1}));
  EXPECT_EQ(parse_dna_string("ACGT"), (BitVector{0, 0, 0, 1, 1, 0, 1, 1}));
  EXPECT_TRUE(parse_dna_string("").empty());
}

TEST(ParseDna, RejectsForeignCharacterWithPosition) {
  try {
    parse_dna_string("AXT");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  EXPECT_THROW(parse_dna_string("acgt"), ParseError);
}

TEST(BytePacking, FirstQuadIsMostSignificant) {
  EXPECT_EQ(pack_byte(Quad::T, Quad::A, Quad::A, Quad::A), 0xC0);
  EXPECT_EQ(pack_byte(Quad::A, Quad::A, Quad::A, Quad::C), 0x01);
  for (unsigned b = 0; b < 256; ++b) {
    const auto q = unpack_byte(static_cast<std::uint8_t>(b));
    EXPECT_EQ(pack_byte(q[0], q[1], q[2], q[3]), b);
  }
  EXPECT_EQ(bytes_from_quads(quads_from_bytes(Bytes{0x1b, 0xe4})), (Bytes{0x1b, 0xe4}));
  EXPECT_EQ(to_string(quads_from_bytes(Bytes{0x1b})), "ACGT");
}

TEST(KeyText, LengthSelectsAlphabet) {
  EXPECT_EQ(parse_key_bits("ff0000", 24), bits_from_bytes(Bytes{0xff, 0x00, 0x00}));
  EXPECT_EQ(parse_key_bits("TTTTAAAAAAAA", 24), bits_from_bytes(Bytes{0xff, 0x00, 0x00}));
  EXPECT_EQ(parse_key_bits("ACCA00", 24), bits_from_bytes(Bytes{0xac, 0xca, 0x00}));
  EXPECT_THROW(parse_key_bits("ff00", 24), ContractError);
  EXPECT_THROW(parse_key_bits("zz0000", 24), ParseError);
}

}  // namespace
}  // namespace dnacrypt
