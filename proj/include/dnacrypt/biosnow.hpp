#pragma once

// Bio-SNOW: a quad-oriented stream cipher with two 128-quad feedback shift
// registers (s_0..s_127 and s_128..s_255) and three 64-quad FSM registers.
//
// Each keystream block: capture taps T1 = s_192..s_255 and T2 = s_0..s_63,
// clock both FSRs 128 times, clock the FSM once with the captured taps, and
// output Z = R1 ^ T1. One block is 64 quads (128 bits).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnacrypt/amino_sbox.hpp"
#include "dnacrypt/bits.hpp"
#include "dnacrypt/error.hpp"
#include "dnacrypt/quad.hpp"

namespace dnacrypt::biosnow {

inline constexpr std::size_t kStateQuads = 256;
inline constexpr std::size_t kHalfQuads = 128;
inline constexpr std::size_t kKeyQuads = 128;
inline constexpr std::size_t kBlockQuads = 64;
inline constexpr std::size_t kLoadClocks = 4 * kStateQuads;
inline constexpr std::size_t kClocksPerStep = 128;
inline constexpr std::size_t kInitRounds = 16;

struct KeyIv {
  Quad128 key{};
  Quad128 iv{};

  // 64 hex digits (32 bytes, four quads per byte) or 128 ACGT letters.
  static Quad128 parse(std::string_view text) {
    if (text.size() == kKeyQuads) return to_block<kKeyQuads>(parse_quads(text));
    if (text.size() == kKeyQuads / 2) return to_block<kKeyQuads>(quads_from_bytes(from_hex(text)));
    throw ContractError("Bio-SNOW key/IV must be 64 hex digits or 128 ACGT letters, got " +
                        std::to_string(text.size()) + " characters");
  }
  static KeyIv from_text(std::string_view key, std::string_view iv) { return {parse(key), parse(iv)}; }
};

struct TapPair {
  Quad64 t1{};  // s_192..s_255
  Quad64 t2{};  // s_0..s_63
};

// Each FSR half lives in a ring buffer; logical index 0 is the newest cell.
class BioSnowState {
 public:
  BioSnowState() = default;

  static BioSnowState from_quads(std::span<const Quad> s) {
    if (s.size() != kStateQuads) throw ContractError("state must have 256 quads");
    BioSnowState st;
    for (std::size_t i = 0; i < kStateQuads; ++i) st.set_s(i, s[i]);
    return st;
  }

  Quad s(std::size_t i) const noexcept {
    return i < kHalfQuads ? a_[(head_a_ + i) & (kHalfQuads - 1)]
                          : b_[(head_b_ + i - kHalfQuads) & (kHalfQuads - 1)];
  }
  void set_s(std::size_t i, Quad q) noexcept {
    if (i < kHalfQuads) {
      a_[(head_a_ + i) & (kHalfQuads - 1)] = q;
    } else {
      b_[(head_b_ + i - kHalfQuads) & (kHalfQuads - 1)] = q;
    }
  }
  std::array<Quad, kStateQuads> snapshot() const {
    std::array<Quad, kStateQuads> out{};
    for (std::size_t i = 0; i < kStateQuads; ++i) out[i] = s(i);
    return out;
  }

  Quad64 r1{}, r2{}, r3{};
  std::uint64_t fsr_clocks = 0;
  std::uint64_t fsm_clocks = 0;

  void fsr_clock() noexcept {
    const Quad t1 = bioxor(bioxor(s(100), s(127)), bioxor(biomul(s(126), s(125)), s(249)));
    const Quad t2 = bioxor(bioxor(s(240), s(255)), bioxor(biomul(s(253), s(254)), s(114)));
    head_a_ = (head_a_ + kHalfQuads - 1) & (kHalfQuads - 1);
    head_b_ = (head_b_ + kHalfQuads - 1) & (kHalfQuads - 1);
    a_[head_a_] = t2;
    b_[head_b_] = t1;
    ++fsr_clocks;
  }

  friend bool operator==(const BioSnowState& x, const BioSnowState& y) {
    return x.snapshot() == y.snapshot() && x.r1 == y.r1 && x.r2 == y.r2 && x.r3 == y.r3;
  }

 private:
  std::array<Quad, kHalfQuads> a_{};
  std::array<Quad, kHalfQuads> b_{};
  std::size_t head_a_ = 0;
  std::size_t head_b_ = 0;
};

inline void fsr_clock(BioSnowState& st) noexcept { st.fsr_clock(); }

inline TapPair capture_taps(const BioSnowState& st) noexcept {
  TapPair taps;
  for (std::size_t i = 0; i < kBlockQuads; ++i) {
    taps.t1[i] = st.s(192 + i);
    taps.t2[i] = st.s(i);
  }
  return taps;
}

// Transcription of every quad, then the amino S-box on each 4-quad group.
inline Quad64 bio_round(const Quad64& x) {
  const AminoSBox& box = amino_sbox();
  Quad64 out{};
  for (std::size_t g = 0; g < kBlockQuads; g += 4) {
    const std::uint8_t in = pack_byte(transcribe(x[g]), transcribe(x[g + 1]), transcribe(x[g + 2]),
                                      transcribe(x[g + 3]));
    const auto q = unpack_byte(box.forward[in]);
    for (std::size_t k = 0; k < 4; ++k) out[g + k] = q[k];
  }
  return out;
}

inline Quad64 bio_round(std::span<const Quad> x) { return bio_round(to_block<kBlockQuads>(x)); }

// All three registers update from their pre-clock values.
inline void fsm_clock(BioSnowState& st, const TapPair& taps) {
  const Quad64 r1 = bioxor(parallel_add(st.r2, st.r3), taps.t2);
  const Quad64 r2 = bio_round(st.r1);
  const Quad64 r3 = bio_round(st.r2);
  st.r1 = r1;
  st.r2 = r2;
  st.r3 = r3;
  ++st.fsm_clocks;
}

// Loads key and IV without clocking.
inline BioSnowState load(const KeyIv& kiv) {
  BioSnowState st;
  for (std::size_t i = 0; i < 64; ++i) {
    st.set_s(i, kiv.key[64 + i]);
    st.set_s(64 + i, kiv.iv[i]);
    st.set_s(128 + i, kiv.iv[64 + i]);
    st.set_s(192 + i, kiv.key[i]);
  }
  return st;
}

inline void step(BioSnowState& st) {
  const TapPair taps = capture_taps(st);
  for (std::size_t k = 0; k < kClocksPerStep; ++k) st.fsr_clock();
  fsm_clock(st, taps);
}

inline BioSnowState initialize(const KeyIv& kiv) {
  BioSnowState st = load(kiv);
  for (std::size_t k = 0; k < kLoadClocks; ++k) st.fsr_clock();
  for (std::size_t round = 1; round <= kInitRounds; ++round) {
    step(st);
    if (round == 15) {
      for (std::size_t i = 0; i < 64; ++i) st.r1[i] = bioxor(st.r1[i], kiv.key[i]);
    } else if (round == 16) {
      for (std::size_t i = 0; i < 64; ++i) st.r1[i] = bioxor(st.r1[i], kiv.key[64 + i]);
    }
  }
  return st;
}

inline Quad64 next_keystream_block(BioSnowState& st) {
  const TapPair taps = capture_taps(st);
  for (std::size_t k = 0; k < kClocksPerStep; ++k) st.fsr_clock();
  fsm_clock(st, taps);
  return bioxor(st.r1, taps.t1);
}

// Quad-at-a-time view of the keystream that never reuses a position.
class Keystream {
 public:
  explicit Keystream(const KeyIv& kiv) : state_(initialize(kiv)) {}

  Quad next() {
    if (pos_ == kBlockQuads) {
      block_ = next_keystream_block(state_);
      pos_ = 0;
    }
    ++consumed_;
    return block_[pos_++];
  }

  // Four consecutive quads packed into one byte (first quad most significant).
  std::uint8_t next_byte() {
    const Quad q0 = next();
    const Quad q1 = next();
    const Quad q2 = next();
    const Quad q3 = next();
    return pack_byte(q0, q1, q2, q3);
  }

  std::uint64_t quads_consumed() const noexcept { return consumed_; }
  const BioSnowState& state() const noexcept { return state_; }

 private:
  BioSnowState state_;
  Quad64 block_{};
  std::size_t pos_ = kBlockQuads;
  std::uint64_t consumed_ = 0;
};

// Raw keystream bytes, four quads per byte.
inline Bytes keystream_bytes(const KeyIv& kiv, std::size_t count) {
  Keystream ks(kiv);
  Bytes out(count);
  for (auto& b : out) b = ks.next_byte();
  return out;
}

// Message bytes are mapped to quads with the message coding (00->A, 01->T,
// 10->C, 11->G), BioXORed with the keystream, and mapped back. The same call
// decrypts.
inline Bytes stream_encrypt(std::span<const std::uint8_t> message, const KeyIv& kiv,
                            std::uint64_t* quads_consumed = nullptr) {
  Keystream ks(kiv);
  QuadVector quads = encode_message_bytes(message);
  for (Quad& q : quads) q = bioxor(q, ks.next());
  if (quads_consumed) *quads_consumed = ks.quads_consumed();
  return decode_message_bytes(quads);
}

inline Bytes stream_decrypt(std::span<const std::uint8_t> ciphertext, const KeyIv& kiv) {
  return stream_encrypt(ciphertext, kiv);
}

}  // namespace dnacrypt::biosnow
