#pragma once

// Quad alphabet {A, C, G, T} and the arithmetic built on it.
//
// Internal 2-bit code: A=00, C=01, G=10, T=11. BioXOR is XOR of codes
// (the Klein four-group), BioMul is GF(4) multiplication with A=0, C=1,
// G=x, T=x+1 reduced modulo x^2+x+1. A byte packs four quads with quad 0
// in the two most significant bits.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnacrypt/error.hpp"

namespace dnacrypt {

enum class Quad : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

inline constexpr std::array<Quad, 4> kAllQuads{Quad::A, Quad::C, Quad::G, Quad::T};

constexpr std::uint8_t code(Quad q) noexcept { return static_cast<std::uint8_t>(q); }
constexpr Quad quad_from_code(unsigned c) noexcept { return static_cast<Quad>(c & 3u); }

constexpr char to_char(Quad q) noexcept { return "ACGT"[code(q)]; }

using QuadVector = std::vector<Quad>;
template <std::size_t L>
using QuadBlock = std::array<Quad, L>;
using Quad64 = QuadBlock<64>;
using Quad128 = QuadBlock<128>;

// One bit per element, each 0 or 1.
using BitVector = std::vector<std::uint8_t>;

constexpr Quad bioxor(Quad a, Quad b) noexcept { return quad_from_code(code(a) ^ code(b)); }

constexpr Quad biomul(Quad a, Quad b) noexcept {
  constexpr std::uint8_t table[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  return quad_from_code(table[code(a)][code(b)]);
}

// Complement map A<->T, C<->G. With the 2-bit code this is XOR with 11.
constexpr Quad transcribe(Quad q) noexcept { return quad_from_code(code(q) ^ 3u); }

template <std::size_t L>
constexpr QuadBlock<L> bioxor(const QuadBlock<L>& a, const QuadBlock<L>& b) noexcept {
  QuadBlock<L> out{};
  for (std::size_t i = 0; i < L; ++i) out[i] = bioxor(a[i], b[i]);
  return out;
}

template <std::size_t L>
QuadBlock<L> to_block(std::span<const Quad> quads) {
  if (quads.size() != L) {
    throw ContractError("expected " + std::to_string(L) + " quads, got " +
                        std::to_string(quads.size()));
  }
  QuadBlock<L> out{};
  for (std::size_t i = 0; i < L; ++i) out[i] = quads[i];
  return out;
}

inline constexpr std::size_t kLaneQuads = 16;
inline constexpr std::size_t kLanes = 4;

// Four independent base-4 additions over 16-quad lanes. Within a lane index 0
// is the least significant digit; the carry out of each lane is dropped.
inline Quad64 parallel_add(const Quad64& u, const Quad64& v) noexcept {
  Quad64 out{};
  for (std::size_t lane = 0; lane < kLanes; ++lane) {
    unsigned carry = 0;
    for (std::size_t d = 0; d < kLaneQuads; ++d) {
      const std::size_t i = lane * kLaneQuads + d;
      const unsigned sum = code(u[i]) + code(v[i]) + carry;
      out[i] = quad_from_code(sum);
      carry = sum >> 2;
    }
  }
  return out;
}

inline Quad64 parallel_add(std::span<const Quad> u, std::span<const Quad> v) {
  if (u.size() != v.size()) throw ContractError("parallel_add: operand length mismatch");
  return parallel_add(to_block<64>(u), to_block<64>(v));
}

// Message coding used at the stream-cipher boundary: 00->A, 01->T, 10->C,
// 11->G. Deliberately different from the internal code.
namespace message_coding {
constexpr std::array<Quad, 4> kEncode{Quad::A, Quad::T, Quad::C, Quad::G};
constexpr std::array<std::uint8_t, 4> kDecode{0b00, 0b10, 0b11, 0b01};  // indexed by code(q)
}  // namespace message_coding

inline QuadVector encode_message(std::span<const std::uint8_t> bits) {
  if (bits.size() % 2 != 0) {
    throw ContractError("encode_message: odd bit length " + std::to_string(bits.size()));
  }
  QuadVector out;
  out.reserve(bits.size() / 2);
  for (std::size_t i = 0; i < bits.size(); i += 2) {
    out.push_back(message_coding::kEncode[((bits[i] & 1u) << 1) | (bits[i + 1] & 1u)]);
  }
  return out;
}

inline BitVector decode_message(std::span<const Quad> quads) {
  BitVector out;
  out.reserve(quads.size() * 2);
  for (Quad q : quads) {
    const std::uint8_t pair = message_coding::kDecode[code(q)];
    out.push_back(pair >> 1);
    out.push_back(pair & 1u);
  }
  return out;
}

// Byte-level forms of the message coding, four quads per byte.
inline QuadVector encode_message_bytes(std::span<const std::uint8_t> bytes) {
  QuadVector out;
  out.reserve(bytes.size() * 4);
  for (std::uint8_t b : bytes) {
    for (int shift = 6; shift >= 0; shift -= 2) {
      out.push_back(message_coding::kEncode[(b >> shift) & 3u]);
    }
  }
  return out;
}

inline std::vector<std::uint8_t> decode_message_bytes(std::span<const Quad> quads) {
  if (quads.size() % 4 != 0) throw ContractError("decode_message_bytes: length not a multiple of 4");
  std::vector<std::uint8_t> out(quads.size() / 4, 0);
  for (std::size_t i = 0; i < quads.size(); ++i) {
    out[i / 4] = static_cast<std::uint8_t>((out[i / 4] << 2) | message_coding::kDecode[code(quads[i])]);
  }
  return out;
}

// Internal-code packing: quad 0 supplies the two most significant bits.
constexpr std::uint8_t pack_byte(Quad q0, Quad q1, Quad q2, Quad q3) noexcept {
  return static_cast<std::uint8_t>((code(q0) << 6) | (code(q1) << 4) | (code(q2) << 2) | code(q3));
}

constexpr std::array<Quad, 4> unpack_byte(std::uint8_t b) noexcept {
  return {quad_from_code(b >> 6), quad_from_code(b >> 4), quad_from_code(b >> 2), quad_from_code(b)};
}

inline QuadVector quads_from_bytes(std::span<const std::uint8_t> bytes) {
  QuadVector out;
  out.reserve(bytes.size() * 4);
  for (std::uint8_t b : bytes) {
    for (Quad q : unpack_byte(b)) out.push_back(q);
  }
  return out;
}

inline std::vector<std::uint8_t> bytes_from_quads(std::span<const Quad> quads) {
  if (quads.size() % 4 != 0) throw ContractError("bytes_from_quads: length not a multiple of 4");
  std::vector<std::uint8_t> out;
  out.reserve(quads.size() / 4);
  for (std::size_t i = 0; i < quads.size(); i += 4) {
    out.push_back(pack_byte(quads[i], quads[i + 1], quads[i + 2], quads[i + 3]));
  }
  return out;
}

inline QuadVector parse_quads(std::string_view text) {
  QuadVector out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'A': out.push_back(Quad::A); break;
      case 'C': out.push_back(Quad::C); break;
      case 'G': out.push_back(Quad::G); break;
      case 'T': out.push_back(Quad::T); break;
      default:
        throw ParseError(std::string("invalid DNA character '") + text[i] + "'", i);
    }
  }
  return out;
}

// A=00, C=01, G=10, T=11, two bits per letter, most significant first.
inline BitVector parse_dna_string(std::string_view text) {
  BitVector bits;
  bits.reserve(text.size() * 2);
  for (Quad q : parse_quads(text)) {
    bits.push_back(code(q) >> 1);
    bits.push_back(code(q) & 1u);
  }
  return bits;
}

inline std::string to_string(std::span<const Quad> quads) {
  std::string s;
  s.reserve(quads.size());
  for (Quad q : quads) s.push_back(to_char(q));
  return s;
}

}  // namespace dnacrypt
