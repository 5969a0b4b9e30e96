#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnacrypt/error.hpp"
#include "dnacrypt/quad.hpp"

namespace dnacrypt {

using Bytes = std::vector<std::uint8_t>;

// MSB-first unpacking, eight bits per byte.
inline BitVector bits_from_bytes(std::span<const std::uint8_t> bytes) {
  BitVector bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes) {
    for (int k = 7; k >= 0; --k) bits.push_back((b >> k) & 1u);
  }
  return bits;
}

inline Bytes bytes_from_bits(std::span<const std::uint8_t> bits) {
  if (bits.size() % 8 != 0) throw ContractError("bit length is not a multiple of 8");
  Bytes out(bits.size() / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) | (bits[i] & 1u));
  }
  return out;
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xF]);
  }
  return s;
}

inline Bytes from_hex(std::string_view hex) {
  auto nibble = [&](std::size_t i) -> std::uint8_t {
    const char c = hex[i];
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw ParseError(std::string("invalid hex digit '") + c + "'", i);
  };
  if (hex.size() % 2 != 0) throw ParseError("hex string has odd length");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>((nibble(i) << 4) | nibble(i + 1)));
  }
  return out;
}

inline std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw ContractError("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(a[i] ^ b[i])));
  return d;
}

// Key material given either as hex (expected_bits/4 digits) or as an ACGT
// string (expected_bits/2 letters). The length decides, since a string such
// as "ACCA" is valid in both alphabets.
inline BitVector parse_key_bits(std::string_view text, std::size_t expected_bits) {
  if (expected_bits % 8 != 0) throw ContractError("key length must be a whole number of bytes");
  if (text.size() == expected_bits / 2) return parse_dna_string(text);
  if (text.size() == expected_bits / 4) return bits_from_bytes(from_hex(text));
  throw ContractError("key must be " + std::to_string(expected_bits / 4) + " hex digits or " +
                      std::to_string(expected_bits / 2) + " ACGT letters, got " +
                      std::to_string(text.size()) + " characters");
}

}  // namespace dnacrypt
