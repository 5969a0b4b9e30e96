#pragma once

// Hardened 8x8-bit variant of the legacy cipher: row/column XOR, a row-wise
// amino-acid S-box layer, and a transposition stage that folds the mutator
// vector into the diagonal so the diagonal no longer leaks rv ^ cv.
//
// The swap condition is cv[k] == rv[k] (equality), the opposite of the legacy
// cipher's inequality test.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>

#include "dnacrypt/amino_sbox.hpp"
#include "dnacrypt/bit_block.hpp"
#include "dnacrypt/legacy_cipher.hpp"

namespace dnacrypt::improved {

inline constexpr std::size_t kSide = 8;
inline constexpr std::size_t kBlockBytes = kSide * kSide / 8;
inline constexpr std::size_t kKeyBits = 3 * kSide;

inline void require_shape(const BitBlock& block, const LegacyKey& key) {
  key.validate();
  if (block.side() != kSide || key.size() != kSide) {
    throw ContractError("improved cipher operates on 8x8 blocks with a 24-bit key");
  }
}

inline BitBlock encrypt_block(BitBlock block, const LegacyKey& key) {
  require_shape(block, key);
  block = legacy::substitute(std::move(block), key);
  const AminoSBox& box = amino_sbox();
  for (std::uint8_t& row : block.bytes()) row = box.forward[row];
  for (std::size_t k = 0; k < kSide; ++k) {
    if (key.cv[k] == key.rv[k]) legacy::swap_row_column(block, k);
    if (key.mv[k]) block.flip(k, k);
  }
  return block;
}

inline BitBlock decrypt_block(BitBlock block, const LegacyKey& key) {
  require_shape(block, key);
  // Diagonal cells are fixed points of every swap, so the mv XORs come off first.
  for (std::size_t k = 0; k < kSide; ++k) {
    if (key.mv[k]) block.flip(k, k);
  }
  for (std::size_t k = kSide; k-- > 0;) {
    if (key.cv[k] == key.rv[k]) legacy::swap_row_column(block, k);
  }
  const AminoSBox& box = amino_sbox();
  for (std::uint8_t& row : block.bytes()) row = box.inverse[row];
  return legacy::substitute(std::move(block), key);
}

inline Bytes encrypt(std::span<const std::uint8_t> message, LegacyKey key) {
  require_shape(BitBlock(kSide), key);
  const std::size_t blocks = (message.size() + kBlockBytes - 1) / kBlockBytes;
  Bytes out(blocks * kBlockBytes, 0);
  std::copy(message.begin(), message.end(), out.begin());
  for (std::size_t b = 0; b < blocks; ++b) {
    if (b > 0) key = legacy::key_update(key);
    const auto chunk = std::span<std::uint8_t>(out).subspan(b * kBlockBytes, kBlockBytes);
    const BitBlock c = encrypt_block(BitBlock::from_bytes(kSide, chunk), key);
    std::copy(c.bytes().begin(), c.bytes().end(), chunk.begin());
  }
  return out;
}

inline Bytes decrypt(std::span<const std::uint8_t> ciphertext, LegacyKey key, std::size_t original_length) {
  require_shape(BitBlock(kSide), key);
  if (ciphertext.size() % kBlockBytes != 0) throw ContractError("ciphertext is not a whole number of blocks");
  if (original_length > ciphertext.size()) throw ContractError("original length exceeds ciphertext size");
  Bytes out(ciphertext.begin(), ciphertext.end());
  for (std::size_t b = 0; b < out.size() / kBlockBytes; ++b) {
    if (b > 0) key = legacy::key_update(key);
    const auto chunk = std::span<std::uint8_t>(out).subspan(b * kBlockBytes, kBlockBytes);
    const BitBlock p = decrypt_block(BitBlock::from_bytes(kSide, chunk), key);
    std::copy(p.bytes().begin(), p.bytes().end(), chunk.begin());
  }
  out.resize(original_length);
  return out;
}

}  // namespace dnacrypt::improved
