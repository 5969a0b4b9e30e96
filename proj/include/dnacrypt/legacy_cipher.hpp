#pragma once

// The DNA-keyed lightweight block cipher in its original form: per-block
// row/column XOR substitution, conditional row/column transposition and a
// chained key schedule driven by the mutator vector.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "dnacrypt/bit_block.hpp"
#include "dnacrypt/bits.hpp"
#include "dnacrypt/error.hpp"

namespace dnacrypt::legacy {

inline void require_match(const BitBlock& block, const LegacyKey& key) {
  key.validate();
  if (block.side() != key.size()) {
    throw ContractError("block side " + std::to_string(block.side()) + " does not match key length " +
                        std::to_string(key.size()));
  }
}

// out[i][j] = in[i][j] ^ rv[i] ^ cv[j]
inline BitBlock substitute(BitBlock block, const LegacyKey& key) {
  require_match(block, key);
  const std::size_t n = block.side();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (key.rv[i] ^ key.cv[j]) block.flip(i, j);
    }
  }
  return block;
}

// Exchange row i with column i. The diagonal cell stays put.
inline void swap_row_column(BitBlock& block, std::size_t i) noexcept {
  for (std::size_t j = 0; j < block.side(); ++j) {
    if (j != i) block.swap_cells(i, j, j, i);
  }
}

// Swaps are applied for increasing i; successive swaps do not commute.
inline BitBlock transpose(BitBlock block, std::span<const std::uint8_t> s) {
  if (s.size() != block.side()) throw ContractError("transpose: s length does not match block side");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) swap_row_column(block, i);
  }
  return block;
}

inline BitBlock inverse_transpose(BitBlock block, std::span<const std::uint8_t> s) {
  if (s.size() != block.side()) throw ContractError("inverse_transpose: s length does not match block side");
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i]) swap_row_column(block, i);
  }
  return block;
}

// Sequence update: rv' = rotl(s) ^ mv, cv' = rotr(s) ^ mv, mv unchanged.
inline LegacyKey key_update(const LegacyKey& key) {
  key.validate();
  const SVector sv = SVector::from_key(key);
  LegacyKey next = key;
  for (std::size_t i = 0; i < key.size(); ++i) {
    next.rv[i] = sv.ls[i] ^ key.mv[i];
    next.cv[i] = sv.rs[i] ^ key.mv[i];
  }
  return next;
}

inline BitBlock encrypt_block(const BitBlock& block, const LegacyKey& key) {
  return transpose(substitute(block, key), SVector::from_key(key).s);
}

inline BitBlock decrypt_block(const BitBlock& block, const LegacyKey& key) {
  require_match(block, key);
  return substitute(inverse_transpose(block, SVector::from_key(key).s), key);
}

inline std::size_t block_bytes(const LegacyKey& key) { return key.size() * key.size() / 8; }

// Zero-pads to whole blocks; the true length travels out of band.
inline Bytes encrypt(std::span<const std::uint8_t> message, LegacyKey key) {
  key.validate();
  const std::size_t bb = block_bytes(key);
  const std::size_t blocks = (message.size() + bb - 1) / bb;
  Bytes out(blocks * bb, 0);
  Bytes chunk(bb);
  for (std::size_t b = 0; b < blocks; ++b) {
    if (b > 0) key = key_update(key);
    std::fill(chunk.begin(), chunk.end(), std::uint8_t{0});
    const std::size_t off = b * bb;
    const std::size_t take = std::min(bb, message.size() - off);
    std::copy_n(message.begin() + static_cast<std::ptrdiff_t>(off), take, chunk.begin());
    const BitBlock c = encrypt_block(BitBlock::from_bytes(key.size(), chunk), key);
    std::copy(c.bytes().begin(), c.bytes().end(), out.begin() + static_cast<std::ptrdiff_t>(off));
  }
  return out;
}

// `key` is the schedule value for the first ciphertext block.
inline Bytes decrypt(std::span<const std::uint8_t> ciphertext, LegacyKey key, std::size_t original_length) {
  key.validate();
  const std::size_t bb = block_bytes(key);
  if (ciphertext.size() % bb != 0) throw ContractError("ciphertext is not a whole number of blocks");
  if (original_length > ciphertext.size()) throw ContractError("original length exceeds ciphertext size");
  Bytes out(ciphertext.size());
  for (std::size_t b = 0; b < ciphertext.size() / bb; ++b) {
    if (b > 0) key = key_update(key);
    const BitBlock p = decrypt_block(BitBlock::from_bytes(key.size(), ciphertext.subspan(b * bb, bb)), key);
    std::copy(p.bytes().begin(), p.bytes().end(), out.begin() + static_cast<std::ptrdiff_t>(b * bb));
  }
  out.resize(original_length);
  return out;
}

}  // namespace dnacrypt::legacy
