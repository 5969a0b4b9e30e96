#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dnacrypt/bits.hpp"
#include "dnacrypt/error.hpp"

namespace dnacrypt {

// N x N bit matrix, N a positive multiple of 8. Stored exactly as its wire
// layout: row-major, most significant bit first within each byte.
class BitBlock {
 public:
  BitBlock() = default;
  explicit BitBlock(std::size_t side) : side_(check_side(side)), bytes_(side * side / 8, 0) {}

  static BitBlock from_bytes(std::size_t side, std::span<const std::uint8_t> bytes) {
    BitBlock b(side);
    if (bytes.size() != b.bytes_.size()) {
      throw ContractError("BitBlock: expected " + std::to_string(b.bytes_.size()) + " bytes, got " +
                          std::to_string(bytes.size()));
    }
    b.bytes_.assign(bytes.begin(), bytes.end());
    return b;
  }

  std::size_t side() const noexcept { return side_; }
  std::size_t byte_size() const noexcept { return bytes_.size(); }
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::span<std::uint8_t> bytes() noexcept { return bytes_; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    const std::size_t k = i * side_ + j;
    return (bytes_[k >> 3] >> (7 - (k & 7))) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) noexcept {
    const std::size_t k = i * side_ + j;
    const auto mask = static_cast<std::uint8_t>(1u << (7 - (k & 7)));
    if (v) {
      bytes_[k >> 3] |= mask;
    } else {
      bytes_[k >> 3] &= static_cast<std::uint8_t>(~mask);
    }
  }
  void flip(std::size_t i, std::size_t j) noexcept {
    const std::size_t k = i * side_ + j;
    bytes_[k >> 3] ^= static_cast<std::uint8_t>(1u << (7 - (k & 7)));
  }
  void swap_cells(std::size_t i, std::size_t j, std::size_t k, std::size_t l) noexcept {
    const bool a = get(i, j);
    const bool b = get(k, l);
    if (a != b) {
      flip(i, j);
      flip(k, l);
    }
  }

  friend bool operator==(const BitBlock&, const BitBlock&) = default;

 private:
  static std::size_t check_side(std::size_t side) {
    if (side == 0 || side % 8 != 0) throw ContractError("BitBlock side must be a positive multiple of 8");
    return side;
  }

  std::size_t side_ = 0;
  std::vector<std::uint8_t> bytes_;
};

// Row, column and mutator vectors, N bits each.
struct LegacyKey {
  BitVector rv;
  BitVector cv;
  BitVector mv;

  std::size_t size() const noexcept { return rv.size(); }

  // rv || cv || mv, each packed MSB first.
  Bytes to_bytes() const {
    Bytes out;
    for (const BitVector* v : {&rv, &cv, &mv}) {
      const Bytes part = bytes_from_bits(*v);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  static LegacyKey from_bits(std::span<const std::uint8_t> bits) {
    if (bits.empty() || bits.size() % 24 != 0) {
      throw ContractError("legacy key must be 24*n bits, got " + std::to_string(bits.size()));
    }
    const std::size_t n = bits.size() / 3;
    LegacyKey k;
    k.rv.assign(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(n));
    k.cv.assign(bits.begin() + static_cast<std::ptrdiff_t>(n), bits.begin() + static_cast<std::ptrdiff_t>(2 * n));
    k.mv.assign(bits.begin() + static_cast<std::ptrdiff_t>(2 * n), bits.end());
    return k;
  }

  static LegacyKey from_bytes(std::span<const std::uint8_t> bytes) { return from_bits(bits_from_bytes(bytes)); }

  void validate() const {
    if (rv.empty() || rv.size() % 8 != 0 || cv.size() != rv.size() || mv.size() != rv.size()) {
      throw ContractError("LegacyKey: rv, cv, mv must share a length that is a positive multiple of 8");
    }
  }

  friend bool operator==(const LegacyKey&, const LegacyKey&) = default;
};

// s = rv xor cv together with its left and right rotations.
struct SVector {
  BitVector s;
  BitVector ls;
  BitVector rs;

  static SVector from_s(BitVector s) {
    const std::size_t n = s.size();
    SVector out{std::move(s), BitVector(n), BitVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      out.ls[i] = out.s[(i + 1) % n];
      out.rs[i] = out.s[(i + n - 1) % n];
    }
    return out;
  }

  static SVector from_key(const LegacyKey& key) {
    BitVector s(key.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = key.rv[i] ^ key.cv[i];
    return from_s(std::move(s));
  }
};

}  // namespace dnacrypt
