#pragma once

// Ciphertext container. Layout (all offsets in bytes):
//
//   0   magic "DNAC"
//   4   version (1)
//   5   cipher id (1 legacy, 2 improved, 3 Bio-SNOW stream)
//   6   parameter: n for legacy, 0 otherwise
//   7   original plaintext length, u64 little-endian
//   15  Bio-SNOW only: IV length L (1 byte) followed by L IV bytes
//   ... payload

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "dnacrypt/bits.hpp"
#include "dnacrypt/error.hpp"

namespace dnacrypt {

enum class CipherId : std::uint8_t { Legacy = 1, Improved = 2, BioSnow = 3 };

inline const char* to_string(CipherId id) noexcept {
  switch (id) {
    case CipherId::Legacy: return "legacy";
    case CipherId::Improved: return "improved";
    case CipherId::BioSnow: return "biosnow";
  }
  return "unknown";
}

struct CipherContainer {
  static constexpr std::array<std::uint8_t, 4> kMagic{'D', 'N', 'A', 'C'};
  static constexpr std::uint8_t kVersion = 1;
  static constexpr std::size_t kFixedHeader = 15;

  CipherId cipher = CipherId::Legacy;
  std::uint8_t parameter = 0;
  std::uint64_t original_length = 0;
  Bytes iv;
  Bytes payload;

  // Smallest payload granule for the cipher (block size, or 1 for streams).
  std::size_t granule() const {
    switch (cipher) {
      case CipherId::Legacy: {
        const std::size_t side = 8u * parameter;
        return side * side / 8;
      }
      case CipherId::Improved: return 8;
      case CipherId::BioSnow: return 1;
    }
    return 1;
  }

  void validate() const {
    if (cipher == CipherId::Legacy && parameter == 0) throw FormatError("container: legacy parameter n must be >= 1");
    if (cipher != CipherId::Legacy && parameter != 0) throw FormatError("container: reserved parameter must be 0");
    if (cipher == CipherId::BioSnow) {
      if (iv.empty() || iv.size() > 255) throw FormatError("container: Bio-SNOW container needs a 1..255 byte IV");
      if (payload.size() != original_length) throw FormatError("container: stream payload length mismatch");
    } else {
      if (!iv.empty()) throw FormatError("container: only Bio-SNOW containers carry an IV");
      if (payload.size() % granule() != 0) throw FormatError("container: payload is not a whole number of blocks");
      if (original_length > payload.size()) throw FormatError("container: original length exceeds payload");
      if (payload.size() - original_length >= granule()) {
        throw FormatError("container: payload carries more than one block of padding");
      }
    }
  }

  Bytes serialize() const {
    validate();
    Bytes out(kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(cipher));
    out.push_back(parameter);
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<std::uint8_t>(original_length >> (8 * k)));
    if (cipher == CipherId::BioSnow) {
      out.push_back(static_cast<std::uint8_t>(iv.size()));
      out.insert(out.end(), iv.begin(), iv.end());
    }
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
  }

  static CipherContainer parse(std::span<const std::uint8_t> data) {
    if (data.size() < kFixedHeader) throw FormatError("container: truncated header");
    for (std::size_t i = 0; i < kMagic.size(); ++i) {
      if (data[i] != kMagic[i]) throw FormatError("container: bad magic");
    }
    if (data[4] != kVersion) throw FormatError("container: unsupported version " + std::to_string(data[4]));
    if (data[5] < 1 || data[5] > 3) throw FormatError("container: unknown cipher id " + std::to_string(data[5]));
    CipherContainer c;
    c.cipher = static_cast<CipherId>(data[5]);
    c.parameter = data[6];
    for (int k = 0; k < 8; ++k) c.original_length |= static_cast<std::uint64_t>(data[7 + k]) << (8 * k);
    std::size_t pos = kFixedHeader;
    if (c.cipher == CipherId::BioSnow) {
      if (pos >= data.size()) throw FormatError("container: truncated IV length");
      const std::size_t len = data[pos++];
      if (data.size() - pos < len) throw FormatError("container: truncated IV");
      c.iv.assign(data.begin() + static_cast<std::ptrdiff_t>(pos), data.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += len;
    }
    c.payload.assign(data.begin() + static_cast<std::ptrdiff_t>(pos), data.end());
    c.validate();
    return c;
  }

  // Rejects a well-formed container made by a different cipher.
  void expect(CipherId id) const {
    if (cipher != id) {
      throw FormatError(std::string("container holds ") + to_string(cipher) + " ciphertext, expected " + to_string(id));
    }
  }
};

}  // namespace dnacrypt
