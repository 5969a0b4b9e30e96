#pragma once

// Byte S-box derived from the standard genetic code.
//
// Each byte is read as four quads (q0 most significant). The first three
// form a codon; bytes are stably sorted by the amino-acid class of that
// codon (ARNDCQEGHILKMFPSTWYV, then stop) and then by value. The sorted
// sequence is the forward table. The resulting constant is checked in under
// docs/amino_sbox.txt.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string_view>

#include "dnacrypt/quad.hpp"

namespace dnacrypt {

struct AminoSBox {
  std::array<std::uint8_t, 256> forward{};
  std::array<std::uint8_t, 256> inverse{};
};

namespace detail {

// Standard codon table, bases ordered T, C, A, G at every position.
inline constexpr std::string_view kCodonTable =
    "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG";
inline constexpr std::string_view kClassOrder = "ARNDCQEGHILKMFPSTWYV*";

constexpr unsigned tcag_index(Quad q) noexcept {
  switch (q) {
    case Quad::T: return 0;
    case Quad::C: return 1;
    case Quad::A: return 2;
    case Quad::G: return 3;
  }
  return 0;
}

}  // namespace detail

// One-letter amino acid for a codon, '*' for stop.
constexpr char translate_codon(Quad a, Quad b, Quad c) noexcept {
  return detail::kCodonTable[16 * detail::tcag_index(a) + 4 * detail::tcag_index(b) + detail::tcag_index(c)];
}

constexpr std::size_t amino_class(std::uint8_t byte) noexcept {
  const auto q = unpack_byte(byte);
  return detail::kClassOrder.find(translate_codon(q[0], q[1], q[2]));
}

inline AminoSBox build_amino_sbox() {
  std::array<std::uint8_t, 256> order{};
  std::iota(order.begin(), order.end(), std::uint8_t{0});
  std::stable_sort(order.begin(), order.end(), [](std::uint8_t a, std::uint8_t b) {
    const auto ca = amino_class(a);
    const auto cb = amino_class(b);
    return ca != cb ? ca < cb : a < b;
  });
  AminoSBox box;
  box.forward = order;
  for (std::size_t i = 0; i < 256; ++i) box.inverse[box.forward[i]] = static_cast<std::uint8_t>(i);
  return box;
}

// Shared read-only instance.
inline const AminoSBox& amino_sbox() {
  static const AminoSBox box = build_amino_sbox();
  return box;
}

}  // namespace dnacrypt
