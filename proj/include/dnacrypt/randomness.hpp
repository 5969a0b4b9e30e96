#pragma once

// Frequency (monobit), block-frequency and runs tests following the
// formulas of NIST SP 800-22. Only these three tests are provided; run
// the full suite externally on a keystream dump.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "dnacrypt/error.hpp"

namespace dnacrypt::randomness {

inline constexpr std::size_t kMinimumBits = 1'000'000;
inline constexpr std::size_t kBlockLength = 128;
inline constexpr double kAlpha = 0.01;

inline double check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p-value out of [0,1]: " + std::to_string(p));
  return p;
}

inline double monobit(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw ContractError("monobit: empty input");
  long long sum = 0;
  for (auto b : bits) sum += b ? 1 : -1;
  const double s_obs = std::fabs(static_cast<double>(sum)) / std::sqrt(static_cast<double>(bits.size()));
  return check_p(std::erfc(s_obs / std::sqrt(2.0)));
}

// Trailing bits that do not fill a block are discarded.
inline double block_frequency(std::span<const std::uint8_t> bits, std::size_t block_length) {
  if (block_length == 0) throw ContractError("block_frequency: block length must be positive");
  const std::size_t blocks = bits.size() / block_length;
  if (blocks == 0) throw ContractError("block_frequency: input shorter than one block");
  double sum = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < block_length; ++j) ones += bits[i * block_length + j] ? 1 : 0;
    const double v = static_cast<double>(ones) / static_cast<double>(block_length) - 0.5;
    sum += v * v;
  }
  const double chi2 = 4.0 * static_cast<double>(block_length) * sum;
  if (chi2 == 0.0) return 1.0;  // gamma_q(a, 0) = 1; boost overflows on large a
  return check_p(boost::math::gamma_q(static_cast<double>(blocks) / 2.0, chi2 / 2.0));
}

// Returns 0 when the frequency prerequisite |pi - 1/2| < 2/sqrt(n) fails.
inline double runs(std::span<const std::uint8_t> bits) {
  if (bits.size() < 2) throw ContractError("runs: need at least two bits");
  const double n = static_cast<double>(bits.size());
  std::size_t ones = 0;
  for (auto b : bits) ones += b ? 1 : 0;
  const double pi = static_cast<double>(ones) / n;
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n)) return 0.0;
  std::size_t v = 1;
  for (std::size_t k = 0; k + 1 < bits.size(); ++k) v += (bits[k] != 0) != (bits[k + 1] != 0) ? 1 : 0;
  const double num = std::fabs(static_cast<double>(v) - 2.0 * n * pi * (1.0 - pi));
  const double den = 2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi);
  return check_p(std::erfc(num / den));
}

struct SubsetResult {
  double monobit = 0.0;
  double block_frequency = 0.0;
  double runs = 0.0;

  bool passed(double alpha = kAlpha) const noexcept {
    return monobit >= alpha && block_frequency >= alpha && runs >= alpha;
  }
};

// Requires at least 10^6 bits.
inline SubsetResult randomness_subset(std::span<const std::uint8_t> bits) {
  if (bits.size() < kMinimumBits) {
    throw ContractError("randomness tests need at least " + std::to_string(kMinimumBits) + " bits, got " +
                        std::to_string(bits.size()));
  }
  return {monobit(bits), block_frequency(bits, kBlockLength), runs(bits)};
}

}  // namespace dnacrypt::randomness
