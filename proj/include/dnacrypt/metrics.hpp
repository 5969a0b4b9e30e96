#pragma once

// Ciphertext quality instruments: avalanche, NMAE/PSNR, byte entropy,
// histograms with a chi-square uniformity check, and adjacent-pixel
// correlation.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "dnacrypt/bits.hpp"
#include "dnacrypt/error.hpp"

namespace dnacrypt::metrics {

struct MetricReport {
  std::string metric;
  double value = 0.0;
  std::string unit;        // "fraction", "dB", "bits/byte", "r", "p-value", ...
  std::string descriptor;  // input size and source

  // metric,value,unit,descriptor with a fixed 17-significant-digit value.
  std::string to_csv() const {
    std::ostringstream os;
    os << metric << ',' << std::setprecision(17) << value << ',' << unit << ',' << descriptor;
    return os.str();
  }
};

inline double check_range(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi)) {
    throw DomainError(std::string(what) + " out of range: " + std::to_string(v));
  }
  return v;
}

// Fraction of ciphertext bits that change when key bit `bit_index` flips.
// `encrypt` is any callable (message, key_bits) -> ciphertext bytes.
template <typename EncryptFn>
double avalanche(EncryptFn&& encrypt, std::span<const std::uint8_t> key_bits, std::span<const std::uint8_t> message,
                 std::size_t bit_index) {
  if (bit_index >= key_bits.size()) throw ContractError("avalanche: key bit index out of range");
  const Bytes base = encrypt(message, key_bits);
  BitVector flipped(key_bits.begin(), key_bits.end());
  flipped[bit_index] ^= 1u;
  const Bytes other = encrypt(message, std::span<const std::uint8_t>(flipped));
  if (base.empty()) return 0.0;
  return check_range(static_cast<double>(hamming_distance(base, other)) / (8.0 * static_cast<double>(base.size())),
                     0.0, 1.0, "avalanche");
}

struct AvalancheSummary {
  double mean = 0.0;
  std::vector<double> per_bit;
};

template <typename EncryptFn>
AvalancheSummary avalanche_mean(EncryptFn&& encrypt, std::span<const std::uint8_t> key_bits,
                                std::span<const std::uint8_t> message) {
  AvalancheSummary out;
  const Bytes base = encrypt(message, key_bits);
  BitVector flipped(key_bits.begin(), key_bits.end());
  for (std::size_t i = 0; i < key_bits.size(); ++i) {
    flipped[i] ^= 1u;
    const Bytes other = encrypt(message, std::span<const std::uint8_t>(flipped));
    flipped[i] ^= 1u;
    const double frac = base.empty() ? 0.0
                                     : static_cast<double>(hamming_distance(base, other)) /
                                           (8.0 * static_cast<double>(base.size()));
    out.per_bit.push_back(check_range(frac, 0.0, 1.0, "avalanche"));
    out.mean += frac;
  }
  if (!key_bits.empty()) out.mean /= static_cast<double>(key_bits.size());
  return out;
}

struct NmaePsnr {
  double nmae = 0.0;
  double psnr_db = 0.0;
};

// NMAE = 100 * sum|S-E| / size; PSNR = 10 log10(255^2 / NMAE).
inline NmaePsnr nmae_psnr(std::span<const std::uint8_t> original, std::span<const std::uint8_t> encrypted) {
  if (original.size() != encrypted.size()) throw ContractError("nmae_psnr: length mismatch");
  if (original.empty()) throw ContractError("nmae_psnr: empty input");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    sum += static_cast<std::uint64_t>(std::abs(int{original[i]} - int{encrypted[i]}));
  }
  NmaePsnr out;
  out.nmae = static_cast<double>(sum) / static_cast<double>(original.size()) * 100.0;
  if (out.nmae == 0.0) throw DomainError("PSNR undefined: inputs are identical (NMAE = 0)");
  out.psnr_db = 10.0 * std::log10(255.0 * 255.0 / out.nmae);
  return out;
}

using Histogram = std::array<std::uint64_t, 256>;

inline Histogram histogram(std::span<const std::uint8_t> data) noexcept {
  Histogram h{};
  for (std::uint8_t v : data) ++h[v];
  return h;
}

inline double entropy_from_histogram(const Histogram& h) {
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  if (total == 0) throw ContractError("entropy: empty input");
  double e = 0.0;
  for (auto c : h) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    e -= p * std::log2(p);
  }
  // -0.0 for a constant buffer
  return check_range(e == 0.0 ? 0.0 : e, 0.0, 8.0, "entropy");
}

// Shannon entropy in bits per byte.
inline double entropy(std::span<const std::uint8_t> data) {
  if (data.empty()) throw ContractError("entropy: empty input");
  return entropy_from_histogram(histogram(data));
}

// Pearson chi-square statistic of a histogram against the uniform
// distribution over 256 values (255 degrees of freedom).
inline double chi_square_uniform(const Histogram& h) {
  std::uint64_t total = 0;
  for (auto c : h) total += c;
  if (total == 0) throw ContractError("chi_square_uniform: empty histogram");
  const double expected = static_cast<double>(total) / 256.0;
  double chi2 = 0.0;
  for (auto c : h) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  return chi2;
}

// Upper critical value of chi-square with 255 degrees of freedom.
inline double chi_square_critical(double alpha) {
  const boost::math::chi_squared dist(255.0);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

inline std::string histogram_csv(const Histogram& h, const std::string& channel) {
  std::ostringstream os;
  for (std::size_t v = 0; v < h.size(); ++v) os << channel << ',' << v << ',' << h[v] << '\n';
  return os.str();
}

enum class Direction { Horizontal, Vertical, Diagonal };

inline const char* to_string(Direction d) noexcept {
  switch (d) {
    case Direction::Horizontal: return "horizontal";
    case Direction::Vertical: return "vertical";
    case Direction::Diagonal: return "diagonal";
  }
  return "?";
}

// Calls fn(a, b) for every adjacent pair: (x,y)-(x+1,y), (x,y)-(x,y+1) or
// (x,y)-(x+1,y+1).
template <typename Fn>
void for_each_adjacent_pair(std::span<const std::uint8_t> plane, std::size_t width, std::size_t height, Direction dir,
                            Fn&& fn) {
  if (plane.size() != width * height) throw ContractError("plane size does not match width*height");
  const std::size_t dx = dir == Direction::Vertical ? 0 : 1;
  const std::size_t dy = dir == Direction::Horizontal ? 0 : 1;
  if (width < 1 + dx || height < 1 + dy) return;
  for (std::size_t y = 0; y + dy < height; ++y) {
    for (std::size_t x = 0; x + dx < width; ++x) {
      fn(plane[y * width + x], plane[(y + dy) * width + x + dx]);
    }
  }
}

// Pearson r over all adjacent pairs in one direction. Integer moment sums
// are exact, so the result depends only on the pixel values.
inline double adjacent_correlation(std::span<const std::uint8_t> plane, std::size_t width, std::size_t height,
                                   Direction dir) {
  if (plane.empty()) throw ContractError("adjacent_correlation: empty plane");
  std::uint64_t n = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for_each_adjacent_pair(plane, width, height, dir, [&](std::uint64_t a, std::uint64_t b) {
    ++n;
    sx += a;
    sy += b;
    sxx += a * a;
    syy += b * b;
    sxy += a * b;
  });
  if (n == 0) throw DomainError("adjacent_correlation: no adjacent pairs");
  // n * covariance etc. as exact integers (fits: n < 2^40, values < 2^8)
  const auto cov = static_cast<long double>(static_cast<__int128>(n) * sxy - static_cast<__int128>(sx) * sy);
  const auto vx = static_cast<long double>(static_cast<__int128>(n) * sxx - static_cast<__int128>(sx) * sx);
  const auto vy = static_cast<long double>(static_cast<__int128>(n) * syy - static_cast<__int128>(sy) * sy);
  if (vx == 0 || vy == 0) throw DomainError("adjacent_correlation: zero variance, correlation undefined");
  const double r = static_cast<double>(cov / std::sqrt(vx * vy));
  // |r| may exceed 1 by an ulp when the series are exactly proportional.
  return std::clamp(check_range(r, -1.0 - 1e-12, 1.0 + 1e-12, "correlation"), -1.0, 1.0);
}

// Evenly strided sample of at most `cap` adjacent pairs for scatter plots.
inline std::vector<std::pair<std::uint8_t, std::uint8_t>> scatter_sample(std::span<const std::uint8_t> plane,
                                                                         std::size_t width, std::size_t height,
                                                                         Direction dir, std::size_t cap = 5000) {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> all;
  for_each_adjacent_pair(plane, width, height, dir,
                         [&](std::uint8_t a, std::uint8_t b) { all.emplace_back(a, b); });
  if (all.size() <= cap) return all;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
  out.reserve(cap);
  for (std::size_t k = 0; k < cap; ++k) out.push_back(all[k * all.size() / cap]);
  return out;
}

}  // namespace dnacrypt::metrics
