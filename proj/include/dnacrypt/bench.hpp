#pragma once

// Keystream throughput measurement. Only keystream generation is timed;
// initialization happens before the clock starts. Each row is the mean of
// `runs` timed repetitions.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "dnacrypt/biosnow.hpp"

namespace dnacrypt::bench {

struct BenchRow {
  std::size_t blocks = 0;      // 64-quad (128-bit) keystream blocks
  double mean_seconds = 0.0;
  double mb_per_second = 0.0;
};

struct BenchReport {
  std::size_t runs = 0;
  std::vector<BenchRow> rows;  // sorted by block count

  std::string to_table() const {
    std::ostringstream os;
    os << "Input size (blocks)  Bio-SNOW time (s)  Throughput (MB/s)\n";
    for (const auto& r : rows) {
      os << std::setw(19) << r.blocks << "  " << std::setw(17) << std::scientific << std::setprecision(4)
         << r.mean_seconds << "  " << std::setw(17) << std::fixed << std::setprecision(3) << r.mb_per_second << '\n';
      os.unsetf(std::ios::floatfield);
    }
    return os.str();
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "blocks,mean_seconds,mb_per_second,runs\n" << std::setprecision(9);
    for (const auto& r : rows) os << r.blocks << ',' << r.mean_seconds << ',' << r.mb_per_second << ',' << runs << '\n';
    return os.str();
  }
};

inline std::vector<std::size_t> default_sizes() {
  std::vector<std::size_t> sizes;
  for (std::size_t b = 100; b <= 1200; b += 100) sizes.push_back(b);
  return sizes;
}

inline BenchReport run(const biosnow::KeyIv& kiv, std::vector<std::size_t> sizes, std::size_t runs = 10) {
  if (runs == 0) throw ContractError("bench: runs must be positive");
  std::sort(sizes.begin(), sizes.end());
  BenchReport report;
  report.runs = runs;
  const biosnow::BioSnowState initial = biosnow::initialize(kiv);
  std::uint8_t sink = 0;
  for (std::size_t blocks : sizes) {
    {
      // untimed warm-up pass so the first timed run does not pay for cold caches
      biosnow::BioSnowState st = initial;
      for (std::size_t b = 0; b < blocks; ++b) sink ^= static_cast<std::uint8_t>(biosnow::next_keystream_block(st)[0]);
    }
    double total = 0.0;
    for (std::size_t r = 0; r < runs; ++r) {
      biosnow::BioSnowState st = initial;
      const auto t0 = std::chrono::steady_clock::now();
      for (std::size_t b = 0; b < blocks; ++b) sink ^= static_cast<std::uint8_t>(biosnow::next_keystream_block(st)[0]);
      const auto t1 = std::chrono::steady_clock::now();
      total += std::chrono::duration<double>(t1 - t0).count();
    }
    BenchRow row;
    row.blocks = blocks;
    row.mean_seconds = std::max(total / static_cast<double>(runs), 1e-9);
    row.mb_per_second = static_cast<double>(blocks) * 16.0 / 1e6 / row.mean_seconds;
    report.rows.push_back(row);
  }
  // Keeps the generation loop from being optimized away.
  volatile std::uint8_t keep = sink;
  (void)keep;
  return report;
}

}  // namespace dnacrypt::bench
