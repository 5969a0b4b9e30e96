#pragma once

// XOR-linear equation systems over binary unknowns and a Gaussian
// elimination solver with dense 64-bit word rows.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dnacrypt/error.hpp"

namespace dnacrypt {

struct Gf2Equation {
  std::vector<std::size_t> unknowns;  // XOR of these unknowns ...
  std::uint8_t rhs = 0;               // ... equals this bit
};

class Gf2System {
 public:
  explicit Gf2System(std::size_t unknown_count) : unknown_count_(unknown_count) {}

  void add(std::vector<std::size_t> unknowns, std::uint8_t rhs) {
    for (std::size_t u : unknowns) {
      if (u >= unknown_count_) {
        throw ContractError("unknown index " + std::to_string(u) + " out of range " +
                            std::to_string(unknown_count_));
      }
    }
    equations_.push_back({std::move(unknowns), static_cast<std::uint8_t>(rhs & 1u)});
  }

  std::size_t unknown_count() const noexcept { return unknown_count_; }
  const std::vector<Gf2Equation>& equations() const noexcept { return equations_; }

  bool satisfied_by(const std::vector<std::uint8_t>& x) const {
    for (const auto& eq : equations_) {
      std::uint8_t acc = 0;
      for (std::size_t u : eq.unknowns) acc ^= x[u];
      if (acc != eq.rhs) return false;
    }
    return true;
  }

 private:
  std::size_t unknown_count_;
  std::vector<Gf2Equation> equations_;
};

struct Gf2Solution {
  std::vector<std::uint8_t> values;         // free variables pinned to 0
  std::size_t rank = 0;
  std::vector<std::size_t> free_variables;  // ascending
};

namespace detail {

class Gf2Row {
 public:
  explicit Gf2Row(std::size_t n) : words_((n + 64) / 64, 0), rhs_bit_(n) {}

  void toggle(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  void xor_with(const Gf2Row& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }
  bool rhs() const noexcept { return test(rhs_bit_); }

  // Highest set coefficient, or npos for the zero row.
  std::size_t leading() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;) {
      std::uint64_t word = words_[w];
      if (w == rhs_bit_ / 64) word &= (std::uint64_t{1} << (rhs_bit_ % 64)) - 1;
      if (word) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(word));
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
  std::size_t rhs_bit_;
};

}  // namespace detail

// Equations are absorbed in order; each is reduced against the pivots found
// so far, pivoting on its highest-index unknown. The first equation that
// reduces to 0 = 1 is reported. Pivoting from the top leaves the
// lowest-index unknowns free.
inline Gf2Solution solve_gf2(const Gf2System& system) {
  using detail::Gf2Row;
  const std::size_t n = system.unknown_count();
  std::vector<Gf2Row> pivot_rows;
  std::vector<std::size_t> pivot_of(n, Gf2Row::npos);  // column -> index into pivot_rows

  const auto& eqs = system.equations();
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Gf2Row row(n);
    for (std::size_t u : eqs[e].unknowns) row.toggle(u);
    if (eqs[e].rhs) row.toggle(n);
    for (std::size_t lead = row.leading(); lead != Gf2Row::npos; lead = row.leading()) {
      if (pivot_of[lead] == Gf2Row::npos) break;
      row.xor_with(pivot_rows[pivot_of[lead]]);
    }
    const std::size_t lead = row.leading();
    if (lead == Gf2Row::npos) {
      if (row.rhs()) {
        throw InconsistentSystem("inconsistent system: equation " + std::to_string(e) +
                                     " contradicts the preceding equations",
                                 e);
      }
      continue;
    }
    pivot_of[lead] = pivot_rows.size();
    pivot_rows.push_back(std::move(row));
  }

  Gf2Solution sol;
  sol.values.assign(n, 0);
  sol.rank = pivot_rows.size();
  // Each pivot row only involves columns below its pivot, so ascending order
  // sees every dependency already resolved.
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_of[col] == Gf2Row::npos) {
      sol.free_variables.push_back(col);
      continue;
    }
    const Gf2Row& row = pivot_rows[pivot_of[col]];
    std::uint8_t v = row.rhs();
    for (std::size_t c = 0; c < col; ++c) {
      if (row.test(c)) v ^= sol.values[c];
    }
    sol.values[col] = v;
  }
  return sol;
}

}  // namespace dnacrypt
