#pragma once

// Known-plaintext key recovery against the legacy cipher.
//
// Transposition never moves diagonal cells, so p[i][i] ^ q[i][i] = rv[i] ^ cv[i]
// and that value is exactly the swap pattern. With the pattern known every
// off-diagonal ciphertext cell can be traced back to its plaintext cell,
// giving N^2 - N equations rv[i] ^ cv[j] = const. The system has rank 2N-1:
// complementing both rv and cv leaves the ciphertext unchanged, so the
// solver returns the class representative with rv[0] = 0. Two consecutive
// blocks give two schedule values, from which mv follows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dnacrypt/bit_block.hpp"
#include "dnacrypt/error.hpp"
#include "dnacrypt/gf2.hpp"
#include "dnacrypt/legacy_cipher.hpp"

namespace dnacrypt::attack {

// rv/cv for one block; mv is not observable from a single block.
struct RowColumnKey {
  BitVector rv;
  BitVector cv;
};

struct RecoveredKey {
  LegacyKey key;                       // schedule value at block_index
  std::vector<std::size_t> pinned;     // free unknowns fixed to 0 (index into r||c)
  std::size_t block_index = 0;
};

// Raised by recover_mv when the two mv candidates disagree.
class MvCrossCheckFailed : public AttackFailed {
 public:
  using AttackFailed::AttackFailed;
};

inline void require_same_shape(const BitBlock& p, const BitBlock& q) {
  if (p.side() != q.side()) throw ContractError("plaintext and ciphertext blocks differ in size");
}

inline SVector recover_diag_xor(const BitBlock& p, const BitBlock& q) {
  require_same_shape(p, q);
  BitVector s(p.side());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = p.get(i, i) ^ q.get(i, i);
  return SVector::from_s(std::move(s));
}

// For each ciphertext position, the plaintext cell that the transposition
// with pattern `s` moved there. Entry [a*N + b] holds i*N + j.
inline std::vector<std::size_t> transposition_sources(std::size_t n, std::span<const std::uint8_t> s) {
  std::vector<std::size_t> grid(n * n);
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = k;
  for (std::size_t i = 0; i < n; ++i) {
    if (!s[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) std::swap(grid[i * n + j], grid[j * n + i]);
    }
  }
  return grid;
}

// Unknowns: r_0..r_{N-1} at 0..N-1, c_0..c_{N-1} at N..2N-1.
inline Gf2System build_offdiag_system(const BitBlock& p, const BitBlock& q, const SVector& s) {
  require_same_shape(p, q);
  const std::size_t n = p.side();
  if (s.s.size() != n) throw ContractError("s length does not match block side");
  Gf2System sys(2 * n);
  const auto sources = transposition_sources(n, s.s);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t i = sources[a * n + b] / n;
      const std::size_t j = sources[a * n + b] % n;
      if (i == j) continue;
      sys.add({i, n + j}, static_cast<std::uint8_t>(p.get(i, j) ^ q.get(a, b)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) sys.add({i, n + i}, s.s[i]);
  return sys;
}

struct BlockSolution {
  RowColumnKey key;
  std::vector<std::size_t> free_variables;
};

inline BlockSolution recover_row_column(const BitBlock& p, const BitBlock& q) {
  const SVector s = recover_diag_xor(p, q);
  const Gf2Solution sol = solve_gf2(build_offdiag_system(p, q, s));
  const std::size_t n = p.side();
  BlockSolution out;
  out.key.rv.assign(sol.values.begin(), sol.values.begin() + static_cast<std::ptrdiff_t>(n));
  out.key.cv.assign(sol.values.begin() + static_cast<std::ptrdiff_t>(n), sol.values.end());
  out.free_variables = sol.free_variables;
  return out;
}

// mv_i = rv'_i ^ ls_i, cross-checked against mv_i = cv'_i ^ rs_i.
inline BitVector recover_mv(const RowColumnKey& block, const RowColumnKey& next) {
  const std::size_t n = block.rv.size();
  if (block.cv.size() != n || next.rv.size() != n || next.cv.size() != n) {
    throw ContractError("recover_mv: vector lengths differ");
  }
  LegacyKey k{block.rv, block.cv, BitVector(n, 0)};
  const SVector sv = SVector::from_key(k);
  BitVector mv(n);
  for (std::size_t i = 0; i < n; ++i) {
    mv[i] = next.rv[i] ^ sv.ls[i];
    if (mv[i] != (next.cv[i] ^ sv.rs[i])) {
      throw MvCrossCheckFailed("mutator cross-check failed at bit " + std::to_string(i));
    }
  }
  return mv;
}

// recover_mv with one retry: if the next-block vectors disagree as a whole
// complement, realign cv' to rv''s class and try again.
inline BitVector recover_mv_aligned(const RowColumnKey& block, const RowColumnKey& next) {
  try {
    return recover_mv(block, next);
  } catch (const MvCrossCheckFailed&) {
    RowColumnKey realigned = next;
    for (auto& bit : realigned.cv) bit ^= 1u;
    return recover_mv(block, realigned);
  }
}

struct BreakResult {
  RecoveredKey recovered;
  Bytes plaintext;  // from the anchor block to the end, truncated to the recorded length
};

// Recovers a key equivalent to the schedule value at the first known block
// from two consecutive known blocks. Throws AttackFailed if the result does
// not reproduce both ciphertext blocks.
inline RecoveredKey recover_key(const BitBlock& p0, const BitBlock& q0, const BitBlock& p1, const BitBlock& q1,
                                std::size_t block_index = 0) {
  require_same_shape(p0, q0);
  require_same_shape(p1, q1);
  require_same_shape(p0, p1);

  RecoveredKey rec;
  rec.block_index = block_index;
  try {
    const BlockSolution first = recover_row_column(p0, q0);
    const BlockSolution second = recover_row_column(p1, q1);
    rec.key = LegacyKey{first.key.rv, first.key.cv, recover_mv_aligned(first.key, second.key)};
    rec.pinned = first.free_variables;
  } catch (const InconsistentSystem& e) {
    throw AttackFailed(std::string("attack failed: ") + e.what());
  } catch (const MvCrossCheckFailed& e) {
    throw AttackFailed(std::string("attack failed: ") + e.what());
  }

  if (legacy::encrypt_block(p0, rec.key) != q0 ||
      legacy::encrypt_block(p1, legacy::key_update(rec.key)) != q1) {
    throw AttackFailed("attack failed: recovered key does not reproduce the known ciphertext blocks");
  }
  return rec;
}

// recover_key on blocks (anchor, anchor+1), then decryption of the whole
// ciphertext from the anchor onward.
inline BreakResult full_break(const BitBlock& p0, const BitBlock& q0, const BitBlock& p1, const BitBlock& q1,
                              std::span<const std::uint8_t> ciphertext, std::size_t original_length,
                              std::size_t anchor_block = 0) {
  RecoveredKey rec = recover_key(p0, q0, p1, q1, anchor_block);
  const std::size_t n = p0.side();
  const std::size_t bb = n * n / 8;
  const std::size_t offset = anchor_block * bb;
  if (offset > ciphertext.size() || original_length > ciphertext.size()) {
    throw ContractError("anchor block or recorded length lies beyond the ciphertext");
  }
  BreakResult out;
  out.recovered = std::move(rec);
  const std::size_t remaining = original_length > offset ? original_length - offset : 0;
  out.plaintext = legacy::decrypt(ciphertext.subspan(offset), out.recovered.key, remaining);
  return out;
}

}  // namespace dnacrypt::attack
