#pragma once

// Dense linear algebra over GF(2^k) at the sizes this library needs
// (a few hundred columns at most).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pquot/gf2k.hpp"

namespace pquot {

using Row = std::vector<std::uint32_t>;

/// Row space kept in echelon form with leftmost pivots. Inserting rows in any
/// order yields the same pivot set, so the number of pivots among the first c
/// columns is the rank of the projection onto those columns.
class EchelonBasis {
 public:
  EchelonBasis(const FieldCtx& ctx, std::size_t ncols);

  /// Reduces `row` against the basis; returns true if it raised the rank.
  bool insert(Row row);
  std::size_t rank() const noexcept { return rank_; }
  std::size_t cols() const noexcept { return ncols_; }
  bool has_pivot(std::size_t col) const noexcept { return !pivots_[col].empty(); }

 private:
  const FieldCtx* ctx_;
  std::size_t ncols_;
  std::size_t rank_ = 0;
  std::vector<Row> pivots_;  // pivots_[c] is empty or a row with leading 1 at c
};

/// Basis of { v : rows * v = 0 }. Basis vectors are indexed by free columns in
/// increasing order; vector j has a 1 in its free column.
std::vector<Row> nullspace(const FieldCtx& ctx, std::vector<Row> rows, std::size_t ncols);

}  // namespace pquot
