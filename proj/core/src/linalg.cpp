#include "pquot/linalg.hpp"

namespace pquot {

EchelonBasis::EchelonBasis(const FieldCtx& ctx, std::size_t ncols) : ctx_(&ctx), ncols_(ncols), pivots_(ncols) {}

bool EchelonBasis::insert(Row row) {
  for (std::size_t c = 0; c < ncols_; ++c) {
    const std::uint32_t a = row[c];
    if (a == 0) continue;
    const Row& p = pivots_[c];
    if (p.empty()) {
      const std::uint32_t inv = ctx_->inv(a);
      for (std::size_t j = c; j < ncols_; ++j) row[j] = ctx_->mul(row[j], inv);
      pivots_[c] = std::move(row);
      ++rank_;
      return true;
    }
    for (std::size_t j = c; j < ncols_; ++j)
      if (p[j] != 0) row[j] ^= ctx_->mul(a, p[j]);
  }
  return false;
}

std::vector<Row> nullspace(const FieldCtx& ctx, std::vector<Row> rows, std::size_t ncols) {
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const std::uint32_t inv = ctx.inv(rows[r][c]);
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] = ctx.mul(rows[r][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint32_t f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] ^= ctx.mul(f, rows[r][j]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Row v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = rows[i][free];  // char 2: -x = x
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pquot
