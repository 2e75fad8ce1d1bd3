#pragma once

// Dense univariate polynomials over GF(2^k). Used for root finding, contents
// in bivariate gcds, and resultants.

#include <cstdint>
#include <utility>
#include <vector>

#include "pquot/gf2k.hpp"

namespace pquot {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  /// Coefficients in ascending degree order; trailing zeros are trimmed.
  UPoly(const FieldCtx& ctx, std::vector<std::uint32_t> coeffs);

  static UPoly constant(const FieldCtx& ctx, std::uint32_t c) { return UPoly(ctx, {c}); }
  static UPoly monomial(const FieldCtx& ctx, std::uint32_t c, unsigned n);

  const FieldCtx& ctx() const noexcept { return *ctx_; }
  bool has_ctx() const noexcept { return ctx_ != nullptr; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::uint32_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(std::uint32_t s) const;
  UPoly monic() const;
  UPoly derivative() const;
  std::uint32_t eval(std::uint32_t x) const noexcept;
  UPoly embedded(const Embedding& e) const;

  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  UPoly operator%(const UPoly& b) const { return divmod(*this, b).second; }
  UPoly operator/(const UPoly& b) const { return divmod(*this, b).first; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();

  const FieldCtx* ctx_ = nullptr;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Product of the distinct monic irreducible factors.
UPoly radical(const UPoly& p);

/// Smallest m such that every root of p lies in GF(2^(k m)). p must be nonzero.
unsigned splitting_degree(const UPoly& p);

/// Distinct roots lying in p's own field, sorted by raw value.
std::vector<std::uint32_t> roots(const UPoly& p);

}  // namespace pquot
