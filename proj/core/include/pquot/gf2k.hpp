#pragma once

// Exact arithmetic in GF(2^k), 1 <= k <= 32, in the polynomial basis of a
// fixed modulus. Contexts are interned: field_make(k) always returns the same
// object, which lives for the whole program and may be shared across threads.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pquot {

inline constexpr unsigned kMaxFieldDegree = 32;

class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  unsigned degree() const noexcept { return k_; }
  /// Number of elements, 2^k.
  std::uint64_t size() const noexcept { return std::uint64_t{1} << k_; }
  /// Modulus as a bit vector, bit i = coefficient of t^i (degree k bit set).
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// Raw representation of the fixed multiplicative generator g.
  std::uint32_t generator() const noexcept { return generator_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  std::uint32_t sqr(std::uint32_t a) const noexcept { return mul(a, a); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; throws ComputeError for 0.
  std::uint32_t inv(std::uint32_t a) const;
  /// The unique b with b^2 = a.
  std::uint32_t sqrt(std::uint32_t a) const noexcept;
  /// g^i for the fixed generator g.
  std::uint32_t gen_pow(std::uint64_t i) const noexcept { return pow(generator_, i); }

  /// Text form: "0", "1", "g", "g^3+g+1" (polynomial in the generator).
  std::string format(std::uint32_t a) const;

 private:
  friend const FieldCtx& field_make(unsigned k);
  explicit FieldCtx(unsigned k);
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const noexcept;

  unsigned k_;
  std::uint64_t modulus_;
  std::uint32_t generator_;
  // Log/antilog tables, only for k <= 16.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Canonical context for GF(2^k). Throws InputError("unsupported field size").
const FieldCtx& field_make(unsigned k);

/// Canonical context with exactly q elements (q a power of two, 2 <= q <= 2^32).
const FieldCtx& field_of_size(std::uint64_t q);

/// Fixed modulus for degree k, as published in docs/moduli.md.
std::uint64_t canonical_modulus(unsigned k);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldCtx& ctx, std::uint32_t bits) : ctx_(&ctx), bits_(bits) {}

  static FieldElement zero(const FieldCtx& ctx) { return {ctx, 0}; }
  static FieldElement one(const FieldCtx& ctx) { return {ctx, 1}; }
  static FieldElement gen(const FieldCtx& ctx) { return {ctx, ctx.generator()}; }

  const FieldCtx& ctx() const noexcept { return *ctx_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  bool is_one() const noexcept { return bits_ == 1; }

  FieldElement operator+(FieldElement o) const { return {*ctx_, bits_ ^ o.bits_}; }
  FieldElement operator-(FieldElement o) const { return *this + o; }
  FieldElement operator*(FieldElement o) const { return {*ctx_, ctx_->mul(bits_, o.bits_)}; }
  FieldElement operator/(FieldElement o) const { return {*ctx_, ctx_->mul(bits_, ctx_->inv(o.bits_))}; }
  FieldElement& operator+=(FieldElement o) { bits_ ^= o.bits_; return *this; }
  FieldElement& operator*=(FieldElement o) { bits_ = ctx_->mul(bits_, o.bits_); return *this; }
  FieldElement inverse() const { return {*ctx_, ctx_->inv(bits_)}; }
  FieldElement pow(std::uint64_t e) const { return {*ctx_, ctx_->pow(bits_, e)}; }

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.ctx_ == b.ctx_ && a.bits_ == b.bits_;
  }
  friend auto operator<=>(FieldElement a, FieldElement b) { return a.bits_ <=> b.bits_; }

  std::string to_string() const { return ctx_->format(bits_); }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::uint32_t bits_ = 0;
};

/// Unique square root (Frobenius is bijective on a finite field of char 2).
FieldElement sqrt(FieldElement a);

/// All elements of the field in the fixed enumeration order (by raw value).
std::vector<FieldElement> elements(const FieldCtx& ctx);

/// Roots in the coefficients' field of c0 + c1 t + ... + cn t^n, sorted by raw
/// value. Multiplicities are not reported. Throws InputError("identically zero").
std::vector<FieldElement> poly_roots(std::span<const FieldElement> coeffs);

/// Injective field homomorphism GF(2^k) -> GF(2^K) for k | K. Embeddings
/// between canonical fields compose: embed(K->L) o embed(k->K) == embed(k->L).
class Embedding {
 public:
  Embedding() = default;
  Embedding(const FieldCtx& from, const FieldCtx& to);

  const FieldCtx& from() const noexcept { return *from_; }
  const FieldCtx& to() const noexcept { return *to_; }
  std::uint32_t map(std::uint32_t a) const noexcept;
  FieldElement operator()(FieldElement a) const;

 private:
  const FieldCtx* from_ = nullptr;
  const FieldCtx* to_ = nullptr;
  std::vector<std::uint32_t> basis_;  // images of t^i
};

/// Canonical embedding between canonical fields (cached). Requires
/// from.degree() | to.degree().
const Embedding& embedding(const FieldCtx& from, const FieldCtx& to);

/// GF(2^(k m)) together with the embedding of GF(2^k).
/// Throws InputError("extension too large") when k*m > 32.
std::pair<const FieldCtx*, const Embedding*> field_extend(const FieldCtx& ctx, unsigned m);

/// Smallest canonical field containing both.
const FieldCtx& common_field(const FieldCtx& a, const FieldCtx& b);

}  // namespace pquot

template <>
struct std::hash<pquot::FieldElement> {
  std::size_t operator()(pquot::FieldElement a) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{a.ctx().degree()} << 32) | a.bits());
  }
};
