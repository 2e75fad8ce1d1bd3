#include "pquot/gf2k.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "pquot/error.hpp"
#include "pquot/upoly.hpp"

namespace pquot {

namespace {

// k = 1 is written `t` (the field is the prime field either way);
// k >= 2 are the Conway polynomials, so subfield embeddings are compatible.
constexpr std::array<std::uint64_t, kMaxFieldDegree + 1> kModuli = {
    0x0ULL,
    0x2ULL,          // 1: t
    0x7ULL,          // 2: t^2 + t + 1
    0xbULL,          // 3: t^3 + t + 1
    0x13ULL,         // 4: t^4 + t + 1
    0x25ULL,         // 5: t^5 + t^2 + 1
    0x5bULL,         // 6: t^6 + t^4 + t^3 + t + 1
    0x83ULL,         // 7: t^7 + t + 1
    0x11dULL,        // 8: t^8 + t^4 + t^3 + t^2 + 1
    0x211ULL,        // 9: t^9 + t^4 + 1
    0x46fULL,        // 10: t^10 + t^6 + t^5 + t^3 + t^2 + t + 1
    0x805ULL,        // 11: t^11 + t^2 + 1
    0x10ebULL,       // 12: t^12 + t^7 + t^6 + t^5 + t^3 + t + 1
    0x201bULL,       // 13: t^13 + t^4 + t^3 + t + 1
    0x40a9ULL,       // 14: t^14 + t^7 + t^5 + t^3 + 1
    0x8035ULL,       // 15: t^15 + t^5 + t^4 + t^2 + 1
    0x1002dULL,      // 16: t^16 + t^5 + t^3 + t^2 + 1
    0x20009ULL,      // 17: t^17 + t^3 + 1
    0x41403ULL,      // 18: t^18 + t^12 + t^10 + t + 1
    0x80027ULL,      // 19: t^19 + t^5 + t^2 + t + 1
    0x1006f3ULL,     // 20
    0x200065ULL,     // 21
    0x401f61ULL,     // 22
    0x800021ULL,     // 23: t^23 + t^5 + 1
    0x101e6a9ULL,    // 24
    0x2000145ULL,    // 25
    0x40045d3ULL,    // 26
    0x80016adULL,    // 27
    0x100020e5ULL,   // 28
    0x20000005ULL,   // 29: t^29 + t^2 + 1
    0x400328afULL,   // 30
    0x80000009ULL,   // 31: t^31 + t^3 + 1
    0x100008299ULL,  // 32
};

constexpr unsigned kTableLimit = 16;
constexpr std::uint64_t kExhaustiveRootLimit = 1u << 10;

}  // namespace

std::uint64_t canonical_modulus(unsigned k) {
  if (k < 1 || k > kMaxFieldDegree) throw InputError("unsupported field size");
  return kModuli[k];
}

FieldCtx::FieldCtx(unsigned k) : k_(k), modulus_(kModuli[k]), generator_(k == 1 ? 1u : 2u) {
  if (k_ <= kTableLimit) {
    const std::uint64_t order = size() - 1;
    exp_.resize(2 * order + 1);
    log_.assign(size(), 0);
    std::uint32_t a = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = a;
      log_[a] = static_cast<std::uint32_t>(i);
      a = mul_slow(a, generator_);
    }
    for (std::uint64_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
  }
}

std::uint32_t FieldCtx::mul_slow(std::uint32_t a, std::uint32_t b) const noexcept {
  // Carry-less product then reduction by the modulus.
  std::uint64_t prod = 0;
  std::uint64_t aa = a;
  while (b != 0) {
    if (b & 1u) prod ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  for (int bit = 2 * static_cast<int>(k_) - 2; bit >= static_cast<int>(k_); --bit) {
    if ((prod >> bit) & 1u) prod ^= modulus_ << (bit - static_cast<int>(k_));
  }
  if (k_ == 1) prod &= 1u;
  return static_cast<std::uint32_t>(prod);
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) {
    const std::uint64_t order = size() - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
  }
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw ComputeError("division by zero in GF(2^" + std::to_string(k_) + ")");
  if (!log_.empty()) {
    const std::uint64_t order = size() - 1;
    return exp_[(order - log_[a]) % order];
  }
  return pow(a, size() - 2);
}

std::uint32_t FieldCtx::sqrt(std::uint32_t a) const noexcept {
  // a^(2^(k-1)): k-1 squarings.
  std::uint32_t r = a;
  for (unsigned i = 1; i < k_; ++i) r = mul(r, r);
  return r;
}

std::string FieldCtx::format(std::uint32_t a) const {
  if (a == 0) return "0";
  std::string out;
  for (int bit = static_cast<int>(k_) - 1; bit >= 0; --bit) {
    if (!((a >> bit) & 1u)) continue;
    if (!out.empty()) out += '+';
    if (bit == 0) out += '1';
    else if (bit == 1) out += 'g';
    else out += "g^" + std::to_string(bit);
  }
  return out;
}

const FieldCtx& field_make(unsigned k) {
  if (k < 1 || k > kMaxFieldDegree) throw InputError("unsupported field size");
  static std::array<std::unique_ptr<FieldCtx>, kMaxFieldDegree + 1> registry;
  static std::array<std::once_flag, kMaxFieldDegree + 1> once;
  std::call_once(once[k], [k] { registry[k].reset(new FieldCtx(k)); });
  return *registry[k];
}

const FieldCtx& field_of_size(std::uint64_t q) {
  if (q < 2 || !std::has_single_bit(q)) throw InputError("unsupported field size");
  return field_make(static_cast<unsigned>(std::countr_zero(q)));
}

FieldElement sqrt(FieldElement a) { return {a.ctx(), a.ctx().sqrt(a.bits())}; }

std::vector<FieldElement> elements(const FieldCtx& ctx) {
  std::vector<FieldElement> out;
  out.reserve(ctx.size());
  for (std::uint64_t v = 0; v < ctx.size(); ++v) out.emplace_back(ctx, static_cast<std::uint32_t>(v));
  return out;
}

std::vector<FieldElement> poly_roots(std::span<const FieldElement> coeffs) {
  if (coeffs.empty() || std::all_of(coeffs.begin(), coeffs.end(), [](FieldElement c) { return c.is_zero(); }))
    throw InputError("identically zero");
  const FieldCtx& ctx = coeffs.front().ctx();
  std::vector<FieldElement> out;
  if (ctx.size() <= kExhaustiveRootLimit) {
    for (std::uint64_t v = 0; v < ctx.size(); ++v) {
      std::uint32_t acc = 0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = ctx.mul(acc, static_cast<std::uint32_t>(v)) ^ it->bits();
      if (acc == 0) out.emplace_back(ctx, static_cast<std::uint32_t>(v));
    }
    return out;
  }
  std::vector<std::uint32_t> raw;
  raw.reserve(coeffs.size());
  for (FieldElement c : coeffs) raw.push_back(c.bits());
  for (std::uint32_t r : roots(UPoly(ctx, std::move(raw)))) out.emplace_back(ctx, r);
  return out;
}

Embedding::Embedding(const FieldCtx& from, const FieldCtx& to) : from_(&from), to_(&to) {
  if (to.degree() % from.degree() != 0)
    throw InputError("GF(2^" + std::to_string(from.degree()) + ") is not a subfield of GF(2^" +
                     std::to_string(to.degree()) + ")");
  // Conway compatibility: the subfield generator is G^((2^K-1)/(2^k-1)).
  std::uint32_t image_of_gen = 1;
  if (from.degree() > 1) {
    const std::uint64_t cofactor = (to.size() - 1) / (from.size() - 1);
    image_of_gen = to.pow(to.generator(), cofactor);
  }
  basis_.resize(from.degree());
  std::uint32_t p = 1;
  for (unsigned i = 0; i < from.degree(); ++i) {
    basis_[i] = p;
    p = to.mul(p, image_of_gen);
  }
}

std::uint32_t Embedding::map(std::uint32_t a) const noexcept {
  std::uint32_t out = 0;
  for (unsigned i = 0; a != 0; ++i, a >>= 1)
    if (a & 1u) out ^= basis_[i];
  return out;
}

FieldElement Embedding::operator()(FieldElement a) const { return {*to_, map(a.bits())}; }

const Embedding& embedding(const FieldCtx& from, const FieldCtx& to) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Embedding>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{from.degree(), to.degree()}];
  if (!slot) slot = std::make_unique<Embedding>(from, to);
  return *slot;
}

std::pair<const FieldCtx*, const Embedding*> field_extend(const FieldCtx& ctx, unsigned m) {
  if (m == 0) throw InputError("extension degree must be positive");
  if (static_cast<std::uint64_t>(ctx.degree()) * m > kMaxFieldDegree) throw InputError("extension too large");
  const FieldCtx& big = field_make(ctx.degree() * m);
  return {&big, &embedding(ctx, big)};
}

const FieldCtx& common_field(const FieldCtx& a, const FieldCtx& b) {
  const unsigned l = std::lcm(a.degree(), b.degree());
  if (l > kMaxFieldDegree) throw ComputeError("extension too large");
  return field_make(l);
}

}  // namespace pquot
