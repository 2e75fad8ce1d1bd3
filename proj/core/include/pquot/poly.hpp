#pragma once

// Sparse multivariate polynomials (at most three variables) over GF(2^k).
//
// Terms are kept sorted in decreasing graded-lexicographic order with the
// global variable order x < y < z < w < u < v < X < Y < Z. A monomial is a
// packed 64-bit key (degree:16 | e2:16 | e1:16 | e0:16) where e_i is the
// exponent of the i-th variable of the (ascending) variable list, so plain
// integer comparison of keys is the term order and monomial multiplication is
// key addition.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pquot/gf2k.hpp"

namespace pquot {

enum class Var : std::uint8_t { x, y, z, w, u, v, X, Y, Z };

char var_name(Var v);
std::optional<Var> var_from_char(char c);

/// Ascending, duplicate-free, at most three entries.
using VarList = std::vector<Var>;

inline constexpr std::size_t kMaxVars = 3;
using Exponents = std::array<unsigned, kMaxVars>;

struct Term {
  std::uint64_t key;
  std::uint32_t coeff;
};

namespace mono {
inline std::uint64_t make(const Exponents& e) {
  return (std::uint64_t{e[0] + e[1] + e[2]} << 48) | (std::uint64_t{e[2]} << 32) |
         (std::uint64_t{e[1]} << 16) | std::uint64_t{e[0]};
}
inline unsigned exponent(std::uint64_t key, std::size_t pos) { return (key >> (16 * pos)) & 0xffffu; }
inline unsigned degree(std::uint64_t key) { return static_cast<unsigned>(key >> 48); }
inline Exponents exponents(std::uint64_t key) { return {exponent(key, 0), exponent(key, 1), exponent(key, 2)}; }
inline bool divides(std::uint64_t a, std::uint64_t b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exponent(a, i) > exponent(b, i)) return false;
  return true;
}
}  // namespace mono

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const FieldCtx& ctx, VarList vars);

  static MultiPoly constant(const FieldCtx& ctx, VarList vars, std::uint32_t c);
  static MultiPoly constant(FieldElement c, VarList vars) { return constant(c.ctx(), std::move(vars), c.bits()); }
  static MultiPoly variable(const FieldCtx& ctx, VarList vars, Var v);
  static MultiPoly monomial(const FieldCtx& ctx, VarList vars, std::uint32_t c, const Exponents& e);
  /// Builds from arbitrary (unsorted, possibly repeated, possibly zero) terms.
  static MultiPoly from_terms(const FieldCtx& ctx, VarList vars, std::vector<Term> terms);

  const FieldCtx& ctx() const noexcept { return *ctx_; }
  bool has_ctx() const noexcept { return ctx_ != nullptr; }
  const VarList& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  /// Position of v in the variable list, or -1.
  int index_of(Var v) const noexcept;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
  /// -1 for the zero polynomial.
  int total_degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(mono::degree(terms_[0].key)); }
  /// Lowest total degree of a term (order at the origin); -1 for zero.
  int order() const noexcept;
  unsigned degree_in(Var v) const;
  FieldElement leading_coeff() const;
  FieldElement coefficient(const Exponents& e) const;
  FieldElement constant_term() const { return coefficient({0, 0, 0}); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const { return *this + o; }
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(FieldElement s) const;
  MultiPoly pow(unsigned e) const;
  /// Scaled so the graded-lex leading coefficient is 1 (zero stays zero).
  MultiPoly monic() const;
  /// Keeps terms of total degree < n.
  MultiPoly truncated(unsigned n) const;

  FieldElement eval(std::span<const FieldElement> point) const;
  MultiPoly embedded(const Embedding& e) const;
  /// Same terms reinterpreted over another variable list of the same length
  /// (position i of the old list becomes position i of the new one).
  MultiPoly renamed(VarList vars) const;
  /// Same polynomial viewed in a superset variable list.
  MultiPoly lifted(const VarList& vars) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_compatible(const MultiPoly& o) const;

  const FieldCtx* ctx_ = nullptr;
  VarList vars_;
  std::vector<Term> terms_;  // strictly decreasing keys, nonzero coefficients
};

/// Formal partial derivative; with characteristic-2 coefficients only odd
/// exponents contribute. Throws InputError("no such variable").
MultiPoly partial_derivative(const MultiPoly& p, Var v);

/// Greatest common divisor of polynomials in at most two (used) variables,
/// monic in graded-lex order; gcd(p, 0) = monic(p).
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

/// p / q when q divides p exactly, otherwise nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Composes p with polynomials for each of its variables. All replacement
/// polynomials share a field and variable list, which the result inherits.
MultiPoly substitute(const MultiPoly& p, const std::map<Var, MultiPoly>& assignments);

/// p(v_1 + s_1, ..., v_n + s_n).
MultiPoly translate(const MultiPoly& p, std::span<const FieldElement> shift);

/// Dimension over the field of the local ring at `point` modulo the ideal of
/// `gens`; 0 if some generator does not vanish there. Throws
/// ComputeError("not zero-dimensional at point") when the truncated
/// dimensions fail to stabilize by `max_truncation`.
unsigned local_quotient_dim(std::span<const MultiPoly> gens, std::span<const FieldElement> point,
                            unsigned max_truncation = 64);

/// Parses the ASCII grammar
///   expr := term ('+' term)* ; term := factor ('*' factor)* ;
///   factor := atom ('^' nat)* ; atom := 'g' | nat | var | '(' expr ')'
/// Variables must belong to `vars`. Throws ParseError with a byte position.
MultiPoly parse_poly(std::string_view text, const FieldCtx& ctx, const VarList& vars);

/// Parses a single field element ("0", "1", "g", "g^5", "g^2+g+1").
FieldElement parse_element(std::string_view text, const FieldCtx& ctx);

}  // namespace pquot
