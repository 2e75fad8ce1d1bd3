#pragma once

// Polynomial vector fields F d/da + G d/db on one of the three standard
// affine charts of the projective plane.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "pquot/poly.hpp"

namespace pquot {

/// U0 = {X0 != 0} with (x, y) = (X1/X0, X2/X0), U1 = {X1 != 0} with
/// (z, w) = (X0/X1, X2/X1), U2 = {X2 != 0} with (u, v) = (X0/X2, X1/X2).
enum class Chart : std::uint8_t { U0 = 0, U1 = 1, U2 = 2 };

std::string chart_name(Chart c);
std::optional<Chart> chart_from_string(std::string_view s);
/// Coordinate variables of a chart, in ascending variable order.
VarList chart_vars(Chart c);

class PolyDerivation {
 public:
  /// Validates F != 0, G != 0, gcd(F, G) = 1 and that both live on the chart's
  /// coordinates over one field.
  static PolyDerivation make(Chart chart, MultiPoly F, MultiPoly G);
  /// No validation beyond matching field and variables.
  static PolyDerivation make_unchecked(Chart chart, MultiPoly F, MultiPoly G);

  Chart chart() const noexcept { return chart_; }
  const FieldCtx& ctx() const noexcept { return F_.ctx(); }
  const MultiPoly& F() const noexcept { return F_; }
  const MultiPoly& G() const noexcept { return G_; }

  /// delta(p) = F p_a + G p_b.
  MultiPoly apply(const MultiPoly& p) const;
  PolyDerivation embedded(const Embedding& e) const;
  PolyDerivation scaled(FieldElement s) const;

  /// "F = <expr>; G = <expr>".
  std::string to_string() const;

 private:
  PolyDerivation(Chart chart, MultiPoly F, MultiPoly G);

  Chart chart_;
  MultiPoly F_;
  MultiPoly G_;
};

struct NormalFormCoefficients {
  FieldElement a30, a12, a20, a02, a10, b20, b02;

  static constexpr std::array<const char*, 7> kNames{"a30", "a12", "a20", "a02", "a10", "b20", "b02"};

  static NormalFormCoefficients zero(const FieldCtx& ctx);
  std::array<FieldElement, 7> as_array() const { return {a30, a12, a20, a02, a10, b20, b02}; }
  static NormalFormCoefficients from_array(const std::array<FieldElement, 7>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
  }
  FieldElement& operator[](std::size_t i);
};

/// F = a30 x^3 + a12 x y^2 + a20 x^2 + a02 y^2 + a10 x,
/// G = a30 x^2 y + a12 y^3 + b20 x^2 + b02 y^2 + a10 y.
std::pair<MultiPoly, MultiPoly> normal_form_components(const NormalFormCoefficients& c);

enum class NormalFormStatus { valid, zero_component, common_factor };
NormalFormStatus check_normal_form(const MultiPoly& F, const MultiPoly& G);

/// Throws InputError("violates normal-form conditions (ii)/(iii)") when F = 0,
/// G = 0 or F and G share a factor.
PolyDerivation make_normalized(const NormalFormCoefficients& c);

struct PClosedResult {
  bool p_closed = false;
  std::optional<MultiPoly> H;  // delta^2 = H delta
};

/// delta^2 = A d/da + B d/db with A = F F_a + G F_b, B = F G_a + G G_b;
/// p-closed iff A G = B F.
PClosedResult is_p_closed(const PolyDerivation& d);

}  // namespace pquot
