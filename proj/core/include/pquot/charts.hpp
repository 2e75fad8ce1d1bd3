#pragma once

// Moving a vector field between the standard charts of the projective plane,
// reading off deg L, and locating the degeneracy scheme.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pquot/derivation.hpp"

namespace pquot {

/// delta = (c / d^m) (f d/ds + g d/dt) on `chart`, where d is the clearing
/// variable (the coordinate X_i/X_j pointing back at the source chart i),
/// gcd(f, g) = 1, c monic, and d does not divide c when m > 0.
struct ChartExpr {
  Chart chart = Chart::U0;
  Var clearing = Var::x;
  int m = 0;
  MultiPoly c, f, g;

  std::string to_string() const;
};

/// Expresses a vector field given on any chart on `target`. Signs in the
/// transport identities are dropped (characteristic 2).
ChartExpr transport(const PolyDerivation& d, Chart target);

/// deg L = ord(c) - m on each of the two other charts; both readings must
/// agree and c must be a power of the clearing variable (ConsistencyError).
int degree_of_foliation(const PolyDerivation& d);

/// Coprime components (f, g) of the field on `chart`.
std::pair<MultiPoly, MultiPoly> chart_components(const PolyDerivation& d, Chart chart);

struct SingularPoint {
  std::array<FieldElement, 3> coords;  // homogeneous, first nonzero entry is 1
  unsigned length = 0;
  Chart chart = Chart::U0;              // carrier chart
  std::array<FieldElement, 2> affine;   // coordinates on the carrier chart
};

struct SchemeOptions {
  bool extend_auto = true;
  unsigned max_truncation = 64;
};

struct SingularScheme {
  const FieldCtx* field = nullptr;  // field over which every point is rational
  std::vector<SingularPoint> points;
};

/// Common zeros of the chart components on U0, U1, U2, extending the field
/// until all of them are rational, deduplicated in chart order.
SingularScheme singular_scheme(const PolyDerivation& d, const SchemeOptions& opts = {});

/// Same, restricted to the given charts (in precedence order).
SingularScheme singular_scheme_on(const PolyDerivation& d, const std::vector<Chart>& charts,
                                  const SchemeOptions& opts = {});

/// Homogeneous coordinates of the affine point (a, b) of `chart`, normalized.
std::array<FieldElement, 3> homogeneous_point(Chart chart, FieldElement a, FieldElement b);

/// Affine coordinates of a point on `chart`, or nullopt if it is not there.
std::optional<std::array<FieldElement, 2>> affine_point(Chart chart, const std::array<FieldElement, 3>& coords);

}  // namespace pquot
