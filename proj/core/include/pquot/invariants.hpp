#pragma once

// Invariant ring of a p-closed polynomial vector field on a chart, presented
// as k[a^2, b^2, h] with h^2 = f(a^2, b^2), i.e. k[X, Y, Z] / (Z^2 + f).

#include <array>

#include "pquot/charts.hpp"

namespace pquot {

struct HypersurfacePresentation {
  Chart chart = Chart::U0;
  MultiPoly h;                     // in the chart coordinates
  MultiPoly f;                     // in X, Y
  std::array<MultiPoly, 3> cert;   // h = c1 a + c2 b + c3 a b, c_i in k[a^2, b^2]

  /// "Z^2 + <f>".
  std::string relation() const;
  HypersurfacePresentation embedded(const Embedding& e) const;
};

/// Minimal-degree h with delta(h) = 0 and h outside k[a^2, b^2], normalized
/// monic. `degree_bound` = 0 selects deg F + deg G + 2; the bound doubles up
/// to four times its initial value before giving up with
/// ComputeError("no hypersurface generator found below bound").
HypersurfacePresentation invariant_ring(const PolyDerivation& d, unsigned degree_bound = 0);

/// Germ of Z^2 + f at the image of a point of the same chart, moved to the
/// origin: f(X + a^2, Y + b^2) + f(a^2, b^2). Throws InputError("point outside
/// chart") when the point is carried by another chart and is not on this one.
MultiPoly localize(const HypersurfacePresentation& pres, const SingularPoint& pt);

/// Variables of the relation polynomial.
inline VarList relation_vars() { return {Var::X, Var::Y}; }

}  // namespace pquot
