#pragma once

// Rational double points of the form Z^2 + f(X, Y) in characteristic 2.
//
// The projection (X, Y, Z) -> (X, Y) is purely inseparable of degree 2, hence
// a homeomorphism, so the surface is resolved by blowing up points of the
// base plane: every base blowup contributes one exceptional curve upstairs,
// and pullback of divisors gives the intersection numbers
//   E^2 = 2 E_base^2 / m^2,   E_i . E_j = 2 / (m_i m_j),
// with m in {1, 2} the multiplicity of the pulled-back exceptional line.
// (-1)-curves are then contracted to reach the minimal resolution.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pquot/poly.hpp"

namespace pquot {

struct RDPType {
  char letter = 'A';
  unsigned index = 1;
  std::optional<unsigned> coindex;

  /// "A1", "D4^0", "E7^0".
  std::string to_string() const;
  friend bool operator==(const RDPType&, const RDPType&) = default;
};

/// Parses the text form; throws InputError on anything else.
RDPType parse_rdp_type(std::string_view s);

struct DualGraph {
  unsigned vertices = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;  // i < j, sorted
  std::vector<int> self_intersections;
};

/// Deletes every monomial with both exponents even (absorbed by Z -> Z + s).
MultiPoly remove_square_part(const MultiPoly& f);

/// remove_square_part followed by a diagonal rescaling that makes the
/// coefficients of the two lowest monomials 1 where the needed roots exist in
/// the coefficient field.
MultiPoly normalize_square_part(const MultiPoly& f);

/// True when f(0,0) = 0 and both partial derivatives vanish at the origin.
bool is_singular_germ(const MultiPoly& f);

/// 2 * dim k[[X,Y]] / (f_X, f_Y). Throws ComputeError("not an isolated
/// singularity") when that dimension is infinite.
unsigned tjurina(const MultiPoly& f, unsigned max_truncation = 64);

struct ResolveOptions {
  unsigned max_rounds = 32;
  bool extend_auto = true;
};

/// Dual graph of the minimal resolution of Z^2 + f at the origin.
DualGraph resolve_dual_graph(const MultiPoly& f, const ResolveOptions& opts = {});

/// Letter and index of an ADE graph (no coindex). Throws
/// ComputeError("not a rational double point").
RDPType dynkin_type(const DualGraph& g);

/// (type, tau) pairs for every type this library can label.
const std::vector<std::pair<RDPType, unsigned>>& coindex_table();

/// Fast path for c*XY quadratic part, otherwise graph for letter and index
/// and the Tjurina number for the coindex. Throws
/// ComputeError("unrecognized coindex") when tau matches no table row.
RDPType classify_rdp(const MultiPoly& f, const ResolveOptions& opts = {});

}  // namespace pquot
