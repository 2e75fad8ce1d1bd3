#pragma once

// End-to-end pipeline per vector field and the exhaustive survey over the
// normal-form coefficient space.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pquot/charts.hpp"
#include "pquot/invariants.hpp"
#include "pquot/rdp.hpp"

namespace pquot {

struct ConfigOptions {
  SchemeOptions scheme;
  ResolveOptions resolve;
  unsigned degree_bound = 0;  // invariant_ring bound, 0 = default
};

struct PointReport {
  SingularPoint point;
  MultiPoly germ;  // normalized local relation polynomial in X, Y
  RDPType type;
  unsigned tau = 0;
};

struct Configuration {
  int deg_L = 0;
  const FieldCtx* field = nullptr;
  std::vector<PointReport> points;
  std::string label;
  bool lengths_match_types = true;  // every point has length == type index
};

/// Multiset name such as "D4^0+3A1" (largest index first).
std::string multiset_name(std::vector<RDPType> types);
/// multiset_name when it is one of A1, 7A1, D4^0+3A1, D6^0+A1, E7^0,
/// otherwise "OTHER(<multiset>)".
std::string configuration_label(const std::vector<RDPType>& types);

/// Singular points of Spec k[a,b]^delta on the field's own chart, classified.
std::vector<PointReport> affine_singularities(const PolyDerivation& d, const ConfigOptions& opts = {},
                                              const FieldCtx** field = nullptr);

/// deg L, singular scheme, per-point type. Throws ConsistencyError when the
/// lengths do not add up to deg_L^2 - 3 deg_L + 3.
Configuration configuration(const PolyDerivation& d, const ConfigOptions& opts = {});

bool chern_check(int deg_L, const std::vector<unsigned>& lengths);
bool chern_check(const Configuration& c);

/// Tuple number `index` in lexicographic order, a30 most significant, field
/// elements ordered by raw value.
NormalFormCoefficients tuple_at(const FieldCtx& ctx, std::uint64_t index);

struct SurveyOptions {
  unsigned workers = 1;
  std::uint64_t samples = 0;  // 0 = exhaustive
  std::uint64_t seed = 1;
  std::size_t max_violations = 1000;  // entries kept in the report
  ConfigOptions config;
};

struct Violation {
  std::uint64_t index = 0;  // tuple number (exhaustive) or sample number
  NormalFormCoefficients coeffs;
  std::string reason;
};

struct SurveyReport {
  std::uint64_t field_size = 0;
  bool sampled = false;
  std::uint64_t examined = 0;
  std::uint64_t rejected_ii = 0;
  std::uint64_t rejected_iii = 0;
  std::uint64_t accepted = 0;
  std::map<std::string, std::uint64_t> histogram;  // "degL=<n>/<label>"
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
};

/// Exhaustive for fields with at most 16 elements unless samples > 0;
/// larger fields require samples > 0. Output does not depend on `workers`.
SurveyReport survey(const FieldCtx& ctx, const SurveyOptions& opts = {});

}  // namespace pquot
