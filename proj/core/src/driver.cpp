#include "pquot/driver.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "pquot/error.hpp"

namespace pquot {

std::string multiset_name(std::vector<RDPType> types) {
  std::sort(types.begin(), types.end(), [](const RDPType& a, const RDPType& b) {
    if (a.index != b.index) return a.index > b.index;
    if (a.letter != b.letter) return a.letter > b.letter;
    return a.coindex < b.coindex;
  });
  std::string out;
  for (std::size_t i = 0; i < types.size();) {
    std::size_t j = i;
    while (j < types.size() && types[j] == types[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += types[i].to_string();
    i = j;
  }
  return out;
}

std::string configuration_label(const std::vector<RDPType>& types) {
  static const std::set<std::string> known{"A1", "7A1", "D4^0+3A1", "D6^0+A1", "E7^0"};
  const std::string name = multiset_name(types);
  if (known.count(name)) return name;
  return "OTHER(" + name + ")";
}

namespace {

// Presentations per chart over the base field, computed on first use.
class ChartPresentations {
 public:
  ChartPresentations(const PolyDerivation& d, const ConfigOptions& opts) : d_(d), opts_(opts) {}

  const HypersurfacePresentation& over(Chart c, const FieldCtx& K) {
    auto& slot = base_[static_cast<std::size_t>(c)];
    if (!slot) {
      auto [f, g] = chart_components(d_, c);
      slot = invariant_ring(PolyDerivation::make_unchecked(c, std::move(f), std::move(g)), opts_.degree_bound);
    }
    if (&K == &d_.ctx()) return *slot;
    auto& ext = extended_[static_cast<std::size_t>(c)];
    if (!ext || &ext->h.ctx() != &K) ext = slot->embedded(embedding(d_.ctx(), K));
    return *ext;
  }

 private:
  const PolyDerivation& d_;
  const ConfigOptions& opts_;
  std::array<std::optional<HypersurfacePresentation>, 3> base_;
  std::array<std::optional<HypersurfacePresentation>, 3> extended_;
};

PointReport classify_point(ChartPresentations& pres, const SingularPoint& pt, const FieldCtx& K,
                           const ConfigOptions& opts) {
  PointReport r;
  r.point = pt;
  r.germ = normalize_square_part(localize(pres.over(pt.chart, K), pt));
  if (!is_singular_germ(r.germ)) throw ConsistencyError("degeneracy point is smooth on the quotient");
  r.type = classify_rdp(r.germ, opts.resolve);
  r.tau = tjurina(r.germ, opts.scheme.max_truncation);
  return r;
}

std::vector<PointReport> classify_all(const PolyDerivation& d, const SingularScheme& s, const ConfigOptions& opts) {
  ChartPresentations pres(d, opts);
  std::vector<PointReport> out;
  for (const SingularPoint& pt : s.points) out.push_back(classify_point(pres, pt, *s.field, opts));
  return out;
}

}  // namespace

std::vector<PointReport> affine_singularities(const PolyDerivation& d, const ConfigOptions& opts,
                                              const FieldCtx** field) {
  const SingularScheme s = singular_scheme_on(d, {d.chart()}, opts.scheme);
  if (field) *field = s.field;
  return classify_all(d, s, opts);
}

bool chern_check(int deg_L, const std::vector<unsigned>& lengths) {
  long sum = 0;
  for (unsigned l : lengths) sum += l;
  return sum == static_cast<long>(deg_L) * deg_L - 3L * deg_L + 3;
}

bool chern_check(const Configuration& c) {
  std::vector<unsigned> lengths;
  for (const PointReport& p : c.points) lengths.push_back(p.point.length);
  return chern_check(c.deg_L, lengths);
}

Configuration configuration(const PolyDerivation& d, const ConfigOptions& opts) {
  Configuration c;
  c.deg_L = degree_of_foliation(d);
  const SingularScheme s = singular_scheme(d, opts.scheme);
  c.field = s.field;
  c.points = classify_all(d, s, opts);
  std::vector<RDPType> types;
  for (const PointReport& p : c.points) {
    types.push_back(p.type);
    if (p.point.length != p.type.index) c.lengths_match_types = false;
  }
  c.label = configuration_label(types);
  if (!chern_check(c))
    throw ConsistencyError("local lengths do not add up to deg_L^2 - 3 deg_L + 3 (deg_L = " +
                           std::to_string(c.deg_L) + ")");
  return c;
}

NormalFormCoefficients tuple_at(const FieldCtx& ctx, std::uint64_t index) {
  NormalFormCoefficients c = NormalFormCoefficients::zero(ctx);
  const std::uint64_t q = ctx.size();
  for (std::size_t i = 7; i-- > 0;) {
    c[i] = FieldElement(ctx, static_cast<std::uint32_t>(index % q));
    index /= q;
  }
  return c;
}

namespace {

const std::set<std::string> kDegMinusOneLabels{"7A1", "D4^0+3A1", "D6^0+A1", "E7^0"};

void examine(const FieldCtx& ctx, std::uint64_t index, const NormalFormCoefficients& coeffs,
             const SurveyOptions& opts, SurveyReport& r) {
  ++r.examined;
  auto [F, G] = normal_form_components(coeffs);
  switch (check_normal_form(F, G)) {
    case NormalFormStatus::zero_component: ++r.rejected_ii; return;
    case NormalFormStatus::common_factor: ++r.rejected_iii; return;
    case NormalFormStatus::valid: break;
  }
  ++r.accepted;
  std::vector<std::string> reasons;
  std::string key;
  try {
    const PolyDerivation d = PolyDerivation::make_unchecked(Chart::U0, std::move(F), std::move(G));
    const PClosedResult pc = is_p_closed(d);
    const VarList xy = chart_vars(Chart::U0);
    const MultiPoly H = MultiPoly::from_terms(ctx, xy,
                                              {{mono::make({2, 0, 0}), coeffs.a30.bits()},
                                               {mono::make({0, 2, 0}), coeffs.a12.bits()},
                                               {0, coeffs.a10.bits()}});
    if (!pc.p_closed || !pc.H || !(*pc.H == H)) reasons.push_back("not p-closed with the expected witness");

    const Configuration c = configuration(d, opts.config);
    key = "degL=" + std::to_string(c.deg_L) + "/" + c.label;
    if (c.deg_L == 0) reasons.push_back("deg L = 0");
    if (c.deg_L != 1 && c.deg_L != -1) reasons.push_back("deg L outside {1, -1}");
    if (c.deg_L == 1 && c.label != "A1") reasons.push_back("deg L = 1 but configuration " + c.label);
    if (c.deg_L == -1 && !kDegMinusOneLabels.count(c.label))
      reasons.push_back("deg L = -1 but configuration " + c.label);
    if (c.points.empty()) reasons.push_back("no singular points");
    if (!c.lengths_match_types) reasons.push_back("local length differs from the singularity index");
  } catch (const Error& e) {
    reasons.push_back(e.what());
    key = "error";
  }
  ++r.histogram[key];
  if (reasons.empty()) return;
  ++r.violation_count;
  if (r.violations.size() < opts.max_violations) {
    std::string joined;
    for (const auto& s : reasons) joined += (joined.empty() ? "" : "; ") + s;
    r.violations.push_back({index, coeffs, joined});
  }
}

NormalFormCoefficients sample_at(const FieldCtx& ctx, std::uint64_t seed, std::uint64_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.size() - 1);
  NormalFormCoefficients c = NormalFormCoefficients::zero(ctx);
  for (std::size_t k = 0; k < 7; ++k) c[k] = FieldElement(ctx, static_cast<std::uint32_t>(dist(rng)));
  return c;
}

}  // namespace

SurveyReport survey(const FieldCtx& ctx, const SurveyOptions& opts) {
  const bool sampled = opts.samples > 0;
  if (!sampled && ctx.size() > 16)
    throw InputError("exhaustive survey needs a field with at most 16 elements; use sampling for GF(" +
                     std::to_string(ctx.size()) + ")");
  std::uint64_t total = opts.samples;
  if (!sampled) {
    total = 1;
    for (int i = 0; i < 7; ++i) total *= ctx.size();
  }
  const unsigned workers = std::max(1u, opts.workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;

  std::vector<SurveyReport> parts(workers);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = std::min(total, chunk * w), hi = std::min(total, lo + chunk);
    for (std::uint64_t i = lo; i < hi; ++i)
      examine(ctx, i, sampled ? sample_at(ctx, opts.seed, i) : tuple_at(ctx, i), opts, parts[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  SurveyReport r;
  r.field_size = ctx.size();
  r.sampled = sampled;
  for (const SurveyReport& p : parts) {
    r.examined += p.examined;
    r.rejected_ii += p.rejected_ii;
    r.rejected_iii += p.rejected_iii;
    r.accepted += p.accepted;
    for (const auto& [k, v] : p.histogram) r.histogram[k] += v;
    r.violation_count += p.violation_count;
    for (const Violation& v : p.violations)
      if (r.violations.size() < opts.max_violations) r.violations.push_back(v);
  }
  return r;
}

}  // namespace pquot
