#include "pquot/charts.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pquot/error.hpp"
#include "pquot/upoly.hpp"

namespace pquot {

namespace {

// Homogeneous indices of the two coordinates of chart i: (X_p/X_i, X_q/X_i).
std::array<int, 2> others(Chart c) {
  switch (c) {
    case Chart::U0: return {1, 2};
    case Chart::U1: return {0, 2};
    case Chart::U2: return {0, 1};
  }
  return {0, 0};
}

int index_in(const std::array<int, 2>& a, int r) { return a[0] == r ? 0 : (a[1] == r ? 1 : -1); }

std::string power_text(char v, int e) {
  std::string s(1, v);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string ChartExpr::to_string() const {
  const VarList vars = chart_vars(chart);
  std::string s;
  if (m > 0) s += "1/" + power_text(var_name(clearing), m) + " * ";
  if (!(c.is_constant() && c.constant_term().is_one())) s += "(" + c.to_string() + ") * ";
  s += "((" + f.to_string() + ")*d/d" + var_name(vars[0]) + " + (" + g.to_string() + ")*d/d" + var_name(vars[1]) + ")";
  return s;
}

ChartExpr transport(const PolyDerivation& d, Chart target) {
  const FieldCtx& fld = d.ctx();
  const Chart source = d.chart();
  ChartExpr out;
  out.chart = target;
  if (source == target) {
    out.clearing = chart_vars(target)[0];
    out.c = gcd(d.F(), d.G());
    if (out.c.is_zero()) throw InputError("zero vector field");
    out.f = *divide_exact(d.F(), out.c);
    out.g = *divide_exact(d.G(), out.c);
    return out;
  }
  const int i = static_cast<int>(source);
  const int j = static_cast<int>(target);
  const auto src = others(source);
  const auto tgt = others(target);
  const VarList sv = chart_vars(source);
  const VarList tv = chart_vars(target);

  // Source side: X_j/X_i is the source coordinate `dsrc`; the target
  // coordinate X_r/X_j equals n_r / dsrc with n_r = X_r/X_i (or 1 if r = i).
  const int dsrc = index_in(src, j);
  const MultiPoly dpoly = MultiPoly::variable(fld, sv, sv[static_cast<std::size_t>(dsrc)]);
  const MultiPoly ddelta = dsrc == 0 ? d.F() : d.G();
  std::array<MultiPoly, 2> N;
  for (int k = 0; k < 2; ++k) {
    const int r = tgt[static_cast<std::size_t>(k)];
    if (r == i) {
      N[static_cast<std::size_t>(k)] = ddelta;  // delta(1/d) = delta(d)/d^2, sign dropped
    } else {
      const int idx = index_in(src, r);
      const MultiPoly n = MultiPoly::variable(fld, sv, sv[static_cast<std::size_t>(idx)]);
      const MultiPoly& dn = idx == 0 ? d.F() : d.G();
      N[static_cast<std::size_t>(k)] = dn * dpoly + n * ddelta;  // (n/d)' = (n' d - n d')/d^2
    }
  }
  const int D = std::max(N[0].total_degree(), N[1].total_degree());
  if (D < 0) throw InputError("zero vector field");

  // Target side: X_i/X_j is the target coordinate `dt`, and each source
  // coordinate X_r/X_i is (X_r/X_j) / dt (numerator 1 if r = j).
  const int dt = index_in(tgt, i);
  out.clearing = tv[static_cast<std::size_t>(dt)];
  std::array<int, 2> num{};  // target variable index for each source coordinate, -1 for 1
  for (int k = 0; k < 2; ++k) {
    const int r = src[static_cast<std::size_t>(k)];
    num[static_cast<std::size_t>(k)] = r == j ? -1 : index_in(tgt, r);
  }
  auto homogenize = [&](const MultiPoly& p) {
    std::vector<Term> t;
    for (const Term& term : p.terms()) {
      Exponents e{0, 0, 0};
      const unsigned ea = mono::exponent(term.key, 0);
      const unsigned eb = mono::exponent(term.key, 1);
      if (num[0] >= 0) e[static_cast<std::size_t>(num[0])] += ea;
      if (num[1] >= 0) e[static_cast<std::size_t>(num[1])] += eb;
      e[static_cast<std::size_t>(dt)] += static_cast<unsigned>(D) - ea - eb;
      t.push_back({mono::make(e), term.coeff});
    }
    return MultiPoly::from_terms(fld, tv, std::move(t));
  };
  // delta(s) = N_s / d^2 with 1/d = dt, and N_s(a, b) = A(s, t) / dt^D.
  const MultiPoly A = homogenize(N[0]);
  const MultiPoly B = homogenize(N[1]);
  int m = D - 2;
  MultiPoly c = gcd(A, B);
  out.f = *divide_exact(A, c);
  out.g = *divide_exact(B, c);
  const MultiPoly dvar = MultiPoly::variable(fld, tv, out.clearing);
  if (m < 0) {
    c = c * dvar.pow(static_cast<unsigned>(-m));
    m = 0;
  }
  while (m > 0) {
    auto q = divide_exact(c, dvar);
    if (!q) break;
    c = std::move(*q);
    --m;
  }
  out.c = std::move(c);
  out.m = m;
  return out;
}

namespace {

int degree_on(const PolyDerivation& d, Chart target) {
  const ChartExpr e = transport(d, target);
  const unsigned ord = e.c.degree_in(e.clearing);
  const MultiPoly expected = MultiPoly::variable(d.ctx(), e.c.vars(), e.clearing).pow(ord);
  if (!(e.c == expected))
    throw ConsistencyError("transported field on " + chart_name(target) +
                           " has a common factor other than a power of " + std::string(1, var_name(e.clearing)));
  return static_cast<int>(ord) - e.m;
}

}  // namespace

int degree_of_foliation(const PolyDerivation& d) {
  std::vector<int> degs;
  for (Chart c : {Chart::U0, Chart::U1, Chart::U2})
    if (c != d.chart()) degs.push_back(degree_on(d, c));
  if (degs[0] != degs[1]) throw ConsistencyError("deg L differs between the two other charts");
  return degs[0];
}

std::pair<MultiPoly, MultiPoly> chart_components(const PolyDerivation& d, Chart chart) {
  ChartExpr e = transport(d, chart);
  return {std::move(e.f), std::move(e.g)};
}

std::array<FieldElement, 3> homogeneous_point(Chart chart, FieldElement a, FieldElement b) {
  const FieldCtx& f = a.ctx();
  std::array<FieldElement, 3> x{FieldElement::zero(f), FieldElement::zero(f), FieldElement::zero(f)};
  const auto o = others(chart);
  x[static_cast<std::size_t>(chart)] = FieldElement::one(f);
  x[static_cast<std::size_t>(o[0])] = a;
  x[static_cast<std::size_t>(o[1])] = b;
  for (FieldElement& e : x) {
    if (e.is_zero()) continue;
    const FieldElement inv = e.inverse();
    for (FieldElement& y : x) y = y * inv;
    break;
  }
  return x;
}

std::optional<std::array<FieldElement, 2>> affine_point(Chart chart, const std::array<FieldElement, 3>& coords) {
  const FieldElement den = coords[static_cast<std::size_t>(chart)];
  if (den.is_zero()) return std::nullopt;
  const auto o = others(chart);
  return std::array<FieldElement, 2>{coords[static_cast<std::size_t>(o[0])] / den,
                                     coords[static_cast<std::size_t>(o[1])] / den};
}

// ---------------------------------------------------------------------------
// Singular scheme.

namespace {

using BiPoly = std::vector<UPoly>;  // coefficients of b^i in k[a]

BiPoly as_bipoly(const MultiPoly& p) {
  const FieldCtx& f = p.ctx();
  std::vector<std::vector<std::uint32_t>> dense;
  for (const Term& t : p.terms()) {
    const unsigned ea = mono::exponent(t.key, 0);
    const unsigned eb = mono::exponent(t.key, 1);
    if (dense.size() <= eb) dense.resize(eb + 1);
    if (dense[eb].size() <= ea) dense[eb].resize(ea + 1, 0);
    dense[eb][ea] ^= t.coeff;
  }
  BiPoly r;
  for (auto& v : dense) r.emplace_back(f, std::move(v));
  return r;
}

// Sylvester resultant with respect to b, by fraction-free elimination.
UPoly resultant_b(const BiPoly& f, const BiPoly& g, const FieldCtx& fld) {
  const std::size_t p = f.size() - 1, q = g.size() - 1, n = p + q;
  std::vector<std::vector<UPoly>> M(n, std::vector<UPoly>(n, UPoly(fld)));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t k = 0; k <= p; ++k) M[r][r + k] = f[p - k];
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t k = 0; k <= q; ++k) M[q + r][r + k] = g[q - k];
  UPoly prev = UPoly::constant(fld, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && M[s][k].is_zero()) ++s;
      if (s == n) return UPoly(fld);
      std::swap(M[k], M[s]);  // the sign is irrelevant in characteristic 2
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[k][k] * M[i][j] + M[i][k] * M[k][j]) / prev;
      M[i][k] = UPoly(fld);
    }
    prev = M[k][k];
  }
  return M[n - 1][n - 1];
}

UPoly at_a(const BiPoly& p, std::uint32_t alpha, const FieldCtx& fld) {
  std::vector<std::uint32_t> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i].eval(alpha);
  return UPoly(fld, std::move(c));
}

struct ChartZeros {
  std::vector<std::array<std::uint32_t, 2>> points;
  unsigned need = 1;  // extension degree needed for all zeros to be rational
};

ChartZeros chart_zeros(const MultiPoly& f, const MultiPoly& g) {
  const FieldCtx& fld = f.ctx();
  ChartZeros out;
  if (f.is_zero() && g.is_zero()) throw ComputeError("components not coprime");
  if ((!f.is_zero() && f.is_constant()) || (!g.is_zero() && g.is_constant())) return out;
  const BiPoly bf = as_bipoly(f), bg = as_bipoly(g);
  UPoly R(fld);
  if (bf.size() <= 1) {
    R = bf.empty() ? UPoly(fld) : bf[0];
  } else if (bg.size() <= 1) {
    R = bg.empty() ? UPoly(fld) : bg[0];
  } else {
    R = resultant_b(bf, bg, fld);
  }
  if (R.is_zero()) throw ComputeError("components not coprime");
  if (R.degree() <= 0) return out;
  out.need = splitting_degree(R);
  if (out.need > 1) return out;
  for (std::uint32_t alpha : roots(R)) {
    UPoly h = gcd(at_a(bf, alpha, fld), at_a(bg, alpha, fld));
    if (h.is_zero()) throw ComputeError("components not coprime");
    if (h.degree() <= 0) continue;
    const unsigned need = splitting_degree(h);
    if (need > 1) {
      out.need = std::lcm(out.need, need);
      continue;
    }
    for (std::uint32_t beta : roots(h)) out.points.push_back({alpha, beta});
  }
  return out;
}

}  // namespace

SingularScheme singular_scheme(const PolyDerivation& d, const SchemeOptions& opts) {
  return singular_scheme_on(d, {Chart::U0, Chart::U1, Chart::U2}, opts);
}

SingularScheme singular_scheme_on(const PolyDerivation& d, const std::vector<Chart>& charts,
                                  const SchemeOptions& opts) {
  const FieldCtx& base = d.ctx();
  const std::size_t nc = charts.size();
  std::vector<std::pair<MultiPoly, MultiPoly>> comps;
  for (Chart c : charts) comps.push_back(chart_components(d, c));

  const FieldCtx* K = &base;
  for (;;) {
    const Embedding* emb = K == &base ? nullptr : &embedding(base, *K);
    std::vector<std::pair<MultiPoly, MultiPoly>> local(nc);
    std::vector<ChartZeros> zeros(nc);
    unsigned need = 1;
    for (std::size_t c = 0; c < nc; ++c) {
      local[c] = emb ? std::make_pair(comps[c].first.embedded(*emb), comps[c].second.embedded(*emb)) : comps[c];
      zeros[c] = chart_zeros(local[c].first, local[c].second);
      need = std::lcm(need, zeros[c].need);
    }
    if (need > 1) {
      if (!opts.extend_auto)
        throw ComputeError("singular points are not rational over GF(" + std::to_string(K->size()) +
                           "); a degree " + std::to_string(need) + " extension is required");
      if (K->degree() * need > kMaxFieldDegree) throw ComputeError("extension too large");
      K = field_extend(*K, need).first;
      continue;
    }

    SingularScheme out;
    out.field = K;
    std::map<std::array<std::uint32_t, 3>, std::size_t> seen;
    for (std::size_t c = 0; c < nc; ++c) {
      const Chart chart = charts[c];
      auto pts = zeros[c].points;
      std::sort(pts.begin(), pts.end());
      const std::array<MultiPoly, 2> gens{local[c].first, local[c].second};
      for (const auto& ab : pts) {
        const std::array<FieldElement, 2> aff{FieldElement(*K, ab[0]), FieldElement(*K, ab[1])};
        const unsigned len = local_quotient_dim(gens, aff, opts.max_truncation);
        if (len == 0) throw ConsistencyError("common zero with zero local length");
        const auto hom = homogeneous_point(chart, aff[0], aff[1]);
        const std::array<std::uint32_t, 3> key{hom[0].bits(), hom[1].bits(), hom[2].bits()};
        auto it = seen.find(key);
        if (it != seen.end()) {
          if (out.points[it->second].length != len)
            throw ConsistencyError("local length of a point differs between charts");
          continue;
        }
        seen.emplace(key, out.points.size());
        out.points.push_back({hom, len, chart, aff});
      }
    }
    return out;
  }
}

}  // namespace pquot
