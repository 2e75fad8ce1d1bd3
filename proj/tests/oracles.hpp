#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is meant to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pquot/charts.hpp"
#include "pquot/derivation.hpp"
#include "pquot/poly.hpp"
#include "pquot/upoly.hpp"

namespace oracle {

using namespace pquot;

/// Carry-less product reduced by `modulus` (bit k set), bit by bit.
inline std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint64_t modulus, unsigned k) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < 32; ++i)
    if ((b >> i) & 1u) acc ^= std::uint64_t{a} << i;
  for (int i = 63; i >= static_cast<int>(k); --i)
    if ((acc >> i) & 1u) acc ^= modulus << (i - k);
  return static_cast<std::uint32_t>(acc);
}

/// Remainder of GF(2)[t] polynomials stored as bit vectors.
inline std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = 63 - __builtin_clzll(m);
  while (a && 63 - __builtin_clzll(a) >= dm) a ^= m << ((63 - __builtin_clzll(a)) - dm);
  return a;
}

/// Irreducibility over GF(2) by trial division by every polynomial of degree
/// 1..deg/2.
inline bool gf2_irreducible(std::uint64_t m) {
  const int d = 63 - __builtin_clzll(m);
  for (int e = 1; e <= d / 2; ++e)
    for (std::uint64_t q = std::uint64_t{1} << e; q < (std::uint64_t{2} << e); ++q)
      if (gf2_mod(m, q) == 0) return false;
  return true;
}

/// Evaluates p at a point given by raw values in the field `K` after embedding
/// p's coefficients, term by term.
inline FieldElement eval_at(const MultiPoly& p, const FieldCtx& K, const std::vector<std::uint32_t>& pt) {
  const Embedding& e = embedding(p.ctx(), K);
  std::uint32_t acc = 0;
  for (const Term& t : p.terms()) {
    std::uint32_t m = e.map(t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i) m = K.mul(m, K.pow(pt[i], mono::exponent(t.key, i)));
    acc ^= m;
  }
  return {K, acc};
}

/// Random point of K^n.
inline std::vector<std::uint32_t> random_point(const FieldCtx& K, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, K.size() - 1);
  std::vector<std::uint32_t> pt(n);
  for (auto& v : pt) v = static_cast<std::uint32_t>(d(rng));
  return pt;
}

/// Determinant of a square matrix of univariate polynomials by cofactor
/// expansion (matrices here are at most 8 x 8 and sparse).
inline UPoly det(const std::vector<std::vector<UPoly>>& m, const FieldCtx& K) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly::constant(K, 1);
  UPoly acc(K);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<UPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<UPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    acc = acc + m[0][j] * det(minor, K);  // signs vanish in characteristic 2
  }
  return acc;
}

/// Coefficients of p (in two variables) as a polynomial in variable `elim`
/// with coefficients in the other variable.
inline std::vector<UPoly> split(const MultiPoly& p, std::size_t elim) {
  const FieldCtx& K = p.ctx();
  std::vector<std::vector<std::uint32_t>> raw;
  for (const Term& t : p.terms()) {
    const unsigned i = mono::exponent(t.key, elim), j = mono::exponent(t.key, 1 - elim);
    if (raw.size() <= i) raw.resize(i + 1);
    if (raw[i].size() <= j) raw[i].resize(j + 1, 0);
    raw[i][j] ^= t.coeff;
  }
  std::vector<UPoly> out;
  for (auto& r : raw) out.emplace_back(K, r);
  return out;
}

/// Sylvester resultant of f and g with respect to variable `elim` (0 or 1).
inline UPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t elim) {
  const FieldCtx& K = f.ctx();
  const auto a = split(f, elim), b = split(g, elim);
  const std::size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
  std::vector<std::vector<UPoly>> s(N, std::vector<UPoly>(N, UPoly(K)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
  return det(s, K);
}

/// Order of vanishing at 0 of a univariate polynomial.
inline unsigned ord0(const UPoly& p) {
  unsigned i = 0;
  while (p.coeff(i) == 0) ++i;
  return i;
}

/// Homogeneous forms vanishing exactly at the singular points of the
/// foliation given by an affine field on U0: the components of V x p with
/// V = (0, X0^D F, X0^D G), saturated with respect to X0. Variables X, Y, Z
/// stand for X0, X1, X2.
inline std::vector<MultiPoly> singular_forms(const PolyDerivation& d) {
  const FieldCtx& K = d.ctx();
  const VarList hv{Var::X, Var::Y, Var::Z};
  const unsigned D = static_cast<unsigned>(std::max(d.F().total_degree(), d.G().total_degree()));
  auto homog = [&](const MultiPoly& p) {
    std::vector<Term> t;
    for (const Term& s : p.terms()) {
      const unsigned i = mono::exponent(s.key, 0), j = mono::exponent(s.key, 1);
      t.push_back({mono::make({D - i - j, i, j}), s.coeff});
    }
    return MultiPoly::from_terms(K, hv, t);
  };
  const MultiPoly P = homog(d.F()), Q = homog(d.G());
  const MultiPoly X0 = MultiPoly::variable(K, hv, Var::X), X1 = MultiPoly::variable(K, hv, Var::Y),
                  X2 = MultiPoly::variable(K, hv, Var::Z);
  std::vector<MultiPoly> c{X1 * Q + X2 * P, X0 * Q, X0 * P};
  for (;;) {
    bool all = true;
    for (const auto& p : c)
      for (const Term& t : p.terms())
        if (mono::exponent(t.key, 0) == 0) all = false;
    if (!all) break;
    for (auto& p : c) {
      std::vector<Term> t;
      for (const Term& s : p.terms()) t.push_back({s.key - mono::make({1, 0, 0}), s.coeff});
      p = MultiPoly::from_terms(K, hv, t);
    }
  }
  return c;
}

/// Normalized homogeneous coordinates (first nonzero entry 1) of every common
/// zero of `forms` in P^2(K).
inline std::set<std::array<std::uint32_t, 3>> projective_zeros(const std::vector<MultiPoly>& forms, const FieldCtx& K) {
  std::set<std::array<std::uint32_t, 3>> out;
  const std::uint64_t q = K.size();
  auto test = [&](std::array<std::uint32_t, 3> p) {
    for (const auto& f : forms)
      if (!eval_at(f, K, {p[0], p[1], p[2]}).is_zero()) return;
    out.insert(p);
  };
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b) test({1, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  for (std::uint64_t b = 0; b < q; ++b) test({0, 1, static_cast<std::uint32_t>(b)});
  test({0, 0, 1});
  return out;
}

/// The same foliation after the coordinate permutation `which` of
/// (X0 : X1 : X2): 0 identity, 1 X1<->X2, 2 X0<->X1, 3 X0<->X2, then 4 and 5
/// compose 2 and 3 with 1. Built from the chart expression on the chart that
/// becomes the new U0.
inline PolyDerivation permuted(const PolyDerivation& d, int which) {
  const VarList xy{Var::x, Var::y};
  const FieldCtx& K = d.ctx();
  const MultiPoly x = MultiPoly::variable(K, xy, Var::x), y = MultiPoly::variable(K, xy, Var::y);
  auto swap_xy = [&](const PolyDerivation& e) {
    std::map<Var, MultiPoly> s{{Var::x, y}, {Var::y, x}};
    return PolyDerivation::make_unchecked(Chart::U0, substitute(e.G(), s), substitute(e.F(), s));
  };
  const int base = which >= 4 ? which - 2 : which;
  PolyDerivation out = d;
  if (base == 1) {
    out = swap_xy(d);
  } else if (base == 2) {
    // new U0 = U1, (x', y') = (z, w)
    const ChartExpr e = transport(d, Chart::U1);
    std::map<Var, MultiPoly> s{{Var::z, x}, {Var::w, y}};
    out = PolyDerivation::make_unchecked(Chart::U0, substitute(e.f, s), substitute(e.g, s));
  } else if (base == 3) {
    // new U0 = U2, (x', y') = (X1/X2, X0/X2) = (v, u)
    const ChartExpr e = transport(d, Chart::U2);
    std::map<Var, MultiPoly> s{{Var::u, y}, {Var::v, x}};
    out = PolyDerivation::make_unchecked(Chart::U0, substitute(e.g, s), substitute(e.f, s));
  }
  if (which >= 4) out = swap_xy(out);
  return out;
}

}  // namespace oracle
