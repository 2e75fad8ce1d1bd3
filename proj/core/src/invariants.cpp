#include "pquot/invariants.hpp"

#include <algorithm>
#include <unordered_map>

#include "pquot/error.hpp"
#include "pquot/linalg.hpp"

namespace pquot {

std::string HypersurfacePresentation::relation() const { return "Z^2 + " + f.to_string(); }

HypersurfacePresentation HypersurfacePresentation::embedded(const Embedding& e) const {
  return {chart, h.embedded(e), f.embedded(e), {cert[0].embedded(e), cert[1].embedded(e), cert[2].embedded(e)}};
}

namespace {

// Kernel of delta on the span of monomials a^i b^j, i + j <= D, not both even.
std::vector<Row> kernel_in_degree(const PolyDerivation& d, unsigned D, std::vector<std::uint64_t>& monos) {
  const FieldCtx& fld = d.ctx();
  const VarList& vars = d.F().vars();
  monos.clear();
  for (unsigned deg = 1; deg <= D; ++deg)
    for (unsigned i = 0; i <= deg; ++i)
      if (i % 2 == 1 || (deg - i) % 2 == 1) monos.push_back(mono::make({i, deg - i, 0}));

  std::unordered_map<std::uint64_t, std::size_t> row_of;
  std::vector<std::vector<Term>> images;
  for (std::uint64_t m : monos) {
    const MultiPoly p = MultiPoly::from_terms(fld, vars, {{m, 1}});
    images.push_back(d.apply(p).terms());
    for (const Term& t : images.back()) row_of.emplace(t.key, row_of.size());
  }
  std::vector<Row> rows(row_of.size(), Row(monos.size(), 0));
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const Term& t : images[c]) rows[row_of.at(t.key)][c] = t.coeff;
  return nullspace(fld, std::move(rows), monos.size());
}

}  // namespace

HypersurfacePresentation invariant_ring(const PolyDerivation& d, unsigned degree_bound) {
  if (!is_p_closed(d).p_closed) throw InputError("vector field is not p-closed");
  const FieldCtx& fld = d.ctx();
  const VarList& vars = d.F().vars();
  unsigned bound = degree_bound;
  if (bound == 0) bound = static_cast<unsigned>(std::max(d.F().total_degree(), 0) + std::max(d.G().total_degree(), 0) + 2);
  const unsigned cap = 4 * bound;

  std::vector<std::uint64_t> monos;
  std::vector<Row> ker;
  unsigned D = 1;
  for (; bound <= cap; bound *= 2) {
    for (; D <= bound; ++D) {
      ker = kernel_in_degree(d, D, monos);
      if (!ker.empty()) break;
    }
    if (!ker.empty()) break;
  }
  if (ker.empty()) throw ComputeError("no hypersurface generator found below bound");
  if (ker.size() > 1) throw ConsistencyError("invariant generator is not unique in its minimal degree");

  std::vector<Term> ht;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (ker[0][i] != 0) ht.push_back({monos[i], ker[0][i]});
  HypersurfacePresentation out;
  out.chart = d.chart();
  out.h = MultiPoly::from_terms(fld, vars, std::move(ht)).monic();

  std::vector<Term> ft;
  std::array<std::vector<Term>, 3> ct;
  for (const Term& t : out.h.terms()) {
    const unsigned i = mono::exponent(t.key, 0), j = mono::exponent(t.key, 1);
    ft.push_back({mono::make({i, j, 0}), fld.sqr(t.coeff)});
    const std::size_t which = (i % 2 == 1 && j % 2 == 1) ? 2 : (i % 2 == 1 ? 0 : 1);
    ct[which].push_back({mono::make({i - i % 2, j - j % 2, 0}), t.coeff});
  }
  out.f = MultiPoly::from_terms(fld, relation_vars(), std::move(ft));
  for (std::size_t k = 0; k < 3; ++k) out.cert[k] = MultiPoly::from_terms(fld, vars, std::move(ct[k]));

  if (!d.apply(out.h).is_zero()) throw ConsistencyError("invariant generator is not annihilated");
  const MultiPoly a = MultiPoly::variable(fld, vars, vars[0]);
  const MultiPoly b = MultiPoly::variable(fld, vars, vars[1]);
  const MultiPoly back = substitute(out.f, {{Var::X, a * a}, {Var::Y, b * b}});
  if (!(back == out.h.pow(2))) throw ConsistencyError("relation does not match the square of the generator");
  return out;
}

MultiPoly localize(const HypersurfacePresentation& pres, const SingularPoint& pt) {
  std::array<FieldElement, 2> aff = pt.affine;
  if (pt.chart != pres.chart) {
    auto p = affine_point(pres.chart, pt.coords);
    if (!p) throw InputError("point outside chart");
    aff = *p;
  }
  const std::array<FieldElement, 2> shift{aff[0] * aff[0], aff[1] * aff[1]};
  MultiPoly g = translate(pres.f, shift);
  return g + MultiPoly::constant(g.ctx(), g.vars(), g.constant_term().bits());
}

}  // namespace pquot
