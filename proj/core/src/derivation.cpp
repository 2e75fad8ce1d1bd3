#include "pquot/derivation.hpp"

#include "pquot/error.hpp"

namespace pquot {

std::string chart_name(Chart c) { return "U" + std::to_string(static_cast<int>(c)); }

std::optional<Chart> chart_from_string(std::string_view s) {
  if (s == "U0") return Chart::U0;
  if (s == "U1") return Chart::U1;
  if (s == "U2") return Chart::U2;
  return std::nullopt;
}

VarList chart_vars(Chart c) {
  switch (c) {
    case Chart::U0: return {Var::x, Var::y};
    case Chart::U1: return {Var::z, Var::w};
    case Chart::U2: return {Var::u, Var::v};
  }
  return {};
}

PolyDerivation::PolyDerivation(Chart chart, MultiPoly F, MultiPoly G)
    : chart_(chart), F_(std::move(F)), G_(std::move(G)) {}

PolyDerivation PolyDerivation::make_unchecked(Chart chart, MultiPoly F, MultiPoly G) {
  const VarList vars = chart_vars(chart);
  if (F.vars() != vars || G.vars() != vars)
    throw InputError("components must be polynomials in the coordinates of chart " + chart_name(chart));
  if (&F.ctx() != &G.ctx()) throw InputError("components over different fields");
  return PolyDerivation(chart, std::move(F), std::move(G));
}

PolyDerivation PolyDerivation::make(Chart chart, MultiPoly F, MultiPoly G) {
  PolyDerivation d = make_unchecked(chart, std::move(F), std::move(G));
  switch (check_normal_form(d.F_, d.G_)) {
    case NormalFormStatus::zero_component: throw InputError("vector field component is zero");
    case NormalFormStatus::common_factor: throw InputError("vector field components have a common factor");
    case NormalFormStatus::valid: break;
  }
  return d;
}

MultiPoly PolyDerivation::apply(const MultiPoly& p) const {
  const VarList& v = F_.vars();
  return F_ * partial_derivative(p, v[0]) + G_ * partial_derivative(p, v[1]);
}

PolyDerivation PolyDerivation::embedded(const Embedding& e) const {
  return PolyDerivation(chart_, F_.embedded(e), G_.embedded(e));
}

PolyDerivation PolyDerivation::scaled(FieldElement s) const {
  return PolyDerivation(chart_, F_.scaled(s), G_.scaled(s));
}

std::string PolyDerivation::to_string() const { return "F = " + F_.to_string() + "; G = " + G_.to_string(); }

NormalFormCoefficients NormalFormCoefficients::zero(const FieldCtx& ctx) {
  const FieldElement z = FieldElement::zero(ctx);
  return {z, z, z, z, z, z, z};
}

FieldElement& NormalFormCoefficients::operator[](std::size_t i) {
  switch (i) {
    case 0: return a30;
    case 1: return a12;
    case 2: return a20;
    case 3: return a02;
    case 4: return a10;
    case 5: return b20;
    case 6: return b02;
  }
  throw InputError("normal-form coefficient index out of range");
}

std::pair<MultiPoly, MultiPoly> normal_form_components(const NormalFormCoefficients& c) {
  const FieldCtx& f = c.a30.ctx();
  const VarList xy = chart_vars(Chart::U0);
  for (const FieldElement& e : c.as_array())
    if (&e.ctx() != &f) throw InputError("normal-form coefficients over different fields");
  auto t = [](FieldElement a, unsigned i, unsigned j) { return Term{mono::make({i, j, 0}), a.bits()}; };
  MultiPoly F = MultiPoly::from_terms(
      f, xy, {t(c.a30, 3, 0), t(c.a12, 1, 2), t(c.a20, 2, 0), t(c.a02, 0, 2), t(c.a10, 1, 0)});
  MultiPoly G = MultiPoly::from_terms(
      f, xy, {t(c.a30, 2, 1), t(c.a12, 0, 3), t(c.b20, 2, 0), t(c.b02, 0, 2), t(c.a10, 0, 1)});
  return {std::move(F), std::move(G)};
}

NormalFormStatus check_normal_form(const MultiPoly& F, const MultiPoly& G) {
  if (F.is_zero() || G.is_zero()) return NormalFormStatus::zero_component;
  if (!gcd(F, G).is_constant()) return NormalFormStatus::common_factor;
  return NormalFormStatus::valid;
}

PolyDerivation make_normalized(const NormalFormCoefficients& c) {
  auto [F, G] = normal_form_components(c);
  switch (check_normal_form(F, G)) {
    case NormalFormStatus::zero_component:
      throw InputError("violates normal-form conditions (ii)/(iii): a component is zero");
    case NormalFormStatus::common_factor:
      throw InputError("violates normal-form conditions (ii)/(iii): components share a factor");
    case NormalFormStatus::valid: break;
  }
  return PolyDerivation::make_unchecked(Chart::U0, std::move(F), std::move(G));
}

PClosedResult is_p_closed(const PolyDerivation& d) {
  const VarList& v = d.F().vars();
  const MultiPoly& F = d.F();
  const MultiPoly& G = d.G();
  const MultiPoly A = F * partial_derivative(F, v[0]) + G * partial_derivative(F, v[1]);
  const MultiPoly B = F * partial_derivative(G, v[0]) + G * partial_derivative(G, v[1]);
  PClosedResult r;
  r.p_closed = A * G == B * F;
  if (!r.p_closed) return r;
  if (!F.is_zero()) {
    r.H = divide_exact(A, F);
  } else if (!G.is_zero()) {
    r.H = divide_exact(B, G);
  } else {
    r.H = MultiPoly::constant(F.ctx(), F.vars(), 0);
  }
  return r;
}

}  // namespace pquot
