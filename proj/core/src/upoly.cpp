#include "pquot/upoly.hpp"

#include <algorithm>
#include <numeric>

#include "pquot/error.hpp"

namespace pquot {

UPoly::UPoly(const FieldCtx& ctx, std::vector<std::uint32_t> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const FieldCtx& ctx, std::uint32_t c, unsigned n) {
  std::vector<std::uint32_t> v(n + 1, 0);
  v[n] = c;
  return UPoly(ctx, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  const FieldCtx& f = ctx_ ? *ctx_ : *o.ctx_;
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] ^= o.c_[i];
  return UPoly(f, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  const FieldCtx& f = ctx_ ? *ctx_ : *o.ctx_;
  if (c_.empty() || o.c_.empty()) return UPoly(f);
  std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] ^= f.mul(c_[i], o.c_[j]);
  }
  return UPoly(f, std::move(r));
}

UPoly UPoly::scaled(std::uint32_t s) const {
  std::vector<std::uint32_t> r(c_);
  for (auto& c : r) c = ctx_->mul(c, s);
  return UPoly(*ctx_, std::move(r));
}

UPoly UPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(ctx_->inv(c_.back()));
}

UPoly UPoly::derivative() const {
  // d/dt t^i = i t^(i-1); only odd i survive in characteristic 2.
  std::vector<std::uint32_t> r(c_.size() > 1 ? c_.size() - 1 : 0, 0);
  for (std::size_t i = 1; i < c_.size(); i += 2) r[i - 1] = c_[i];
  return UPoly(*ctx_, std::move(r));
}

std::uint32_t UPoly::eval(std::uint32_t x) const noexcept {
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ctx_->mul(acc, x) ^ *it;
  return acc;
}

UPoly UPoly::embedded(const Embedding& e) const {
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = e.map(c_[i]);
  return UPoly(e.to(), std::move(r));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw ComputeError("polynomial division by zero");
  const FieldCtx& f = b.ctx();
  if (a.degree() < b.degree()) return {UPoly(f), a.has_ctx() ? a : UPoly(f)};
  std::vector<std::uint32_t> r = a.coeffs();
  std::vector<std::uint32_t> q(r.size() - b.coeffs().size() + 1, 0);
  const std::uint32_t inv_lead = f.inv(b.lead());
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const std::uint32_t factor = f.mul(r[i], inv_lead);
    q[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] ^= f.mul(factor, b.coeffs()[j]);
  }
  return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// Square root of a polynomial whose derivative vanishes (all exponents even).
UPoly sqrt_of_square(const UPoly& p) {
  std::vector<std::uint32_t> r((p.coeffs().size() + 1) / 2, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); i += 2) r[i / 2] = p.ctx().sqrt(p.coeffs()[i]);
  return UPoly(p.ctx(), std::move(r));
}

UPoly lcm(const UPoly& a, const UPoly& b) { return ((a * b) / gcd(a, b)).monic(); }

// t^(q^1) mod s, with q = 2^k, by k squarings of t.
UPoly frobenius_step(const UPoly& h, const UPoly& s) {
  UPoly r = h;
  for (unsigned i = 0; i < s.ctx().degree(); ++i) r = (r * r) % s;
  return r;
}

// Split a monic squarefree product of distinct linear factors into its roots.
void split_linear(const UPoly& g, std::vector<std::uint32_t>& out) {
  const FieldCtx& f = g.ctx();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(f.mul(g.coeff(0), f.inv(g.coeff(1))));
    return;
  }
  // Trace map T(t) = sum_{i<k} (beta t)^(2^i) mod g; gcd(g, T) is a proper
  // factor for some beta. Deterministic sweep over beta = g^j.
  for (std::uint64_t j = 0; j < f.size() - 1; ++j) {
    const std::uint32_t beta = f.gen_pow(j);
    UPoly term = UPoly::monomial(f, beta, 1) % g;
    UPoly trace = term;
    for (unsigned i = 1; i < f.degree(); ++i) {
      term = (term * term) % g;
      trace = trace + term;
    }
    UPoly d = gcd(g, trace);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, out);
      split_linear(g / d, out);
      return;
    }
  }
  throw ConsistencyError("equal-degree splitting failed");
}

}  // namespace

UPoly radical(const UPoly& p) {
  if (p.is_zero()) throw ComputeError("radical of the zero polynomial");
  UPoly m = p.monic();
  if (m.degree() <= 0) return UPoly::constant(p.ctx(), 1);
  UPoly d = m.derivative();
  if (d.is_zero()) return radical(sqrt_of_square(m));
  UPoly g = gcd(m, d);
  UPoly a = (m / g).monic();
  if (g.degree() == 0) return a;
  return lcm(a, radical(g));
}

unsigned splitting_degree(const UPoly& p) {
  UPoly s = radical(p);
  if (s.degree() <= 1) return 1;
  const FieldCtx& f = s.ctx();
  const UPoly t = UPoly::monomial(f, 1, 1);
  UPoly h = t % s;
  unsigned m = 1;
  for (unsigned d = 1; s.degree() > 0; ++d) {
    if (s.degree() < 2 * static_cast<int>(d)) {
      m = std::lcm(m, static_cast<unsigned>(s.degree()));
      break;
    }
    h = frobenius_step(h, s);
    UPoly g = gcd(s, h + t);
    if (g.degree() > 0) {
      m = std::lcm(m, d);
      s = (s / g).monic();
      h = h % s;
    }
  }
  return m;
}

std::vector<std::uint32_t> roots(const UPoly& p) {
  if (p.is_zero()) throw InputError("identically zero");
  std::vector<std::uint32_t> out;
  const FieldCtx& f = p.ctx();
  if (p.degree() <= 0) return out;
  UPoly s = radical(p);
  if (f.size() <= 1024) {
    for (std::uint64_t v = 0; v < f.size(); ++v)
      if (s.eval(static_cast<std::uint32_t>(v)) == 0) out.push_back(static_cast<std::uint32_t>(v));
    return out;
  }
  // Keep only the linear factors: gcd(s, t^q - t).
  const UPoly t = UPoly::monomial(f, 1, 1);
  UPoly lin = gcd(s, frobenius_step(t % s, s) + t);
  split_linear(lin, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pquot
