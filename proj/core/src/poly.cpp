#include "pquot/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "pquot/error.hpp"
#include "pquot/linalg.hpp"
#include "pquot/upoly.hpp"

namespace pquot {

namespace {

constexpr char kVarNames[] = {'x', 'y', 'z', 'w', 'u', 'v', 'X', 'Y', 'Z'};

std::uint64_t unit_key(std::size_t pos) {
  Exponents e{0, 0, 0};
  e[pos] = 1;
  return mono::make(e);
}

void sort_and_combine(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::uint64_t key = t[i].key;
    std::uint32_t c = 0;
    for (; i < t.size() && t[i].key == key; ++i) c ^= t[i].coeff;
    if (c != 0) t[out++] = {key, c};
  }
  t.resize(out);
}

}  // namespace

char var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_char(char c) {
  for (std::size_t i = 0; i < std::size(kVarNames); ++i)
    if (kVarNames[i] == c) return static_cast<Var>(i);
  return std::nullopt;
}

MultiPoly::MultiPoly(const FieldCtx& ctx, VarList vars) : ctx_(&ctx), vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw InputError("at most three variables are supported");
  for (std::size_t i = 1; i < vars_.size(); ++i)
    if (!(vars_[i - 1] < vars_[i])) throw InputError("variable list must be strictly ascending");
}

MultiPoly MultiPoly::constant(const FieldCtx& ctx, VarList vars, std::uint32_t c) {
  MultiPoly p(ctx, std::move(vars));
  if (c != 0) p.terms_.push_back({0, c});
  return p;
}

MultiPoly MultiPoly::variable(const FieldCtx& ctx, VarList vars, Var v) {
  MultiPoly p(ctx, std::move(vars));
  int i = p.index_of(v);
  if (i < 0) throw InputError(std::string("no such variable: ") + var_name(v));
  p.terms_.push_back({unit_key(static_cast<std::size_t>(i)), 1});
  return p;
}

MultiPoly MultiPoly::monomial(const FieldCtx& ctx, VarList vars, std::uint32_t c, const Exponents& e) {
  MultiPoly p(ctx, std::move(vars));
  for (std::size_t i = p.nvars(); i < kMaxVars; ++i)
    if (e[i] != 0) throw InputError("exponent for a missing variable");
  if (c != 0) p.terms_.push_back({mono::make(e), c});
  return p;
}

MultiPoly MultiPoly::from_terms(const FieldCtx& ctx, VarList vars, std::vector<Term> terms) {
  MultiPoly p(ctx, std::move(vars));
  sort_and_combine(terms);
  p.terms_ = std::move(terms);
  return p;
}

int MultiPoly::index_of(Var v) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return static_cast<int>(i);
  return -1;
}

int MultiPoly::order() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(mono::degree(terms_.back().key));
}

unsigned MultiPoly::degree_in(Var v) const {
  int i = index_of(v);
  if (i < 0) return 0;
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, mono::exponent(t.key, static_cast<std::size_t>(i)));
  return d;
}

FieldElement MultiPoly::leading_coeff() const {
  return {*ctx_, terms_.empty() ? 0u : terms_.front().coeff};
}

FieldElement MultiPoly::coefficient(const Exponents& e) const {
  const std::uint64_t key = mono::make(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key > k; });
  return {*ctx_, (it != terms_.end() && it->key == key) ? it->coeff : 0u};
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (ctx_ != o.ctx_) throw InputError("polynomials over different fields");
  if (vars_ != o.vars_) throw InputError("polynomials over different variables");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(*ctx_, vars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key > o.terms_[j].key)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].key > terms_[i].key) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t c = terms_[i].coeff ^ o.terms_[j].coeff;
      if (c != 0) r.terms_.push_back({terms_[i].key, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) acc.push_back({a.key + b.key, ctx_->mul(a.coeff, b.coeff)});
  return from_terms(*ctx_, vars_, std::move(acc));
}

MultiPoly MultiPoly::scaled(FieldElement s) const {
  MultiPoly r(*ctx_, vars_);
  if (s.is_zero()) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = ctx_->mul(t.coeff, s.bits());
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(*ctx_, vars_, 1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) {
      // Squaring is additive in characteristic 2.
      MultiPoly sq(*ctx_, vars_);
      sq.terms_.reserve(base.terms_.size());
      for (const Term& t : base.terms_) sq.terms_.push_back({t.key * 2, ctx_->sqr(t.coeff)});
      base = std::move(sq);
    }
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(leading_coeff().inverse());
}

MultiPoly MultiPoly::truncated(unsigned n) const {
  MultiPoly r(*ctx_, vars_);
  for (const Term& t : terms_)
    if (mono::degree(t.key) < n) r.terms_.push_back(t);
  return r;
}

FieldElement MultiPoly::eval(std::span<const FieldElement> point) const {
  if (point.size() != vars_.size()) throw InputError("point has the wrong number of coordinates");
  const FieldCtx* target = point.empty() ? ctx_ : &point[0].ctx();
  for (const FieldElement& a : point)
    if (&a.ctx() != target) throw InputError("point coordinates over different fields");
  const Embedding* emb = target == ctx_ ? nullptr : &embedding(*ctx_, *target);
  std::uint32_t acc = 0;
  for (const Term& t : terms_) {
    std::uint32_t v = emb ? emb->map(t.coeff) : t.coeff;
    for (std::size_t i = 0; i < vars_.size() && v != 0; ++i) {
      unsigned e = mono::exponent(t.key, i);
      if (e != 0) v = target->mul(v, target->pow(point[i].bits(), e));
    }
    acc ^= v;
  }
  return {*target, acc};
}

MultiPoly MultiPoly::embedded(const Embedding& e) const {
  if (&e.from() != ctx_) throw InputError("embedding does not start at the polynomial's field");
  MultiPoly r(e.to(), vars_);
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = e.map(t.coeff);
  return r;
}

MultiPoly MultiPoly::renamed(VarList vars) const {
  if (vars.size() != vars_.size()) throw InputError("renaming must keep the number of variables");
  MultiPoly r(*ctx_, std::move(vars));
  r.terms_ = terms_;
  return r;
}

MultiPoly MultiPoly::lifted(const VarList& vars) const {
  std::array<std::size_t, kMaxVars> where{};
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) throw InputError(std::string("no such variable: ") + var_name(vars_[i]));
    where[i] = static_cast<std::size_t>(it - vars.begin());
  }
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const Term& term : terms_) {
    Exponents e{0, 0, 0};
    for (std::size_t i = 0; i < vars_.size(); ++i) e[where[i]] = mono::exponent(term.key, i);
    t.push_back({mono::make(e), term.coeff});
  }
  return from_terms(*ctx_, vars, std::move(t));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mon;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned e = mono::exponent(t.key, i);
      if (e == 0) continue;
      if (!mon.empty()) mon += '*';
      mon += var_name(vars_[i]);
      if (e > 1) mon += '^' + std::to_string(e);
    }
    std::string c = ctx_->format(t.coeff);
    if (mon.empty()) {
      out += c;
    } else if (t.coeff == 1) {
      out += mon;
    } else {
      if (c.find('+') != std::string::npos) c = '(' + c + ')';
      out += c + '*' + mon;
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ctx_ != b.ctx_ || a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MultiPoly partial_derivative(const MultiPoly& p, Var v) {
  int i = p.index_of(v);
  if (i < 0) throw InputError("no such variable");
  const std::size_t pos = static_cast<std::size_t>(i);
  const std::uint64_t unit = unit_key(pos);
  // Subtracting the same key keeps the order, so no re-sort is needed.
  std::vector<Term> t;
  for (const Term& term : p.terms())
    if (mono::exponent(term.key, pos) & 1u) t.push_back({term.key - unit, term.coeff});
  return MultiPoly::from_terms(p.ctx(), p.vars(), std::move(t));
}

// ---------------------------------------------------------------------------
// gcd over k[a][b] by a primitive pseudo-remainder sequence.

namespace {

using BiPoly = std::vector<UPoly>;  // coefficients of b^i, each in k[a]

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BiPoly to_bipoly(const MultiPoly& p, int pos_a, std::size_t pos_b) {
  const FieldCtx& f = p.ctx();
  std::vector<std::vector<std::uint32_t>> dense;
  for (const Term& t : p.terms()) {
    unsigned eb = mono::exponent(t.key, pos_b);
    unsigned ea = pos_a < 0 ? 0 : mono::exponent(t.key, static_cast<std::size_t>(pos_a));
    if (dense.size() <= eb) dense.resize(eb + 1);
    if (dense[eb].size() <= ea) dense[eb].resize(ea + 1, 0);
    dense[eb][ea] ^= t.coeff;
  }
  BiPoly r;
  for (auto& d : dense) r.emplace_back(f, std::move(d));
  trim(r);
  return r;
}

MultiPoly from_bipoly(const BiPoly& p, const MultiPoly& shape, int pos_a, std::size_t pos_b) {
  std::vector<Term> t;
  for (std::size_t eb = 0; eb < p.size(); ++eb) {
    for (std::size_t ea = 0; ea < p[eb].coeffs().size(); ++ea) {
      std::uint32_t c = p[eb].coeffs()[ea];
      if (c == 0) continue;
      Exponents e{0, 0, 0};
      e[pos_b] = static_cast<unsigned>(eb);
      if (pos_a >= 0) e[static_cast<std::size_t>(pos_a)] = static_cast<unsigned>(ea);
      t.push_back({mono::make(e), c});
    }
  }
  return MultiPoly::from_terms(shape.ctx(), shape.vars(), std::move(t));
}

UPoly content(const BiPoly& p) {
  UPoly c(p.front().ctx());
  for (const UPoly& q : p) {
    c = gcd(c, q);
    if (c.degree() == 0) break;
  }
  return c;
}

BiPoly primitive_part(BiPoly p) {
  if (p.empty()) return p;
  UPoly c = content(p);
  if (c.degree() > 0 || c.lead() != 1)
    for (UPoly& q : p) q = q / c;
  return p;
}

BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const std::size_t db = b.size() - 1;
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const UPoly la = a.back();
    for (UPoly& q : a) q = q * lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] = a[i + shift] + la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.has_ctx() && q.has_ctx() && (&p.ctx() != &q.ctx() || p.vars() != q.vars()))
    throw InputError("polynomials over different fields or variables");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();

  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    bool in_use = false;
    for (const Term& t : p.terms()) in_use |= mono::exponent(t.key, i) != 0;
    for (const Term& t : q.terms()) in_use |= mono::exponent(t.key, i) != 0;
    if (in_use) used.push_back(i);
  }
  if (used.empty()) return MultiPoly::constant(p.ctx(), p.vars(), 1);
  if (used.size() > 2) throw InputError("gcd supports at most two variables");

  const std::size_t pos_b = used.back();
  const int pos_a = used.size() == 2 ? static_cast<int>(used.front()) : -1;
  BiPoly A = to_bipoly(p, pos_a, pos_b);
  BiPoly B = to_bipoly(q, pos_a, pos_b);
  UPoly c = gcd(content(A), content(B));
  A = primitive_part(std::move(A));
  B = primitive_part(std::move(B));
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    BiPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = primitive_part(std::move(R));
  }
  if (A.size() == 1) A = {UPoly::constant(p.ctx(), 1)};  // primitive and free of b: a unit
  for (UPoly& coeff : A) coeff = coeff * c;
  return from_bipoly(A, p, pos_a, pos_b).monic();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw ComputeError("polynomial division by zero");
  if (&p.ctx() != &q.ctx() || p.vars() != q.vars()) throw InputError("polynomials over different fields or variables");
  const FieldCtx& f = p.ctx();
  const Term lq = q.terms().front();
  const std::uint32_t inv = f.inv(lq.coeff);
  MultiPoly r = p;
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const Term lr = r.terms().front();
    if (!mono::divides(lq.key, lr.key)) return std::nullopt;
    const Term t{lr.key - lq.key, f.mul(lr.coeff, inv)};
    quot.push_back(t);
    r += MultiPoly::from_terms(f, p.vars(), {t}) * q;
  }
  return MultiPoly::from_terms(f, p.vars(), std::move(quot));
}

MultiPoly substitute(const MultiPoly& p, const std::map<Var, MultiPoly>& assignments) {
  if (assignments.empty()) {
    if (p.nvars() != 0) throw InputError("substitution does not cover all variables");
    return p;
  }
  const MultiPoly& shape = assignments.begin()->second;
  const FieldCtx& target = shape.ctx();
  for (const auto& [v, q] : assignments)
    if (&q.ctx() != &target || q.vars() != shape.vars())
      throw InputError("substitution polynomials over different fields or variables");
  std::vector<const MultiPoly*> repl;
  for (Var v : p.vars()) {
    auto it = assignments.find(v);
    if (it == assignments.end()) throw InputError("substitution does not cover all variables");
    repl.push_back(&it->second);
  }
  const Embedding* emb = &p.ctx() == &target ? nullptr : &embedding(p.ctx(), target);

  // powers[i][e] = repl[i]^e, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(repl.size());
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, shape.vars(), 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *repl[i]);
    return cache[e];
  };

  MultiPoly result(target, shape.vars());
  for (const Term& t : p.terms()) {
    MultiPoly m = MultiPoly::constant(target, shape.vars(), emb ? emb->map(t.coeff) : t.coeff);
    for (std::size_t i = 0; i < repl.size(); ++i) {
      unsigned e = mono::exponent(t.key, i);
      if (e != 0) m = m * power(i, e);
    }
    result += m;
  }
  return result;
}

MultiPoly translate(const MultiPoly& p, std::span<const FieldElement> shift) {
  if (shift.size() != p.nvars()) throw InputError("shift has the wrong number of coordinates");
  const FieldCtx* target = shift.empty() ? &p.ctx() : &shift[0].ctx();
  for (const FieldElement& s : shift)
    if (&s.ctx() != target) throw InputError("shift coordinates over different fields");
  const Embedding* emb = target == &p.ctx() ? nullptr : &embedding(p.ctx(), *target);
  const FieldCtx& f = *target;

  // (v + s)^e = sum over j with j & ~e == 0 of v^j s^(e-j): Lucas' theorem mod 2.
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    std::vector<Term> partial{{0, emb ? emb->map(t.coeff) : t.coeff}};
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const unsigned e = mono::exponent(t.key, i);
      if (e == 0) continue;
      Exponents unit{0, 0, 0};
      std::vector<Term> next;
      for (unsigned j = e;; j = (j - 1) & e) {
        const std::uint32_t sc = f.pow(shift[i].bits(), e - j);
        if (sc != 0) {
          unit[i] = j;
          const std::uint64_t k = mono::make(unit);
          for (const Term& q : partial) next.push_back({q.key + k, f.mul(q.coeff, sc)});
        }
        if (j == 0) break;
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return MultiPoly::from_terms(f, p.vars(), std::move(out));
}

// ---------------------------------------------------------------------------
// Local quotient dimension.

namespace {

// Monomials of degree < n in `nv` variables, ordered by ascending degree.
std::vector<std::uint64_t> monomials_below(std::size_t nv, unsigned n) {
  std::vector<std::uint64_t> out;
  for (unsigned d = 0; d < n; ++d) {
    if (nv == 0) {
      if (d == 0) out.push_back(0);
      continue;
    }
    if (nv == 1) {
      out.push_back(mono::make({d, 0, 0}));
    } else if (nv == 2) {
      for (unsigned a = 0; a <= d; ++a) out.push_back(mono::make({a, d - a, 0}));
    } else {
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b) out.push_back(mono::make({a, b, d - a - b}));
    }
  }
  return out;
}

// dims[d] = dim k[vars]/(I + m^d) for d = 0..n, from one elimination at truncation n.
std::vector<std::size_t> truncated_dims(std::span<const MultiPoly> gens, std::size_t nv, unsigned n) {
  const FieldCtx& f = gens[0].ctx();
  const std::vector<std::uint64_t> monos = monomials_below(nv, n);
  std::unordered_map<std::uint64_t, std::size_t> column;
  column.reserve(monos.size() * 2);
  for (std::size_t i = 0; i < monos.size(); ++i) column.emplace(monos[i], i);

  EchelonBasis basis(f, monos.size());
  for (const std::uint64_t m : monos) {
    for (const MultiPoly& g : gens) {
      if (g.is_zero() || mono::degree(m) + static_cast<unsigned>(g.order()) >= n) continue;
      Row row(monos.size(), 0);
      for (const Term& t : g.terms()) {
        const std::uint64_t k = t.key + m;
        if (mono::degree(k) < n) row[column.at(k)] = t.coeff;
      }
      basis.insert(std::move(row));
    }
  }
  std::vector<std::size_t> dims(n + 1, 0);
  std::size_t count = 0, pivots = 0, col = 0;
  for (unsigned d = 0; d <= n; ++d) {
    dims[d] = count - pivots;
    while (col < monos.size() && mono::degree(monos[col]) == d) {
      ++count;
      if (basis.has_pivot(col)) ++pivots;
      ++col;
    }
  }
  return dims;
}

}  // namespace

unsigned local_quotient_dim(std::span<const MultiPoly> gens, std::span<const FieldElement> point,
                            unsigned max_truncation) {
  if (gens.empty()) throw InputError("no generators");
  const std::size_t nv = gens[0].nvars();
  for (const MultiPoly& g : gens)
    if (&g.ctx() != &gens[0].ctx() || g.vars() != gens[0].vars())
      throw InputError("generators over different fields or variables");

  std::vector<MultiPoly> local;
  for (const MultiPoly& g : gens) {
    MultiPoly t = translate(g, point);
    if (!t.constant_term().is_zero()) return 0;
    local.push_back(std::move(t));
  }
  for (unsigned n = 8; n <= max_truncation; n *= 2) {
    const std::vector<std::size_t> dims = truncated_dims(local, nv, n);
    for (unsigned d = 0; d < n; ++d)
      if (dims[d] == dims[d + 1]) return static_cast<unsigned>(dims[d]);
  }
  throw ComputeError("not zero-dimensional at point");
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldCtx& ctx, const VarList& vars) : s_(text), ctx_(ctx), vars_(vars) {}

  MultiPoly parse_all() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail_unexpected();
    return p;
  }

 private:
  static constexpr std::uint64_t kMaxExponent = 1u << 12;

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail_unexpected() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
  }

  std::uint64_t nat() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      if (v > (UINT64_MAX - 9) / 10) throw ParseError("number too large", start);
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= s_.size()) throw ParseError("expected a number, found end of input", pos_);
      throw ParseError(std::string("expected a number, found '") + s_[pos_] + "'", pos_);
    }
    return v;
  }

  MultiPoly expr() {
    MultiPoly p = term();
    while (accept('+') || accept('-')) p += term();
    return p;
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (accept('*')) p *= factor();
    return p;
  }

  MultiPoly factor() {
    MultiPoly p = atom();
    while (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const std::uint64_t e = nat();
      if (p.is_constant()) {
        p = MultiPoly::constant(ctx_, vars_, ctx_.pow(p.constant_term().bits(), e));
      } else {
        if (e > kMaxExponent) throw ParseError("exponent too large", at);
        p = p.pow(static_cast<unsigned>(e));
      }
    }
    return p;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail_unexpected();
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("expected ')', found end of input", pos_);
        throw ParseError(std::string("expected ')', found '") + s_[pos_] + "'", pos_);
      }
      return p;
    }
    if (c == 'g') {
      ++pos_;
      return MultiPoly::constant(ctx_, vars_, ctx_.generator());
    }
    if (c >= '0' && c <= '9') return MultiPoly::constant(ctx_, vars_, static_cast<std::uint32_t>(nat() & 1u));
    if (auto v = var_from_char(c)) {
      if (std::find(vars_.begin(), vars_.end(), *v) == vars_.end())
        throw ParseError(std::string("unknown variable '") + c + "'", pos_);
      ++pos_;
      return MultiPoly::variable(ctx_, vars_, *v);
    }
    fail_unexpected();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const FieldCtx& ctx_;
  const VarList& vars_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const FieldCtx& ctx, const VarList& vars) {
  return Parser(text, ctx, vars).parse_all();
}

FieldElement parse_element(std::string_view text, const FieldCtx& ctx) {
  return parse_poly(text, ctx, {}).constant_term();
}

}  // namespace pquot
