#include "pquot/rdp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pquot/error.hpp"
#include "pquot/upoly.hpp"

namespace pquot {

std::string RDPType::to_string() const {
  std::string s(1, letter);
  s += std::to_string(index);
  if (coindex) s += "^" + std::to_string(*coindex);
  return s;
}

RDPType parse_rdp_type(std::string_view s) {
  RDPType t;
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'D' && s[0] != 'E')) throw InputError("bad singularity type: " + std::string(s));
  t.letter = s[0];
  std::size_t i = 1;
  unsigned n = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') n = n * 10 + static_cast<unsigned>(s[i++] - '0');
  if (i == 1 || n == 0) throw InputError("bad singularity type: " + std::string(s));
  t.index = n;
  if (i < s.size()) {
    if (s[i] != '^' || i + 1 == s.size()) throw InputError("bad singularity type: " + std::string(s));
    unsigned r = 0;
    for (++i; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InputError("bad singularity type: " + std::string(s));
      r = r * 10 + static_cast<unsigned>(s[i] - '0');
    }
    t.coindex = r;
  }
  return t;
}

MultiPoly remove_square_part(const MultiPoly& f) {
  std::vector<Term> t;
  for (const Term& term : f.terms())
    if (mono::exponent(term.key, 0) % 2 == 1 || mono::exponent(term.key, 1) % 2 == 1) t.push_back(term);
  return MultiPoly::from_terms(f.ctx(), f.vars(), std::move(t));
}

namespace {

// Smallest nonzero root of t^e = r in the field, if any.
std::optional<FieldElement> root_of(FieldElement r, unsigned e) {
  std::vector<FieldElement> c(e + 1, FieldElement::zero(r.ctx()));
  c[0] = r;
  c[e] = FieldElement::one(r.ctx());
  for (const FieldElement& x : poly_roots(c))
    if (!x.is_zero()) return x;
  return std::nullopt;
}

}  // namespace

MultiPoly normalize_square_part(const MultiPoly& f) {
  MultiPoly g = remove_square_part(f);
  if (g.is_zero()) return g;
  const FieldCtx& fld = g.ctx();
  const auto& t = g.terms();
  const Term m1 = t[t.size() - 1];
  FieldElement lambda = FieldElement::one(fld), mu = FieldElement::one(fld);
  if (t.size() >= 2) {
    const Term m2 = t[t.size() - 2];
    const int di = static_cast<int>(mono::exponent(m2.key, 0)) - static_cast<int>(mono::exponent(m1.key, 0));
    const int dj = static_cast<int>(mono::exponent(m2.key, 1)) - static_cast<int>(mono::exponent(m1.key, 1));
    // Want lambda^di mu^dj = c1 / c2.
    const FieldElement r = FieldElement(fld, m1.coeff) / FieldElement(fld, m2.coeff);
    std::optional<FieldElement> root;
    if (di != 0) {
      root = root_of(di > 0 ? r : r.inverse(), static_cast<unsigned>(std::abs(di)));
      if (root) lambda = *root;
    }
    if (!root && dj != 0) {
      root = root_of(dj > 0 ? r : r.inverse(), static_cast<unsigned>(std::abs(dj)));
      if (root) mu = *root;
    }
  }
  // Coefficient of X^i Y^j becomes c lambda^i mu^j / nu^2 with nu^2 chosen so
  // the lowest monomial gets coefficient 1.
  const FieldElement nu2 = FieldElement(fld, m1.coeff) * lambda.pow(mono::exponent(m1.key, 0)) *
                           mu.pow(mono::exponent(m1.key, 1));
  const FieldElement inv = nu2.inverse();
  std::vector<Term> out;
  for (const Term& term : t) {
    const FieldElement c = FieldElement(fld, term.coeff) * lambda.pow(mono::exponent(term.key, 0)) *
                           mu.pow(mono::exponent(term.key, 1)) * inv;
    out.push_back({term.key, c.bits()});
  }
  return MultiPoly::from_terms(fld, g.vars(), std::move(out));
}

bool is_singular_germ(const MultiPoly& f) {
  if (f.nvars() != 2) throw InputError("germ must be a polynomial in two variables");
  if (!f.constant_term().is_zero()) return false;
  return f.coefficient({1, 0, 0}).is_zero() && f.coefficient({0, 1, 0}).is_zero();
}

unsigned tjurina(const MultiPoly& f, unsigned max_truncation) {
  if (!is_singular_germ(f)) throw InputError("germ is not singular at the origin");
  const std::array<MultiPoly, 2> gens{partial_derivative(f, f.vars()[0]), partial_derivative(f, f.vars()[1])};
  const std::array<FieldElement, 2> origin{FieldElement::zero(f.ctx()), FieldElement::zero(f.ctx())};
  try {
    return 2 * local_quotient_dim(gens, origin, max_truncation);
  } catch (const ConsistencyError&) {
    throw;
  } catch (const ComputeError&) {
    throw ComputeError("not an isolated singularity");
  }
}

// ---------------------------------------------------------------------------
// Resolution.

namespace {

struct NeedExtension {
  unsigned degree;
};

struct Curve {
  unsigned id;
  MultiPoly eq;  // local equation
};

struct Site {
  MultiPoly f;  // singular germ at the origin, square part removed
  std::vector<Curve> curves;
  unsigned depth;
};

unsigned min_exponent(const MultiPoly& p, std::size_t pos) {
  unsigned m = ~0u;
  for (const Term& t : p.terms()) m = std::min(m, mono::exponent(t.key, pos));
  return p.is_zero() ? 0 : m;
}

MultiPoly shift_down(const MultiPoly& p, std::size_t pos, unsigned k) {
  if (k == 0) return p;
  Exponents e{0, 0, 0};
  e[pos] = k;
  const std::uint64_t d = mono::make(e);
  std::vector<Term> t;
  for (const Term& term : p.terms()) t.push_back({term.key - d, term.coeff});
  return MultiPoly::from_terms(p.ctx(), p.vars(), std::move(t));
}

// pos = 0: g(X, XY); pos = 1: g(XY, Y).
MultiPoly blowup_substitution(const MultiPoly& g, std::size_t pos) {
  std::vector<Term> t;
  for (const Term& term : g.terms()) {
    const unsigned i = mono::exponent(term.key, 0), j = mono::exponent(term.key, 1);
    t.push_back({pos == 0 ? mono::make({i + j, j, 0}) : mono::make({i, i + j, 0}), term.coeff});
  }
  return MultiPoly::from_terms(g.ctx(), g.vars(), std::move(t));
}

// Normalizes Z^2 = g along the exceptional line {v = 0}: remove squares and
// divide by v^2 (Z -> v Z) as long as possible.
MultiPoly normalize_along(MultiPoly g, std::size_t pos) {
  g = remove_square_part(g);
  while (!g.is_zero() && min_exponent(g, pos) >= 2) g = remove_square_part(shift_down(g, pos, 2));
  return g;
}

// Restriction to {v = 0} as a polynomial in the other variable.
UPoly restrict_to_line(const MultiPoly& g, std::size_t pos) {
  std::vector<std::uint32_t> c;
  const std::size_t other = 1 - pos;
  for (const Term& t : g.terms()) {
    if (mono::exponent(t.key, pos) != 0) continue;
    const unsigned e = mono::exponent(t.key, other);
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] ^= t.coeff;
  }
  return UPoly(g.ctx(), std::move(c));
}

MultiPoly translate_to(const MultiPoly& p, FieldElement a, FieldElement b) {
  const std::array<FieldElement, 2> s{a, b};
  return translate(p, s);
}

class Resolver {
 public:
  Resolver(const FieldCtx& fld, unsigned max_rounds) : fld_(fld), max_rounds_(max_rounds) {}

  void run(const MultiPoly& f) {
    std::vector<Site> stack{{remove_square_part(f), {}, 0}};
    while (!stack.empty()) {
      Site s = std::move(stack.back());
      stack.pop_back();
      blow_up(s, stack);
    }
  }

  DualGraph graph() const;

 private:
  void blow_up(const Site& s, std::vector<Site>& stack);
  void add_edge(unsigned a, unsigned b) { edges_.insert({std::min(a, b), std::max(a, b)}); }

  const FieldCtx& fld_;
  unsigned max_rounds_;
  std::vector<int> base_self_;
  std::vector<unsigned> mult_;
  std::vector<bool> smooth_;
  std::set<std::pair<unsigned, unsigned>> edges_;
};

void Resolver::blow_up(const Site& s, std::vector<Site>& stack) {
  if (s.depth >= max_rounds_) throw ComputeError("resolution did not terminate");
  const VarList& vars = s.f.vars();
  const std::array<FieldElement, 2> origin{FieldElement::zero(fld_), FieldElement::zero(fld_)};

  const unsigned E = static_cast<unsigned>(base_self_.size());
  base_self_.push_back(-1);
  mult_.push_back(1);
  smooth_.push_back(true);
  std::vector<const Curve*> through;
  for (const Curve& c : s.curves)
    if (c.eq.eval(origin).is_zero()) through.push_back(&c);
  if (through.size() > 2) throw ConsistencyError("more than two exceptional curves through a point");
  for (const Curve* c : through) {
    base_self_[c->id] -= 1;
    add_edge(c->id, E);
  }
  if (through.size() == 2) edges_.erase({std::min(through[0]->id, through[1]->id), std::max(through[0]->id, through[1]->id)});

  std::array<unsigned, 2> mult{};
  for (std::size_t pos = 0; pos < 2; ++pos) {
    const MultiPoly g = normalize_along(blowup_substitution(s.f, pos), pos);
    std::vector<Curve> curves{{E, MultiPoly::variable(fld_, vars, vars[pos])}};
    for (const Curve* c : through) {
      MultiPoly t = blowup_substitution(c->eq, pos);
      t = shift_down(t, pos, min_exponent(t, pos));
      if (!t.is_constant()) curves.push_back({c->id, std::move(t)});
    }
    const UPoly line = restrict_to_line(g, pos);
    mult[pos] = line.is_zero() ? 2 : 1;
    const MultiPoly gx = partial_derivative(g, vars[0]);
    const MultiPoly gy = partial_derivative(g, vars[1]);

    if (pos == 0) {
      // Whole exceptional line except its point at infinity.
      if (mult[pos] == 1 && line.derivative().degree() != 0) smooth_[E] = false;
      const UPoly r1 = restrict_to_line(gx, 0), r2 = restrict_to_line(gy, 0);
      if (r1.is_zero() && r2.is_zero()) throw ComputeError("not an isolated singularity");
      const UPoly r = gcd(r1, r2);
      if (r.degree() <= 0) continue;
      const unsigned need = splitting_degree(r);
      if (need > 1) throw NeedExtension{need};
      for (std::uint32_t y0 : roots(r)) {
        const FieldElement b(fld_, y0);
        Site next{remove_square_part(translate_to(g, origin[0], b)), {}, s.depth + 1};
        for (const Curve& c : curves) next.curves.push_back({c.id, translate_to(c.eq, origin[0], b)});
        stack.push_back(std::move(next));
      }
    } else {
      // Only the origin of this chart is new.
      if (mult[pos] == 1 && line.coeff(1) == 0) smooth_[E] = false;
      if (gx.eval(origin).is_zero() && gy.eval(origin).is_zero()) {
        stack.push_back({g, std::move(curves), s.depth + 1});
      }
    }
  }
  if (mult[0] != mult[1]) throw ConsistencyError("exceptional multiplicity differs between blowup charts");
  mult_[E] = mult[0];
}

DualGraph Resolver::graph() const {
  const std::size_t n = base_self_.size();
  std::vector<std::vector<int>> M(n, std::vector<int>(n, 0));
  const auto not_rdp = [] { return ComputeError("not a rational double point"); };
  for (std::size_t i = 0; i < n; ++i) {
    const int m2 = static_cast<int>(mult_[i] * mult_[i]);
    if ((2 * base_self_[i]) % m2 != 0) throw not_rdp();
    M[i][i] = 2 * base_self_[i] / m2;
  }
  for (const auto& [a, b] : edges_) {
    const unsigned mm = mult_[a] * mult_[b];
    if (2 % mm != 0) throw not_rdp();
    M[a][b] = M[b][a] = static_cast<int>(2 / mm);
  }
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || M[i][i] != -1) continue;
      alive[i] = false;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (alive[j] && alive[k]) M[j][k] += M[j][i] * M[k][i];
      changed = true;
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) keep.push_back(i);
  DualGraph g;
  g.vertices = static_cast<unsigned>(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    if (!smooth_[keep[a]]) throw not_rdp();
    g.self_intersections.push_back(M[keep[a]][keep[a]]);
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const int x = M[keep[a]][keep[b]];
      if (x < 0 || x > 1) throw not_rdp();
      if (x == 1) g.edges.push_back({static_cast<unsigned>(a), static_cast<unsigned>(b)});
    }
  }
  return g;
}

}  // namespace

DualGraph resolve_dual_graph(const MultiPoly& f, const ResolveOptions& opts) {
  if (!is_singular_germ(remove_square_part(f))) throw InputError("germ is not singular at the origin");
  const FieldCtx* K = &f.ctx();
  for (;;) {
    const MultiPoly g = K == &f.ctx() ? f : f.embedded(embedding(f.ctx(), *K));
    Resolver r(*K, opts.max_rounds);
    try {
      r.run(g);
    } catch (const NeedExtension& e) {
      if (!opts.extend_auto) throw ComputeError("resolution needs a field extension of degree " + std::to_string(e.degree));
      if (K->degree() * e.degree > kMaxFieldDegree) throw ComputeError("extension too large");
      K = field_extend(*K, e.degree).first;
      continue;
    }
    DualGraph g2 = r.graph();
    for (int s : g2.self_intersections)
      if (s != -2) throw ComputeError("not a rational double point");
    return g2;
  }
}

RDPType dynkin_type(const DualGraph& g) {
  const auto fail = [] { return ComputeError("not a rational double point"); };
  const unsigned n = g.vertices;
  if (n == 0 || g.edges.size() != n - 1) throw fail();
  std::vector<std::vector<unsigned>> adj(n);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Connected with n - 1 edges: a tree.
  std::vector<bool> seen(n, false);
  std::vector<unsigned> todo{0};
  seen[0] = true;
  unsigned count = 1;
  while (!todo.empty()) {
    const unsigned v = todo.back();
    todo.pop_back();
    for (unsigned w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push_back(w);
      }
  }
  if (count != n) throw fail();

  std::vector<unsigned> branch;
  for (unsigned v = 0; v < n; ++v) {
    if (adj[v].size() > 3) throw fail();
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return {'A', n, std::nullopt};
  if (branch.size() > 1) throw fail();
  std::vector<unsigned> arms;
  for (unsigned start : adj[branch[0]]) {
    unsigned prev = branch[0], cur = start, len = 1;
    while (adj[cur].size() == 2) {
      const unsigned next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n, std::nullopt};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n, std::nullopt};
  throw fail();
}

const std::vector<std::pair<RDPType, unsigned>>& coindex_table() {
  static const std::vector<std::pair<RDPType, unsigned>> table = [] {
    std::vector<std::pair<RDPType, unsigned>> t;
    t.push_back({{'A', 1, std::nullopt}, 2});
    for (unsigned n = 2; n <= 7; ++n) t.push_back({{'D', 2 * n, 0u}, 4 * n});
    t.push_back({{'E', 7, 0u}, 14});
    t.push_back({{'E', 8, 0u}, 16});
    return t;
  }();
  return table;
}

RDPType classify_rdp(const MultiPoly& f, const ResolveOptions& opts) {
  const MultiPoly g = remove_square_part(f);
  if (!is_singular_germ(g)) throw InputError("germ is not singular at the origin");
  if (!g.coefficient({1, 1, 0}).is_zero()) return {'A', 1, std::nullopt};
  const RDPType shape = dynkin_type(resolve_dual_graph(g, opts));
  const unsigned tau = tjurina(g);
  for (const auto& [type, t] : coindex_table())
    if (type.letter == shape.letter && type.index == shape.index && t == tau) return type;
  throw ComputeError("unrecognized coindex");
}

}  // namespace pquot
