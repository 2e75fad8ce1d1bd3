#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pquot/driver.hpp"
#include "pquot/error.hpp"
#include "pquot/invariants.hpp"
#include "pquot/rdp.hpp"

using namespace pquot;

namespace {

const VarList kXY{Var::x, Var::y};
const VarList kRel{Var::X, Var::Y};

PolyDerivation field_of(const char* F, const char* G, unsigned k = 1) {
  const FieldCtx& K = field_make(k);
  return PolyDerivation::make(Chart::U0, parse_poly(F, K, kXY), parse_poly(G, K, kXY));
}

MultiPoly germ(const char* s, unsigned k = 1) { return parse_poly(s, field_make(k), kRel); }

// h^2 = f(x^2, y^2), checked at random points of GF(2^16).
bool square_identity(const HypersurfacePresentation& p, std::mt19937_64& rng) {
  const FieldCtx& L = field_make(16);
  for (int i = 0; i < 10; ++i) {
    const auto pt = oracle::random_point(L, 2, rng);
    const FieldElement h = oracle::eval_at(p.h, L, pt);
    const FieldElement f = oracle::eval_at(p.f, L, {L.mul(pt[0], pt[0]), L.mul(pt[1], pt[1])});
    if (h * h != f) return false;
  }
  return true;
}

// Shape of a tree: (letter, index) by branch structure, independent of the
// library's own matcher.
std::string shape(const DualGraph& g) {
  const unsigned n = g.vertices;
  if (g.edges.size() + 1 != n) return "not a tree";
  std::vector<std::vector<unsigned>> adj(n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  unsigned branch = n;
  for (unsigned v = 0; v < n; ++v)
    if (adj[v].size() > 3) return "degree > 3";
    else if (adj[v].size() == 3) {
      if (branch != n) return "two branch points";
      branch = v;
    }
  if (branch == n) return "A" + std::to_string(n);
  std::vector<unsigned> arms;
  for (unsigned start : adj[branch]) {
    unsigned len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      const unsigned next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return "other";
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("worked presentations") {
  CHECK(invariant_ring(field_of("x", "y")).h.to_string() == "x*y");
  CHECK(invariant_ring(field_of("x^2", "y^2")).f.to_string() == "X*Y^2 + X^2*Y");
  CHECK(invariant_ring(field_of("y^4", "x^2")).f.to_string() == "Y^5 + X^3");
  CHECK(invariant_ring(field_of("x^2+x", "y")).f.to_string() == "X^2*Y + X*Y");
  CHECK(invariant_ring(field_of("x", "y")).relation() == "Z^2 + X*Y");
}

TEST_CASE("delta(h) = 0 and h^2 = f(x^2, y^2) on normal-form tuples and their charts") {
  std::mt19937_64 rng(21);
  const FieldCtx& K = field_make(1);
  for (std::uint64_t i = 0; i < 128; ++i) {
    const auto [F, G] = normal_form_components(tuple_at(K, i));
    if (check_normal_form(F, G) != NormalFormStatus::valid) continue;
    const PolyDerivation d = PolyDerivation::make_unchecked(Chart::U0, F, G);
    for (Chart c : {Chart::U0, Chart::U1, Chart::U2}) {
      const auto [f, g] = chart_components(d, c);
      const PolyDerivation dc = PolyDerivation::make_unchecked(c, f, g);
      const HypersurfacePresentation p = invariant_ring(dc);
      REQUIRE(dc.apply(p.h).is_zero());
      REQUIRE(square_identity(p, rng));
      REQUIRE(p.h.leading_coeff().is_one());
      // h is not a function of the squares
      bool odd = false;
      for (const Term& t : p.h.terms()) odd = odd || (mono::exponent(t.key, 0) % 2) || (mono::exponent(t.key, 1) % 2);
      REQUIRE(odd);
    }
  }
}

TEST_CASE("no invariant outside the squares below the reported degree") {
  // brute force over GF(2): every polynomial of degree < deg h in the span of
  // non-square monomials is checked against delta
  const std::vector<PolyDerivation> fields{field_of("x", "y"), field_of("x^2", "y^2"), field_of("x*y^2", "x^2+y^3")};
  for (const auto& d : fields) {
    const HypersurfacePresentation p = invariant_ring(d);
    const unsigned D = static_cast<unsigned>(p.h.total_degree());
    std::vector<MultiPoly> basis;
    for (unsigned i = 0; i < D; ++i)
      for (unsigned j = 0; i + j < D; ++j)
        if (i % 2 || j % 2) basis.push_back(MultiPoly::monomial(d.ctx(), kXY, 1, {i, j, 0}));
    REQUIRE(basis.size() < 20);
    for (std::uint32_t mask = 1; mask < (1u << basis.size()); ++mask) {
      MultiPoly q(d.ctx(), kXY);
      for (std::size_t b = 0; b < basis.size(); ++b)
        if ((mask >> b) & 1u) q += basis[b];
      REQUIRE(!d.apply(q).is_zero());
    }
  }
}

TEST_CASE("non-p-closed input is rejected") {
  CHECK_THROWS_WITH_AS(invariant_ring(field_of("y", "x")), "vector field is not p-closed", InputError);
}

TEST_CASE("localize moves the point to the origin") {
  const PolyDerivation d = field_of("x^2+x", "y");
  const HypersurfacePresentation p = invariant_ring(d);
  const SingularScheme s = singular_scheme(d);
  for (const auto& pt : s.points) {
    if (pt.chart != Chart::U0) continue;
    const MultiPoly g = localize(p, pt);
    CHECK(g.constant_term().is_zero());
    CHECK(is_singular_germ(normalize_square_part(g)));
  }
}

}

TEST_SUITE("rdp") {

TEST_CASE("square parts") {
  CHECK(remove_square_part(germ("X^2 + X*Y + Y^4 + X^3*Y^2 + X^2*Y^2")).to_string() == "X^3*Y^2 + X*Y");
  const MultiPoly n = normalize_square_part(germ("g*X*Y + g^2*X^3", 2));
  CHECK(n.coefficient({1, 1, 0}).is_one());
  CHECK(is_singular_germ(germ("X*Y")));
  CHECK(!is_singular_germ(germ("X + Y^2")));
}

TEST_CASE("Tjurina numbers agree with the resultant oracle") {
  const std::vector<std::pair<const char*, unsigned>> rows{
      {"X*Y", 2}, {"X^2*Y+X*Y^2", 8}, {"X^2*Y+X*Y^3", 12}, {"X^3+X*Y^3", 14}, {"X^3+Y^5", 16}};
  for (auto [s, tau] : rows) {
    CAPTURE(s);
    const MultiPoly f = germ(s);
    const MultiPoly fx = partial_derivative(f, Var::X), fy = partial_derivative(f, Var::Y);
    // the eliminated variable must have a constant leading coefficient in one
    // of the partials; try both orders
    unsigned via = 0;
    for (std::size_t elim : {0u, 1u}) {
      const auto a = oracle::split(fx, elim), b = oracle::split(fy, elim);
      if (a.back().degree() == 0 || b.back().degree() == 0) {
        via = 2 * oracle::ord0(oracle::resultant(fx, fy, elim));
        break;
      }
    }
    CHECK(via == tau);
    CHECK(tjurina(f) == tau);
  }
  CHECK_THROWS_WITH_AS(tjurina(germ("X^2")), "not an isolated singularity", ComputeError);
  CHECK_THROWS_WITH(tjurina(germ("X+Y^2")), "germ is not singular at the origin");
}

TEST_CASE("dual graphs are the Dynkin diagrams") {
  const std::vector<std::tuple<const char*, unsigned, const char*>> rows{
      {"X*Y", 1, "A1"}, {"X^2*Y+X*Y^2", 4, "D4"}, {"X^2*Y+X*Y^3", 6, "D6"}, {"X^3+X*Y^3", 7, "E7"},
      {"X^3+Y^5", 8, "E8"}, {"X^2*Y+X*Y^4", 8, "D8"}, {"X^2*Y+X*Y^5", 10, "D10"}};
  for (auto [s, n, name] : rows) {
    CAPTURE(s);
    const DualGraph g = resolve_dual_graph(germ(s));
    CHECK(g.vertices == n);
    CHECK(shape(g) == name);
    CHECK(g.self_intersections == std::vector<int>(n, -2));
    CHECK(dynkin_type(g).to_string() == name);
  }
}

TEST_CASE("classification with coindex") {
  const std::vector<std::pair<const char*, const char*>> rows{
      {"X*Y", "A1"},          {"X^2*Y+X*Y^2", "D4^0"}, {"X^2*Y+X*Y^3", "D6^0"}, {"X^3+X*Y^3", "E7^0"},
      {"X^3+Y^5", "E8^0"},    {"X^2*Y+X*Y^4", "D8^0"}, {"X^2*Y+X*Y^7", "D14^0"}};
  for (auto [s, name] : rows) {
    CAPTURE(s);
    CHECK(classify_rdp(germ(s)).to_string() == name);
  }
  // over GF(4) with a rescaled quadratic part
  CHECK(classify_rdp(germ("g*X*Y + X^3", 2)).to_string() == "A1");
}

TEST_CASE("coindex table") {
  std::map<std::string, unsigned> t;
  for (const auto& [type, tau] : coindex_table()) t[type.to_string()] = tau;
  CHECK(t.at("A1") == 2);
  for (unsigned n = 2; n <= 7; ++n) CHECK(t.at("D" + std::to_string(2 * n) + "^0") == 4 * n);
  CHECK(t.at("E7^0") == 14);
  CHECK(t.at("E8^0") == 16);
}

TEST_CASE("non-RDP inputs fail") {
  CHECK_THROWS_AS(resolve_dual_graph(germ("X^2*Y^2+X^5+Y^5")), ComputeError);
  CHECK_THROWS_AS(classify_rdp(germ("X^3*Y+X*Y^3")), ComputeError);
  DualGraph cycle{3, {{0, 1}, {0, 2}, {1, 2}}, {-2, -2, -2}};
  CHECK_THROWS_WITH_AS(dynkin_type(cycle), "not a rational double point", ComputeError);
}

TEST_CASE("type strings round trip") {
  for (const char* s : {"A1", "D4^0", "D6^0", "D8^0", "E7^0", "E8^0", "D4"}) CHECK(parse_rdp_type(s).to_string() == s);
  CHECK_THROWS_AS(parse_rdp_type("Q7"), InputError);
  CHECK_THROWS_AS(parse_rdp_type("D"), InputError);
}

}
