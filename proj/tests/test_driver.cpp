#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pquot/driver.hpp"
#include "pquot/error.hpp"

using namespace pquot;

namespace {

const VarList kXY{Var::x, Var::y};

PolyDerivation field_of(const char* F, const char* G, unsigned k = 1) {
  const FieldCtx& K = field_make(k);
  return PolyDerivation::make(Chart::U0, parse_poly(F, K, kXY), parse_poly(G, K, kXY));
}

std::string affine_name(const PolyDerivation& d) {
  std::vector<RDPType> t;
  for (const auto& r : affine_singularities(d)) t.push_back(r.type);
  return multiset_name(t);
}

std::vector<RDPType> types(std::initializer_list<const char*> s) {
  std::vector<RDPType> out;
  for (const char* x : s) out.push_back(parse_rdp_type(x));
  return out;
}

}  // namespace

TEST_SUITE("driver") {

TEST_CASE("multiset names and labels") {
  CHECK(multiset_name(types({"A1", "D4^0", "A1", "A1"})) == "D4^0+3A1");
  CHECK(multiset_name(types({"A1", "D6^0"})) == "D6^0+A1");
  CHECK(multiset_name(types({"A1", "E7^0", "D6^0"})) == "E7^0+D6^0+A1");
  CHECK(configuration_label(types({"A1", "A1", "A1", "A1", "A1", "A1", "A1"})) == "7A1");
  CHECK(configuration_label(types({"A1", "A1"})) == "OTHER(2A1)");
  CHECK(configuration_label({}) == "OTHER()");
}

TEST_CASE("chern check") {
  CHECK(chern_check(1, {1}));
  CHECK(chern_check(-1, {4, 1, 1, 1}));
  CHECK(!chern_check(-1, {4, 1, 1}));
  CHECK(chern_check(0, {1, 1, 1}));
}

TEST_CASE("tuple enumeration order") {
  const FieldCtx& K = field_make(2);
  const auto first = tuple_at(K, 0).as_array();
  for (const auto& e : first) CHECK(e.is_zero());
  const auto c = tuple_at(K, 1 + 4 * 3 + 1024 * 2);
  CHECK(c.b02.bits() == 1);
  CHECK(c.b20.bits() == 3);
  CHECK(c.a12.bits() == 2);
}

TEST_CASE("affine singularities of the single-chart table") {
  CHECK(affine_name(field_of("x", "y")) == "A1");
  CHECK(affine_name(field_of("x^2+x", "y")) == "2A1");
  CHECK(affine_name(field_of("x", "y^2+y")) == "2A1");
  CHECK(affine_name(field_of("x^2+x", "y^2+y")) == "4A1");
  CHECK(affine_name(field_of("x^2", "y^2")) == "D4^0");
  CHECK(affine_name(field_of("x^2+x*y^2", "y^3")) == "D6^0");
  CHECK(affine_name(field_of("x^2", "y^4")) == "D8^0");
  CHECK(affine_name(field_of("x*y^2", "x^2+y^3")) == "E7^0");
  CHECK(affine_name(field_of("y^4", "x^2")) == "E8^0");
  // a nonzero parameter outside GF(2)
  CHECK(affine_name(field_of("x^2+g*x", "y^2+g*y", 2)) == "4A1");
}

TEST_CASE("projective configurations") {
  const std::vector<std::tuple<const char*, const char*, int, const char*>> rows{
      {"x", "y", 1, "A1"},
      {"x^2", "y^2", -1, "D4^0+3A1"},
      {"x^2+x", "y", -1, "D4^0+3A1"},
      {"x^2+x", "y^2+y", -1, "7A1"},
      {"x^2+x*y^2", "y^3", -1, "D6^0+A1"},
      {"x*y^2", "x^2+y^3", -1, "E7^0"}};
  for (auto [F, G, deg, label] : rows) {
    CAPTURE(F);
    const Configuration c = configuration(field_of(F, G));
    CHECK(c.deg_L == deg);
    CHECK(c.label == label);
    CHECK(c.lengths_match_types);
    CHECK(chern_check(c));
  }
}

TEST_CASE("configurations that need an extension") {
  // some GF(2) tuples have singular points defined only over GF(4)
  const FieldCtx& K = field_make(1);
  ConfigOptions strict;
  strict.scheme.extend_auto = false;
  int extended = 0;
  for (std::uint64_t i = 0; i < 128; ++i) {
    const auto [F, G] = normal_form_components(tuple_at(K, i));
    if (check_normal_form(F, G) != NormalFormStatus::valid) continue;
    const PolyDerivation d = PolyDerivation::make_unchecked(Chart::U0, F, G);
    const Configuration c = configuration(d);
    if (c.field->degree() == 1) continue;
    ++extended;
    CHECK_THROWS_AS(configuration(d, strict), ComputeError);
  }
  CHECK(extended > 0);
}

TEST_CASE("survey over GF(2)") {
  const SurveyReport r = survey(field_make(1));
  CHECK(r.examined == 128);
  CHECK(r.rejected_ii + r.rejected_iii + r.accepted == 128);
  CHECK(r.violation_count == 0);
  std::uint64_t total = 0;
  for (const auto& [k, v] : r.histogram) total += v;
  CHECK(total == r.accepted);
  CHECK(r.histogram.count("degL=1/A1"));
  for (const char* l : {"7A1", "D4^0+3A1", "D6^0+A1", "E7^0"})
    CHECK(r.histogram.count(std::string("degL=-1/") + l));
}

TEST_CASE("survey output does not depend on the worker count") {
  SurveyOptions one, many;
  many.workers = 5;
  const SurveyReport a = survey(field_make(1), one), b = survey(field_make(1), many);
  CHECK(a.histogram == b.histogram);
  CHECK(a.accepted == b.accepted);
  SurveyOptions s1, s2;
  s1.samples = s2.samples = 40;
  s2.workers = 3;
  const SurveyReport c = survey(field_make(3), s1), d = survey(field_make(3), s2);
  CHECK(c.sampled);
  CHECK(c.examined == 40);
  CHECK(c.histogram == d.histogram);
}

TEST_CASE("exhaustive survey refuses large fields") {
  CHECK_THROWS_AS(survey(field_make(5)), InputError);
}

}

TEST_SUITE("properties") {

TEST_CASE("labels are invariant under coordinate permutations and scaling") {
  std::mt19937_64 rng(31);
  const FieldCtx& K = field_make(2);
  std::uniform_int_distribution<std::uint64_t> d(0, K.size() - 1);
  int tested = 0;
  while (tested < 100) {
    NormalFormCoefficients c = NormalFormCoefficients::zero(K);
    for (std::size_t i = 0; i < 7; ++i) c[i] = FieldElement(K, static_cast<std::uint32_t>(d(rng)));
    const auto [F, G] = normal_form_components(c);
    if (check_normal_form(F, G) != NormalFormStatus::valid) continue;
    ++tested;
    const PolyDerivation delta = PolyDerivation::make_unchecked(Chart::U0, F, G);
    const Configuration base = configuration(delta);
    for (int p = 1; p < 6; ++p) {
      const Configuration moved = configuration(oracle::permuted(delta, p));
      REQUIRE(moved.label == base.label);
      REQUIRE(moved.deg_L == base.deg_L);
    }
    for (std::uint32_t s = 2; s < 4; ++s) REQUIRE(configuration(delta.scaled(FieldElement(K, s))).label == base.label);
  }
}

TEST_CASE("local lengths refine the label") {
  const std::map<std::string, std::multiset<unsigned>> expected{
      {"7A1", {1, 1, 1, 1, 1, 1, 1}}, {"D4^0+3A1", {4, 1, 1, 1}}, {"D6^0+A1", {6, 1}}, {"E7^0", {7}}, {"A1", {1}}};
  const FieldCtx& K = field_make(1);
  for (std::uint64_t i = 0; i < 128; ++i) {
    const auto [F, G] = normal_form_components(tuple_at(K, i));
    if (check_normal_form(F, G) != NormalFormStatus::valid) continue;
    const Configuration c = configuration(PolyDerivation::make_unchecked(Chart::U0, F, G));
    std::multiset<unsigned> lengths;
    for (const auto& p : c.points) lengths.insert(p.point.length);
    REQUIRE(expected.at(c.label) == lengths);
  }
}

}
