#include <doctest.h>

#include <random>

#include "pquot/linalg.hpp"
#include "pquot/upoly.hpp"

using namespace pquot;

namespace {

UPoly random_upoly(const FieldCtx& K, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, K.size() - 1);
  std::vector<std::uint32_t> c(deg + 1);
  for (auto& x : c) x = static_cast<std::uint32_t>(d(rng));
  c.back() = c.back() ? c.back() : 1;
  return UPoly(K, c);
}

}  // namespace

TEST_SUITE("upoly") {

TEST_CASE("division identity and gcd divides both") {
  std::mt19937_64 rng(5);
  const FieldCtx& K = field_make(3);
  for (int i = 0; i < 200; ++i) {
    const UPoly c = random_upoly(K, i % 3, rng);
    const UPoly a = random_upoly(K, 1 + i % 5, rng) * c, b = random_upoly(K, i % 4, rng) * c;
    const auto [q, r] = divmod(a, b);
    REQUIRE(q * b + r == a);
    REQUIRE(r.degree() < b.degree());
    const UPoly g = gcd(a, b);
    REQUIRE(g.lead() == 1);
    REQUIRE((a % g).is_zero());
    REQUIRE((b % g).is_zero());
    REQUIRE((g % c.monic()).is_zero());
  }
}

TEST_CASE("roots and splitting degree") {
  const FieldCtx& K = field_make(1);
  // t^2 + t + 1 splits over GF(4), t^3 + t + 1 over GF(8)
  CHECK(splitting_degree(UPoly(K, {1, 1, 1})) == 2);
  CHECK(splitting_degree(UPoly(K, {1, 1, 0, 1})) == 3);
  CHECK(splitting_degree(UPoly(K, {1, 1, 1}) * UPoly(K, {1, 1, 0, 1})) == 6);
  CHECK(splitting_degree(UPoly(K, {0, 1}) * UPoly(K, {1, 1})) == 1);
  CHECK(roots(UPoly(K, {0, 1, 1})) == std::vector<std::uint32_t>{0, 1});
  CHECK(roots(UPoly(K, {1, 1, 1})).empty());
}

TEST_CASE("radical removes repeated factors") {
  const FieldCtx& K = field_make(2);
  const UPoly p(K, {1, 1});
  const UPoly q(K, {2, 1});
  CHECK(radical(p * p * p * q) == (p * q).monic());
}

}

TEST_SUITE("linalg") {

TEST_CASE("nullspace vectors are annihilated and dimension is ncols - rank") {
  std::mt19937_64 rng(9);
  const FieldCtx& K = field_make(2);
  std::uniform_int_distribution<std::uint32_t> d(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 6, cols = 2 + trial % 7;
    std::vector<Row> m(rows, Row(cols));
    for (auto& r : m)
      for (auto& x : r) x = d(rng) == 0 ? 0 : d(rng);
    EchelonBasis eb(K, cols);
    for (const auto& r : m) eb.insert(r);
    const auto ns = nullspace(K, m, cols);
    REQUIRE(ns.size() == cols - eb.rank());
    for (const Row& v : ns)
      for (const Row& r : m) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc ^= K.mul(r[j], v[j]);
        REQUIRE(acc == 0);
      }
  }
}

}
