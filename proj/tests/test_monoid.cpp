#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sectionring/monoid.hpp"

using namespace sectionring;

namespace {

std::vector<LatticePoint> pts(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<LatticePoint> out;
  for (auto [d, c] : xs) out.push_back({d, c});
  return out;
}

}  // namespace

TEST_CASE("membership") {
  LatticeMonoid m(Rational(1));
  CHECK(!m.contains({1, 1}));
  CHECK(m.contains({2, 2}));
  CHECK(!m.contains({3, 4}));
  CHECK(m.contains({1, 0}));
  CHECK(!m.contains({0, 0}));
  LatticeMonoid m2(Rational(2, 3));
  CHECK(m2.contains({3, 2}));
  CHECK(!m2.contains({3, 3}));
}

TEST_CASE("irreducibles") {
  CHECK(LatticeMonoid(Rational(1)).irreducibles_up_to(6) == pts({{1, 0}, {2, 2}, {3, 3}}));
  CHECK(LatticeMonoid(Rational(3, 2)).irreducibles_up_to(6) ==
        pts({{1, 0}, {2, 2}, {2, 3}, {3, 4}}));
  CHECK(LatticeMonoid(Rational(5)).irreducibles_up_to(3) ==
        pts({{1, 0}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}));
}

TEST_CASE("minimal decompositions") {
  {
    auto gens = pts({{1, 0}, {2, 2}, {3, 3}});  // alpha = 1
    MonoidDecomposer dec(gens, 12, 12);
    CHECK(dec.minimal_decomposition({5, 4}) == std::vector<std::int64_t>{1, 2, 0});
    CHECK(dec.minimal_decomposition({1, 0}) == std::vector<std::int64_t>{1, 0, 0});
    // degree 6 pole 6 prefers the cube of the quadratic generator
    CHECK(dec.minimal_decomposition({6, 6}) == std::vector<std::int64_t>{0, 3, 0});
    CHECK(!dec.representable({1, 1}));
    CHECK_THROWS(dec.minimal_decomposition({1, 1}));
  }
  {
    auto gens = pts({{1, 0}, {1, 2}, {2, 3}});  // alpha = 2
    MonoidDecomposer dec(gens, 12, 24);
    CHECK(dec.minimal_decomposition({3, 3}) == std::vector<std::int64_t>{1, 0, 1});
  }
}

TEST_CASE("all decompositions") {
  auto gens = pts({{1, 0}, {2, 2}, {2, 3}, {3, 4}});  // alpha = 3/2
  MonoidDecomposer dec(gens, 12, 18);
  auto fib = dec.all_decompositions({6, 6});
  std::sort(fib.begin(), fib.end());
  std::vector<std::vector<std::int64_t>> expect = {
      {0, 3, 0, 0}, {1, 1, 0, 1}, {2, 0, 2, 0}};
  CHECK(fib == expect);
}

TEST_CASE("relation leaders, alpha = 1") {
  LatticeMonoid M(Rational(1));
  auto gens = M.irreducibles_up_to(8);
  REQUIRE(gens == pts({{1, 0}, {2, 2}, {3, 3}}));
  auto leaders = relation_leaders_oracle(M, gens, 8);
  REQUIRE(leaders.size() == 1);
  CHECK(leaders[0].exps == std::vector<std::int64_t>{0, 0, 2});
  CHECK(leaders[0].image == LatticePoint{6, 6});
  CHECK(leaders[0].minimal);
}

TEST_CASE("relation leaders, alpha = 3/2") {
  LatticeMonoid M(Rational(3, 2));
  auto gens = M.irreducibles_up_to(10);
  REQUIRE(gens == pts({{1, 0}, {2, 2}, {2, 3}, {3, 4}}));
  auto leaders = relation_leaders_oracle(M, gens, 10);
  REQUIRE(leaders.size() == 4);
  // sorted by (degree, pole): (4,4), (5,6), (6,6), (6,8)
  CHECK(leaders[0].exps == std::vector<std::int64_t>{1, 0, 0, 1});
  CHECK(leaders[0].minimal);
  CHECK(leaders[1].exps == std::vector<std::int64_t>{0, 1, 0, 1});
  CHECK(leaders[1].minimal);
  CHECK(leaders[2].exps == std::vector<std::int64_t>{2, 0, 2, 0});
  CHECK(!leaders[2].minimal);  // quartic, decomposable through the quadratics
  CHECK(leaders[3].exps == std::vector<std::int64_t>{0, 0, 0, 2});
  CHECK(leaders[3].minimal);
}

TEST_CASE("relation leaders, alpha = 3") {
  LatticeMonoid M(Rational(3));
  auto gens = M.irreducibles_up_to(6);
  REQUIRE(gens == pts({{1, 0}, {1, 2}, {1, 3}}));
  auto leaders = relation_leaders_oracle(M, gens, 6);
  REQUIRE(leaders.size() == 1);
  CHECK(leaders[0].exps == std::vector<std::int64_t>{1, 0, 2});
  CHECK(leaders[0].image == LatticePoint{3, 6});
  CHECK(leaders[0].minimal);
}

TEST_CASE("leader definition spot check") {
  // every leader: not the MD of its image, but MD after removing any factor
  LatticeMonoid M(Rational(5, 2));
  auto gens = M.irreducibles_up_to(10);
  auto leaders = relation_leaders_oracle(M, gens, 10);
  REQUIRE(!leaders.empty());
  MonoidDecomposer dec(gens, 10, M.max_pole(10));
  for (const auto& L : leaders) {
    CHECK(L.exps != dec.minimal_decomposition(L.image));
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (L.exps[k] == 0) continue;
      auto w = L.exps;
      --w[k];
      LatticePoint img = dec.image(w);
      CHECK(w == dec.minimal_decomposition(img));
    }
  }
}
