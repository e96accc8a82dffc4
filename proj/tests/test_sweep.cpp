#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sectionring/sweep.hpp"

using namespace sectionring;

TEST_CASE("alpha enumeration") {
  auto small = sweep_alphas(2, 2);
  CHECK(small == std::vector<Rational>{Rational(1), Rational(2), Rational(1, 2),
                                       Rational(3, 2)});
  auto full = sweep_alphas(10, 6);
  CHECK(full.size() == 192);
  for (const auto& a : full) {
    CHECK(a > Rational(0));
    CHECK(a <= Rational(6));
    CHECK(a.den_i64() <= 10);
  }
}

TEST_CASE("single slope comparison") {
  auto e = compare_one_point_with_monoid(Rational(1));
  CHECK(e.ok());
  CHECK(e.gen_count == 3);
  CHECK(e.leader_count == 1);
  CHECK(e.diff.empty());
  CHECK(compare_one_point_with_monoid(Rational(7, 5)).ok());
  CHECK(compare_one_point_with_monoid(Rational(11, 4)).ok());
}

TEST_CASE("parallel sweep equals the serial one") {
  auto alphas = sweep_alphas(6, 3);
  auto serial = one_point_sweep(alphas, false);
  auto parallel = one_point_sweep(alphas, true);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].alpha == parallel[i].alpha);
    CHECK(serial[i].ok());
    CHECK(parallel[i].ok());
    CHECK(serial[i].gen_count == parallel[i].gen_count);
    CHECK(serial[i].leader_count == parallel[i].leader_count);
  }
  std::string table = sweep_table(serial);
  CHECK(table.find("MATCH") != std::string::npos);
  CHECK(table.find("MISMATCH") == std::string::npos);
}
