#include <doctest.h>

#include "nabla/poset.hpp"
#include "oracle_helpers.hpp"

using namespace nabla;

TEST_CASE("identity relation is the discrete order") {
  auto p = validate_poset(oracle::antichain_leq(3));
  REQUIRE(p.ok());
  CHECK(p.value().n == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(p.value().leq(a, b) == (a == b));
}

TEST_CASE("full relation on two elements fails antisymmetry") {
  std::vector<std::vector<int>> leq{{1, 1}, {1, 1}};
  auto p = validate_poset(leq);
  REQUIRE(!p.ok());
  CHECK(p.error().kind == PosetViolation::NotAntisymmetric);
  CHECK(p.error().witness[0] == 0);
  CHECK(p.error().witness[1] == 1);
}

TEST_CASE("three-element chain validates") {
  auto p = validate_poset(oracle::chain_leq(3));
  REQUIRE(p.ok());
  CHECK(p.value().leq(0, 2));
  CHECK(!p.value().leq(2, 0));
}

TEST_CASE("missing reflexivity and transitivity are reported with witnesses") {
  std::vector<std::vector<int>> not_refl{{0}};
  auto p1 = validate_poset(not_refl);
  REQUIRE(!p1.ok());
  CHECK(p1.error().kind == PosetViolation::NotReflexive);

  // 0 <= 1 <= 2 but not 0 <= 2
  std::vector<std::vector<int>> not_trans{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  auto p2 = validate_poset(not_trans);
  REQUIRE(!p2.ok());
  CHECK(p2.error().kind == PosetViolation::NotTransitive);
  CHECK(p2.error().witness[0] == 0);
  CHECK(p2.error().witness[1] == 1);
  CHECK(p2.error().witness[2] == 2);
}

TEST_CASE("cover relation drops composite edges") {
  auto chain = validate_poset(oracle::chain_leq(3)).value();
  auto covers = cover_relation(chain);
  REQUIRE(covers.size() == 2);
  CHECK(covers[0] == std::pair<int, int>{0, 1});
  CHECK(covers[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("hasse export is deterministic and cover-only") {
  auto two = validate_poset(oracle::chain_leq(2)).value();
  std::string dot = export_hasse(two, {"bot", "top"});
  CHECK(dot == export_hasse(two, {"bot", "top"}));
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("label=\"bot\"") != std::string::npos);

  auto m3 = validate_poset(oracle::diamond_leq(3)).value();
  CHECK(cover_relation(m3).size() == 6);
  auto three = validate_poset(oracle::chain_leq(3)).value();
  std::string dot3 = export_hasse(three);
  CHECK(dot3.find("n0 -> n2") == std::string::npos);
}
