#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "nabla/catalog.hpp"
#include "nabla/json_io.hpp"
#include "oracle_helpers.hpp"

using namespace nabla;

TEST_CASE("poset and lattice round trips") {
  auto p = validate_poset(oracle::chain_leq(3)).value();
  auto j = poset_to_json(p, {"0", "a", "1"});
  auto back = poset_from_json(j);
  REQUIRE(back.ok());
  CHECK(back.value().up == p.up);
  CHECK(labels_from_json(j) == std::vector<std::string>{"0", "a", "1"});

  auto l = lattice_from_poset(p).value();
  auto jl = lattice_to_json(l);
  auto lb = lattice_from_json(jl);
  REQUIRE(lb.ok());
  CHECK(lb.value().meet == l.meet);
  CHECK(lb.value().join == l.join);
}

TEST_CASE("algebra loading derives or verifies the arrow") {
  auto l = lattice_from_poset(validate_poset(oracle::chain_leq(3)).value()).value();
  std::vector<int> id{0, 1, 2};
  NablaAlgebra alg{l, id, try_residual_from_nabla(l, id).value(), true};
  auto j = algebra_to_json(alg);

  auto with_arrow = algebra_from_json(j);
  REQUIRE(with_arrow.ok());
  CHECK(with_arrow.value().arrow == alg.arrow);
  CHECK(with_arrow.value().explicit_heyting);

  j.erase("arrow");
  auto derived = algebra_from_json(j);
  REQUIRE(derived.ok());
  CHECK(derived.value().arrow == alg.arrow);

  // breaking the arrow is caught by verification
  auto broken = algebra_to_json(alg);
  broken["arrow"][0][0] = 0;  // arrow(bot,bot) must be top
  auto bad = algebra_from_json(broken);
  REQUIRE(!bad.ok());
  CHECK(bad.error().find("adjunction") != std::string::npos);
}

TEST_CASE("frame, space and ring round trips") {
  auto p = validate_poset(oracle::chain_leq(2)).value();
  auto f = validate_frame_masks(p, p.up).value();
  auto jf = frame_to_json(f);
  auto fb = frame_from_json(jf);
  REQUIRE(fb.ok());
  CHECK(fb.value().r_succ == f.r_succ);

  auto sp = to_spectral(p);
  auto sb = space_from_json(space_to_json(sp));
  REQUIRE(sb.ok());
  CHECK(sb.value().opens == sp.opens);

  auto r = zmod(6);
  auto rb = ring_from_json(ring_to_json(r));
  REQUIRE(rb.ok());
  CHECK(rb.value().add == r.add);
  CHECK(rb.value().mul == r.mul);
}

TEST_CASE("schema problems throw, semantic problems return") {
  CHECK_THROWS_AS(poset_from_json(Json{{"n", 2}}), ValidationError);
  Json bad;
  bad["n"] = 2;
  bad["leq"] = Json::array({Json::array({1, 1}), Json::array({1, 1})});
  auto r = poset_from_json(bad);
  REQUIRE(!r.ok());
  CHECK(r.error().find("NotAntisymmetric") != std::string::npos);
}

TEST_CASE("proof trees round trip through JSON") {
  for (const auto& f : standard_fixtures()) {
    auto j = fixture_to_json(f);
    auto back = fixture_from_json(j);
    REQUIRE(back.ok());
    auto v = check_proof(back.value().tree, back.value().rules,
                         back.value().assumptions);
    INFO(f.name << ": " << v.reason);
    CHECK(v.ok);
    CHECK(fixture_to_json(back.value()) == j);
  }
}

TEST_CASE("checked-in fixture files match the builders") {
  namespace fs = std::filesystem;
  fs::path dir = NABLA_FIXTURE_DIR;
  REQUIRE(fs::exists(dir / "proofs"));
  for (const auto& f : standard_fixtures()) {
    fs::path file = dir / "proofs" / (f.name + ".json");
    INFO(file.string());
    REQUIRE(fs::exists(file));
    std::ifstream in(file);
    Json j;
    in >> j;
    CHECK(j == fixture_to_json(f));
  }
}
