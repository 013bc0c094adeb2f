#include <doctest.h>

#include <algorithm>

#include "nabla/algebra.hpp"
#include "nabla/catalog.hpp"
#include "oracle_helpers.hpp"

using namespace nabla;

namespace {

FiniteLattice chain(int n) {
  return lattice_from_poset(validate_poset(oracle::chain_leq(n)).value()).value();
}

FiniteLattice boolean4() {
  auto anti = validate_poset(oracle::antichain_leq(2)).value();
  return upset_lattice(anti).lattice;
}

NablaAlgebra left_algebra(const FiniteLattice& l) {
  std::vector<int> nabla(l.size(), l.bot);
  auto arrow = try_residual_from_nabla(l, nabla);
  REQUIRE(arrow.ok());
  return {l, nabla, arrow.value(), false};
}

NablaAlgebra heyting_algebra(const FiniteLattice& l) {
  std::vector<int> nabla(l.size());
  for (int i = 0; i < l.size(); ++i) nabla[i] = i;
  auto arrow = try_residual_from_nabla(l, nabla);
  REQUIRE(arrow.ok());
  return {l, nabla, arrow.value(), true};
}

}  // namespace

TEST_CASE("left structure: nabla constant bottom gives arrow constant top") {
  auto alg = left_algebra(chain(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(alg.arrow[a][b] == alg.lattice.top);
  CHECK(verify_nabla_algebra(alg).ok);
}

TEST_CASE("identity nabla reproduces the Heyting implication") {
  auto l = chain(3);
  auto alg = heyting_algebra(l);
  auto hey = try_heyting_implication(l);
  REQUIRE(hey.ok());
  CHECK(alg.arrow == hey.value());
  CHECK(verify_nabla_algebra(alg).ok);
}

TEST_CASE("constant-top nabla has no residual at (top, bot)") {
  auto l = lattice_from_poset(validate_poset({{1, 1}, {0, 1}}).value()).value();
  auto arrow = try_residual_from_nabla(l, {1, 1});
  REQUIRE(!arrow.ok());
  CHECK(arrow.error().a == 1);
  CHECK(arrow.error().b == 0);
}

TEST_CASE("verify rejects a forced counterexample") {
  auto l = lattice_from_poset(validate_poset({{1, 1}, {0, 1}}).value()).value();
  NablaAlgebra broken{l, {0, 1}, {{1, 1}, {1, 1}}, false};  // arrow == top
  auto rep = verify_nabla_algebra(broken);
  REQUIRE(!rep.ok);
  // top <= arrow(top, bot) yet nabla(top) /\ top <= bot fails
  CHECK(rep.a == 1);
  CHECK(rep.b == 0);
  CHECK(rep.c == 1);
  CHECK(!rep.forward_failed);
}

TEST_CASE("box is arrow from the top") {
  auto id3 = heyting_algebra(chain(3));
  auto box = box_op(id3);
  for (int i = 0; i < 3; ++i) CHECK(box[i] == i);

  auto left = left_algebra(chain(3));
  for (int b : box_op(left)) CHECK(b == left.lattice.top);

  // swap of the two atoms of the four-element boolean
  auto b4 = boolean4();
  std::vector<int> swap{0, 2, 1, 3};
  auto arrow = try_residual_from_nabla(b4, swap);
  REQUIRE(arrow.ok());
  NablaAlgebra alg{b4, swap, arrow.value(), false};
  REQUIRE(verify_nabla_algebra(alg).ok);
  // cross-check each arrow entry against the brute-forced residual
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto m = oracle::residual_brute(b4, swap, a, b);
      REQUIRE(m.has_value());
      CHECK(alg.arrow[a][b] == *m);
    }
  CHECK(box_op(alg) == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("classification of the standard examples") {
  auto id3 = classify(heyting_algebra(chain(3)));
  for (Variety v : {Variety::D, Variety::H, Variety::N, Variety::R, Variety::L,
                    Variety::Fa, Variety::Fu})
    CHECK(id3.tags.has(v));

  auto left = classify(left_algebra(chain(3)));
  CHECK(left.tags.has(Variety::L));
  CHECK(left.tags.has(Variety::D));
  CHECK(left.tags.has(Variety::H));
  CHECK(!left.tags.has(Variety::N));
  CHECK(!left.tags.has(Variety::R));
  CHECK(!left.tags.has(Variety::Fa));
  CHECK(!left.tags.has(Variety::Fu));

  auto b4 = boolean4();
  auto arrow = try_residual_from_nabla(b4, {0, 2, 1, 3});
  NablaAlgebra swap_alg{b4, {0, 2, 1, 3}, arrow.value(), false};
  auto sw = classify(swap_alg);
  CHECK(sw.tags.has(Variety::N));
  CHECK(sw.tags.has(Variety::Fa));
  CHECK(sw.tags.has(Variety::Fu));
  CHECK(!sw.tags.has(Variety::R));
  CHECK(!sw.tags.has(Variety::L));
}

TEST_CASE("morphism checks") {
  auto id3 = heyting_algebra(chain(3));
  std::vector<int> ident{0, 1, 2};
  CHECK(check_nabla_morphism(id3, id3, {ident, true}).ok);

  // unique map to the one-element algebra
  auto one = heyting_algebra(chain(1));
  CHECK(check_nabla_morphism(id3, one, {{0, 0, 0}, false}).ok);

  // the bounds-inclusion of the two-element boolean into the three-chain
  auto id2 = heyting_algebra(
      lattice_from_poset(validate_poset({{1, 1}, {0, 1}}).value()).value());
  CHECK(check_nabla_morphism(id2, id3, {{0, 2}, true}).ok);

  // breaking nabla preservation is caught
  auto left3 = left_algebra(chain(3));
  auto bad = check_nabla_morphism(id3, left3, {ident, false});
  CHECK(!bad.ok);
}

TEST_CASE("enumeration counts on small lattices") {
  CHECK(enumerate_nabla_algebras(chain(1)).size() == 1);

  // two-element boolean: 4 unary maps, residual-total ones survive
  auto l2 = lattice_from_poset(validate_poset({{1, 1}, {0, 1}}).value()).value();
  int oracle_count = 0;
  for (int n0 = 0; n0 < 2; ++n0)
    for (int n1 = 0; n1 < 2; ++n1) {
      bool total = true;
      for (int a = 0; a < 2 && total; ++a)
        for (int b = 0; b < 2 && total; ++b)
          if (!oracle::residual_brute(l2, {n0, n1}, a, b)) total = false;
      if (total) ++oracle_count;
    }
  CHECK(oracle_count == 2);
  CHECK(enumerate_nabla_algebras(l2).size() == 2);

  // three-chain: 27 unary maps, the join-preserving ones survive
  auto l3 = chain(3);
  int oracle3 = 0;
  for (int n0 = 0; n0 < 3; ++n0)
    for (int n1 = 0; n1 < 3; ++n1)
      for (int n2 = 0; n2 < 3; ++n2) {
        bool total = true;
        for (int a = 0; a < 3 && total; ++a)
          for (int b = 0; b < 3 && total; ++b)
            if (!oracle::residual_brute(l3, {n0, n1, n2}, a, b)) total = false;
        if (total) ++oracle3;
      }
  CHECK(oracle3 == 6);
  CHECK(enumerate_nabla_algebras(l3).size() == 6);
}

TEST_CASE("every enumerated algebra satisfies the adjunction and join preservation") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : enumerate_lattices(n))
      for (const auto& alg : enumerate_nabla_algebras(l)) {
        CHECK(verify_nabla_algebra(alg).ok);
        CHECK(alg.nabla[l.bot] == l.bot);
        for (int a = 0; a < l.size(); ++a)
          for (int b = 0; b < l.size(); ++b)
            CHECK(alg.nabla[l.join[a][b]] ==
                  l.join[alg.nabla[a]][alg.nabla[b]]);
      }
}

TEST_CASE("adjunction is equivalent to the unit/counit characterization") {
  for (const auto& l : enumerate_lattices(3))
    for (const auto& alg : enumerate_nabla_algebras(l)) {
      const int n = l.size();
      // monotone nabla
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (l.leq(a, b)) CHECK(l.leq(alg.nabla[a], alg.nabla[b]));
      // arrow antitone left, monotone right
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (l.leq(a, b)) {
              CHECK(l.leq(alg.arrow[b][c], alg.arrow[a][c]));
              CHECK(l.leq(alg.arrow[c][a], alg.arrow[c][b]));
            }
          }
      // counit and unit
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          CHECK(l.leq(l.meet[alg.nabla[alg.arrow[a][b]]][a], b));
          CHECK(l.leq(b, alg.arrow[a][l.meet[alg.nabla[b]][a]]));
        }
    }
}

TEST_CASE("faithful and full coincide with the triangle identities") {
  for (const auto& l : enumerate_lattices(4))
    for (const auto& alg : enumerate_nabla_algebras(l)) {
      auto tags = classify(alg);
      auto box = box_op(alg);
      bool nabla_box_id = true, box_nabla_id = true;
      for (int x = 0; x < l.size(); ++x) {
        if (alg.nabla[box[x]] != x) nabla_box_id = false;
        if (box[alg.nabla[x]] != x) box_nabla_id = false;
      }
      CHECK(tags.tags.has(Variety::Fa) == nabla_box_id);
      CHECK(tags.tags.has(Variety::Fu) == box_nabla_id);
    }
}

TEST_CASE("classification is stable under relabeling") {
  auto b4 = boolean4();
  auto arrow = try_residual_from_nabla(b4, {0, 2, 1, 3});
  NablaAlgebra alg{b4, {0, 2, 1, 3}, arrow.value(), false};

  // permute the two atoms: an isomorphic copy
  std::vector<int> perm{0, 2, 1, 3};
  std::vector<std::vector<int>> leq(4, std::vector<int>(4, 0));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (b4.leq(a, b)) leq[perm[a]][perm[b]] = 1;
  auto l2 = lattice_from_poset(validate_poset(leq).value()).value();
  std::vector<int> nabla2(4);
  for (int a = 0; a < 4; ++a) nabla2[perm[a]] = perm[alg.nabla[a]];
  auto arrow2 = try_residual_from_nabla(l2, nabla2);
  REQUIRE(arrow2.ok());
  NablaAlgebra copy{l2, nabla2, arrow2.value(), false};
  CHECK(classify(copy).tags == classify(alg).tags);
}

TEST_CASE("normal-ideal completion embeds isomorphically at finite scale") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : enumerate_lattices(n))
      for (const auto& alg : enumerate_nabla_algebras(l)) {
        auto comp = dm_completion(alg);
        CHECK(comp.completed.size() == alg.size());
        CHECK(verify_nabla_algebra(comp.completed).ok);
        auto mor = check_nabla_morphism(alg, comp.completed, comp.embedding);
        CHECK(mor.ok);
        std::vector<char> hit(comp.completed.size(), 0);
        for (int x : comp.embedding.map) hit[x] = 1;
        CHECK(std::all_of(hit.begin(), hit.end(), [](char c) { return c; }));

        auto before = classify(alg).tags;
        auto after = classify(comp.completed).tags;
        for (Variety v : {Variety::H, Variety::N, Variety::R, Variety::L,
                          Variety::Fa, Variety::Fu})
          if (before.has(v)) CHECK(after.has(v));
      }
}

TEST_CASE("completion of the left algebra on the three-chain stays left") {
  auto comp = dm_completion(left_algebra(chain(3)));
  CHECK(classify(comp.completed).tags.has(Variety::L));
  CHECK(comp.ideal_of_index.size() == 3);

  auto one = dm_completion(heyting_algebra(chain(1)));
  CHECK(one.completed.size() == 1);
}

TEST_CASE("heyting embedding survives the completion") {
  auto alg = heyting_algebra(chain(3));
  auto comp = dm_completion(alg);
  CHECK(comp.embedding.heyting);
  CHECK(check_nabla_morphism(alg, comp.completed, comp.embedding).ok);
}
