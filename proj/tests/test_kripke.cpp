#include <doctest.h>

#include "nabla/catalog.hpp"
#include "nabla/kripke.hpp"
#include "oracle_helpers.hpp"

using namespace nabla;

namespace {

FinitePoset chain(int n) { return validate_poset(oracle::chain_leq(n)).value(); }

KripkeFrame frame_of(const FinitePoset& p, const std::vector<Mask>& rows) {
  auto f = validate_frame_masks(p, rows);
  REQUIRE(f.ok());
  return f.value();
}

KripkeFrame order_frame(const FinitePoset& p) { return frame_of(p, p.up); }

KripkeFrame empty_frame(const FinitePoset& p) {
  return frame_of(p, std::vector<Mask>(p.n, 0));
}

}  // namespace

TEST_CASE("frame validation") {
  auto two = chain(2);
  CHECK(validate_frame_masks(two, {0, 0}).ok());
  CHECK(validate_frame_masks(two, two.up).ok());

  // R = {(top, bot)} forces (top, top) by compatibility
  auto bad = validate_frame_masks(two, {0, 0b01});
  REQUIRE(!bad.ok());
  CHECK(bad.error().k == 1);
  CHECK(bad.error().l == 0);
}

TEST_CASE("frame conditions on the two-chain") {
  auto two = chain(2);

  auto order = frame_conditions(order_frame(two));
  for (Variety v : {Variety::N, Variety::R, Variety::L, Variety::Fa, Variety::Fu})
    CHECK(order.tags.has(v));
  REQUIRE(order.witness.has_value());
  CHECK(*order.witness == std::vector<int>{0, 1});

  auto empty = frame_conditions(empty_frame(two));
  CHECK(empty.tags.has(Variety::L));
  CHECK(!empty.tags.has(Variety::R));
  CHECK(!empty.tags.has(Variety::Fa));
  CHECK(!empty.tags.has(Variety::Fu));
  CHECK(!empty.tags.has(Variety::N));

  auto full = frame_conditions(frame_of(two, {0b11, 0b11}));
  CHECK(full.tags.has(Variety::R));
  CHECK(!full.tags.has(Variety::L));
}

TEST_CASE("normality witnesses") {
  auto two = chain(2);
  auto pi = normality_witness(order_frame(two));
  REQUIRE(pi.ok());
  CHECK(pi.value() == std::vector<int>{0, 1});

  auto none = normality_witness(empty_frame(two));
  REQUIRE(!none.ok());
  CHECK(none.error() == 0);

  auto anti = validate_poset(oracle::antichain_leq(2)).value();
  auto full = frame_of(anti, {0b11, 0b11});
  CHECK(!normality_witness(full).ok());
}

TEST_CASE("upset algebra of the standard frames") {
  auto two = chain(2);

  auto ua = upset_algebra(order_frame(two));
  REQUIRE(ua.algebra.size() == 3);
  CHECK(verify_nabla_algebra(ua.algebra).ok);
  // nabla is the identity and arrow the Heyting implication
  for (int i = 0; i < 3; ++i) CHECK(ua.algebra.nabla[i] == i);
  auto hey = try_heyting_implication(ua.algebra.lattice);
  REQUIRE(hey.ok());
  CHECK(ua.algebra.arrow == hey.value());

  auto left = upset_algebra(empty_frame(two));
  for (int i = 0; i < 3; ++i) {
    CHECK(left.algebra.nabla[i] == left.algebra.lattice.bot);
    for (int j = 0; j < 3; ++j)
      CHECK(left.algebra.arrow[i][j] == left.algebra.lattice.top);
  }

  auto point = chain(1);
  auto loop = upset_algebra(frame_of(point, {0b1}));
  REQUIRE(loop.algebra.size() == 2);
  CHECK(loop.algebra.nabla == std::vector<int>{0, 1});
}

TEST_CASE("prime frames of the standard algebras") {
  auto three = lattice_from_poset(chain(3)).value();
  std::vector<int> id{0, 1, 2};
  auto heyting = NablaAlgebra{three, id, try_residual_from_nabla(three, id).value(), true};
  auto pf = prime_frame(heyting);
  REQUIRE(pf.ok());
  CHECK(pf.value().frame.points() == 2);
  // R is the inclusion order of the two filters
  CHECK(pf.value().frame.r_succ == pf.value().frame.poset.up);

  std::vector<int> bot{0, 0, 0};
  auto left = NablaAlgebra{three, bot, try_residual_from_nabla(three, bot).value(), false};
  auto pl = prime_frame(left);
  REQUIRE(pl.ok());
  CHECK(pl.value().frame.r_succ == std::vector<Mask>{0, 0});

  auto m3 = lattice_from_poset(validate_poset(oracle::diamond_leq(3)).value()).value();
  std::vector<int> zero(m3.size(), m3.bot);
  auto m3alg = NablaAlgebra{m3, zero, try_residual_from_nabla(m3, zero).value(), false};
  CHECK(!prime_frame(m3alg).ok());
}

TEST_CASE("canonical embedding is a bijective morphism on small algebras") {
  auto three = lattice_from_poset(chain(3)).value();
  std::vector<int> id{0, 1, 2};
  auto alg = NablaAlgebra{three, id, try_residual_from_nabla(three, id).value(), true};
  auto emb = canonical_embedding(alg);
  REQUIRE(emb.ok());
  auto mor = check_nabla_morphism(alg, emb.value().target.algebra,
                                  emb.value().embedding);
  CHECK(mor.ok);
  // finite case: also surjective
  CHECK(emb.value().target.algebra.size() == alg.size());

  auto one = lattice_from_poset(chain(1)).value();
  auto triv = NablaAlgebra{one, {0}, try_residual_from_nabla(one, {0}).value(), false};
  auto e1 = canonical_embedding(triv);
  REQUIRE(e1.ok());
  CHECK(e1.value().target.algebra.size() == 1);
}

TEST_CASE("kripke morphisms") {
  auto two = chain(2);
  auto f = order_frame(two);
  CHECK(check_kripke_morphism({0, 1}, f, f, true).ok);

  auto point = chain(1);
  auto loop = frame_of(point, {0b1});
  CHECK(check_kripke_morphism({0, 0}, f, loop, false).ok);

  // the bottom inclusion misses the successor 1 of the image
  auto incl = check_kripke_morphism({0}, loop, f, false);
  CHECK(!incl.ok);
  CHECK(incl.witness.find("back condition") != std::string::npos);
}

TEST_CASE("condition transfer through the upset algebra") {
  for (const auto& p : enumerate_posets(3))
    for (const auto& fr : structured_frames(p)) {
      auto conds = frame_conditions(fr);
      auto ua = upset_algebra(fr);
      auto tags = classify(ua.algebra);
      CHECK(tags.tags.has(Variety::D));
      CHECK(tags.tags.has(Variety::H));
      for (Variety v : {Variety::N, Variety::R, Variety::L, Variety::Fa, Variety::Fu})
        if (conds.tags.has(v)) CHECK(tags.tags.has(v));
    }
}

TEST_CASE("witness-level conditions match the relational ones on normal frames") {
  for (const auto& p : enumerate_posets(3))
    for (const auto& fr : structured_frames(p)) {
      auto conds = frame_conditions(fr);
      if (!conds.witness) continue;
      const auto& pi = *conds.witness;
      bool right = true, left = true, emb = true, surj;
      for (int w = 0; w < p.n; ++w) {
        if (!p.leq(w, pi[w])) right = false;
        if (!p.leq(pi[w], w)) left = false;
      }
      for (int u = 0; u < p.n; ++u)
        for (int v = 0; v < p.n; ++v)
          if (p.leq(pi[u], pi[v]) && !p.leq(u, v)) emb = false;
      std::vector<char> hit(p.n, 0);
      for (int x : pi) hit[x] = 1;
      surj = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
      CHECK(conds.tags.has(Variety::R) == right);
      CHECK(conds.tags.has(Variety::L) == left);
      CHECK(conds.tags.has(Variety::Fa) == emb);
      CHECK(conds.tags.has(Variety::Fu) == surj);
    }
}
