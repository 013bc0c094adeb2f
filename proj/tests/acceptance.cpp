// Acceptance suite: one pass/fail line per criterion, exact checks only.
// Returns nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "nabla/catalog.hpp"
#include "nabla/duality.hpp"
#include "nabla/fixtures.hpp"
#include "nabla/json_io.hpp"
#include "nabla/semantics.hpp"
#include "oracle_helpers.hpp"

using namespace nabla;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail, double seconds) {
  std::ostringstream os;
  os << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name
     << " [" << detail << "] (" << seconds << "s)";
  std::cout << os.str() << std::endl;
  if (!ok) ++failures;
}

template <class Fn>
void criterion(int number, const std::string& name, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    detail = fn(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  report(number, name, ok, detail, secs);
}

Sequent seq(const std::string& text) { return parse_sequent(text).value(); }

// ---------------------------------------------------------------- criterion 1

std::string run_adjunction_suite(bool& ok) {
  long algebras = 0, violations = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : enumerate_lattices(n))
      for (const auto& alg : enumerate_nabla_algebras(l)) {
        ++algebras;
        if (!verify_nabla_algebra(alg).ok) ++violations;
        if (alg.nabla[l.bot] != l.bot) ++violations;
        for (int a = 0; a < l.size(); ++a)
          for (int b = 0; b < l.size(); ++b)
            if (alg.nabla[l.join[a][b]] != l.join[alg.nabla[a]][alg.nabla[b]])
              ++violations;
      }
  ok = violations == 0 && algebras > 0;
  std::ostringstream os;
  os << algebras << " algebras, " << violations << " violations";
  return os.str();
}

// ---------------------------------------------------------------- criterion 2

std::string run_round_trips(bool& ok) {
  long algebras = 0, frames = 0, bad = 0;
  for (const auto& entry : algebra_catalog(5)) {
    if (!entry.tags.has(Variety::D)) continue;
    ++algebras;
    auto emb = canonical_embedding(entry.algebra);
    if (!emb.ok()) {
      ++bad;
      continue;
    }
    auto mor = check_nabla_morphism(entry.algebra, emb.value().target.algebra,
                                    emb.value().embedding);
    bool bijective = emb.value().target.algebra.size() == entry.algebra.size();
    std::vector<char> hit(emb.value().target.algebra.size(), 0);
    for (int x : emb.value().embedding.map) hit[x] = 1;
    for (char c : hit) bijective &= (c != 0);
    auto alpha = alpha_check(entry.algebra);
    if (!mor.ok || !bijective || !alpha.ok() || !alpha.value().ok) ++bad;
  }
  // frames: exhaustive to 4 points, structured families on 5 points
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n))
      for (const auto& fr : enumerate_frames(p)) {
        ++frames;
        if (!beta_check(NablaSpace{fr}).ok) ++bad;
      }
  for (const auto& p : enumerate_posets(5))
    for (const auto& fr : structured_frames(p)) {
      ++frames;
      if (!beta_check(NablaSpace{fr}).ok) ++bad;
    }
  ok = bad == 0 && algebras > 0 && frames > 0;
  std::ostringstream os;
  os << algebras << " distributive algebras, " << frames << " frames, " << bad
     << " failures";
  return os.str();
}

// ---------------------------------------------------------------- criterion 3

std::string run_condition_transfer(bool& ok) {
  long checked = 0, bad = 0;
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n))
      for (const auto& fr : enumerate_frames(p)) {
        ++checked;
        auto conds = frame_conditions(fr);
        auto tags = classify(upset_algebra(fr).algebra).tags;
        if (!tags.has(Variety::D) || !tags.has(Variety::H)) ++bad;
        for (Variety v :
             {Variety::N, Variety::R, Variety::L, Variety::Fa, Variety::Fu})
          if (conds.tags.has(v) && !tags.has(v)) ++bad;
      }
  for (const auto& entry : algebra_catalog(5)) {
    if (!entry.tags.has(Variety::D)) continue;
    ++checked;
    auto pf = prime_frame(entry.algebra);
    if (!pf.ok()) {
      ++bad;
      continue;
    }
    auto conds = frame_conditions(pf.value().frame);
    for (Variety v :
         {Variety::N, Variety::R, Variety::L, Variety::Fa, Variety::Fu})
      if (entry.tags.has(v) && !conds.tags.has(v)) ++bad;
  }
  ok = bad == 0 && checked > 0;
  std::ostringstream os;
  os << checked << " transfers, " << bad << " exceptions";
  return os.str();
}

// ---------------------------------------------------------------- criterion 4

std::string run_witness_equivalences(bool& ok) {
  long normal = 0, bad = 0;
  auto run_frame = [&](const KripkeFrame& fr) {
    auto conds = frame_conditions(fr);
    if (!conds.witness) return;
    ++normal;
    const auto& pi = *conds.witness;
    const auto& p = fr.poset;
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
    surj = true;
    for (char c : hit) surj &= (c != 0);
    if (conds.tags.has(Variety::R) != right) ++bad;
    if (conds.tags.has(Variety::L) != left) ++bad;
    if (conds.tags.has(Variety::Fa) != emb) ++bad;
    if (conds.tags.has(Variety::Fu) != surj) ++bad;
  };
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n))
      for (const auto& fr : enumerate_frames(p)) run_frame(fr);
  for (const auto& p : enumerate_posets(5))
    for (const auto& fr : structured_frames(p)) run_frame(fr);
  ok = bad == 0 && normal > 0;
  std::ostringstream os;
  os << normal << " normal frames, " << bad << " mismatches";
  return os.str();
}

// ---------------------------------------------------------------- criterion 5

std::string run_completion(bool& ok) {
  long algebras = 0, bad = 0;
  for (const auto& entry : algebra_catalog(5)) {
    ++algebras;
    auto comp = dm_completion(entry.algebra);
    if (!verify_nabla_algebra(comp.completed).ok) ++bad;
    auto mor =
        check_nabla_morphism(entry.algebra, comp.completed, comp.embedding);
    if (!mor.ok) ++bad;
    if (comp.completed.size() != entry.algebra.size()) ++bad;
    std::vector<char> hit(comp.completed.size(), 0);
    for (int x : comp.embedding.map) {
      if (hit[x]) ++bad;  // injectivity
      hit[x] = 1;
    }
    auto after = classify(comp.completed).tags;
    for (Variety v : {Variety::H, Variety::N, Variety::R, Variety::L,
                      Variety::Fa, Variety::Fu})
      if (entry.tags.has(v) && !after.has(v)) ++bad;
  }
  ok = bad == 0 && algebras > 0;
  std::ostringstream os;
  os << algebras << " completions, " << bad << " failures";
  return os.str();
}

// ---------------------------------------------------------------- criterion 6

std::string run_spectral_dictionary(bool& ok) {
  long posets = 0, bad = 0;
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      ++posets;
      auto sp = to_spectral(p);
      auto back = from_spectral(sp);
      if (!back.ok() || !(back.value().up == p.up)) {
        ++bad;
        continue;
      }
      if (!spectral_check(sp).ok) ++bad;
      auto upsets = oracle::upsets_brute(p);
      std::sort(upsets.begin(), upsets.end());
      if (sp.opens != upsets) ++bad;
      const Mask all = full_mask(p.n);
      for (Mask y = 0;; ++y) {
        bool upset = std::binary_search(upsets.begin(), upsets.end(), y);
        Mask up = 0, down = 0;
        for (int a = 0; a < p.n; ++a)
          if (mask_has(y, a)) {
            up |= p.up[a];
            down |= p.down[a];
          }
        if ((saturation(sp, y) == y) != upset) ++bad;
        if (saturation(sp, y) != up) ++bad;
        if (closure(sp, y) != down) ++bad;
        if (!doubly_spectral(sp, y)) ++bad;
        bool compact_open = sp.is_open(y) && subset_compact(sp, y);
        if (compact_open != upset) ++bad;
        if (y == all) break;
      }
    }
  ok = bad == 0 && posets > 0;
  std::ostringstream os;
  os << posets << " posets, " << bad << " clause failures";
  return os.str();
}

// ---------------------------------------------------------------- criterion 7

std::string run_ring_suite(bool& ok) {
  long checks = 0, bad = 0;

  // RI(Z/12) is the four-element boolean algebra; oracle: enumerate every
  // subset of Z/12, keep the radical ideals, compare
  auto z12 = zmod(12);
  {
    std::vector<RingSet> oracle_radicals;
    for (unsigned s = 0; s < (1u << 12); ++s) {
      RingSet set;
      for (int x = 0; x < 12; ++x)
        if ((s >> x) & 1) set.set(x);
      if (!is_ideal(z12, set)) continue;
      if (radical(z12, set) == set) oracle_radicals.push_back(set);
    }
    std::sort(oracle_radicals.begin(), oracle_radicals.end());
    auto ri = radical_ideal_lattice(z12);
    ++checks;
    if (ri.ideal_of != oracle_radicals || ri.lattice.size() != 4) ++bad;
    if (!is_distributive(ri.lattice).distributive) ++bad;
    // four-element boolean: two incomparable elements between bot and top
    int middles = 0;
    for (int i = 0; i < ri.lattice.size(); ++i)
      if (i != ri.lattice.bot && i != ri.lattice.top) ++middles;
    if (middles != 2) ++bad;
    for (int i = 0; i < ri.lattice.size(); ++i)
      for (int j = 0; j < ri.lattice.size(); ++j) {
        RingSet q = quotient_ideal(z12, ri.ideal_of[j], ri.ideal_of[i]);
        if (!(ri.ideal_of[ri.heyting[i][j]] == q)) ++bad;
      }
  }

  auto rings = ring_catalog();
  for (const auto& r : rings) {
    ++checks;
    try {
      auto sp = spec_space(r);
      auto ri = radical_ideal_lattice(r);
      iu_maps(r, sp, ri);
    } catch (const std::exception&) {
      ++bad;
    }
  }

  long homs = 0;
  for (auto [src, dst] : hom_catalog_pairs(rings, 9))
    for (const auto& h : enumerate_ring_homs(*src, *dst)) {
      ++homs;
      try {
        pushforward_pullback(*src, *dst, h);  // adjunction + factorization
        hom_criteria(*src, *dst, h);          // algebraic vs topological
      } catch (const std::exception&) {
        ++bad;
      }
    }

  {
    ++checks;
    auto z2z2 = product_ring(zmod(2), zmod(2));
    std::vector<int> swap(4);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) swap[x * 2 + y] = y * 2 + x;
    auto sda = semi_dynamic_algebra(
        make_semi_dynamic_ring(z2z2, z2z2, RingHom{swap}, {0, 1}));
    auto tags = classify(sda.algebra).tags;
    for (Variety v : {Variety::D, Variety::H, Variety::N, Variety::Fa, Variety::Fu})
      if (!tags.has(v)) ++bad;
  }

  ok = bad == 0 && homs > 0;
  std::ostringstream os;
  os << checks << " ring checks, " << homs << " homs, " << bad << " failures";
  return os.str();
}

// ---------------------------------------------------------------- criterion 8

ProofTree* node_at(ProofTree& t, int index, int& counter) {
  if (counter == index) return &t;
  ++counter;
  for (auto& p : t.premises)
    if (auto* hit = node_at(p, index, counter)) return hit;
  return nullptr;
}

std::string run_proof_fixtures(bool& ok) {
  long accepted = 0, rejected_mutants = 0, bad = 0;
  auto fixtures = standard_fixtures();
  for (const auto& f : fixtures) {
    auto v = check_proof(f.tree, f.rules, f.assumptions);
    if (v.ok) ++accepted;
    else ++bad;
  }

  // single-node mutations: rule swaps and sequent edits across the fixtures
  std::vector<std::pair<std::string, Rule>> rule_swaps = {
      {"nabla_bot_bot", Rule::RTo},   {"nabla_bot_bot", Rule::Ax},
      {"nabla_or_dist", Rule::ROr2},  {"nabla_or_dist", Rule::Lw},
      {"making_one_formula", Rule::R}, {"fa_axiom_left", Rule::Nabla},
      {"fu_axiom_right", Rule::Fa},   {"fa_rule_from_axiom", Rule::Lc},
      {"fu_rule_from_axiom", Rule::L}, {"d_rule_from_axiom", Rule::D},
      {"n_rule_from_axiom", Rule::N},
  };
  int mutants = 0;
  for (const auto& [name, newrule] : rule_swaps) {
    const auto& fx = fixture_by_name(name);
    ProofTree copy = fx.tree;
    int counter = 0;
    ProofTree* target = node_at(copy, 0, counter);
    if (copy.rule == newrule) {
      counter = 0;
      target = node_at(copy, 1, counter);
    }
    if (!target) continue;
    target->rule = newrule;
    ++mutants;
    RuleSet permissive = fx.rules;
    permissive.d = permissive.n = permissive.r = permissive.l = true;
    permissive.fa = permissive.fu = true;
    if (!check_proof(copy, permissive, fx.assumptions).ok) ++rejected_mutants;
  }
  // sequent-level mutations
  {
    auto fx = fixture_by_name("nabla_bot_bot");
    ProofTree copy = fx.tree;
    copy.conclusion = seq("na F => T");
    ++mutants;
    if (!check_proof(copy, fx.rules).ok) ++rejected_mutants;

    ProofTree copy2 = fx.tree;
    copy2.premises[0].conclusion = seq("na F => na (F -> T)");
    ++mutants;
    if (!check_proof(copy2, fx.rules).ok) ++rejected_mutants;

    ProofTree copy3 = fx.tree;
    std::swap(copy3.premises[0], copy3.premises[1]);
    ++mutants;
    if (!check_proof(copy3, fx.rules).ok) ++rejected_mutants;
  }

  ok = bad == 0 && accepted == static_cast<long>(fixtures.size()) &&
       mutants >= 10 && rejected_mutants == mutants;
  std::ostringstream os;
  os << accepted << "/" << fixtures.size() << " fixtures accepted, "
     << rejected_mutants << "/" << mutants << " mutants rejected";
  return os.str();
}

// ---------------------------------------------------------------- criterion 9

struct RuleInstance {
  std::string name;
  std::vector<std::string> premises;
  std::string conclusion;
  VarietySet variety;
  bool heyting = false;
};

std::string run_soundness_sweep(bool& ok) {
  using V = Variety;
  auto vs = [](std::initializer_list<Variety> l) { return VarietySet::of(l); };
  std::vector<RuleInstance> instances = {
      {"Ax", {}, "p => p", {}, false},
      {"Lbot", {}, "F =>", {}, false},
      {"Ltop", {}, "=> T", {}, false},
      {"Lw", {"p => q"}, "p, r => q", {}, false},
      {"Rw", {"p =>"}, "p => q", {}, false},
      {"Lc", {"p, p => q"}, "p => q", {}, false},
      {"cut0", {"r => p", "p => q"}, "r => q", {}, false},
      {"cut1", {"r => p", "q, p => r"}, "q, r => r", {}, false},
      {"Land1", {"r, p => q"}, "r, p & q => q", {}, false},
      {"Land2", {"r, q => p"}, "r, p & q => p", {}, false},
      {"Rand", {"r => p", "r => q"}, "r => p & q", {}, false},
      {"Lor", {"p => r", "q => r"}, "p | q => r", {}, false},
      {"Ror1", {"r => p"}, "r => p | q", {}, false},
      {"Ror2", {"r => q"}, "r => p | q", {}, false},
      {"nabla", {"p => q"}, "na p => na q", {}, false},
      {"Lto0", {"=> p", "q => r"}, "na (p -> q) => r", {}, false},
      {"Lto1", {"r => p", "r, q => p"}, "r, na (p -> q) => p", {}, false},
      {"Rto0", {"q => r"}, "=> q -> r", {}, false},
      {"Rto1", {"na p, q => r"}, "p => q -> r", {}, false},
      {"R", {"r => p"}, "r => na p", vs({V::R}), false},
      {"L", {"r, p => q"}, "r, na p => q", vs({V::L}), false},
      {"D0", {"r, p =>", "r, q =>"}, "r, p | q =>", vs({V::D}), false},
      {"D1", {"r, p => q", "r, q => q"}, "r, p | q => q", vs({V::D}), false},
      {"N0", {"p, q => r"}, "na p, na q => na r", vs({V::N}), false},
      {"N1", {"p =>"}, "na p =>", vs({V::N}), false},
      {"N2", {"=> p"}, "=> na p", vs({V::N}), false},
      {"Fa0", {"r, p => q"}, "r => na (p -> q)", vs({V::Fa}), false},
      {"Fa1", {"p => q"}, "=> na (p -> q)", vs({V::Fa}), false},
      {"Fu0", {"na r => p", "na r, q =>"}, "r, p -> q =>", vs({V::Fu}), false},
      {"Fu1", {"na r => p", "na r, q => na r"}, "r, p -> q => r", vs({V::Fu}), false},
      {"Fu2", {"=> p", "q => na r"}, "p -> q => r", vs({V::Fu}), false},
      {"Lsup", {"r => p", "r, q => p"}, "r, p > q => p", vs({V::H}), true},
      {"Rsup", {"r, p => q"}, "r => p > q", vs({V::H}), true},
  };

  auto catalog = algebra_catalog(4);
  long checks = 0, violations = 0;
  for (const auto& inst : instances) {
    LanguageMode mode =
        inst.heyting ? LanguageMode::Intuitionistic : LanguageMode::Base;
    std::vector<Sequent> premises;
    for (const auto& p : inst.premises)
      premises.push_back(parse_sequent(p, mode).value());
    Sequent conclusion = parse_sequent(inst.conclusion, mode).value();

    std::vector<std::string> atoms = conclusion.atoms();
    for (const auto& p : premises)
      for (const auto& a : p.atoms())
        if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
          atoms.push_back(a);
    std::sort(atoms.begin(), atoms.end());

    for (const auto& entry : catalog) {
      if (!inst.variety.subset_of(entry.tags)) continue;
      AlgebraicEvaluator ev(entry.algebra);
      const int n = entry.algebra.size();
      std::vector<int> assign(atoms.size(), 0);
      while (true) {
        Valuation v;
        for (std::size_t i = 0; i < atoms.size(); ++i) v.atoms[atoms[i]] = assign[i];
        bool prem_ok = true;
        for (const auto& p : premises) {
          auto r = ev.holds(p, v);
          if (!r.ok() || !r.value()) {
            prem_ok = false;
            break;
          }
        }
        if (prem_ok) {
          ++checks;
          auto c = ev.holds(conclusion, v);
          if (!c.ok() || !c.value()) ++violations;
        }
        int i = static_cast<int>(atoms.size()) - 1;
        while (i >= 0 && assign[i] == n - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
      }
    }
  }
  ok = violations == 0 && checks > 0;
  std::ostringstream os;
  os << checks << " premise-valid instances, " << violations << " violations";
  return os.str();
}

// --------------------------------------------------------------- criterion 10

std::string run_countermodel_sanity(bool& ok) {
  auto catalog = algebra_catalog(5);
  bool all = true;
  std::ostringstream os;

  auto cm1 = countermodel_search(seq("T => na T"), RuleSet{}, catalog);
  bool left_refutes = cm1.has_value() &&
                      cm1->algebra.nabla[cm1->algebra.lattice.top] !=
                          cm1->algebra.lattice.top;
  all &= left_refutes;
  os << "refuted-in-STL=" << left_refutes;

  RuleSet n;
  n.n = true;
  auto proof = prove_bounded(seq("T => na T"), n, 3);
  bool proved = proof.status == SearchStatus::Proved &&
                check_proof(*proof.proof, n).ok;
  all &= proved;
  os << ", proved-in-N-at-3=" << proved;

  auto cm2 = countermodel_search(seq("na p & na q => na (p & q)"), RuleSet{}, catalog);
  bool meet_refuted = cm2.has_value();
  if (meet_refuted) {
    AlgebraicEvaluator ev(cm2->algebra);
    auto r = ev.holds(seq("na p & na q => na (p & q)"), cm2->valuation);
    meet_refuted = r.ok() && !r.value();
  }
  all &= meet_refuted;
  os << ", meet-direction-refuted=" << meet_refuted;

  auto cm3 = countermodel_search(seq("na p & na q => na (p & q)"), n, catalog);
  bool none_in_normal = !cm3.has_value();
  all &= none_in_normal;
  os << ", no-normal-countermodel=" << none_in_normal;

  ok = all;
  return os.str();
}

// --------------------------------------------------------------- criterion 11

std::string run_equivalence(bool& ok) {
  RuleSet all;
  all.d = all.n = all.r = all.l = all.fa = all.fu = true;
  auto rep = axiom_rule_equivalence_suite(all, 10);
  long failed = 0;
  for (const auto& d : rep.directions)
    if (!d.ok) {
      ++failed;
      std::cout << "  equivalence failure: " << d.name << " -- " << d.detail
                << std::endl;
    }
  ok = rep.all_ok;
  std::ostringstream os;
  os << rep.directions.size() << " directions, " << failed << " failures";
  return os.str();
}

}  // namespace

int main() {
  criterion(1, "adjunction suite over all lattices up to size 5",
            [](bool& ok) { return run_adjunction_suite(ok); });
  criterion(2, "representation round trips (canonical embedding, alpha, beta)",
            [](bool& ok) { return run_round_trips(ok); });
  criterion(3, "condition transfer between frames and algebras",
            [](bool& ok) { return run_condition_transfer(ok); });
  criterion(4, "witness-level frame conditions match the relational ones",
            [](bool& ok) { return run_witness_equivalences(ok); });
  criterion(5, "normal-ideal completion embeds with tags preserved",
            [](bool& ok) { return run_completion(ok); });
  criterion(6, "spectral dictionary round trips and clauses",
            [](bool& ok) { return run_spectral_dictionary(ok); });
  criterion(7, "ring suite (RI lattice, IU maps, adjunctions, criteria)",
            [](bool& ok) { return run_ring_suite(ok); });
  criterion(8, "proof fixtures replay and mutations are rejected",
            [](bool& ok) { return run_proof_fixtures(ok); });
  criterion(9, "soundness sweep over every rule and catalog model",
            [](bool& ok) { return run_soundness_sweep(ok); });
  criterion(10, "countermodel sanity for the nabla-top and meet sequents",
            [](bool& ok) { return run_countermodel_sanity(ok); });
  criterion(11, "axiom-rule equivalence in both directions",
            [](bool& ok) { return run_equivalence(ok); });

  if (failures == 0) {
    std::cout << "ALL CRITERIA PASS" << std::endl;
    return 0;
  }
  std::cout << failures << " criteria FAILED" << std::endl;
  return 1;
}
