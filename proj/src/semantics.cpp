#include "nabla/semantics.hpp"

#include <algorithm>

#include "nabla/fixtures.hpp"

namespace nabla {

AlgebraicEvaluator::AlgebraicEvaluator(const NablaAlgebra& alg) : alg_(alg) {
  auto hey = try_heyting_implication(alg.lattice);
  if (hey.ok()) heyting_ = hey.value();
}

Result<int, EvalError> AlgebraicEvaluator::value(const Formula& f,
                                                 const Valuation& v) const {
  switch (f.kind()) {
    case Conn::Atom: {
      auto it = v.atoms.find(f.atom());
      if (it == v.atoms.end())
        return EvalError{EvalError::MissingAtom, f.atom()};
      return it->second;
    }
    case Conn::Top: return alg_.lattice.top;
    case Conn::Bot: return alg_.lattice.bot;
    case Conn::Nabla: {
      auto a = value(f.left(), v);
      if (!a.ok()) return a;
      return alg_.nabla[a.value()];
    }
    case Conn::And:
    case Conn::Or:
    case Conn::To:
    case Conn::Sup: {
      auto a = value(f.left(), v);
      if (!a.ok()) return a;
      auto b = value(f.right(), v);
      if (!b.ok()) return b;
      switch (f.kind()) {
        case Conn::And: return alg_.lattice.meet[a.value()][b.value()];
        case Conn::Or: return alg_.lattice.join[a.value()][b.value()];
        case Conn::To: return alg_.arrow[a.value()][b.value()];
        default: break;
      }
      if (!heyting_)
        return EvalError{EvalError::LanguageMode,
                         "'>' needs a Heyting lattice"};
      return (*heyting_)[a.value()][b.value()];
    }
  }
  return EvalError{EvalError::MissingAtom, "invalid formula"};
}

Result<bool, EvalError> AlgebraicEvaluator::holds(const Sequent& s,
                                                  const Valuation& v) const {
  int lhs = alg_.lattice.top;
  for (const auto& g : s.gamma) {
    auto x = value(g, v);
    if (!x.ok()) return x.error();
    lhs = alg_.lattice.meet[lhs][x.value()];
  }
  int rhs = alg_.lattice.bot;
  if (s.delta) {
    auto x = value(*s.delta, v);
    if (!x.ok()) return x.error();
    rhs = x.value();
  }
  return alg_.lattice.leq(lhs, rhs);
}

Result<bool, EvalError> eval_algebraic(const NablaAlgebra& alg,
                                       const Valuation& v, const Sequent& s) {
  return AlgebraicEvaluator(alg).holds(s, v);
}

namespace {

Result<Mask, EvalError> forcing_set(const KripkeFrame& f,
                                    const std::map<std::string, Mask>& val,
                                    const Formula& fm,
                                    std::vector<std::pair<Formula, Mask>>& table) {
  const int n = f.points();
  Mask out = 0;
  switch (fm.kind()) {
    case Conn::Atom: {
      auto it = val.find(fm.atom());
      if (it == val.end()) return EvalError{EvalError::MissingAtom, fm.atom()};
      out = it->second;
      break;
    }
    case Conn::Top: out = full_mask(n); break;
    case Conn::Bot: out = 0; break;
    case Conn::And:
    case Conn::Or: {
      auto l = forcing_set(f, val, fm.left(), table);
      if (!l.ok()) return l;
      auto r = forcing_set(f, val, fm.right(), table);
      if (!r.ok()) return r;
      out = fm.kind() == Conn::And ? (l.value() & r.value())
                                   : (l.value() | r.value());
      break;
    }
    case Conn::Nabla: {
      auto l = forcing_set(f, val, fm.left(), table);
      if (!l.ok()) return l;
      for (int w = 0; w < n; ++w)
        if (f.r_pred[w] & l.value()) out |= Mask{1} << w;
      break;
    }
    case Conn::To: {
      auto l = forcing_set(f, val, fm.left(), table);
      if (!l.ok()) return l;
      auto r = forcing_set(f, val, fm.right(), table);
      if (!r.ok()) return r;
      for (int w = 0; w < n; ++w)
        if (mask_subset(f.r_succ[w] & l.value(), r.value())) out |= Mask{1} << w;
      break;
    }
    case Conn::Sup: {
      auto l = forcing_set(f, val, fm.left(), table);
      if (!l.ok()) return l;
      auto r = forcing_set(f, val, fm.right(), table);
      if (!r.ok()) return r;
      for (int w = 0; w < n; ++w)
        if (mask_subset(f.poset.up[w] & l.value(), r.value())) out |= Mask{1} << w;
      break;
    }
  }
  table.emplace_back(fm, out);
  return out;
}

}  // namespace

Result<KripkeEvalResult, EvalError> eval_kripke(
    const KripkeFrame& f, const std::map<std::string, Mask>& valuation,
    const Sequent& s) {
  KripkeEvalResult res;
  const int n = f.points();
  Mask gamma = full_mask(n);
  for (const auto& g : s.gamma) {
    auto m = forcing_set(f, valuation, g, res.forcing);
    if (!m.ok()) return m.error();
    gamma &= m.value();
  }
  Mask delta = 0;
  if (s.delta) {
    auto m = forcing_set(f, valuation, *s.delta, res.forcing);
    if (!m.ok()) return m.error();
    delta = m.value();
  }
  res.holds = mask_subset(gamma, delta);

  // cross-check against the algebraic evaluation on the upset algebra
  UpsetAlgebra ua = upset_algebra(f);
  Valuation av;
  bool translatable = true;
  for (const auto& [name, mask] : valuation) {
    int idx = ua.index_of(mask);
    if (idx < 0) {
      translatable = false;  // valuation must land in upsets
      break;
    }
    av.atoms[name] = idx;
  }
  if (!translatable)
    return EvalError{EvalError::LanguageMode, "valuation image is not an upset"};
  auto alg = eval_algebraic(ua.algebra, av, s);
  if (alg.ok() && alg.value() != res.holds)
    throw ValidationError("InternalInconsistency",
                          "pointwise forcing disagrees with the upset algebra");
  return res;
}

Result<bool, EvalError> eval_topological(const FinitePoset& p,
                                         const std::vector<int>& pi,
                                         const std::map<std::string, Mask>& valuation,
                                         const Sequent& s) {
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.leq(x, y) && !p.leq(pi[x], pi[y]))
        throw ValidationError("NotMonotone", "pi must be order-preserving");

  UpsetLattice ul = upset_lattice(p);
  const int m = ul.lattice.size();
  NablaAlgebra alg;
  alg.lattice = ul.lattice;
  alg.nabla.resize(m);
  for (int i = 0; i < m; ++i) {
    Mask pre = 0;  // pi^-1 of the open
    for (int x = 0; x < p.n; ++x)
      if (mask_has(ul.upset_of[i], pi[x])) pre |= Mask{1} << x;
    int idx = ul.index_of(pre);
    if (idx < 0)
      throw ValidationError("InternalInconsistency", "preimage not an upset");
    alg.nabla[i] = idx;
  }
  // arrow(U, V) = pi_*(U => V) with pi_* the right adjoint of the preimage,
  // computed by brute force as the union of all opens whose preimage fits
  auto hey = try_heyting_implication(ul.lattice);
  if (!hey.ok())
    throw ValidationError("InternalInconsistency", "upset lattice not Heyting");
  alg.arrow.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Mask target = ul.upset_of[hey.value()[i][j]];
      Mask best = 0;
      for (int k = 0; k < m; ++k) {
        Mask pre = 0;
        for (int x = 0; x < p.n; ++x)
          if (mask_has(ul.upset_of[k], pi[x])) pre |= Mask{1} << x;
        if (mask_subset(pre, target)) best |= ul.upset_of[k];
      }
      int idx = ul.index_of(best);
      if (idx < 0)
        throw ValidationError("InternalInconsistency", "adjoint not an upset");
      alg.arrow[i][j] = idx;
    }
  auto adj = verify_nabla_algebra(alg);
  if (!adj.ok)
    throw ValidationError("InternalInconsistency",
                          "dynamic-system algebra fails the adjunction");

  Valuation av;
  for (const auto& [name, mask] : valuation) {
    int idx = ul.index_of(mask);
    if (idx < 0) return EvalError{EvalError::LanguageMode, "valuation not open"};
    av.atoms[name] = idx;
  }
  auto res = eval_algebraic(alg, av, s);
  if (!res.ok()) return res;

  // must agree with the Kripke evaluation on the induced normal frame
  std::vector<Mask> rows(p.n, 0);
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.leq(x, pi[y])) rows[x] |= Mask{1} << y;
  auto frame = validate_frame_masks(p, rows);
  if (!frame.ok())
    throw ValidationError("InternalInconsistency",
                          "induced frame is not compatible");
  auto kr = eval_kripke(frame.value(), valuation, s);
  if (kr.ok() && kr.value().holds != res.value())
    throw ValidationError("InternalInconsistency",
                          "topological and Kripke evaluations disagree");
  return res;
}

VarietySet required_tags(const RuleSet& rs) {
  VarietySet tags;
  if (rs.d) tags.insert(Variety::D);
  if (rs.n) tags.insert(Variety::N);
  if (rs.r) tags.insert(Variety::R);
  if (rs.l) tags.insert(Variety::L);
  if (rs.fa) tags.insert(Variety::Fa);
  if (rs.fu) tags.insert(Variety::Fu);
  if (rs.h) tags.insert(Variety::H);
  return tags;
}

std::optional<Countermodel> countermodel_search(
    const Sequent& s, const RuleSet& rs,
    const std::vector<ModelEntry>& catalog) {
  VarietySet need = required_tags(rs);
  auto atoms = s.atoms();
  const bool needs_sup = s.uses_sup();

  for (std::size_t ci = 0; ci < catalog.size(); ++ci) {
    const auto& entry = catalog[ci];
    if (!need.subset_of(entry.tags)) continue;
    if (needs_sup && !entry.tags.has(Variety::H)) continue;
    AlgebraicEvaluator ev(entry.algebra);
    const int n = entry.algebra.size();
    if (n == 0) continue;

    std::vector<int> assignment(atoms.size(), 0);
    while (true) {
      Valuation v;
      for (std::size_t i = 0; i < atoms.size(); ++i) v.atoms[atoms[i]] = assignment[i];
      auto res = ev.holds(s, v);
      if (res.ok() && !res.value()) return Countermodel{ci, entry.algebra, v};
      // next assignment, first atom most significant
      int i = static_cast<int>(atoms.size()) - 1;
      while (i >= 0 && assignment[i] == n - 1) assignment[i--] = 0;
      if (i < 0) break;
      ++assignment[i];
    }
  }
  return std::nullopt;
}

EquivalenceReport axiom_rule_equivalence_suite(const RuleSet& rs, int depth) {
  EquivalenceReport rep;
  auto parse = [](const std::string& text) {
    auto s = parse_sequent(text);
    if (!s.ok()) throw ValidationError("SyntaxError", s.error().describe());
    return s.value();
  };
  auto run_axioms = [&](const char* tag, RuleSet sys,
                        const std::vector<std::string>& axioms) {
    for (const auto& ax : axioms) {
      EquivalenceDirection dir;
      dir.name = std::string(tag) + ": rule derives axiom " + ax;
      auto res = prove_bounded(parse(ax), sys, depth);
      if (res.status == SearchStatus::Proved) {
        auto v = check_proof(*res.proof, sys);
        dir.ok = v.ok;
        dir.detail = v.ok ? "proved" : "searcher emitted a bad tree: " + v.reason;
      } else {
        dir.ok = false;
        dir.detail = res.status == SearchStatus::BoundExceeded
                         ? "bound exceeded"
                         : "not provable within the pool";
      }
      rep.all_ok &= dir.ok;
      rep.directions.push_back(std::move(dir));
    }
  };
  auto run_fixture = [&](const char* tag, const std::string& fixture) {
    const auto& f = fixture_by_name(fixture);
    EquivalenceDirection dir;
    dir.name = std::string(tag) + ": axiom derives rule (" + fixture + ")";
    auto v = check_proof(f.tree, f.rules, f.assumptions);
    dir.ok = v.ok;
    dir.detail = v.ok ? "replayed" : v.reason;
    rep.all_ok &= dir.ok;
    rep.directions.push_back(std::move(dir));
  };

  if (rs.d) {
    RuleSet sys;
    sys.d = true;
    run_axioms("D", sys,
               {"a & (b | c) => (a & b) | (a & c)",
                "(a & b) | (a & c) => a & (b | c)"});
    run_fixture("D", "d_rule_from_axiom");
  }
  if (rs.n) {
    RuleSet sys;
    sys.n = true;
    run_axioms("N", sys,
               {"na (a & b) => na a & na b", "na a & na b => na (a & b)",
                "na T => T", "T => na T"});
    run_fixture("N", "n_rule_from_axiom");
    run_fixture("N", "n_rule_empty_from_axiom");
  }
  if (rs.r) {
    RuleSet sys;
    sys.r = true;
    run_axioms("R", sys, {"a => na a"});
    run_fixture("R", "r_rule_from_axiom");
  }
  if (rs.l) {
    RuleSet sys;
    sys.l = true;
    run_axioms("L", sys, {"na a => a"});
    run_fixture("L", "l_rule_from_axiom");
  }
  if (rs.fa) {
    RuleSet sys;
    sys.fa = true;
    run_axioms("Fa", sys, {"a => na (T -> a)", "na (T -> a) => a"});
    run_fixture("Fa", "fa_rule_from_axiom");
  }
  if (rs.fu) {
    RuleSet sys;
    sys.fu = true;
    run_axioms("Fu", sys, {"a => T -> na a", "T -> na a => a"});
    run_fixture("Fu", "fu_claim_from_axiom");
    run_fixture("Fu", "fu_rule_from_axiom");
  }
  return rep;
}

}  // namespace nabla
