#include "nabla/proof.hpp"

#include <algorithm>
#include <sstream>

namespace nabla {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "Ax";
    case Rule::LBot: return "Lbot";
    case Rule::LTop: return "Ltop";
    case Rule::Lw: return "Lw";
    case Rule::Rw: return "Rw";
    case Rule::Lc: return "Lc";
    case Rule::Cut: return "cut";
    case Rule::LAnd1: return "Land1";
    case Rule::LAnd2: return "Land2";
    case Rule::RAnd: return "Rand";
    case Rule::LOr: return "Lor";
    case Rule::ROr1: return "Ror1";
    case Rule::ROr2: return "Ror2";
    case Rule::Nabla: return "nabla";
    case Rule::LTo: return "Lto";
    case Rule::RTo: return "Rto";
    case Rule::R: return "R";
    case Rule::L: return "L";
    case Rule::D: return "D";
    case Rule::N: return "N";
    case Rule::Fa: return "Fa";
    case Rule::Fu: return "Fu";
    case Rule::LSup: return "Lsup";
    case Rule::RSup: return "Rsup";
    case Rule::Hyp: return "hyp";
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  for (Rule r : {Rule::Ax, Rule::LBot, Rule::LTop, Rule::Lw, Rule::Rw, Rule::Lc,
                 Rule::Cut, Rule::LAnd1, Rule::LAnd2, Rule::RAnd, Rule::LOr,
                 Rule::ROr1, Rule::ROr2, Rule::Nabla, Rule::LTo, Rule::RTo,
                 Rule::R, Rule::L, Rule::D, Rule::N, Rule::Fa, Rule::Fu,
                 Rule::LSup, Rule::RSup, Rule::Hyp})
    if (name == rule_name(r)) return r;
  return std::nullopt;
}

bool RuleSet::allows(Rule rule) const {
  switch (rule) {
    case Rule::R: return r;
    case Rule::L: return l;
    case Rule::D: return d;
    case Rule::N: return n;
    case Rule::Fa: return fa;
    case Rule::Fu: return fu;
    case Rule::LSup:
    case Rule::RSup: return h;
    default: return true;
  }
}

std::string RuleSet::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(d, "D");
  add(h, "H");
  add(n, "N");
  add(r, "R");
  add(l, "L");
  add(fa, "Fa");
  add(fu, "Fu");
  return out;
}

Result<RuleSet, std::string> RuleSet::from_string(const std::string& text) {
  RuleSet rs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    // trim
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (!tok.empty()) {
      if (tok == "D") rs.d = true;
      else if (tok == "N") rs.n = true;
      else if (tok == "R") rs.r = true;
      else if (tok == "L") rs.l = true;
      else if (tok == "Fa") rs.fa = true;
      else if (tok == "Fu") rs.fu = true;
      else if (tok == "H") rs.h = true;
      else return std::string("unknown rule tag '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return rs;
}

int ProofTree::depth() const {
  int d = 0;
  for (const auto& p : premises) d = std::max(d, p.depth());
  return d + 1;
}

int ProofTree::nodes() const {
  int n = 1;
  for (const auto& p : premises) n += p.nodes();
  return n;
}

std::optional<std::vector<Formula>> multiset_minus(
    const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out;
  std::size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j < b.size() && a[i] == b[j]) {
      ++i;
      ++j;
    } else if (j < b.size() && b[j] < a[i]) {
      return std::nullopt;  // b has a formula a lacks
    } else {
      out.push_back(a[i++]);
    }
  }
  if (j != b.size()) return std::nullopt;
  return out;
}

std::vector<Formula> multiset_plus(const std::vector<Formula>& a,
                                   const Formula& extra) {
  std::vector<Formula> out = a;
  out.insert(std::upper_bound(out.begin(), out.end(), extra), extra);
  return out;
}

namespace {

bool same_delta(const Sequent& a, const Sequent& b) {
  if (a.delta.has_value() != b.delta.has_value()) return false;
  return !a.delta || *a.delta == *b.delta;
}

// conclusion.gamma minus one occurrence of `principal`, if present
std::optional<std::vector<Formula>> gamma_without(const Sequent& s,
                                                  const Formula& principal) {
  return multiset_minus(s.gamma, {principal});
}

struct NodeCheck {
  const Sequent& conclusion;
  const std::vector<ProofTree>& premises;
  const RuleSet& rs;
  const std::vector<Sequent>& assumptions;

  std::optional<std::string> run(Rule rule) const {
    switch (rule) {
      case Rule::Hyp: return hyp();
      case Rule::Ax: return ax();
      case Rule::LBot: return axiom_shape(Formula::bot());
      case Rule::LTop: return ltop();
      case Rule::Lw: return lw();
      case Rule::Rw: return rw();
      case Rule::Lc: return lc();
      case Rule::Cut: return cut();
      case Rule::LAnd1: return land(true);
      case Rule::LAnd2: return land(false);
      case Rule::RAnd: return rand();
      case Rule::LOr: return lor();
      case Rule::ROr1: return ror(true);
      case Rule::ROr2: return ror(false);
      case Rule::Nabla: return nabla_rule();
      case Rule::LTo: return lto(Conn::To, true);
      case Rule::RTo: return rto();
      case Rule::R: return r_rule();
      case Rule::L: return l_rule();
      case Rule::D: return d_rule();
      case Rule::N: return n_rule();
      case Rule::Fa: return fa_rule();
      case Rule::Fu: return fu_rule();
      case Rule::LSup: return lto(Conn::Sup, false);
      case Rule::RSup: return rsup();
    }
    return "UnknownRule";
  }

  std::optional<std::string> arity(std::size_t k) const {
    if (premises.size() != k)
      return "SchemaMismatch: expected " + std::to_string(k) + " premises";
    return std::nullopt;
  }

  std::optional<std::string> hyp() const {
    if (auto e = arity(0)) return e;
    for (const auto& a : assumptions)
      if (a == conclusion) return std::nullopt;
    return "SchemaMismatch: leaf does not match any assumption";
  }

  std::optional<std::string> ax() const {
    if (auto e = arity(0)) return e;
    if (conclusion.gamma.size() != 1 || !conclusion.delta ||
        !(conclusion.gamma[0] == *conclusion.delta))
      return "SchemaMismatch: axiom must be A => A";
    return std::nullopt;
  }

  std::optional<std::string> axiom_shape(const Formula& f) const {
    if (auto e = arity(0)) return e;
    if (conclusion.gamma.size() != 1 || !(conclusion.gamma[0] == f) ||
        conclusion.delta)
      return "SchemaMismatch: conclusion must be F =>";
    return std::nullopt;
  }

  std::optional<std::string> ltop() const {
    if (auto e = arity(0)) return e;
    if (!conclusion.gamma.empty() || !conclusion.delta ||
        !(*conclusion.delta == Formula::top()))
      return "SchemaMismatch: conclusion must be => T";
    return std::nullopt;
  }

  std::optional<std::string> lw() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!same_delta(p, conclusion))
      return "SchemaMismatch: weakening must not change the right side";
    auto diff = multiset_minus(conclusion.gamma, p.gamma);
    if (!diff || diff->size() != 1)
      return "SchemaMismatch: left weakening must add exactly one formula";
    return std::nullopt;
  }

  std::optional<std::string> rw() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (p.delta) return "SchemaMismatch: premise of Rw must have empty right side";
    if (!conclusion.delta)
      return "SchemaMismatch: conclusion of Rw must have a right side";
    if (!(p.gamma == conclusion.gamma))
      return "SchemaMismatch: Rw must keep the left side";
    return std::nullopt;
  }

  std::optional<std::string> lc() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!same_delta(p, conclusion))
      return "SchemaMismatch: contraction must not change the right side";
    auto diff = multiset_minus(p.gamma, conclusion.gamma);
    if (!diff || diff->size() != 1)
      return "SchemaMismatch: contraction removes exactly one formula";
    // the removed formula must still occur in the conclusion
    const Formula& removed = (*diff)[0];
    if (!std::binary_search(conclusion.gamma.begin(), conclusion.gamma.end(), removed))
      return "SchemaMismatch: contracted formula must remain present";
    return std::nullopt;
  }

  std::optional<std::string> cut() const {
    if (auto e = arity(2)) return e;
    const auto& p1 = premises[0].conclusion;  // Gamma => A
    const auto& p2 = premises[1].conclusion;  // Pi, A => Delta
    if (!p1.delta) return "SchemaMismatch: first premise of cut needs a formula";
    if (!same_delta(p2, conclusion))
      return "SchemaMismatch: cut keeps the right side of the second premise";
    auto pi = gamma_without(p2, *p1.delta);
    if (!pi) return "SchemaMismatch: cut formula missing in the second premise";
    std::vector<Formula> expected = *pi;
    for (const auto& g : p1.gamma) expected = multiset_plus(expected, g);
    if (!(expected == conclusion.gamma))
      return "SchemaMismatch: cut conclusion context mismatch";
    return std::nullopt;
  }

  std::optional<std::string> land(bool first) const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!same_delta(p, conclusion))
      return "SchemaMismatch: rule must keep the right side";
    // find an occurrence A /\ B in the conclusion whose replacement by A
    // (resp. B) yields the premise
    for (const auto& f : conclusion.gamma) {
      if (f.kind() != Conn::And) continue;
      auto rest = gamma_without(conclusion, f);
      auto expected = multiset_plus(*rest, first ? f.left() : f.right());
      if (expected == p.gamma) return std::nullopt;
    }
    return "SchemaMismatch: no conjunction matches the premise";
  }

  std::optional<std::string> rand() const {
    if (auto e = arity(2)) return e;
    if (!conclusion.delta || conclusion.delta->kind() != Conn::And)
      return "SchemaMismatch: conclusion must end in a conjunction";
    const auto& p1 = premises[0].conclusion;
    const auto& p2 = premises[1].conclusion;
    if (!(p1.gamma == conclusion.gamma) || !(p2.gamma == conclusion.gamma))
      return "SchemaMismatch: both premises share the conclusion context";
    if (!p1.delta || !p2.delta || !(*p1.delta == conclusion.delta->left()) ||
        !(*p2.delta == conclusion.delta->right()))
      return "SchemaMismatch: premises must prove the two conjuncts";
    return std::nullopt;
  }

  std::optional<std::string> lor() const {
    if (auto e = arity(2)) return e;
    // context-free: A => Delta | B => Delta / A \/ B => Delta
    if (conclusion.gamma.size() != 1 || conclusion.gamma[0].kind() != Conn::Or)
      return "SchemaMismatch: conclusion of Lor is a single disjunction";
    const auto& p1 = premises[0].conclusion;
    const auto& p2 = premises[1].conclusion;
    if (!same_delta(p1, conclusion) || !same_delta(p2, conclusion))
      return "SchemaMismatch: premises keep the right side";
    const Formula f = conclusion.gamma[0];
    if (p1.gamma.size() != 1 || !(p1.gamma[0] == f.left()) ||
        p2.gamma.size() != 1 || !(p2.gamma[0] == f.right()))
      return "SchemaMismatch: premises must be the two disjuncts alone";
    return std::nullopt;
  }

  std::optional<std::string> ror(bool first) const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!conclusion.delta || conclusion.delta->kind() != Conn::Or)
      return "SchemaMismatch: conclusion must end in a disjunction";
    if (!(p.gamma == conclusion.gamma))
      return "SchemaMismatch: rule keeps the context";
    Formula want = first ? conclusion.delta->left() : conclusion.delta->right();
    if (!p.delta || !(*p.delta == want))
      return "SchemaMismatch: premise proves the wrong disjunct";
    return std::nullopt;
  }

  std::optional<std::string> nabla_rule() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (conclusion.gamma.size() != 1 || !conclusion.delta ||
        conclusion.gamma[0].kind() != Conn::Nabla ||
        conclusion.delta->kind() != Conn::Nabla)
      return "SchemaMismatch: conclusion must be na A => na B";
    if (p.gamma.size() != 1 || !p.delta ||
        !(p.gamma[0] == conclusion.gamma[0].left()) ||
        !(*p.delta == conclusion.delta->left()))
      return "SchemaMismatch: premise must be A => B";
    return std::nullopt;
  }

  // Lto: Gamma => A | Gamma, B => Delta / Gamma, na(A -> B) => Delta
  // LSup: same shape with principal A > B (no nabla prefix).
  std::optional<std::string> lto(Conn arrow_kind, bool nabla_wrapped) const {
    if (auto e = arity(2)) return e;
    const auto& p1 = premises[0].conclusion;
    const auto& p2 = premises[1].conclusion;
    if (!same_delta(p2, conclusion))
      return "SchemaMismatch: second premise keeps the right side";
    if (!p1.delta) return "SchemaMismatch: first premise needs a formula";
    for (const auto& f : conclusion.gamma) {
      Formula inner = f;
      if (nabla_wrapped) {
        if (f.kind() != Conn::Nabla) continue;
        inner = f.left();
      }
      if (inner.kind() != arrow_kind) continue;
      auto rest = gamma_without(conclusion, f);
      if (!(*p1.delta == inner.left())) continue;
      if (!(p1.gamma == *rest)) continue;
      auto expected = multiset_plus(*rest, inner.right());
      if (expected == p2.gamma) return std::nullopt;
    }
    return "SchemaMismatch: no principal implication matches the premises";
  }

  std::optional<std::string> rto() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!conclusion.delta || conclusion.delta->kind() != Conn::To)
      return "SchemaMismatch: conclusion must end in ->";
    std::vector<Formula> expected;
    for (const auto& g : conclusion.gamma)
      expected = multiset_plus(expected, Formula::nabla(g));
    expected = multiset_plus(expected, conclusion.delta->left());
    if (!(p.gamma == expected))
      return "SchemaMismatch: premise context must be na Gamma, A";
    if (!p.delta || !(*p.delta == conclusion.delta->right()))
      return "SchemaMismatch: premise must prove the conclusion's consequent";
    return std::nullopt;
  }

  std::optional<std::string> rsup() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!conclusion.delta || conclusion.delta->kind() != Conn::Sup)
      return "SchemaMismatch: conclusion must end in >";
    auto expected = multiset_plus(conclusion.gamma, conclusion.delta->left());
    if (!(p.gamma == expected))
      return "SchemaMismatch: premise context must be Gamma, A";
    if (!p.delta || !(*p.delta == conclusion.delta->right()))
      return "SchemaMismatch: premise must prove the conclusion's consequent";
    return std::nullopt;
  }

  std::optional<std::string> r_rule() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!conclusion.delta || conclusion.delta->kind() != Conn::Nabla)
      return "SchemaMismatch: conclusion must end in na A";
    if (!(p.gamma == conclusion.gamma))
      return "SchemaMismatch: rule keeps the context";
    if (!p.delta || !(*p.delta == conclusion.delta->left()))
      return "SchemaMismatch: premise proves A";
    return std::nullopt;
  }

  std::optional<std::string> l_rule() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!same_delta(p, conclusion))
      return "SchemaMismatch: rule keeps the right side";
    for (const auto& f : conclusion.gamma) {
      if (f.kind() != Conn::Nabla) continue;
      auto rest = gamma_without(conclusion, f);
      auto expected = multiset_plus(*rest, f.left());
      if (expected == p.gamma) return std::nullopt;
    }
    return "SchemaMismatch: no na-formula matches the premise";
  }

  std::optional<std::string> d_rule() const {
    if (auto e = arity(2)) return e;
    const auto& p1 = premises[0].conclusion;
    const auto& p2 = premises[1].conclusion;
    if (!same_delta(p1, conclusion) || !same_delta(p2, conclusion))
      return "SchemaMismatch: premises keep the right side";
    for (const auto& f : conclusion.gamma) {
      if (f.kind() != Conn::Or) continue;
      auto rest = gamma_without(conclusion, f);
      auto e1 = multiset_plus(*rest, f.left());
      auto e2 = multiset_plus(*rest, f.right());
      if (e1 == p1.gamma && e2 == p2.gamma) return std::nullopt;
    }
    return "SchemaMismatch: no disjunction matches the premises";
  }

  std::optional<std::string> n_rule() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    std::vector<Formula> expected;
    for (const auto& g : p.gamma) expected = multiset_plus(expected, Formula::nabla(g));
    if (!(expected == conclusion.gamma))
      return "SchemaMismatch: conclusion context must be na Gamma";
    if (p.delta.has_value() != conclusion.delta.has_value())
      return "SchemaMismatch: N prefixes the right side when present";
    if (p.delta && !(*conclusion.delta == Formula::nabla(*p.delta)))
      return "SchemaMismatch: conclusion right side must be na Delta";
    return std::nullopt;
  }

  std::optional<std::string> fa_rule() const {
    if (auto e = arity(1)) return e;
    const auto& p = premises[0].conclusion;
    if (!conclusion.delta || conclusion.delta->kind() != Conn::Nabla ||
        conclusion.delta->left().kind() != Conn::To)
      return "SchemaMismatch: conclusion must end in na (A -> B)";
    Formula a = conclusion.delta->left().left();
    Formula b = conclusion.delta->left().right();
    auto expected = multiset_plus(conclusion.gamma, a);
    if (!(p.gamma == expected))
      return "SchemaMismatch: premise context must be Gamma, A";
    if (!p.delta || !(*p.delta == b))
      return "SchemaMismatch: premise must prove B";
    return std::nullopt;
  }

  std::optional<std::string> fu_rule() const {
    if (auto e = arity(2)) return e;
    const auto& p1 = premises[0].conclusion;  // na Gamma => A
    const auto& p2 = premises[1].conclusion;  // na Gamma, B => na Delta
    if (!p1.delta) return "SchemaMismatch: first premise needs a formula";
    for (const auto& f : conclusion.gamma) {
      if (f.kind() != Conn::To) continue;
      if (!(*p1.delta == f.left())) continue;
      auto rest = gamma_without(conclusion, f);
      std::vector<Formula> nabla_rest;
      for (const auto& g : *rest)
        nabla_rest = multiset_plus(nabla_rest, Formula::nabla(g));
      if (!(p1.gamma == nabla_rest)) continue;
      auto expected2 = multiset_plus(nabla_rest, f.right());
      if (!(p2.gamma == expected2)) continue;
      if (conclusion.delta.has_value() != p2.delta.has_value()) continue;
      if (conclusion.delta && !(*p2.delta == Formula::nabla(*conclusion.delta)))
        continue;
      return std::nullopt;
    }
    return "SchemaMismatch: no principal implication matches the premises";
  }
};

ProofVerdict check_node(const ProofTree& t, const RuleSet& rs,
                        const std::vector<Sequent>& assumptions,
                        const std::string& path) {
  if (!rs.allows(t.rule))
    return {false, path,
            std::string("RuleNotInSet: ") + rule_name(t.rule) +
                " is not available"};
  if (t.conclusion.uses_sup() && !rs.h)
    return {false, path, "LanguageModeError: '>' outside the intuitionistic mode"};
  NodeCheck chk{t.conclusion, t.premises, rs, assumptions};
  if (auto err = chk.run(t.rule))
    return {false, path, *err + " (rule " + rule_name(t.rule) + ")"};
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    auto v = check_node(t.premises[i], rs, assumptions, sub);
    if (!v.ok) return v;
  }
  return {true, "", ""};
}

}  // namespace

ProofVerdict check_proof(const ProofTree& t, const RuleSet& rs,
                         const std::vector<Sequent>& assumptions) {
  return check_node(t, rs, assumptions, "");
}

}  // namespace nabla
