#include "nabla/fixtures.hpp"

#include <stdexcept>

namespace nabla {

namespace {

Sequent seq(std::vector<Formula> gamma, std::optional<Formula> delta) {
  return make_sequent(std::move(gamma), std::move(delta));
}

ProofTree t(Rule r, Sequent concl, std::vector<ProofTree> prem = {}) {
  return ProofTree{r, std::move(concl), std::move(prem)};
}

// A => A with weakenings is a recurring building block.
ProofTree ax(const Formula& a) { return t(Rule::Ax, seq({a}, a)); }

ProofTree lw(ProofTree sub, const Formula& extra) {
  Sequent c{multiset_plus(sub.conclusion.gamma, extra), sub.conclusion.delta};
  return t(Rule::Lw, std::move(c), {std::move(sub)});
}

// Derives A /\ B => Delta from A, B => Delta.
ProofTree conj_left(const Formula& a, const Formula& b, ProofTree premise) {
  Formula ab = Formula::conj(a, b);
  std::optional<Formula> delta = premise.conclusion.delta;
  // LAnd1 with Gamma0 = {b} gives b, a/\b => Delta
  ProofTree s1 = t(Rule::LAnd1, seq({b, ab}, delta), {std::move(premise)});
  // LAnd2 with Gamma0 = {a/\b} gives a/\b, a/\b => Delta
  ProofTree s2 = t(Rule::LAnd2, seq({ab, ab}, delta), {std::move(s1)});
  return t(Rule::Lc, seq({ab}, delta), {std::move(s2)});
}

std::vector<ProofFixture> build() {
  const Formula T = Formula::top(), F = Formula::bot();
  const Formula p = Formula::atom("p"), q = Formula::atom("q"),
                r = Formula::atom("r"), s = Formula::atom("s"),
                a = Formula::atom("a"), b = Formula::atom("b"),
                d = Formula::atom("d"), e = Formula::atom("e");
  auto na = [](const Formula& x) { return Formula::nabla(x); };
  auto to = [](const Formula& x, const Formula& y) { return Formula::to(x, y); };

  std::vector<ProofFixture> out;

  // na F => F
  {
    ProofTree n1 = t(Rule::LBot, seq({F}, std::nullopt));
    ProofTree n2 = t(Rule::Rw, seq({F}, to(T, F)), {std::move(n1)});
    ProofTree n3 = t(Rule::Nabla, seq({na(F)}, na(to(T, F))), {std::move(n2)});
    ProofTree n6 = t(Rule::LTo, seq({na(to(T, F))}, F),
                     {t(Rule::LTop, seq({}, T)), ax(F)});
    ProofTree n7 = t(Rule::Cut, seq({na(F)}, F), {std::move(n3), std::move(n6)});
    out.push_back({"nabla_bot_bot", RuleSet{}, {}, std::move(n7)});
  }

  // na (p | q) => na p | na q
  {
    Formula C = Formula::disj(na(p), na(q));
    auto branch = [&](const Formula& x, Rule ror) {
      ProofTree a1 = t(ror, seq({na(x)}, C), {ax(na(x))});
      ProofTree a2 = lw(std::move(a1), T);
      return t(Rule::RTo, seq({x}, to(T, C)), {std::move(a2)});
    };
    ProofTree c1 = t(Rule::LOr, seq({Formula::disj(p, q)}, to(T, C)),
                     {branch(p, Rule::ROr1), branch(q, Rule::ROr2)});
    ProofTree c2 = t(Rule::Nabla, seq({na(Formula::disj(p, q))}, na(to(T, C))),
                     {std::move(c1)});
    ProofTree d3 = t(Rule::LTo, seq({na(to(T, C))}, C),
                     {t(Rule::LTop, seq({}, T)), ax(C)});
    ProofTree f = t(Rule::Cut, seq({na(Formula::disj(p, q))}, C),
                    {std::move(c2), std::move(d3)});
    out.push_back({"nabla_or_dist", RuleSet{}, {}, std::move(f)});
  }

  // one-formula reduction instance over STL(N): p, q => p /\ q from the
  // derivable => (p /\ q) -> (p /\ q)
  {
    Formula pq = Formula::conj(p, q);
    ProofTree m2 = t(Rule::RTo, seq({}, to(pq, pq)), {ax(pq)});
    ProofTree m3 = t(Rule::N, seq({}, na(to(pq, pq))), {std::move(m2)});
    ProofTree w5 = t(Rule::RAnd, seq({p, q}, pq), {lw(ax(p), q), lw(ax(q), p)});
    ProofTree x3 = lw(lw(ax(pq), q), p);
    ProofTree m4 = t(Rule::LTo, seq({p, q, na(to(pq, pq))}, pq),
                     {std::move(w5), std::move(x3)});
    ProofTree m5 = t(Rule::Cut, seq({p, q}, pq), {std::move(m3), std::move(m4)});
    RuleSet rs;
    rs.n = true;
    out.push_back({"making_one_formula", rs, {}, std::move(m5)});
  }

  // na (T -> p) => p is derivable in plain STL
  {
    ProofTree f = t(Rule::LTo, seq({na(to(T, p))}, p),
                    {t(Rule::LTop, seq({}, T)), ax(p)});
    out.push_back({"fa_axiom_left", RuleSet{}, {}, std::move(f)});
  }

  // p => na (T -> p) using the Fa rule
  {
    ProofTree f = t(Rule::Fa, seq({p}, na(to(T, p))), {lw(ax(p), T)});
    RuleSet rs;
    rs.fa = true;
    out.push_back({"fa_axiom_right", rs, {}, std::move(f)});
  }

  // p => T -> na p is derivable in plain STL
  {
    ProofTree f = t(Rule::RTo, seq({p}, to(T, na(p))), {lw(ax(na(p)), T)});
    out.push_back({"fu_axiom_left", RuleSet{}, {}, std::move(f)});
  }

  // T -> na p => p using the Fu rule
  {
    ProofTree f = t(Rule::Fu, seq({to(T, na(p))}, p),
                    {t(Rule::LTop, seq({}, T)), ax(na(p))});
    RuleSet rs;
    rs.fu = true;
    out.push_back({"fu_axiom_right", rs, {}, std::move(f)});
  }

  // the Fa rule from its axiom form, over plain STL:
  // from p, q => r conclude p => na (q -> r)
  {
    Sequent a1 = seq({p, q}, r);
    Sequent a2 = seq({p}, na(to(T, p)));
    ProofTree s3 = t(Rule::LTo, seq({na(to(T, p))}, p),
                     {t(Rule::LTop, seq({}, T)), ax(p)});
    ProofTree s4 = t(Rule::Cut, seq({q, na(to(T, p))}, r),
                     {std::move(s3), t(Rule::Hyp, a1)});
    ProofTree s5 = t(Rule::RTo, seq({to(T, p)}, to(q, r)), {std::move(s4)});
    ProofTree s6 = t(Rule::Nabla, seq({na(to(T, p))}, na(to(q, r))), {std::move(s5)});
    ProofTree s7 = t(Rule::Cut, seq({p}, na(to(q, r))),
                     {t(Rule::Hyp, a2), std::move(s6)});
    out.push_back({"fa_rule_from_axiom", RuleSet{}, {a1, a2}, std::move(s7)});
  }

  // the one-formula claim behind the Fu direction: from na p => na q conclude
  // p => q, cutting with Fu-axiom instances
  {
    Sequent a1 = seq({na(p)}, na(q));
    Sequent a2 = seq({p}, to(T, na(p)));
    Sequent a3 = seq({to(T, na(q))}, q);
    ProofTree t2 = t(Rule::LTo, seq({na(to(T, na(p)))}, na(q)),
                     {t(Rule::LTop, seq({}, T)), t(Rule::Hyp, a1)});
    ProofTree t3 = lw(std::move(t2), T);
    ProofTree t4 = t(Rule::RTo, seq({to(T, na(p))}, to(T, na(q))), {std::move(t3)});
    ProofTree t5 = t(Rule::Cut, seq({p}, to(T, na(q))),
                     {t(Rule::Hyp, a2), std::move(t4)});
    ProofTree t6 = t(Rule::Cut, seq({p}, q), {std::move(t5), t(Rule::Hyp, a3)});
    out.push_back({"fu_claim_from_axiom", RuleSet{}, {a1, a2, a3}, std::move(t6)});
  }

  // the Fu rule from its axiom form, over plain STL: from na p => q and
  // na p, r => na s conclude p, q -> r => s
  {
    Sequent a1 = seq({na(p)}, q);
    Sequent a2 = seq({na(p), r}, na(s));
    Sequent a3 = seq({p}, to(T, na(p)));
    Sequent a4 = seq({to(q, r)}, to(T, na(to(q, r))));
    Sequent a5 = seq({to(T, na(s))}, s);
    Formula qr = to(q, r);
    ProofTree u1 = t(Rule::LTo, seq({na(p), na(qr)}, na(s)),
                     {t(Rule::Hyp, a1), t(Rule::Hyp, a2)});
    ProofTree u2 = t(Rule::LTo, seq({na(qr), na(to(T, na(p)))}, na(s)),
                     {lw(t(Rule::LTop, seq({}, T)), na(qr)), std::move(u1)});
    ProofTree u3 =
        t(Rule::LTo, seq({na(to(T, na(p))), na(to(T, na(qr)))}, na(s)),
          {lw(t(Rule::LTop, seq({}, T)), na(to(T, na(p)))), std::move(u2)});
    ProofTree u4 = lw(std::move(u3), T);
    ProofTree u5 = t(Rule::RTo, seq({to(T, na(p)), to(T, na(qr))}, to(T, na(s))),
                     {std::move(u4)});
    ProofTree u6 = t(Rule::Cut, seq({p, to(T, na(qr))}, to(T, na(s))),
                     {t(Rule::Hyp, a3), std::move(u5)});
    ProofTree u7 = t(Rule::Cut, seq({p, qr}, to(T, na(s))),
                     {t(Rule::Hyp, a4), std::move(u6)});
    ProofTree u8 = t(Rule::Cut, seq({p, qr}, s), {std::move(u7), t(Rule::Hyp, a5)});
    out.push_back({"fu_rule_from_axiom", RuleSet{}, {a1, a2, a3, a4, a5},
                   std::move(u8)});
  }

  // the D rule from distributivity, over plain STL
  {
    Sequent a1 = seq({p, a}, d);
    Sequent a2 = seq({p, b}, d);
    Formula ab = Formula::disj(a, b);
    Formula dist_l = Formula::conj(p, ab);
    Formula dist_r = Formula::disj(Formula::conj(p, a), Formula::conj(p, b));
    Sequent a3 = seq({dist_l}, dist_r);
    ProofTree v3 = conj_left(p, a, t(Rule::Hyp, a1));
    ProofTree v6 = conj_left(p, b, t(Rule::Hyp, a2));
    ProofTree v7 = t(Rule::LOr, seq({dist_r}, d), {std::move(v3), std::move(v6)});
    ProofTree v8 = t(Rule::Cut, seq({dist_l}, d),
                     {t(Rule::Hyp, a3), std::move(v7)});
    ProofTree w5 = t(Rule::RAnd, seq({p, ab}, dist_l), {lw(ax(p), ab), lw(ax(ab), p)});
    ProofTree v9 = t(Rule::Cut, seq({p, ab}, d), {std::move(w5), std::move(v8)});
    out.push_back({"d_rule_from_axiom", RuleSet{}, {a1, a2, a3}, std::move(v9)});
  }

  // the N rule from its axiom form, over plain STL
  {
    Sequent a1 = seq({p, q}, d);
    Formula pq = Formula::conj(p, q);
    Sequent a2 = seq({Formula::conj(na(p), na(q))}, na(pq));
    ProofTree y5 = t(Rule::RAnd, seq({na(p), na(q)}, Formula::conj(na(p), na(q))),
                     {lw(ax(na(p)), na(q)), lw(ax(na(q)), na(p))});
    ProofTree y6 = t(Rule::Cut, seq({na(p), na(q)}, na(pq)),
                     {std::move(y5), t(Rule::Hyp, a2)});
    ProofTree z1 = conj_left(p, q, t(Rule::Hyp, a1));
    ProofTree z2 = t(Rule::Nabla, seq({na(pq)}, na(d)), {std::move(z1)});
    ProofTree y7 = t(Rule::Cut, seq({na(p), na(q)}, na(d)),
                     {std::move(y6), std::move(z2)});
    out.push_back({"n_rule_from_axiom", RuleSet{}, {a1, a2}, std::move(y7)});
  }

  // the empty-context N instance from na T <=> T
  {
    Sequent a1 = seq({T}, na(T));
    ProofTree f = t(Rule::Cut, seq({}, na(T)),
                    {t(Rule::LTop, seq({}, T)), t(Rule::Hyp, a1)});
    out.push_back({"n_rule_empty_from_axiom", RuleSet{}, {a1}, std::move(f)});
  }

  // the R rule from a => na a
  {
    Sequent a1 = seq({p}, d);
    Sequent a2 = seq({d}, na(d));
    ProofTree f = t(Rule::Cut, seq({p}, na(d)),
                    {t(Rule::Hyp, a1), t(Rule::Hyp, a2)});
    out.push_back({"r_rule_from_axiom", RuleSet{}, {a1, a2}, std::move(f)});
  }

  // the L rule from na a => a
  {
    Sequent a1 = seq({p, d}, e);
    Sequent a2 = seq({na(d)}, d);
    ProofTree f = t(Rule::Cut, seq({p, na(d)}, e),
                    {t(Rule::Hyp, a2), t(Rule::Hyp, a1)});
    out.push_back({"l_rule_from_axiom", RuleSet{}, {a1, a2}, std::move(f)});
  }

  return out;
}

}  // namespace

std::vector<ProofFixture> standard_fixtures() { return build(); }

const ProofFixture& fixture_by_name(const std::string& name) {
  static const std::vector<ProofFixture> all = build();
  for (const auto& f : all)
    if (f.name == name) return f;
  throw std::out_of_range("no fixture named " + name);
}

}  // namespace nabla
