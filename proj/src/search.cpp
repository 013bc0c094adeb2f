#include "nabla/search.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace nabla {

namespace {

std::vector<Formula> sorted_unique(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end(),
                       [](const Formula& a, const Formula& b) { return a == b; }),
           fs.end());
  return fs;
}

Sequent set_sequent(std::vector<Formula> gamma, std::optional<Formula> delta) {
  return Sequent{sorted_unique(std::move(gamma)), std::move(delta)};
}

ProofTree leaf(Rule r, Sequent concl) { return ProofTree{r, std::move(concl), {}}; }

ProofTree node(Rule r, Sequent concl, std::vector<ProofTree> premises) {
  return ProofTree{r, std::move(concl), std::move(premises)};
}

int count_of(const std::vector<Formula>& gamma, const Formula& f) {
  auto [lo, hi] = std::equal_range(gamma.begin(), gamma.end(), f);
  return static_cast<int>(hi - lo);
}

/// Lc/Lw/Rw chain turning the tree's conclusion into `target`. Every formula
/// of the current conclusion must occur in the target (counts may differ);
/// the delta can only be added, never changed.
ProofTree fix_to(ProofTree t, const Sequent& target) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : sorted_unique(t.conclusion.gamma)) {
      int cur = count_of(t.conclusion.gamma, f);
      int want = count_of(target.gamma, f);
      if (cur > want && cur > 1) {
        Sequent c{*multiset_minus(t.conclusion.gamma, {f}), t.conclusion.delta};
        t = node(Rule::Lc, std::move(c), {std::move(t)});
        changed = true;
        break;
      }
    }
  }
  if (!t.conclusion.delta && target.delta) {
    Sequent c{t.conclusion.gamma, target.delta};
    t = node(Rule::Rw, std::move(c), {std::move(t)});
  }
  // weakenings for missing occurrences
  changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : target.gamma) {
      if (count_of(t.conclusion.gamma, f) < count_of(target.gamma, f)) {
        Sequent c{multiset_plus(t.conclusion.gamma, f), t.conclusion.delta};
        t = node(Rule::Lw, std::move(c), {std::move(t)});
        changed = true;
        break;
      }
    }
  }
  assert(t.conclusion == target);
  return t;
}

using Emitter = std::function<ProofTree(std::vector<ProofTree>)>;

struct Move {
  std::vector<Sequent> premises;  // set-sequents to establish
  Emitter emit;                   // builds the multiset tree for the goal
  bool is_cut = false;
};

struct Searcher {
  static constexpr int kMaxCutBudget = 8;

  const RuleSet& rs;
  std::vector<Formula> pool;
  std::map<std::string, ProofTree> proved;
  // failed[budget][s] = remaining depth the failure covers; INT_MAX when the
  // move space was exhausted without hitting the depth bound
  std::map<std::string, int> failed[kMaxCutBudget + 1];
  std::set<std::string> path;
  long expanded = 0;

  bool has(const Sequent& s, const Formula& f) const {
    return std::binary_search(s.gamma.begin(), s.gamma.end(), f);
  }

  std::vector<Move> moves(const Sequent& s, bool allow_cut) const {
    std::vector<Move> out;
    const auto& g = s.gamma;
    const Formula top = Formula::top();
    const Formula bot = Formula::bot();

    auto add = [&](std::vector<Sequent> prem, Emitter e, bool is_cut = false) {
      out.push_back(Move{std::move(prem), std::move(e), is_cut});
    };

    // -- closures: always sufficient alone --
    if (s.delta && has(s, *s.delta)) {
      Formula a = *s.delta;
      Sequent target = s;
      add({}, [a, target](std::vector<ProofTree>) {
        return fix_to(leaf(Rule::Ax, Sequent{{a}, a}), target);
      });
      return out;
    }
    if (has(s, bot)) {
      Sequent target = s;
      add({}, [bot, target](std::vector<ProofTree>) {
        return fix_to(leaf(Rule::LBot, Sequent{{bot}, std::nullopt}), target);
      });
      return out;
    }
    if (s.delta && *s.delta == top) {
      Sequent target = s;
      add({}, [top, target](std::vector<ProofTree>) {
        return fix_to(leaf(Rule::LTop, Sequent{{}, top}), target);
      });
      return out;
    }

    // -- invertible moves: committing to the first one is complete, since the
    // premise set is provable exactly when the goal is --
    if (s.delta && s.delta->kind() == Conn::And) {
      Formula d = *s.delta;
      add({set_sequent(g, d.left()), set_sequent(g, d.right())},
          [s](std::vector<ProofTree> ps) {
            return node(Rule::RAnd, s, std::move(ps));
          });
      return out;
    }
    if (s.delta && s.delta->kind() == Conn::Sup && rs.h) {
      Formula d = *s.delta;
      auto schema = multiset_plus(g, d.left());
      Sequent prem = set_sequent(schema, d.right());
      add({prem}, [s, schema, d](std::vector<ProofTree> ps) {
        ProofTree p = fix_to(std::move(ps[0]), Sequent{schema, d.right()});
        return node(Rule::RSup, s, {std::move(p)});
      });
      return out;
    }
    for (const auto& f : g) {
      if (f.kind() == Conn::And) {
        for (bool first : {true, false}) {
          Formula sub = first ? f.left() : f.right();
          if (has(s, sub)) continue;  // nothing new, would only loop
          auto premset = g;
          premset.push_back(sub);
          Sequent prem = set_sequent(premset, s.delta);
          Sequent target = s;
          Rule rule = first ? Rule::LAnd1 : Rule::LAnd2;
          add({prem}, [rule, f, sub, target](std::vector<ProofTree> ps) {
            auto gamma0 = *multiset_minus(ps[0].conclusion.gamma,
                                          std::vector<Formula>{sub});
            ProofTree p = fix_to(std::move(ps[0]),
                                 Sequent{multiset_plus(gamma0, sub), target.delta});
            Sequent concl{multiset_plus(gamma0, f), target.delta};
            return fix_to(node(rule, std::move(concl), {std::move(p)}), target);
          });
          return out;
        }
      }
      if (f.kind() == Conn::Nabla && rs.l && !has(s, f.left())) {
        auto premset = g;
        premset.push_back(f.left());
        Sequent prem = set_sequent(premset, s.delta);
        Sequent target = s;
        add({prem}, [f, target](std::vector<ProofTree> ps) {
          // Gamma0 keeps the principal copy of f
          auto gamma0 = *multiset_minus(ps[0].conclusion.gamma,
                                        std::vector<Formula>{f.left()});
          ProofTree p = fix_to(std::move(ps[0]),
                               Sequent{multiset_plus(gamma0, f.left()), target.delta});
          Sequent concl{multiset_plus(gamma0, f), target.delta};
          return fix_to(node(Rule::L, std::move(concl), {std::move(p)}), target);
        });
        return out;
      }
      if (f.kind() == Conn::Or && rs.d && !has(s, f.left()) &&
          !has(s, f.right())) {
        auto ps1 = g;
        ps1.push_back(f.left());
        auto ps2 = g;
        ps2.push_back(f.right());
        Sequent prem1 = set_sequent(ps1, s.delta);
        Sequent prem2 = set_sequent(ps2, s.delta);
        Sequent target = s;
        add({prem1, prem2}, [f, target](std::vector<ProofTree> ps) {
          // Gamma0 = full goal context including the principal copy
          ProofTree a = fix_to(std::move(ps[0]),
                               Sequent{multiset_plus(target.gamma, f.left()),
                                       target.delta});
          ProofTree b = fix_to(std::move(ps[1]),
                               Sequent{multiset_plus(target.gamma, f.right()),
                                       target.delta});
          Sequent concl{multiset_plus(target.gamma, f), target.delta};
          return fix_to(node(Rule::D, std::move(concl),
                             {std::move(a), std::move(b)}),
                        target);
        });
        return out;
      }
    }

    // -- remaining right rules --
    if (s.delta) {
      Formula d = *s.delta;
      if (d.kind() == Conn::Or) {
        add({set_sequent(g, d.left())}, [s](std::vector<ProofTree> ps) {
          return node(Rule::ROr1, s, std::move(ps));
        });
        add({set_sequent(g, d.right())}, [s](std::vector<ProofTree> ps) {
          return node(Rule::ROr2, s, std::move(ps));
        });
      }
      if (d.kind() == Conn::To) {
        // premise is na Gamma, A => B
        std::vector<Formula> schema;
        for (const auto& f : g) schema = multiset_plus(schema, Formula::nabla(f));
        schema = multiset_plus(schema, d.left());
        Sequent prem = set_sequent(schema, d.right());
        add({prem}, [s, schema, d](std::vector<ProofTree> ps) {
          ProofTree p = fix_to(std::move(ps[0]), Sequent{schema, d.right()});
          return node(Rule::RTo, s, {std::move(p)});
        });
      }
      if (d.kind() == Conn::Nabla && rs.r) {
        add({set_sequent(g, d.left())}, [s](std::vector<ProofTree> ps) {
          return node(Rule::R, s, std::move(ps));
        });
      }
      if (d.kind() == Conn::Nabla && d.left().kind() == Conn::To && rs.fa) {
        auto schema = multiset_plus(g, d.left().left());
        Sequent prem = set_sequent(schema, d.left().right());
        add({prem}, [s, schema, d](std::vector<ProofTree> ps) {
          ProofTree p = fix_to(std::move(ps[0]), Sequent{schema, d.left().right()});
          return node(Rule::Fa, s, {std::move(p)});
        });
      }
      // plain nabla rule through weakening: na A in Gamma, delta = na B
      if (d.kind() == Conn::Nabla) {
        for (const auto& f : g) {
          if (f.kind() != Conn::Nabla) continue;
          Sequent prem = set_sequent({f.left()}, d.left());
          Sequent target = s;
          add({prem}, [f, d, target](std::vector<ProofTree> ps) {
            ProofTree p = node(Rule::Nabla, Sequent{{f}, d}, {std::move(ps[0])});
            return fix_to(std::move(p), target);
          });
        }
      }
    }

    // N: every left formula nabla-prefixed, right side too (or absent)
    if (rs.n) {
      bool shaped = (!s.delta || s.delta->kind() == Conn::Nabla);
      for (const auto& f : g)
        if (f.kind() != Conn::Nabla) shaped = false;
      if (shaped) {
        std::vector<Formula> strip;
        for (const auto& f : g) strip.push_back(f.left());
        std::optional<Formula> dstrip;
        if (s.delta) dstrip = s.delta->left();
        add({set_sequent(strip, dstrip)}, [s](std::vector<ProofTree> ps) {
          return node(Rule::N, s, std::move(ps));
        });
      }
    }

    // -- left rules --
    for (const auto& f : g) {
      if (f.kind() == Conn::Or) {
        // context-free Lor, usable when the rest of the context is not needed
        Sequent p1 = set_sequent({f.left()}, s.delta);
        Sequent p2 = set_sequent({f.right()}, s.delta);
        Sequent target = s;
        add({p1, p2}, [f, target](std::vector<ProofTree> ps) {
          Sequent concl{{f}, target.delta};
          return fix_to(node(Rule::LOr, std::move(concl),
                             {std::move(ps[0]), std::move(ps[1])}),
                        target);
        });
      }
      if (f.kind() == Conn::Nabla && f.left().kind() == Conn::To) {
        Formula a = f.left().left(), b = f.left().right();
        Sequent prem1 = set_sequent(g, a);
        auto ps2 = g;
        ps2.push_back(b);
        Sequent prem2 = set_sequent(ps2, s.delta);
        Sequent target = s;
        add({prem1, prem2}, [f, a, b, target](std::vector<ProofTree> ps) {
          // schema with Gamma0 = target's gamma (keeps the principal copy)
          ProofTree p1 = fix_to(std::move(ps[0]), Sequent{target.gamma, a});
          ProofTree p2 = fix_to(std::move(ps[1]),
                                Sequent{multiset_plus(target.gamma, b), target.delta});
          Sequent concl{multiset_plus(target.gamma, f), target.delta};
          return fix_to(node(Rule::LTo, std::move(concl),
                             {std::move(p1), std::move(p2)}),
                        target);
        });
      }
      if (f.kind() == Conn::Sup && rs.h) {
        Formula a = f.left(), b = f.right();
        Sequent prem1 = set_sequent(g, a);
        auto ps2 = g;
        ps2.push_back(b);
        Sequent prem2 = set_sequent(ps2, s.delta);
        Sequent target = s;
        add({prem1, prem2}, [f, a, b, target](std::vector<ProofTree> ps) {
          ProofTree p1 = fix_to(std::move(ps[0]), Sequent{target.gamma, a});
          ProofTree p2 = fix_to(std::move(ps[1]),
                                Sequent{multiset_plus(target.gamma, b), target.delta});
          Sequent concl{multiset_plus(target.gamma, f), target.delta};
          return fix_to(node(Rule::LSup, std::move(concl),
                             {std::move(p1), std::move(p2)}),
                        target);
        });
      }
      if (f.kind() == Conn::To && rs.fu) {
        Formula a = f.left(), b = f.right();
        auto rest = *multiset_minus(g, std::vector<Formula>{f});
        std::vector<Formula> nrest;
        for (const auto& x : rest) nrest.push_back(Formula::nabla(x));
        std::optional<Formula> ndelta;
        if (s.delta) ndelta = Formula::nabla(*s.delta);
        Sequent prem1 = set_sequent(nrest, a);
        auto p2set = nrest;
        p2set.push_back(b);
        Sequent prem2 = set_sequent(p2set, ndelta);
        Sequent target = s;
        add({prem1, prem2}, [a, b, rest, ndelta, target](std::vector<ProofTree> ps) {
          std::vector<Formula> nr;
          for (const auto& x : rest) nr = multiset_plus(nr, Formula::nabla(x));
          ProofTree p1 = fix_to(std::move(ps[0]), Sequent{nr, a});
          ProofTree p2 =
              fix_to(std::move(ps[1]), Sequent{multiset_plus(nr, b), ndelta});
          return node(Rule::Fu, target, {std::move(p1), std::move(p2)});
        });
      }
    }

    // -- analytic cut; formulas mentioning the goal's right side first --
    if (allow_cut) {
      std::vector<Formula> ordered = pool;
      if (s.delta) {
        const std::string d_repr = s.delta->repr();
        std::stable_sort(ordered.begin(), ordered.end(),
                         [&](const Formula& x, const Formula& y) {
                           bool xd = x.repr().find(d_repr) != std::string::npos;
                           bool yd = y.repr().find(d_repr) != std::string::npos;
                           return xd > yd;
                         });
      }
      for (const auto& c : ordered) {
        if (s.delta && c == *s.delta) continue;
        Sequent prem1 = set_sequent(g, c);
        auto p2set = g;
        p2set.push_back(c);
        Sequent prem2 = set_sequent(p2set, s.delta);
        Sequent target = s;
        add({prem1, prem2},
            [c, target](std::vector<ProofTree> ps) {
              // cut with Gamma' = Pi = target context
              ProofTree p1 = fix_to(std::move(ps[0]), Sequent{target.gamma, c});
              ProofTree p2 = fix_to(
                  std::move(ps[1]),
                  Sequent{multiset_plus(target.gamma, c), target.delta});
              std::vector<Formula> doubled = target.gamma;
              for (const auto& x : target.gamma)
                doubled = multiset_plus(doubled, x);
              Sequent concl{doubled, target.delta};
              return fix_to(node(Rule::Cut, std::move(concl),
                                 {std::move(p1), std::move(p2)}),
                            target);
            },
            true);
      }
    }

    // -- weakening, last --
    if (s.delta) {
      Sequent prem{g, std::nullopt};
      Sequent target = s;
      add({prem}, [target](std::vector<ProofTree> ps) {
        return node(Rule::Rw, target, {std::move(ps[0])});
      });
    }
    for (const auto& f : g) {
      Sequent prem = set_sequent(*multiset_minus(g, std::vector<Formula>{f}), s.delta);
      Sequent target = s;
      add({prem}, [target](std::vector<ProofTree> ps) {
        return node(Rule::Lw, target, {std::move(ps[0])});
      });
    }

    return out;
  }

  struct Outcome {
    bool proved = false;
    bool cutoff = false;  // some branch hit the depth bound
    bool looped = false;  // some branch was pruned against the current path
  };

  Outcome search(const Sequent& s, int depth, int budget) {
    ++expanded;
    const std::string key = s.repr();
    if (proved.count(key)) return {true, false, false};
    // a failure recorded at a larger budget covers the smaller one
    for (int b = budget; b <= kMaxCutBudget; ++b) {
      auto it = failed[b].find(key);
      if (it == failed[b].end()) continue;
      if (it->second == std::numeric_limits<int>::max())
        return {false, false, false};
      if (it->second >= depth) return {false, true, false};
    }
    if (path.count(key)) return {false, false, true};
    if (depth <= 0) return {false, true, false};

    path.insert(key);
    Outcome agg;
    for (const auto& mv : moves(s, budget > 0)) {
      bool all = true;
      std::vector<ProofTree> trees;
      const int sub_budget = mv.is_cut ? budget - 1 : budget;
      for (const auto& prem : mv.premises) {
        Outcome o = search(prem, depth - 1, sub_budget);
        agg.cutoff |= o.cutoff;
        agg.looped |= o.looped;
        if (!o.proved) {
          all = false;
          break;
        }
        trees.push_back(proved.at(prem.repr()));
      }
      if (all) {
        ProofTree t = mv.emit(std::move(trees));
        assert(t.conclusion == s);
        proved.emplace(key, std::move(t));
        path.erase(key);
        return {true, false, false};
      }
    }
    path.erase(key);
    if (!agg.looped) {
      int val = agg.cutoff ? depth : std::numeric_limits<int>::max();
      auto [it, inserted] = failed[budget].emplace(key, val);
      if (!inserted) it->second = std::max(it->second, val);
    }
    agg.proved = false;
    return agg;
  }
};

}  // namespace

std::vector<Formula> analytic_cut_pool(const Sequent& goal) {
  std::vector<Formula> base;
  for (const auto& f : goal.gamma) f.collect_subformulas(base);
  if (goal.delta) goal.delta->collect_subformulas(base);
  base.push_back(Formula::top());
  base.push_back(Formula::bot());
  base = sorted_unique(std::move(base));

  const Formula top = Formula::top();
  std::vector<Formula> pool = base;
  for (const auto& f : base) {
    Formula nf = Formula::nabla(f);
    pool.push_back(nf);
    pool.push_back(Formula::nabla(nf));
    pool.push_back(Formula::to(top, f));
    pool.push_back(Formula::nabla(Formula::to(top, f)));
    pool.push_back(Formula::to(top, nf));
  }
  return sorted_unique(std::move(pool));
}

SearchResult prove_bounded(const Sequent& goal, const RuleSet& rs, int depth,
                           int cut_budget) {
  if (depth < 1) throw ValidationError("OutOfRange", "depth must be at least 1");
  if (cut_budget < 0 || cut_budget > Searcher::kMaxCutBudget)
    throw ValidationError("OutOfRange", "cut budget out of range");
  Searcher searcher{rs, analytic_cut_pool(goal), {}, {}, {}, 0};

  Sequent start = set_sequent(goal.gamma, goal.delta);
  auto outcome = searcher.search(start, depth, cut_budget);

  SearchResult res;
  res.expanded = searcher.expanded;
  if (outcome.proved) {
    ProofTree t = searcher.proved.at(start.repr());
    // restore duplicate occurrences the set view collapsed
    t = fix_to(std::move(t), goal);
    res.status = SearchStatus::Proved;
    res.proof = std::move(t);
  } else {
    res.status = outcome.cutoff ? SearchStatus::BoundExceeded
                                : SearchStatus::NotProvable;
  }
  return res;
}

}  // namespace nabla
