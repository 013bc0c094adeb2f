#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nabla/result.hpp"

namespace nabla {

/// Connectives of the language {/\, \/, ->, T, F, na} and, in the
/// intuitionistic extension, the Heyting implication >.
enum class Conn { Atom, Top, Bot, And, Or, To, Nabla, Sup };

class Formula;

struct FormulaNode {
  Conn kind;
  std::string atom;  // for Conn::Atom
  std::shared_ptr<const FormulaNode> left, right;
  std::string repr;  // canonical ASCII form, also the total order key
};

/// Immutable formula handle. Equality, ordering and hashing go through the
/// canonical printed form, which the parser round-trips.
class Formula {
 public:
  Formula() = default;

  Conn kind() const { return node_->kind; }
  const std::string& atom() const { return node_->atom; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  const std::string& repr() const { return node_->repr; }
  bool valid() const { return node_ != nullptr; }

  bool operator==(const Formula& o) const { return repr() == o.repr(); }
  bool operator<(const Formula& o) const { return repr() < o.repr(); }

  static Formula atom(const std::string& name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula to(Formula a, Formula b);
  static Formula nabla(Formula a);
  static Formula sup(Formula a, Formula b);

  /// Contained anywhere in the tree?
  bool uses_sup() const;
  void collect_atoms(std::vector<std::string>& out) const;
  void collect_subformulas(std::vector<Formula>& out) const;

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  static Formula make(Conn kind, const std::string& atom_name, const Formula& l,
                      const Formula& r);
  std::shared_ptr<const FormulaNode> node_;
};

/// Gamma => Delta with |Delta| <= 1. Gamma is a multiset kept sorted by the
/// canonical formula order.
struct Sequent {
  std::vector<Formula> gamma;
  std::optional<Formula> delta;

  void canonicalize();
  std::string repr() const;
  bool operator==(const Sequent& o) const;
  bool uses_sup() const;
  std::vector<std::string> atoms() const;
};

Sequent make_sequent(std::vector<Formula> gamma, std::optional<Formula> delta);

struct ParseError {
  enum Kind { Syntax, LanguageMode } kind = Syntax;
  std::size_t position = 0;
  std::string message;
  std::string describe() const;
};

enum class LanguageMode { Base, Intuitionistic };

/// ASCII grammar: atoms, T, F, &, |, ->, na and (in the intuitionistic mode)
/// > for the Heyting implication. Precedence na > & > | > arrows, arrows
/// right-associative.
Result<Formula, ParseError> parse_formula(const std::string& text,
                                          LanguageMode mode = LanguageMode::Base);

/// "A, B => C" with an optionally empty left or right side.
Result<Sequent, ParseError> parse_sequent(const std::string& text,
                                          LanguageMode mode = LanguageMode::Base);

}  // namespace nabla
