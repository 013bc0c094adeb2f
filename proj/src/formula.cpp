#include "nabla/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nabla {

namespace {

// Binding strength for printing: how tightly a formula holds together.
int prec(Conn k) {
  switch (k) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot: return 4;
    case Conn::Nabla: return 3;
    case Conn::And: return 2;
    case Conn::Or: return 1;
    case Conn::To:
    case Conn::Sup: return 0;
  }
  return 4;
}

std::string wrap(const Formula& f, int min_prec) {
  if (prec(f.kind()) < min_prec) return "(" + f.repr() + ")";
  return f.repr();
}

}  // namespace

Formula Formula::make(Conn kind, const std::string& atom_name, const Formula& l,
                      const Formula& r) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = kind;
  node->atom = atom_name;
  node->left = l.node_;
  node->right = r.node_;
  switch (kind) {
    case Conn::Atom: node->repr = atom_name; break;
    case Conn::Top: node->repr = "T"; break;
    case Conn::Bot: node->repr = "F"; break;
    case Conn::Nabla: node->repr = "na " + wrap(l, 3); break;
    case Conn::And: node->repr = wrap(l, 2) + " & " + wrap(r, 3); break;
    case Conn::Or: node->repr = wrap(l, 1) + " | " + wrap(r, 2); break;
    case Conn::To: node->repr = wrap(l, 1) + " -> " + wrap(r, 0); break;
    case Conn::Sup: node->repr = wrap(l, 1) + " > " + wrap(r, 0); break;
  }
  return Formula(std::move(node));
}

Formula Formula::atom(const std::string& name) { return make(Conn::Atom, name, {}, {}); }
Formula Formula::top() { return make(Conn::Top, "", {}, {}); }
Formula Formula::bot() { return make(Conn::Bot, "", {}, {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Conn::And, "", a, b); }
Formula Formula::disj(Formula a, Formula b) { return make(Conn::Or, "", a, b); }
Formula Formula::to(Formula a, Formula b) { return make(Conn::To, "", a, b); }
Formula Formula::nabla(Formula a) { return make(Conn::Nabla, "", a, {}); }
Formula Formula::sup(Formula a, Formula b) { return make(Conn::Sup, "", a, b); }

bool Formula::uses_sup() const {
  if (!valid()) return false;
  if (kind() == Conn::Sup) return true;
  bool l = node_->left && Formula(node_->left).uses_sup();
  bool r = node_->right && Formula(node_->right).uses_sup();
  return l || r;
}

void Formula::collect_atoms(std::vector<std::string>& out) const {
  if (!valid()) return;
  if (kind() == Conn::Atom) {
    out.push_back(atom());
    return;
  }
  if (node_->left) Formula(node_->left).collect_atoms(out);
  if (node_->right) Formula(node_->right).collect_atoms(out);
}

void Formula::collect_subformulas(std::vector<Formula>& out) const {
  if (!valid()) return;
  out.push_back(*this);
  if (node_->left) Formula(node_->left).collect_subformulas(out);
  if (node_->right) Formula(node_->right).collect_subformulas(out);
}

void Sequent::canonicalize() { std::sort(gamma.begin(), gamma.end()); }

std::string Sequent::repr() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i) os << ", ";
    os << gamma[i].repr();
  }
  os << (gamma.empty() ? "=>" : " =>");
  if (delta) os << " " << delta->repr();
  return os.str();
}

bool Sequent::operator==(const Sequent& o) const {
  if (gamma.size() != o.gamma.size()) return false;
  if (delta.has_value() != o.delta.has_value()) return false;
  if (delta && !(*delta == *o.delta)) return false;
  return std::equal(gamma.begin(), gamma.end(), o.gamma.begin());
}

bool Sequent::uses_sup() const {
  for (const auto& g : gamma)
    if (g.uses_sup()) return true;
  return delta && delta->uses_sup();
}

std::vector<std::string> Sequent::atoms() const {
  std::vector<std::string> out;
  for (const auto& g : gamma) g.collect_atoms(out);
  if (delta) delta->collect_atoms(out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Sequent make_sequent(std::vector<Formula> gamma, std::optional<Formula> delta) {
  Sequent s{std::move(gamma), std::move(delta)};
  s.canonicalize();
  return s;
}

std::string ParseError::describe() const {
  std::ostringstream os;
  os << (kind == Syntax ? "SyntaxError" : "LanguageModeError") << " at "
     << position << ": " << message;
  return os.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  LanguageMode mode;
  std::optional<ParseError> error;

  void fail(ParseError::Kind kind, std::size_t at, const std::string& msg) {
    if (!error) error = ParseError{kind, at, msg};
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(const std::string& tok) {
    skip_ws();
    return text.compare(pos, tok.size(), tok) == 0;
  }

  bool eat(const std::string& tok) {
    if (!peek(tok)) return false;
    pos += tok.size();
    return true;
  }

  std::optional<std::string> ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size()) return std::nullopt;
    if (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_')
      return std::nullopt;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  Formula formula() {
    Formula lhs = disjunct();
    if (error) return lhs;
    if (peek("->")) {
      eat("->");
      Formula rhs = formula();  // right associative
      if (error) return lhs;
      return Formula::to(lhs, rhs);
    }
    if (peek(">")) {
      std::size_t at = pos;
      eat(">");
      if (mode != LanguageMode::Intuitionistic) {
        fail(ParseError::LanguageMode, at,
             "'>' is only available in the intuitionistic language");
        return lhs;
      }
      Formula rhs = formula();
      if (error) return lhs;
      return Formula::sup(lhs, rhs);
    }
    return lhs;
  }

  Formula disjunct() {
    Formula lhs = conjunct();
    while (!error && peek("|")) {
      eat("|");
      Formula rhs = conjunct();
      if (error) break;
      lhs = Formula::disj(lhs, rhs);
    }
    return lhs;
  }

  Formula conjunct() {
    Formula lhs = unary();
    while (!error && peek("&")) {
      eat("&");
      Formula rhs = unary();
      if (error) break;
      lhs = Formula::conj(lhs, rhs);
    }
    return lhs;
  }

  Formula unary() {
    skip_ws();
    if (eat("(")) {
      Formula inner = formula();
      if (error) return inner;
      if (!eat(")")) fail(ParseError::Syntax, pos, "expected ')'");
      return inner;
    }
    auto name = ident();
    if (!name) {
      fail(ParseError::Syntax, pos, "expected a formula");
      return Formula::bot();
    }
    if (*name == "T") return Formula::top();
    if (*name == "F") return Formula::bot();
    if (*name == "na") {
      Formula inner = unary();
      if (error) return inner;
      return Formula::nabla(inner);
    }
    return Formula::atom(*name);
  }
};

}  // namespace

Result<Formula, ParseError> parse_formula(const std::string& text,
                                          LanguageMode mode) {
  Parser p{text, 0, mode, std::nullopt};
  Formula f = p.formula();
  if (p.error) return *p.error;
  p.skip_ws();
  if (p.pos != text.size())
    return ParseError{ParseError::Syntax, p.pos, "trailing input"};
  return f;
}

Result<Sequent, ParseError> parse_sequent(const std::string& text,
                                          LanguageMode mode) {
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == '=' && text[i + 1] == '>') {
      split = i;
      break;
    }
  if (split == std::string::npos)
    return ParseError{ParseError::Syntax, 0, "expected '=>'"};

  std::vector<Formula> gamma;
  const std::string left = text.substr(0, split);
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] == '(') ++depth;
    if (left[i] == ')') --depth;
    if (left[i] == ',' && depth == 0) {
      parts.emplace_back(start, i);
      start = i + 1;
    }
  }
  parts.emplace_back(start, left.size());
  bool whole_blank = left.find_first_not_of(" \t") == std::string::npos;
  if (!whole_blank) {
    for (auto [b, e] : parts) {
      std::string part = left.substr(b, e - b);
      auto f = parse_formula(part, mode);
      if (!f.ok()) {
        ParseError err = f.error();
        err.position += b;
        return err;
      }
      gamma.push_back(f.value());
    }
  }

  const std::string right = text.substr(split + 2);
  for (std::size_t i = 0; i < right.size(); ++i)
    if (right[i] == ',')
      return ParseError{ParseError::Syntax, split + 2 + i,
                        "at most one formula may follow '=>'"};
  std::optional<Formula> delta;
  if (right.find_first_not_of(" \t") != std::string::npos) {
    auto f = parse_formula(right, mode);
    if (!f.ok()) {
      ParseError err = f.error();
      err.position += split + 2;
      return err;
    }
    delta = f.value();
  }
  return make_sequent(std::move(gamma), std::move(delta));
}

}  // namespace nabla
