#include "nabla/json_io.hpp"

namespace nabla {

namespace {

Json matrix_to_json(const std::vector<std::vector<int>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

Json bool_matrix(const std::vector<Mask>& rows, int n) {
  Json out = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(mask_has(rows[a], b) ? 1 : 0);
    out.push_back(row);
  }
  return out;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ValidationError("Schema", std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<std::vector<int>> matrix_field(const Json& j, const char* key, int n) {
  if (!j.contains(key) || !j[key].is_array())
    throw ValidationError("Schema", std::string("missing matrix field '") + key + "'");
  std::vector<std::vector<int>> out;
  for (const auto& row : j[key]) {
    if (!row.is_array())
      throw ValidationError("Schema", std::string("field '") + key + "' must be a matrix");
    std::vector<int> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer())
        throw ValidationError("Schema", std::string("field '") + key + "' must hold integers");
      r.push_back(cell.get<int>());
    }
    out.push_back(std::move(r));
  }
  if (static_cast<int>(out.size()) != n)
    throw ValidationError("Schema", std::string("field '") + key + "' must have n rows");
  return out;
}

}  // namespace

std::vector<std::string> labels_from_json(const Json& j) {
  std::vector<std::string> out;
  if (j.contains("labels") && j["labels"].is_array())
    for (const auto& l : j["labels"]) out.push_back(l.get<std::string>());
  return out;
}

Json poset_to_json(const FinitePoset& p, const std::vector<std::string>& labels) {
  Json j;
  j["n"] = p.n;
  j["leq"] = bool_matrix(p.up, p.n);
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

Json lattice_to_json(const FiniteLattice& l, const std::vector<std::string>& labels) {
  Json j = poset_to_json(l.poset, labels);
  j["meet"] = matrix_to_json(l.meet);
  j["join"] = matrix_to_json(l.join);
  j["bot"] = l.bot;
  j["top"] = l.top;
  return j;
}

Json algebra_to_json(const NablaAlgebra& a, const std::vector<std::string>& labels) {
  Json j = lattice_to_json(a.lattice, labels);
  j["nabla"] = a.nabla;
  j["arrow"] = matrix_to_json(a.arrow);
  if (a.explicit_heyting) j["explicit_heyting"] = true;
  return j;
}

Json frame_to_json(const KripkeFrame& f) {
  Json j = poset_to_json(f.poset);
  j["R"] = bool_matrix(f.r_succ, f.poset.n);
  return j;
}

Json space_to_json(const FiniteSpace& s) {
  Json j;
  j["n"] = s.n;
  Json opens = Json::array();
  for (Mask m : s.opens) {
    Json row = Json::array();
    for (int i = 0; i < s.n; ++i) row.push_back(mask_has(m, i) ? 1 : 0);
    opens.push_back(row);
  }
  j["opens"] = opens;
  return j;
}

Json ring_to_json(const FiniteRing& r) {
  Json j;
  j["n"] = r.n;
  j["add"] = matrix_to_json(r.add);
  j["mul"] = matrix_to_json(r.mul);
  if (!r.labels.empty()) j["labels"] = r.labels;
  return j;
}

Json proof_to_json(const ProofTree& t) {
  Json j;
  j["rule"] = rule_name(t.rule);
  j["sequent"] = t.conclusion.repr();
  Json prem = Json::array();
  for (const auto& p : t.premises) prem.push_back(proof_to_json(p));
  j["premises"] = prem;
  return j;
}

Json fixture_to_json(const ProofFixture& f) {
  Json j;
  j["name"] = f.name;
  j["rules"] = f.rules.to_string();
  Json as = Json::array();
  for (const auto& a : f.assumptions) as.push_back(a.repr());
  j["assumptions"] = as;
  j["tree"] = proof_to_json(f.tree);
  return j;
}

Result<FinitePoset, std::string> poset_from_json(const Json& j) {
  int n = int_field(j, "n");
  auto leq = matrix_field(j, "leq", n);
  auto p = validate_poset(leq);
  if (!p.ok()) return p.error().describe();
  return p.value();
}

Result<FiniteLattice, std::string> lattice_from_json(const Json& j) {
  auto p = poset_from_json(j);
  if (!p.ok()) return p.error();
  auto l = lattice_from_poset(p.value());
  if (!l.ok()) return l.error().describe();
  return l.value();
}

Result<NablaAlgebra, std::string> algebra_from_json(const Json& j) {
  auto l = lattice_from_json(j);
  if (!l.ok()) return l.error();
  const int n = l.value().size();
  if (!j.contains("nabla") || !j["nabla"].is_array())
    throw ValidationError("Schema", "missing array field 'nabla'");
  std::vector<int> nabla;
  for (const auto& x : j["nabla"]) nabla.push_back(x.get<int>());
  if (static_cast<int>(nabla.size()) != n) return std::string("nabla table has wrong arity");
  for (int x : nabla)
    if (x < 0 || x >= n) return std::string("nabla entry out of range");

  NablaAlgebra alg;
  alg.lattice = l.value();
  alg.nabla = std::move(nabla);
  alg.explicit_heyting = j.value("explicit_heyting", false);
  if (j.contains("arrow")) {
    alg.arrow = matrix_field(j, "arrow", n);
    for (const auto& row : alg.arrow) {
      if (static_cast<int>(row.size()) != n)
        return std::string("arrow table has wrong arity");
      for (int x : row)
        if (x < 0 || x >= n) return std::string("arrow entry out of range");
    }
    auto rep = verify_nabla_algebra(alg);
    if (!rep.ok) return rep.describe();
  } else {
    auto arrow = try_residual_from_nabla(alg.lattice, alg.nabla);
    if (!arrow.ok()) return arrow.error().describe();
    alg.arrow = arrow.value();
  }
  if (alg.explicit_heyting) {
    auto hey = try_heyting_implication(alg.lattice);
    if (!hey.ok())
      return std::string("explicit_heyting set but ") + hey.error().describe();
  }
  return alg;
}

Result<KripkeFrame, std::string> frame_from_json(const Json& j) {
  auto p = poset_from_json(j);
  if (!p.ok()) return p.error();
  auto rel = matrix_field(j, "R", p.value().n);
  auto f = validate_frame(p.value(), rel);
  if (!f.ok()) return f.error().describe();
  return f.value();
}

Result<FiniteSpace, std::string> space_from_json(const Json& j) {
  int n = int_field(j, "n");
  if (!j.contains("opens") || !j["opens"].is_array())
    throw ValidationError("Schema", "missing array field 'opens'");
  std::vector<Mask> opens;
  for (const auto& row : j["opens"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ValidationError("Schema", "each open must be a 0/1 vector of length n");
    Mask m = 0;
    for (int i = 0; i < n; ++i)
      if (row[i].get<int>()) m |= Mask{1} << i;
    opens.push_back(m);
  }
  try {
    return make_space(n, std::move(opens));
  } catch (const ValidationError& e) {
    if (e.code() == "NotATopology" || e.code() == "OutOfRange")
      return std::string(e.what());
    throw;
  }
}

Result<FiniteRing, std::string> ring_from_json(const Json& j) {
  int n = int_field(j, "n");
  auto add = matrix_field(j, "add", n);
  auto mul = matrix_field(j, "mul", n);
  try {
    return make_ring(std::move(add), std::move(mul), labels_from_json(j));
  } catch (const ValidationError& e) {
    if (e.code() == "NotARing" || e.code() == "OutOfRange" ||
        e.code() == "NotSquare")
      return std::string(e.what());
    throw;
  }
}

Result<ProofTree, std::string> proof_from_json(const Json& j, LanguageMode mode) {
  if (!j.contains("rule") || !j["rule"].is_string())
    throw ValidationError("Schema", "proof node needs a 'rule' string");
  if (!j.contains("sequent") || !j["sequent"].is_string())
    throw ValidationError("Schema", "proof node needs a 'sequent' string");
  auto rule = rule_from_name(j["rule"].get<std::string>());
  if (!rule) return std::string("UnknownRule: " + j["rule"].get<std::string>());
  auto seq = parse_sequent(j["sequent"].get<std::string>(), mode);
  if (!seq.ok()) return seq.error().describe();
  ProofTree t;
  t.rule = *rule;
  t.conclusion = seq.value();
  if (j.contains("premises")) {
    if (!j["premises"].is_array())
      throw ValidationError("Schema", "'premises' must be an array");
    for (const auto& p : j["premises"]) {
      auto sub = proof_from_json(p, mode);
      if (!sub.ok()) return sub.error();
      t.premises.push_back(sub.value());
    }
  }
  return t;
}

Result<ProofFixture, std::string> fixture_from_json(const Json& j) {
  ProofFixture f;
  f.name = j.value("name", "");
  auto rules = RuleSet::from_string(j.value("rules", ""));
  if (!rules.ok()) return rules.error();
  f.rules = rules.value();
  LanguageMode mode = f.rules.language();
  if (j.contains("assumptions"))
    for (const auto& a : j["assumptions"]) {
      auto s = parse_sequent(a.get<std::string>(), mode);
      if (!s.ok()) return s.error().describe();
      f.assumptions.push_back(s.value());
    }
  if (!j.contains("tree"))
    throw ValidationError("Schema", "fixture needs a 'tree'");
  auto t = proof_from_json(j["tree"], mode);
  if (!t.ok()) return t.error();
  f.tree = t.value();
  return f;
}

}  // namespace nabla
