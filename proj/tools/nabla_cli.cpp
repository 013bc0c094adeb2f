// Batch front end: validation, dualization, completion, spectra, proving,
// countermodels, catalog generation and DOT export. JSON on stdout, a short
// human summary on stderr. Exit codes: 0 pass, 2 violation, 1 I/O or parse
// error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "nabla/catalog.hpp"
#include "nabla/json_io.hpp"
#include "nabla/version.hpp"

namespace fs = std::filesystem;
using nabla::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitViolation = 2;

Json with_header(Json j) {
  j["tool"] = "nablalab";
  j["version"] = nabla::kVersion;
  return j;
}

void emit(const Json& j) { std::cout << with_header(j).dump(2) << "\n"; }

int fail_parse(const std::string& msg) {
  Json j;
  j["status"] = "error";
  j["error"] = msg;
  emit(j);
  std::cerr << "error: " << msg << "\n";
  return kExitParse;
}

int fail_violation(const std::string& msg, Json extra = Json::object()) {
  Json j = std::move(extra);
  j["status"] = "violation";
  j["violation"] = msg;
  emit(j);
  std::cerr << "violation: " << msg << "\n";
  return kExitViolation;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nabla::ValidationError("Io", "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

std::string tags_string(const nabla::NablaAlgebra& alg) {
  return nabla::classify(alg).tags.to_string();
}

int cmd_check(const std::string& path, const std::string& kind) {
  Json doc = read_json_file(path);
  Json out;
  out["kind"] = kind;
  if (kind == "lattice") {
    auto l = nabla::lattice_from_json(doc);
    if (!l.ok()) return fail_violation(l.error());
    out["status"] = "ok";
    out["distributive"] = nabla::is_distributive(l.value()).distributive;
    auto hey = nabla::try_heyting_implication(l.value());
    out["heyting"] = hey.ok();
    out["size"] = l.value().size();
  } else if (kind == "algebra") {
    auto a = nabla::algebra_from_json(doc);
    if (!a.ok()) return fail_violation(a.error());
    auto rep = nabla::verify_nabla_algebra(a.value());
    if (!rep.ok) return fail_violation(rep.describe());
    out["status"] = "ok";
    out["tags"] = tags_string(a.value());
  } else if (kind == "frame") {
    auto f = nabla::frame_from_json(doc);
    if (!f.ok()) return fail_violation(f.error());
    auto conds = nabla::frame_conditions(f.value());
    out["status"] = "ok";
    out["tags"] = conds.tags.to_string();
    if (conds.witness) out["normality_witness"] = *conds.witness;
  } else if (kind == "space") {
    auto s = nabla::space_from_json(doc);
    if (!s.ok()) return fail_violation(s.error());
    auto rep = nabla::spectral_check(s.value());
    if (!rep.ok) return fail_violation(rep.describe());
    out["status"] = "ok";
    out["spectral"] = true;
  } else if (kind == "ring") {
    auto r = nabla::ring_from_json(doc);
    if (!r.ok()) return fail_violation(r.error());
    out["status"] = "ok";
    out["size"] = r.value().n;
    out["primes"] = static_cast<int>(nabla::prime_ideals(r.value()).size());
  } else {
    return fail_parse("unknown kind '" + kind + "'");
  }
  emit(out);
  std::cerr << "ok\n";
  return kExitOk;
}

int cmd_dualize(const std::string& path, const std::string& direction) {
  Json doc = read_json_file(path);
  Json out;
  if (direction == "to-space") {
    auto a = nabla::algebra_from_json(doc);
    if (!a.ok()) return fail_violation(a.error());
    auto fs_res = nabla::s_functor(a.value());
    if (!fs_res.ok()) return fail_violation("NotDistributive");
    auto alpha = nabla::alpha_check(a.value());
    out["status"] = alpha.ok() && alpha.value().ok ? "ok" : "violation";
    out["dual"] = nabla::frame_to_json(fs_res.value().space.frame);
    if (alpha.ok()) {
      out["alpha_ok"] = alpha.value().ok;
      out["alpha_map"] = alpha.value().map;
      if (!alpha.value().ok) return fail_violation(alpha.value().failure, out);
    }
    emit(out);
    std::cerr << "dualized to a space\n";
    return kExitOk;
  }
  if (direction == "to-algebra") {
    auto f = nabla::frame_from_json(doc);
    if (!f.ok()) return fail_violation(f.error());
    nabla::NablaSpace sp{f.value()};
    auto ua = nabla::a_functor(sp);
    auto beta = nabla::beta_check(sp);
    out["dual"] = nabla::algebra_to_json(ua.algebra);
    out["beta_ok"] = beta.ok;
    out["beta_map"] = beta.map;
    if (!beta.ok) return fail_violation(beta.failure, out);
    out["status"] = "ok";
    emit(out);
    std::cerr << "dualized to an algebra\n";
    return kExitOk;
  }
  return fail_parse("direction must be to-space or to-algebra");
}

int cmd_complete(const std::string& path) {
  Json doc = read_json_file(path);
  auto a = nabla::algebra_from_json(doc);
  if (!a.ok()) return fail_violation(a.error());
  auto rep = nabla::verify_nabla_algebra(a.value());
  if (!rep.ok) return fail_violation(rep.describe());
  auto comp = nabla::dm_completion(a.value());
  auto mor = nabla::check_nabla_morphism(a.value(), comp.completed, comp.embedding);
  Json out;
  out["status"] = mor.ok ? "ok" : "violation";
  out["completion"] = nabla::algebra_to_json(comp.completed);
  out["embedding"] = comp.embedding.map;
  out["tags_before"] = tags_string(a.value());
  out["tags_after"] = tags_string(comp.completed);
  if (!mor.ok) return fail_violation(mor.witness, out);
  emit(out);
  std::cerr << "completed\n";
  return kExitOk;
}

int cmd_spec(const std::string& path) {
  Json doc = read_json_file(path);
  auto r = nabla::ring_from_json(doc);
  if (!r.ok()) return fail_violation(r.error());
  auto sp = nabla::spec_space(r.value());
  auto ri = nabla::radical_ideal_lattice(r.value());
  auto iu = nabla::iu_maps(r.value(), sp, ri);
  Json out;
  out["status"] = "ok";
  out["spectrum"] = nabla::space_to_json(sp.space);
  Json primes = Json::array();
  for (const auto& p : sp.prime_of) primes.push_back(p.elements());
  out["prime_ideals"] = primes;
  out["radical_ideal_lattice"] = nabla::lattice_to_json(ri.lattice);
  Json ideals = Json::array();
  for (const auto& i : ri.ideal_of) ideals.push_back(i.elements());
  out["radical_ideals"] = ideals;
  out["iu"] = Json{{"i_of_open", iu.i_of_open}, {"u_of_radical", iu.u_of_radical}};
  emit(out);
  std::cerr << "spectrum computed\n";
  return kExitOk;
}

int cmd_prove(const std::string& sequent_text, const std::string& rules,
              int depth) {
  auto rs = nabla::RuleSet::from_string(rules);
  if (!rs.ok()) return fail_parse(rs.error());
  auto seq = nabla::parse_sequent(sequent_text, rs.value().language());
  if (!seq.ok()) return fail_parse(seq.error().describe());
  auto res = nabla::prove_bounded(seq.value(), rs.value(), depth);
  Json out;
  out["sequent"] = seq.value().repr();
  out["rules"] = rs.value().to_string();
  out["depth"] = depth;
  switch (res.status) {
    case nabla::SearchStatus::Proved: {
      out["status"] = "proved";
      out["proof"] = nabla::proof_to_json(*res.proof);
      break;
    }
    case nabla::SearchStatus::NotProvable: out["status"] = "not_provable"; break;
    case nabla::SearchStatus::BoundExceeded: out["status"] = "unknown"; break;
  }
  emit(out);
  std::cerr << out["status"].get<std::string>() << "\n";
  return kExitOk;
}

int cmd_check_proof(const std::string& path, const std::string& rules) {
  auto rs = nabla::RuleSet::from_string(rules);
  if (!rs.ok()) return fail_parse(rs.error());
  Json doc = read_json_file(path);
  std::vector<nabla::Sequent> assumptions;
  nabla::Json tree_doc = doc.contains("tree") ? doc["tree"] : doc;
  if (doc.contains("assumptions"))
    for (const auto& a : doc["assumptions"]) {
      auto s = nabla::parse_sequent(a.get<std::string>(), rs.value().language());
      if (!s.ok()) return fail_parse(s.error().describe());
      assumptions.push_back(s.value());
    }
  auto t = nabla::proof_from_json(tree_doc, rs.value().language());
  if (!t.ok()) return fail_parse(t.error());
  auto v = nabla::check_proof(t.value(), rs.value(), assumptions);
  Json out;
  out["accepted"] = v.ok;
  if (!v.ok) {
    out["path"] = v.path;
    return fail_violation(v.reason, out);
  }
  out["status"] = "ok";
  emit(out);
  std::cerr << "accepted\n";
  return kExitOk;
}

int cmd_countermodel(const std::string& sequent_text, const std::string& rules,
                     int max_size) {
  auto rs = nabla::RuleSet::from_string(rules);
  if (!rs.ok()) return fail_parse(rs.error());
  auto seq = nabla::parse_sequent(sequent_text, rs.value().language());
  if (!seq.ok()) return fail_parse(seq.error().describe());
  auto caps = nabla::CatalogCaps::from_env();
  if (max_size > caps.max_poset)
    return fail_violation("CapExceeded: size above the configured bound");
  auto catalog = nabla::algebra_catalog(max_size);
  auto cm = nabla::countermodel_search(seq.value(), rs.value(), catalog);
  Json out;
  out["sequent"] = seq.value().repr();
  out["rules"] = rs.value().to_string();
  if (cm) {
    out["status"] = "countermodel";
    out["algebra"] = nabla::algebra_to_json(cm->algebra);
    Json v;
    for (const auto& [name, e] : cm->valuation.atoms) v[name] = e;
    out["valuation"] = v;
  } else {
    out["status"] = "none-within-catalog";
  }
  emit(out);
  std::cerr << out["status"].get<std::string>() << "\n";
  return kExitOk;
}

int cmd_catalog(int max_size, const std::string& out_dir) {
  auto caps = nabla::CatalogCaps::from_env();
  if (max_size > caps.max_poset)
    return fail_violation("CapExceeded: size above the configured bound");
  fs::create_directories(out_dir);
  Json manifest;
  long poset_count = 0, lattice_count = 0, algebra_count = 0, frame_count = 0;
  for (int n = 1; n <= max_size; ++n) {
    auto posets = nabla::enumerate_posets(n);
    poset_count += static_cast<long>(posets.size());
    // one lattice file per isomorphism class
    std::vector<std::vector<nabla::Mask>> seen;
    int li = 0;
    for (std::size_t pi = 0; pi < posets.size(); ++pi) {
      auto l = nabla::lattice_from_poset(posets[pi]);
      if (!l.ok()) continue;
      auto key = nabla::canonical_poset_key(posets[pi]);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      ++lattice_count;
      std::string base = "lattice_" + std::to_string(n) + "_" + std::to_string(li++);
      std::ofstream(out_dir + "/" + base + ".json")
          << with_header(nabla::lattice_to_json(l.value())).dump(2) << "\n";
      auto algs = nabla::enumerate_nabla_algebras(l.value());
      algebra_count += static_cast<long>(algs.size());
      for (std::size_t ai = 0; ai < algs.size(); ++ai) {
        std::ofstream(out_dir + "/" + base + "_algebra_" + std::to_string(ai) + ".json")
            << with_header(nabla::algebra_to_json(algs[ai])).dump(2) << "\n";
      }
      if (n <= caps.max_frame_exhaustive) {
        auto frames = nabla::enumerate_frames(posets[pi]);
        frame_count += static_cast<long>(frames.size());
      } else {
        frame_count += static_cast<long>(nabla::structured_frames(posets[pi]).size());
      }
    }
  }
  auto rings = nabla::ring_catalog();
  for (std::size_t i = 0; i < rings.size(); ++i)
    std::ofstream(out_dir + "/ring_" + std::to_string(i) + ".json")
        << with_header(nabla::ring_to_json(rings[i])).dump(2) << "\n";
  manifest["posets"] = poset_count;
  manifest["lattices"] = lattice_count;
  manifest["algebras"] = algebra_count;
  manifest["frames"] = frame_count;
  manifest["rings"] = static_cast<long>(rings.size());
  manifest["max_size"] = max_size;
  std::ofstream(out_dir + "/manifest.json") << with_header(manifest).dump(2) << "\n";
  emit(manifest);
  std::cerr << "catalog written to " << out_dir << "\n";
  return kExitOk;
}

int cmd_export_dot(const std::string& path) {
  Json doc = read_json_file(path);
  auto p = nabla::poset_from_json(doc);
  if (!p.ok()) return fail_violation(p.error());
  std::cout << nabla::export_hasse(p.value(), nabla::labels_from_json(doc));
  std::cerr << "dot written\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nablalab: finite-model checks for nabla-algebras, their "
               "dualities, and the STL calculi"};
  app.require_subcommand(1);

  std::string path, kind = "lattice", direction = "to-space", rules;
  std::string sequent_text, out_dir = "catalog";
  int depth = 8, max_size = 4;

  auto* check = app.add_subcommand("check", "validate and classify a document");
  check->add_option("path", path)->required();
  check->add_option("--kind", kind, "lattice|algebra|frame|space|ring");

  auto* dualize = app.add_subcommand("dualize", "apply the duality functors");
  dualize->add_option("path", path)->required();
  dualize->add_option("--to", direction, "to-space|to-algebra");

  auto* complete = app.add_subcommand("complete", "normal-ideal completion");
  complete->add_option("path", path)->required();

  auto* spec = app.add_subcommand("spec", "ring spectrum and radical ideals");
  spec->add_option("path", path)->required();

  auto* prove = app.add_subcommand("prove", "bounded backward proof search");
  prove->add_option("sequent", sequent_text)->required();
  prove->add_option("--rules", rules, "comma list among D,N,R,L,Fa,Fu,H");
  prove->add_option("--depth", depth);

  auto* chkproof = app.add_subcommand("check-proof", "replay a proof document");
  chkproof->add_option("path", path)->required();
  chkproof->add_option("--rules", rules);

  auto* counter = app.add_subcommand("countermodel", "catalog countermodel sweep");
  counter->add_option("sequent", sequent_text)->required();
  counter->add_option("--rules", rules);
  counter->add_option("--max-size", max_size);

  auto* catalog = app.add_subcommand("catalog", "write enumeration fixtures");
  catalog->add_option("--max-size", max_size);
  catalog->add_option("--out", out_dir);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT syntax");
  dot->add_option("path", path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path, kind);
    if (dualize->parsed()) return cmd_dualize(path, direction);
    if (complete->parsed()) return cmd_complete(path);
    if (spec->parsed()) return cmd_spec(path);
    if (prove->parsed()) return cmd_prove(sequent_text, rules, depth);
    if (chkproof->parsed()) return cmd_check_proof(path, rules);
    if (counter->parsed()) return cmd_countermodel(sequent_text, rules, max_size);
    if (catalog->parsed()) return cmd_catalog(max_size, out_dir);
    if (dot->parsed()) return cmd_export_dot(path);
  } catch (const nabla::ValidationError& e) {
    if (e.code() == "Schema" || e.code() == "Io") return fail_parse(e.what());
    return fail_violation(e.what());
  } catch (const Json::exception& e) {
    return fail_parse(std::string("json: ") + e.what());
  } catch (const std::exception& e) {
    return fail_parse(e.what());
  }
  return kExitParse;
}
