// orbicell: finite complexes of groups, group actions on simplicial
// complexes, guided-loop fundamental groups, and covers at desk scale.
// One binary, subcommand style; exit codes: 0 holds, 1 malformed input,
// 2 mathematical check failed, 3 budget exhausted.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbicell/config.hpp"
#include "orbicell/covering.hpp"
#include "orbicell/examples.hpp"
#include "orbicell/gaction.hpp"
#include "orbicell/homotopy.hpp"
#include "orbicell/io.hpp"

using namespace orbicell;

namespace {

constexpr const char* kSchema = "orbicell/1";

struct Cli {
  RunConfig cfg;
  std::string config_file;
  Json report;
  int exit_code = 0;

  void emit(const Json& extra_human_lines) {
    if (cfg.json_output) {
      std::cout << dump_json(report);
    } else {
      for (const Json& line : extra_human_lines) std::cout << line.get<std::string>() << "\n";
    }
  }
};

Json violations_to_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back({{"check", v.check}, {"detail", v.detail}});
  return out;
}

Json cog_violations_to_json(const std::vector<CogViolation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs)
    out.push_back({{"check", v.check}, {"where", v.where}, {"witness", v.witness}});
  return out;
}

std::vector<int> parse_elements(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return out;
}

Subgroup subgroup_from_csv(const FiniteGroup& g, const std::string& csv) {
  return generated_subgroup(g, parse_elements(csv));
}

// A raw simplicial load that skips subset closure, for honest validation.
SimplicialComplex simplicial_from_json_raw(const Json& j) {
  SimplicialComplex s;
  std::set<std::string> vset;
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices")) vset.insert(v.get<std::string>());
  for (const auto& sj : j.at("simplices"))
    for (const auto& v : sj) vset.insert(v.get<std::string>());
  s.vertices.assign(vset.begin(), vset.end());
  std::set<std::vector<int>> simplices;
  for (std::size_t v = 0; v < s.vertices.size(); ++v) simplices.insert({static_cast<int>(v)});
  for (const auto& sj : j.at("simplices")) {
    std::vector<int> idx;
    for (const auto& v : sj) idx.push_back(s.require_vertex(v.get<std::string>()));
    std::sort(idx.begin(), idx.end());
    simplices.insert(idx);
  }
  s.simplices.assign(simplices.begin(), simplices.end());
  std::sort(s.simplices.begin(), s.simplices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return std::make_pair(a.size(), std::cref(a)) < std::make_pair(b.size(), std::cref(b));
            });
  return s;
}

int run_validate(Cli& cli, const std::string& file) {
  Json j = load_json_file(file);
  Json human = Json::array();
  cli.report = {{"schema", kSchema}, {"command", "validate"}, {"file", file}};
  if (j.contains("cells")) {
    bool closure_added = false;
    CellComplex raw = complex_from_json(j, /*close=*/false);
    complex_from_json(j, /*close=*/true, &closure_added);
    ValidationReport r = validate_complex(raw);
    cli.report["kind"] = "complex";
    cli.report["ok"] = r.ok();
    cli.report["closure_needed"] = closure_added;
    cli.report["violations"] = violations_to_json(r.violations);
    human.push_back(std::string("cell complex: ") + (r.ok() ? "OK" : "INVALID"));
    for (const auto& v : r.violations) human.push_back("  " + v.check + ": " + v.detail);
    cli.exit_code = r.ok() ? 0 : 2;
  } else if (j.contains("space")) {
    GComplex gc = gcomplex_from_json(j, cli.cfg.max_group_order);
    ActionReport r = validate_action(gc);
    cli.report["kind"] = "gcomplex";
    cli.report["ok"] = r.ok();
    cli.report["admissible"] = r.admissible;
    cli.report["orbit_regular"] = r.regular;
    cli.report["suggest_subdivision"] = r.suggest_subdivision;
    cli.report["violations"] = violations_to_json(r.violations);
    human.push_back(std::string("group action: ") + (r.ok() ? "OK" : "INVALID"));
    for (const auto& v : r.violations) human.push_back("  " + v.check + ": " + v.detail);
    if (r.ok())
      human.push_back(std::string("  orbit-regular: ") + (r.regular ? "yes" : "no"));
    if (r.suggest_subdivision)
      human.push_back("  hint: barycentric subdivision makes the action admissible");
    cli.exit_code = r.ok() ? 0 : 2;
  } else if (j.contains("cog") && j.contains("attach")) {
    AttachFile af = attach_from_json(j, cli.cfg.max_group_order);
    AttachResult res = attach_cell(af.cog, af.spec);
    cli.report["kind"] = "attach";
    cli.report["ok"] = res.ok;
    cli.report["violations"] = cog_violations_to_json(res.failure.violations);
    human.push_back(std::string("attachment: ") + (res.ok ? "OK" : "REJECTED"));
    for (const auto& v : res.failure.violations)
      human.push_back("  " + v.check + " at " + v.where + (v.witness.empty() ? "" : ": " + v.witness));
    cli.exit_code = res.ok ? 0 : 2;
  } else if (j.contains("cog")) {
    // an extraction report: validate the embedded complex of groups
    ComplexOfGroups c = cog_from_json(j.at("cog"), cli.cfg.max_group_order);
    CogReport r = validate_cog(c);
    cli.report["kind"] = "extraction";
    cli.report["ok"] = r.ok();
    cli.report["violations"] = cog_violations_to_json(r.violations);
    human.push_back(std::string("extracted complex of groups: ") + (r.ok() ? "OK" : "INVALID"));
    for (const auto& v : r.violations)
      human.push_back("  " + v.check + " at " + v.where + (v.witness.empty() ? "" : ": " + v.witness));
    cli.exit_code = r.ok() ? 0 : 2;
  } else if (j.contains("complex")) {
    ComplexOfGroups c = cog_from_json(j, cli.cfg.max_group_order);
    CogReport r = validate_cog(c);
    cli.report["kind"] = "cog";
    cli.report["ok"] = r.ok();
    cli.report["violations"] = cog_violations_to_json(r.violations);
    human.push_back(std::string("complex of groups: ") + (r.ok() ? "OK" : "INVALID"));
    for (const auto& v : r.violations)
      human.push_back("  " + v.check + " at " + v.where + (v.witness.empty() ? "" : ": " + v.witness));
    cli.exit_code = r.ok() ? 0 : 2;
  } else if (j.contains("simplices")) {
    SimplicialComplex raw = simplicial_from_json_raw(j);
    ValidationReport r = validate_simplicial(raw);
    cli.report["kind"] = "simplicial";
    cli.report["ok"] = r.ok();
    cli.report["violations"] = violations_to_json(r.violations);
    human.push_back(std::string("simplicial complex: ") + (r.ok() ? "OK" : "INVALID"));
    for (const auto& v : r.violations) human.push_back("  " + v.check + ": " + v.detail);
    cli.exit_code = r.ok() ? 0 : 2;
  } else if (j.contains("coset_table")) {
    CoverData cd = cover_from_json(j);
    ValidationReport r = validate_cover(cd);
    cli.report["kind"] = "cover";
    cli.report["ok"] = r.ok();
    cli.report["violations"] = violations_to_json(r.violations);
    human.push_back(std::string("cover: ") + (r.ok() ? "OK" : "INVALID"));
    for (const auto& v : r.violations) human.push_back("  " + v.check + ": " + v.detail);
    cli.exit_code = r.ok() ? 0 : 2;
  } else if (j.contains("table") || j.contains("perm_gens")) {
    cli.report["kind"] = "group";
    if (j.contains("table")) {
      std::vector<std::vector<int>> table;
      for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
      auto bad = group_table_violation(table);
      cli.report["ok"] = !bad.has_value();
      cli.report["violations"] = bad ? Json::array({*bad}) : Json::array();
      human.push_back(std::string("group table: ") + (!bad ? "OK" : "INVALID (" + *bad + ")"));
      cli.exit_code = bad ? 2 : 0;
    } else {
      group_from_json(j, cli.cfg.max_group_order);  // throws on failure
      cli.report["ok"] = true;
      cli.report["violations"] = Json::array();
      human.push_back("group table: OK");
    }
  } else {
    fail(ErrorKind::InvalidInput, "unrecognized payload in " + file);
  }
  cli.emit(human);
  return cli.exit_code;
}

int run_equiv(Cli& cli, const std::string& file_a, const std::string& file_b,
              const std::string& witness_file) {
  ComplexOfGroups a = cog_from_json(load_json_file(file_a), cli.cfg.max_group_order);
  ComplexOfGroups b = cog_from_json(load_json_file(file_b), cli.cfg.max_group_order);
  cli.report = {{"schema", kSchema}, {"command", "equiv"}};
  Json human = Json::array();
  if (!witness_file.empty()) {
    Gauge w = gauge_from_json(a, load_json_file(witness_file));
    bool ok = apply_gauge(a, w) == b;
    cli.report["witness_checked"] = true;
    cli.report["ok"] = ok;
    human.push_back(std::string("witness gauge: ") + (ok ? "verifies" : "does not verify"));
    cli.exit_code = ok ? 0 : 2;
    cli.emit(human);
    return cli.exit_code;
  }
  EquivResult res = are_equivalent(a, b, cli.cfg.gauge_budget);
  cli.report["nodes"] = res.nodes;
  switch (res.status) {
    case EquivStatus::Equivalent: {
      cli.report["status"] = "equivalent";
      cli.report["witness"] = gauge_to_json(a, *res.witness);
      human.push_back("equivalent (witness gauge verified by apply_gauge)");
      cli.exit_code = 0;
      break;
    }
    case EquivStatus::Inequivalent:
      cli.report["status"] = "inequivalent";
      human.push_back("inequivalent: the full gauge space was exhausted");
      cli.exit_code = 2;
      break;
    case EquivStatus::Exhausted:
      cli.report["status"] = "exhausted";
      human.push_back("search budget exhausted before a decision");
      cli.exit_code = 3;
      break;
  }
  cli.emit(human);
  return cli.exit_code;
}

int run_skeleton(Cli& cli, const std::string& file, int n, const std::string& out_file) {
  Json j = load_json_file(file);
  Json out;
  if (j.contains("complex")) {
    ComplexOfGroups c = cog_from_json(j, cli.cfg.max_group_order);
    out = cog_to_json(restrict_to_skeleton(c, n));
  } else if (j.contains("cells")) {
    out = complex_to_json(skeleton(complex_from_json(j), n));
  } else if (j.contains("simplices")) {
    out = simplicial_to_json(skeleton(simplicial_from_json(j), n));
  } else {
    fail(ErrorKind::InvalidInput, "skeleton expects a complex, simplicial, or cog file");
  }
  cli.report = {{"schema", kSchema}, {"command", "skeleton"}, {"n", n}, {"result", out}};
  if (!out_file.empty()) {
    save_json_file(out_file, out);
    cli.emit(Json::array({"wrote " + out_file}));
  } else if (cli.cfg.json_output) {
    cli.emit({});
  } else {
    std::cout << dump_json(out);
  }
  return 0;
}

int run_attach(Cli& cli, const std::string& spec_file, const std::string& out_file) {
  AttachFile af = attach_from_json(load_json_file(spec_file), cli.cfg.max_group_order);
  AttachResult res = attach_cell(af.cog, af.spec);
  cli.report = {{"schema", kSchema},
                {"command", "attach"},
                {"ok", res.ok},
                {"violations", cog_violations_to_json(res.failure.violations)}};
  Json human = Json::array();
  if (res.ok) {
    if (!out_file.empty()) {
      save_json_file(out_file, cog_to_json(res.result));
      human.push_back("attached; wrote " + out_file);
    } else {
      cli.report["result"] = cog_to_json(res.result);
      human.push_back("attached: result is a valid complex of groups");
    }
    cli.exit_code = 0;
  } else {
    for (const auto& v : res.failure.violations)
      human.push_back("rejected: " + v.check + " at " + v.where +
                      (v.witness.empty() ? "" : " (" + v.witness + ")"));
    cli.exit_code = 2;
  }
  cli.emit(human);
  return cli.exit_code;
}

Json extraction_to_json(const Extraction& ex) {
  Json transporters = Json::object();
  for (std::size_t a = 0; a < ex.cog.arrows.size(); ++a)
    transporters[ex.cog.arrow_name(static_cast<int>(a))] = ex.transporter[a];
  Json ambient = Json::object();
  for (std::size_t p = 0; p < ex.cog.pairs.size(); ++p)
    ambient[ex.cog.pair_name(static_cast<int>(p))] = ex.twist_ambient[p];
  Json members = Json::object();
  for (std::size_t c = 0; c < ex.cog.base.size(); ++c)
    members[ex.cog.base.cells[c].id] = ex.members[c];
  Json stabilizers = Json::object();
  for (std::size_t c = 0; c < ex.quot.quotient.size(); ++c)
    stabilizers[ex.quot.quotient.cells[c].id] = ex.quot.stabilizers[c].members;
  return Json{{"cog", cog_to_json(ex.cog)},
              {"transporters", transporters},
              {"twist_ambient", ambient},
              {"members", members},
              {"stabilizers", stabilizers}};
}

int run_extract(Cli& cli, const std::string& file, const std::string& out_file) {
  GComplex gc = gcomplex_from_json(load_json_file(file), cli.cfg.max_group_order);
  Extraction ex = extract_cog(gc, cli.cfg.seed);
  Json out = extraction_to_json(ex);
  cli.report = {{"schema", kSchema}, {"command", "extract"}, {"seed", cli.cfg.seed},
                {"result", out}};
  Json human = Json::array();
  human.push_back("extracted complex of groups over " + std::to_string(ex.cog.base.size()) +
                  " quotient cells");
  for (std::size_t c = 0; c < ex.cog.base.size(); ++c)
    human.push_back("  " + ex.cog.base.cells[c].id + ": group of order " +
                    std::to_string(ex.cog.groups[c].order));
  if (!out_file.empty()) {
    save_json_file(out_file, out);
    human.push_back("wrote " + out_file);
  }
  cli.emit(human);
  return 0;
}

int run_quotient(Cli& cli, const std::string& file) {
  GComplex gc = gcomplex_from_json(load_json_file(file), cli.cfg.max_group_order);
  QuotientData q = quotient(gc);
  Json cells = Json::array();
  long long index_sum = 0;
  for (std::size_t c = 0; c < q.quotient.size(); ++c) {
    int index = gc.group.order / static_cast<int>(q.stabilizers[c].members.size());
    index_sum += index;
    cells.push_back({{"id", q.quotient.cells[c].id},
                     {"dim", q.quotient.cells[c].dim},
                     {"stabilizer", q.stabilizers[c].members},
                     {"orbit_size", index}});
  }
  cli.report = {{"schema", kSchema},
                {"command", "quotient"},
                {"quotient", complex_to_json(q.quotient)},
                {"cells", cells},
                {"orbit_count_identity", index_sum == static_cast<long long>(gc.space.size())}};
  Json human = Json::array();
  human.push_back("quotient has " + std::to_string(q.quotient.size()) + " cells; sum of orbit sizes " +
                  std::to_string(index_sum) + " over " + std::to_string(gc.space.size()) +
                  " simplices");
  for (const Json& cj : cells)
    human.push_back("  " + cj.at("id").get<std::string>() + " (dim " +
                    std::to_string(cj.at("dim").get<int>()) + "), stabilizer order " +
                    std::to_string(cj.at("stabilizer").size()));
  cli.emit(human);
  return 0;
}

int run_fixed(Cli& cli, const std::string& file, const std::string& subgroup_csv) {
  GComplex gc = gcomplex_from_json(load_json_file(file), cli.cfg.max_group_order);
  Subgroup h = subgroup_from_csv(gc.group, subgroup_csv);
  SimplicialComplex fixed = fixed_subcomplex(gc, h);
  cli.report = {{"schema", kSchema},
                {"command", "fixed"},
                {"subgroup", h.members},
                {"fixed", simplicial_to_json(fixed)},
                {"components", static_cast<int>(components(fixed).size())}};
  Json human = Json::array();
  human.push_back("fixed subcomplex has " + std::to_string(fixed.vertices.size()) + " vertices, " +
                  std::to_string(fixed.size()) + " simplices, " +
                  std::to_string(components(fixed).size()) + " components");
  cli.emit(human);
  return 0;
}

int run_develop(Cli& cli, const std::string& file, const std::string& cell_id) {
  ComplexOfGroups c = cog_from_json(load_json_file(file), cli.cfg.max_group_order);
  LocalDevelopment dev = local_development(c, c.base.require(cell_id));
  Json cells = Json::array();
  for (std::size_t i = 0; i < dev.complex.size(); ++i)
    cells.push_back({{"id", dev.complex.cells[i].id},
                     {"over", c.base.cells[dev.over[i]].id},
                     {"coset", dev.coset_rep[i]}});
  cli.report = {{"schema", kSchema},
                {"command", "develop"},
                {"cell", cell_id},
                {"development", complex_to_json(dev.complex)},
                {"cells", cells},
                {"group_order", dev.group.order}};
  Json human = Json::array();
  human.push_back("development over St(" + cell_id + "): " + std::to_string(dev.complex.size()) +
                  " cells, acted on by a group of order " + std::to_string(dev.group.order));
  cli.emit(human);
  return 0;
}

Json abelian_to_json(const AbelianGroup& g) {
  return Json{{"rank", g.rank}, {"torsion", g.torsion}, {"pretty", g.to_string()}};
}

int run_pi1(Cli& cli, const std::string& file, const std::string& base) {
  SimplicialComplex s = simplicial_from_json(load_json_file(file));
  Pi1Data d = pi1_presentation(s, base);
  Json relators = Json::array();
  for (const Word& w : d.group.relators) relators.push_back(word_to_string(w, d.group.generators));
  cli.report = {{"schema", kSchema},
                {"command", "pi1"},
                {"generators", d.group.generators},
                {"relators", relators},
                {"abelianization", abelian_to_json(abelianization(d.group))}};
  Json human = Json::array();
  human.push_back("pi1 presentation: " + std::to_string(d.group.generators.size()) +
                  " generators, " + std::to_string(d.group.relators.size()) + " relators");
  human.push_back("abelianization: " + abelianization(d.group).to_string());
  cli.emit(human);
  return 0;
}

int run_guided_pi1(Cli& cli, const std::string& file, const std::string& subgroup_csv,
                   const std::string& base) {
  GComplex gc = gcomplex_from_json(load_json_file(file), cli.cfg.max_group_order);
  Subgroup h = subgroup_from_csv(gc.group, subgroup_csv);
  std::string basepoint = base.empty() ? gc.base_vertex : base;
  GuidedPi1 gp = guided_pi1(gc, h, basepoint);
  Json relators = Json::array();
  for (const Word& w : gp.presentation.relators)
    relators.push_back(word_to_string(w, gp.presentation.generators));
  cli.report = {{"schema", kSchema},
                {"command", "guided-pi1"},
                {"basepoint", basepoint},
                {"subgroup", h.members},
                {"generators", gp.presentation.generators},
                {"relators", relators},
                {"proj", gp.proj},
                {"fiber_generators", gp.num_fiber_gens},
                {"centralizer", gp.centralizer_h.members},
                {"centralizer_base", gp.ch_base.members},
                {"abelianization", abelian_to_json(abelianization(gp.presentation))}};
  Json human = Json::array();
  human.push_back("guided pi1 at " + basepoint + ": " +
                  std::to_string(gp.presentation.generators.size()) + " generators (" +
                  std::to_string(gp.num_fiber_gens) + " fiber), " +
                  std::to_string(gp.presentation.relators.size()) + " relators");
  human.push_back("abelianization: " + abelianization(gp.presentation).to_string());
  cli.emit(human);
  return 0;
}

Json junction_to_json(const Junction& j) {
  return Json{{"holds", j.holds}, {"left", j.left}, {"right", j.right}};
}

int run_seqcheck(Cli& cli, const std::string& file, bool all_subgroups,
                 const std::string& subgroup_csv, const std::string& base) {
  GComplex gc = gcomplex_from_json(load_json_file(file), cli.cfg.max_group_order);
  Json checks = Json::array();
  Json human = Json::array();
  bool all_hold = true;
  auto run_one = [&](const Subgroup& h, const std::string& basepoint) {
    SequenceReport rep = sequence_check(gc, h, basepoint);
    bool holds = rep.at_centralizer.holds && rep.at_pi0.holds;
    all_hold = all_hold && holds;
    Json hj;
    for (int m : h.members) hj.push_back(m);
    checks.push_back({{"subgroup", hj},
                      {"basepoint", basepoint},
                      {"at_centralizer", junction_to_json(rep.at_centralizer)},
                      {"at_pi0", junction_to_json(rep.at_pi0)},
                      {"ab_injective", rep.ab_injective},
                      {"fiber_ab", abelian_to_json(rep.fiber_ab)},
                      {"guided_ab", abelian_to_json(rep.guided_ab)},
                      {"cokernel", abelian_to_json(rep.cokernel)},
                      {"pi0_fixed", rep.pi0_fixed},
                      {"pi0_guided", rep.pi0_guided}});
    std::string subtxt;
    for (int m : h.members) subtxt += (subtxt.empty() ? "" : ",") + std::to_string(m);
    human.push_back("H={" + subtxt + "} at " + basepoint + ": centralizer junction " +
                    (rep.at_centralizer.holds ? "holds" : "FAILS") + ", pi0 junction " +
                    (rep.at_pi0.holds ? "holds" : "FAILS") + ", fiber ab " +
                    rep.fiber_ab.to_string() + " -> guided ab " + rep.guided_ab.to_string() +
                    (rep.ab_injective ? " (injective, cokernel " + rep.cokernel.to_string() + ")"
                                      : " (not injective at abelianization)"));
  };
  if (all_subgroups) {
    for (const Subgroup& h : subgroups_up_to_conjugacy(gc.group, cli.cfg.max_group_order)) {
      SimplicialComplex fixed = fixed_subcomplex(gc, h);
      for (const std::string& v : fixed.vertices) run_one(h, v);
    }
  } else {
    Subgroup h = subgroup_from_csv(gc.group, subgroup_csv);
    run_one(h, base.empty() ? gc.base_vertex : base);
  }
  cli.report = {{"schema", kSchema}, {"command", "seqcheck"}, {"checks", checks},
                {"all_hold", all_hold}};
  cli.exit_code = all_hold ? 0 : 2;
  cli.emit(human);
  return cli.exit_code;
}

int run_pi0g(Cli& cli, const std::string& file, const std::string& group_file, int cyclic) {
  GComplex gc = gcomplex_from_json(load_json_file(file), cli.cfg.max_group_order);
  FiniteGroup g = group_file.empty() ? cyclic_group(cyclic)
                                     : group_from_json(load_json_file(group_file),
                                                       cli.cfg.max_group_order);
  std::vector<IsotropyClass> classes = pi0_isotropy(gc, g, cli.cfg.hom_budget);
  Json cj = Json::array();
  for (const auto& c : classes)
    cj.push_back({{"hom", c.hom_images}, {"component", c.component_rep}});
  cli.report = {{"schema", kSchema}, {"command", "pi0g"}, {"classes", cj}};
  Json human = Json::array();
  human.push_back(std::to_string(classes.size()) + " isotropy classes");
  for (const auto& c : classes) human.push_back("  component " + c.component_rep);
  cli.emit(human);
  return 0;
}

int run_cover(Cli& cli, const std::string& file, const std::string& base,
              const std::string& words_csv, int max_index, const std::string& out_file) {
  SimplicialComplex s = simplicial_from_json(load_json_file(file));
  Pi1Data pi1 = pi1_presentation(s, base);
  std::vector<Word> words;
  std::string cur;
  for (char ch : words_csv + ",") {
    if (ch == ',') {
      if (!cur.empty())
        words.push_back(word_from_letters(cur, static_cast<int>(pi1.group.generators.size())));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  CoverData cd = cover_from_subgroup(s, base, words, max_index, cli.cfg.coset_steps);
  ValidationReport vr = validate_cover(cd);
  if (!vr.ok()) fail(ErrorKind::InternalError, "constructed cover fails validation");
  cli.report = {{"schema", kSchema},
                {"command", "cover"},
                {"index", cd.index()},
                {"euler_base", euler_characteristic(cd.base)},
                {"euler_total", euler_characteristic(cd.total)},
                {"connected", static_cast<int>(components(cd.total).size()) == 1},
                {"result", cover_to_json(cd)}};
  Json human = Json::array();
  human.push_back("cover of index " + std::to_string(cd.index()) + ": chi " +
                  std::to_string(euler_characteristic(cd.base)) + " -> " +
                  std::to_string(euler_characteristic(cd.total)));
  if (!out_file.empty()) {
    save_json_file(out_file, cover_to_json(cd));
    human.push_back("wrote " + out_file);
  }
  cli.emit(human);
  return 0;
}

int run_deck(Cli& cli, const std::string& file) {
  Json j = load_json_file(file);
  if (j.contains("space")) {
    // canonical cover of a global quotient: deck of the orbit map
    GComplex gc = gcomplex_from_json(j, cli.cfg.max_group_order);
    CanonicalDeckReport rep = canonical_cover_deck(gc);
    cli.report = {{"schema", kSchema},
                  {"command", "deck"},
                  {"ok", true},
                  {"deck_order", rep.via_action.group.order},
                  {"kernel", rep.action_kernel.members},
                  {"free_action", rep.free_action},
                  {"trivial_isotropy_cover", rep.trivial_isotropy_cover},
                  {"propagation_available", rep.via_propagation.has_value()},
                  {"propagation_matches", rep.match}};
    Json human = Json::array();
    human.push_back("deck group of the orbit map has order " +
                    std::to_string(rep.via_action.group.order) + " (kernel order " +
                    std::to_string(rep.action_kernel.order()) + ")");
    if (!rep.trivial_isotropy_cover)
      human.push_back("note: not a trivial-isotropy cover; the orbit map is not a covering "
                      "of spaces");
    else
      human.push_back(std::string("propagation over the quotient ") +
                      (rep.match ? "agrees" : "DISAGREES"));
    cli.exit_code = rep.match ? 0 : 2;
    cli.emit(human);
    return cli.exit_code;
  }
  CoverData cd = cover_from_json(j);
  ValidationReport vr = validate_cover(cd);
  if (!vr.ok()) {
    cli.report = {{"schema", kSchema}, {"command", "deck"}, {"ok", false},
                  {"violations", violations_to_json(vr.violations)}};
    cli.exit_code = 2;
    cli.emit(Json::array({"cover file fails validation"}));
    return cli.exit_code;
  }
  DeckGroup deck = deck_group(cd);
  int nq = normalizer_quotient_order(cd.table, cd.subgroup_words);
  cli.report = {{"schema", kSchema},
                {"command", "deck"},
                {"ok", true},
                {"deck_order", deck.group.order},
                {"normalizer_quotient_order", nq},
                {"matches_normalizer", deck.group.order == nq}};
  Json human = Json::array();
  human.push_back("deck group order " + std::to_string(deck.group.order) + "; |N(H)/H| = " +
                  std::to_string(nq) + (deck.group.order == nq ? " (equal)" : " (MISMATCH)"));
  cli.exit_code = deck.group.order == nq ? 0 : 2;
  cli.emit(human);
  return cli.exit_code;
}

int run_lift(Cli& cli, const std::string& file, const std::string& path_csv,
             const std::string& start) {
  GComplex gc = gcomplex_from_json(load_json_file(file), cli.cfg.max_group_order);
  QuotientData q = quotient(gc);
  // Path syntax: start cell id, then vertex cell ids (auto edge resolution)
  // or explicit "edgecell/f" and "edgecell/r" steps.
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : path_csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (parts.empty()) fail(ErrorKind::InvalidInput, "empty path");
  if (static_cast<int>(parts.size()) - 1 > cli.cfg.max_path_length)
    fail(ErrorKind::ResourceLimit, "path exceeds the configured length bound");
  QuotientPath qp;
  qp.start_cell = q.quotient.require(parts[0]);
  int at_cell = qp.start_cell;
  auto endpoint_cells = [&](int edge_cell) {
    const auto& lift = gc.space.simplices[q.section[edge_cell]];
    int qa = q.orbit_map[gc.space.index_of_simplex({lift[0]})];
    int qb = q.orbit_map[gc.space.index_of_simplex({lift[1]})];
    return std::make_pair(qa, qb);
  };
  for (std::size_t i = 1; i < parts.size(); ++i) {
    QuotientPathStep step;
    if (parts[i].size() > 2 && parts[i][parts[i].size() - 2] == '/') {
      char dir = parts[i].back();
      if (dir != 'f' && dir != 'r') fail(ErrorKind::InvalidInput, "step direction must be f or r");
      step.edge_cell = q.quotient.require(parts[i].substr(0, parts[i].size() - 2));
      step.forward = (dir == 'f');
      auto [qa, qb] = endpoint_cells(step.edge_cell);
      int from = step.forward ? qa : qb;
      if (from != at_cell) fail(ErrorKind::InvalidInput, "step " + parts[i] + " does not chain");
      at_cell = step.forward ? qb : qa;
    } else {
      int target = q.quotient.require(parts[i]);
      int found = -1;
      bool forward = true;
      for (std::size_t c = 0; c < q.quotient.size(); ++c) {
        if (q.quotient.cells[c].dim != 1) continue;
        auto [qa, qb] = endpoint_cells(static_cast<int>(c));
        if (qa == at_cell && qb == target) {
          found = static_cast<int>(c);
          forward = true;
          break;  // cells are scanned in canonical order; first match is least
        }
        if (qb == at_cell && qa == target) {
          found = static_cast<int>(c);
          forward = false;
          break;
        }
      }
      if (found < 0)
        fail(ErrorKind::InvalidInput, "no quotient edge joins " + parts[i - 1] + " and " + parts[i]);
      step.edge_cell = found;
      step.forward = forward;
      at_cell = target;
    }
    qp.steps.push_back(step);
  }
  LiftResult res = lift_edge_path(gc, q, qp, start);
  Json verts = Json::array();
  verts.push_back(gc.space.vertices[res.path.base]);
  for (const auto& [u, v] : res.path.steps) {
    (void)u;
    verts.push_back(gc.space.vertices[v]);
  }
  cli.report = {{"schema", kSchema},
                {"command", "lift"},
                {"vertices", verts},
                {"unique", res.unique},
                {"max_candidates", res.max_candidates}};
  Json human = Json::array();
  std::string line = "lift:";
  for (const Json& v : verts) line += " " + v.get<std::string>();
  human.push_back(line);
  if (!res.unique) human.push_back("note: a step had several lifts; the least candidate was taken");
  cli.emit(human);
  return 0;
}

int run_gen_examples(Cli& cli, const std::string& name, const std::string& dir) {
  std::vector<std::string> written = gen_examples(name, dir, cli.cfg.seed);
  cli.report = {{"schema", kSchema}, {"command", "gen-examples"}, {"written", written}};
  Json human = Json::array();
  for (const std::string& p : written) human.push_back("wrote " + p);
  cli.emit(human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"finite complexes of groups, group actions, guided loops and covers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cli.cfg.json_output, "emit machine-readable reports");
  app.add_option("--config", cli.config_file, "JSON file with budget overrides");
  app.add_option("--seed", cli.cfg.seed, "seed for choice permutations");
  app.add_option("--budget", cli.cfg.gauge_budget, "gauge search node budget");
  app.add_option("--coset-steps", cli.cfg.coset_steps, "coset enumeration step budget");
  app.add_option("--max-group-order", cli.cfg.max_group_order, "group order bound");

  std::string file, file_b, witness, out_file, cell, base, subgroup, words, path, start, name, dir;
  int n = 0, max_index = 64, cyclic = 1;
  bool all_subgroups = false;
  std::string group_file;

  auto* v = app.add_subcommand("validate", "validate any orbicell payload");
  v->add_option("file", file)->required();

  auto* eq = app.add_subcommand("equiv", "decide gauge equivalence of two complexes of groups");
  eq->add_option("a", file)->required();
  eq->add_option("b", file_b)->required();
  eq->add_option("--check-witness", witness, "verify a witness gauge instead of searching");

  auto* sk = app.add_subcommand("skeleton", "restrict to a skeleton");
  sk->add_option("file", file)->required();
  sk->add_option("-n", n)->required();
  sk->add_option("-o,--out", out_file);

  auto* at = app.add_subcommand("attach", "attach a cell to a complex of groups");
  at->add_option("--spec", file)->required();
  at->add_option("-o,--out", out_file);

  auto* ex = app.add_subcommand("extract", "extract the complex of groups of an action");
  ex->add_option("file", file)->required();
  ex->add_option("-o,--out", out_file);

  auto* qt = app.add_subcommand("quotient", "quotient poset with stabilizers");
  qt->add_option("file", file)->required();

  auto* fx = app.add_subcommand("fixed", "fixed subcomplex of a subgroup");
  fx->add_option("file", file)->required();
  fx->add_option("--subgroup", subgroup)->required();

  auto* dv = app.add_subcommand("develop", "local development over a cell");
  dv->add_option("file", file)->required();
  dv->add_option("--cell", cell)->required();

  auto* p1 = app.add_subcommand("pi1", "edge-path presentation of pi1");
  p1->add_option("file", file)->required();
  p1->add_option("--base", base)->required();

  auto* gp = app.add_subcommand("guided-pi1", "guided-loop pi1 of a global quotient");
  gp->add_option("file", file)->required();
  gp->add_option("--subgroup", subgroup)->required();
  gp->add_option("--base", base);

  auto* sq = app.add_subcommand("seqcheck", "verify the five-term sequence junctions");
  sq->add_option("file", file)->required();
  sq->add_flag("--all-subgroups", all_subgroups);
  sq->add_option("--subgroup", subgroup);
  sq->add_option("--base", base);

  auto* pg = app.add_subcommand("pi0g", "isotropy pi0 classes");
  pg->add_option("file", file)->required();
  pg->add_option("--group", group_file);
  pg->add_option("--cyclic", cyclic);

  auto* cv = app.add_subcommand("cover", "build a cover from a subgroup of pi1");
  cv->add_option("file", file)->required();
  cv->add_option("--base", base)->required();
  cv->add_option("--words", words)->required();
  cv->add_option("--max-index", max_index);
  cv->add_option("-o,--out", out_file);

  auto* dk = app.add_subcommand("deck", "deck group of a cover file");
  dk->add_option("file", file)->required();

  auto* lf = app.add_subcommand("lift", "lift a quotient edge path");
  lf->add_option("file", file)->required();
  lf->add_option("--path", path)->required();
  lf->add_option("--start", start)->required();

  auto* ge = app.add_subcommand("gen-examples", "write a canonical example to disk");
  ge->add_option("name", name)->required();
  ge->add_option("--dir", dir);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!cli.config_file.empty()) {
      Json cj = load_json_file(cli.config_file);
      if (cj.contains("max_group_order")) cli.cfg.max_group_order = cj.at("max_group_order");
      if (cj.contains("gauge_budget")) cli.cfg.gauge_budget = cj.at("gauge_budget");
      if (cj.contains("coset_steps")) cli.cfg.coset_steps = cj.at("coset_steps");
      if (cj.contains("max_path_length")) cli.cfg.max_path_length = cj.at("max_path_length");
      if (cj.contains("hom_budget")) cli.cfg.hom_budget = cj.at("hom_budget");
      if (cj.contains("seed")) cli.cfg.seed = cj.at("seed");
    }
    if (v->parsed()) return run_validate(cli, file);
    if (eq->parsed()) return run_equiv(cli, file, file_b, witness);
    if (sk->parsed()) return run_skeleton(cli, file, n, out_file);
    if (at->parsed()) return run_attach(cli, file, out_file);
    if (ex->parsed()) return run_extract(cli, file, out_file);
    if (qt->parsed()) return run_quotient(cli, file);
    if (fx->parsed()) return run_fixed(cli, file, subgroup);
    if (dv->parsed()) return run_develop(cli, file, cell);
    if (p1->parsed()) return run_pi1(cli, file, base);
    if (gp->parsed()) return run_guided_pi1(cli, file, subgroup, base);
    if (sq->parsed()) return run_seqcheck(cli, file, all_subgroups, subgroup, base);
    if (pg->parsed()) return run_pi0g(cli, file, group_file, cyclic);
    if (cv->parsed()) return run_cover(cli, file, base, words, max_index, out_file);
    if (dk->parsed()) return run_deck(cli, file);
    if (lf->parsed()) return run_lift(cli, file, path, start);
    if (ge->parsed()) return run_gen_examples(cli, name, dir);
  } catch (const Error& e) {
    Json err = {{"schema", kSchema}, {"error", error_kind_name(e.kind)}, {"message", e.what()}};
    if (cli.cfg.json_output)
      std::cout << dump_json(err);
    else
      std::cerr << error_kind_name(e.kind) << ": " << e.what() << "\n";
    switch (e.kind) {
      case ErrorKind::ResourceLimit: return 3;
      case ErrorKind::ValidationFailed:
      case ErrorKind::EmptyFixedSet: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
