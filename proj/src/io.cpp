#include "orbicell/io.hpp"

#include <fstream>
#include <sstream>


namespace orbicell {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidInput, "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write file: " + path);
  out << dump_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

CellComplex complex_from_json(const Json& j, bool close, bool* closure_added) {
  std::vector<Cell> cells;
  for (const Json& cj : need(j, "cells")) {
    Cell c;
    c.id = need(cj, "id").get<std::string>();
    c.dim = need(cj, "dim").get<int>();
    cells.push_back(std::move(c));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("faces"))
    for (const Json& pj : j.at("faces")) {
      if (!pj.is_array() || pj.size() != 2)
        fail(ErrorKind::InvalidInput, "face pairs must be [big, small]");
      pairs.emplace_back(pj.at(0).get<std::string>(), pj.at(1).get<std::string>());
    }
  return make_complex(std::move(cells), pairs, close, closure_added);
}

Json complex_to_json(const CellComplex& c) {
  Json cells = Json::array();
  for (const Cell& cell : c.cells) cells.push_back({{"id", cell.id}, {"dim", cell.dim}});
  Json faces = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int f : c.faces[i]) faces.push_back({c.cells[i].id, c.cells[f].id});
  return Json{{"cells", cells}, {"faces", faces}};
}

SimplicialComplex simplicial_from_json(const Json& j) {
  std::vector<std::vector<std::string>> simplices;
  for (const Json& sj : need(j, "simplices")) {
    std::vector<std::string> s;
    for (const Json& v : sj) s.push_back(v.get<std::string>());
    simplices.push_back(std::move(s));
  }
  std::vector<std::string> extra;
  if (j.contains("vertices"))
    for (const Json& v : j.at("vertices")) extra.push_back(v.get<std::string>());
  return make_simplicial(simplices, extra);
}

Json simplicial_to_json(const SimplicialComplex& s) {
  Json vertices = Json::array();
  for (const std::string& v : s.vertices) vertices.push_back(v);
  Json simplices = Json::array();
  for (const auto& simp : s.simplices) {
    if (simp.size() == 1) continue;  // carried by "vertices"
    Json sj = Json::array();
    for (int v : simp) sj.push_back(s.vertices[v]);
    simplices.push_back(sj);
  }
  return Json{{"vertices", vertices}, {"simplices", simplices}};
}

FiniteGroup group_from_json(const Json& j, int max_order) {
  if (j.is_object() && j.contains("perm_gens")) {
    std::vector<std::vector<int>> gens;
    for (const Json& gj : j.at("perm_gens")) gens.push_back(gj.get<std::vector<int>>());
    int degree = need(j, "degree").get<int>();
    return group_from_permutations(gens, degree, max_order);
  }
  std::vector<std::vector<int>> table;
  for (const Json& row : need(j, "table")) table.push_back(row.get<std::vector<int>>());
  if (static_cast<int>(table.size()) > max_order)
    fail(ErrorKind::ResourceLimit, "group order exceeds the configured bound");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const Json& l : j.at("labels")) labels.push_back(l.get<std::string>());
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
    fail(ErrorKind::InvalidInput, "declared order disagrees with the table");
  return make_group(std::move(table), std::move(labels));
}

Json group_to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (const auto& row : g.table) table.push_back(row);
  Json out{{"order", g.order}, {"table", table}};
  if (!g.labels.empty()) out["labels"] = g.labels;
  return out;
}

namespace {

FiniteGroup resolve_group_ref(const Json& ref, const Json& defs, int max_order) {
  if (ref.is_string()) {
    const std::string name = ref.get<std::string>();
    if (!defs.is_object() || !defs.contains(name))
      fail(ErrorKind::InvalidInput, "group reference to undefined name: " + name);
    return group_from_json(defs.at(name), max_order);
  }
  return group_from_json(ref, max_order);
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : key) {
    if (ch == '>') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

ComplexOfGroups cog_from_json(const Json& j, int max_order) {
  CellComplex base = complex_from_json(need(j, "complex"));
  Json defs = j.contains("group_defs") ? j.at("group_defs") : Json::object();
  std::vector<FiniteGroup> groups(base.size(), trivial_group());
  if (j.contains("groups"))
    for (const auto& [cell_id, ref] : j.at("groups").items())
      groups[base.require(cell_id)] = resolve_group_ref(ref, defs, max_order);

  std::vector<Arrow> arrows = arrows_of(base);
  auto arrow_of_key = [&](const std::string& key) {
    auto parts = split_key(key);
    if (parts.size() != 2) fail(ErrorKind::InvalidInput, "hom key must be big>small: " + key);
    int big = base.require(parts[0]), small = base.require(parts[1]);
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].initial == big && arrows[a].terminal == small) return static_cast<int>(a);
    fail(ErrorKind::InvalidInput, "hom key does not name an arrow: " + key);
  };
  std::map<int, std::vector<int>> psi;
  if (j.contains("homs"))
    for (const auto& [key, images] : j.at("homs").items())
      psi[arrow_of_key(key)] = images.get<std::vector<int>>();

  std::vector<ComposablePair> pairs = composable_pairs(arrows);
  auto pair_of_key = [&](const std::string& key) {
    auto parts = split_key(key);
    if (parts.size() != 3)
      fail(ErrorKind::InvalidInput, "twist key must be big>mid>small: " + key);
    int big = base.require(parts[0]), mid = base.require(parts[1]), small = base.require(parts[2]);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (arrows[pairs[p].b].initial == big && arrows[pairs[p].a].initial == mid &&
          arrows[pairs[p].a].terminal == small)
        return static_cast<int>(p);
    fail(ErrorKind::InvalidInput, "twist key does not name a composable pair: " + key);
  };
  std::map<int, int> twists;
  if (j.contains("twists"))
    for (const auto& [key, val] : j.at("twists").items()) twists[pair_of_key(key)] = val.get<int>();
  return make_cog(std::move(base), std::move(groups), psi, twists);
}

Json cog_to_json(const ComplexOfGroups& c) {
  Json out;
  out["complex"] = complex_to_json(c.base);
  Json groups = Json::object();
  for (std::size_t i = 0; i < c.base.size(); ++i)
    if (c.groups[i].order > 1) groups[c.base.cells[i].id] = group_to_json(c.groups[i]);
  out["groups"] = groups;
  Json homs = Json::object();
  for (std::size_t a = 0; a < c.arrows.size(); ++a)
    if (c.groups[c.arrows[a].initial].order > 1)
      homs[c.arrow_name(static_cast<int>(a))] = c.psi[a].images;
  out["homs"] = homs;
  Json twists = Json::object();
  for (std::size_t p = 0; p < c.pairs.size(); ++p)
    if (c.twists[p] != 0) twists[c.pair_name(static_cast<int>(p))] = c.twists[p];
  out["twists"] = twists;
  return out;
}

Gauge gauge_from_json(const ComplexOfGroups& c, const Json& j) {
  Gauge g = identity_gauge(c);
  if (j.contains("gauge"))
    for (const auto& [key, val] : j.at("gauge").items()) {
      auto parts = split_key(key);
      if (parts.size() != 2) fail(ErrorKind::InvalidInput, "gauge key must be big>small: " + key);
      int a = c.arrow_index(c.base.require(parts[0]), c.base.require(parts[1]));
      if (a < 0) fail(ErrorKind::InvalidInput, "gauge key does not name an arrow: " + key);
      g.per_arrow[a] = val.get<int>();
    }
  return g;
}

Json gauge_to_json(const ComplexOfGroups& c, const Gauge& g) {
  Json entries = Json::object();
  for (std::size_t a = 0; a < c.arrows.size(); ++a)
    if (g.per_arrow[a] != 0) entries[c.arrow_name(static_cast<int>(a))] = g.per_arrow[a];
  return Json{{"gauge", entries}};
}

GComplex gcomplex_from_json(const Json& j, int max_order) {
  SimplicialComplex space = simplicial_from_json(need(j, "space"));
  FiniteGroup group = group_from_json(need(j, "group"), max_order);
  std::vector<std::vector<int>> action(group.order);
  for (int g = 0; g < group.order; ++g) {
    action[g].resize(space.vertices.size());
    for (std::size_t v = 0; v < space.vertices.size(); ++v) action[g][v] = static_cast<int>(v);
  }
  if (j.contains("action"))
    for (const auto& [elem_str, vmap] : j.at("action").items()) {
      int g = std::stoi(elem_str);
      if (g < 0 || g >= group.order)
        fail(ErrorKind::InvalidInput, "action element index out of range: " + elem_str);
      for (const auto& [from, to] : vmap.items())
        action[g][space.require_vertex(from)] = space.require_vertex(to.get<std::string>());
    }
  std::string base = j.contains("base_vertex") ? j.at("base_vertex").get<std::string>() : "";
  return make_gcomplex(std::move(space), std::move(group), std::move(action), base);
}

Json gcomplex_to_json(const GComplex& gc) {
  Json action = Json::object();
  for (int g = 1; g < gc.group.order; ++g) {
    Json vmap = Json::object();
    for (std::size_t v = 0; v < gc.space.vertices.size(); ++v)
      if (gc.action[g][v] != static_cast<int>(v))
        vmap[gc.space.vertices[v]] = gc.space.vertices[gc.action[g][v]];
    action[std::to_string(g)] = vmap;
  }
  Json out{{"space", simplicial_to_json(gc.space)},
           {"group", group_to_json(gc.group)},
           {"action", action}};
  if (!gc.base_vertex.empty()) out["base_vertex"] = gc.base_vertex;
  return out;
}

AttachFile attach_from_json(const Json& j, int max_order) {
  AttachFile out;
  out.cog = cog_from_json(need(j, "cog"), max_order);
  const Json& aj = need(j, "attach");
  out.spec.id = need(aj, "id").get<std::string>();
  out.spec.dim = need(aj, "dim").get<int>();
  for (const Json& f : need(aj, "faces")) out.spec.face_ids.push_back(f.get<std::string>());
  out.spec.group = aj.contains("group") ? group_from_json(aj.at("group"), max_order)
                                        : trivial_group();
  if (aj.contains("homs"))
    for (const auto& [face, images] : aj.at("homs").items())
      out.spec.homs[face] = images.get<std::vector<int>>();
  if (aj.contains("twists"))
    for (const auto& [key, val] : aj.at("twists").items())
      out.spec.twists[key] = val.get<int>();
  return out;
}

Json attach_to_json(const ComplexOfGroups& c, const AttachSpec& spec) {
  Json aj;
  aj["id"] = spec.id;
  aj["dim"] = spec.dim;
  aj["faces"] = spec.face_ids;
  aj["group"] = group_to_json(spec.group);
  Json homs = Json::object();
  for (const auto& [face, images] : spec.homs) homs[face] = images;
  aj["homs"] = homs;
  Json twists = Json::object();
  for (const auto& [key, val] : spec.twists) twists[key] = val;
  aj["twists"] = twists;
  return Json{{"cog", cog_to_json(c)}, {"attach", aj}};
}

Json cover_to_json(const CoverData& cd) {
  Json table = Json::array();
  for (int c = 0; c < cd.table.num_cosets; ++c) table.push_back(cd.table.action[c]);
  Json transversal = Json::array();
  for (const Word& w : cd.table.transversal) transversal.push_back(word_to_letters(w));
  Json words = Json::array();
  for (const Word& w : cd.subgroup_words) words.push_back(word_to_letters(w));
  Json gen_edges = Json::array();
  for (const auto& [u, v] : cd.gen_edges) gen_edges.push_back({u, v});
  Json proj = Json::object();
  for (std::size_t tv = 0; tv < cd.total.vertices.size(); ++tv)
    proj[cd.total.vertices[tv]] = cd.base.vertices[cd.vertex_proj[tv]];
  return Json{{"total", simplicial_to_json(cd.total)},
              {"base", simplicial_to_json(cd.base)},
              {"projection", proj},
              {"base_vertex", cd.base_vertex},
              {"base_lift", cd.base_lift},
              {"generators", cd.gen_names},
              {"generator_edges", gen_edges},
              {"subgroup_words", words},
              {"coset_table", table},
              {"transversal", transversal}};
}

CoverData cover_from_json(const Json& j) {
  CoverData cd;
  cd.total = simplicial_from_json(need(j, "total"));
  cd.base = simplicial_from_json(need(j, "base"));
  cd.base_vertex = need(j, "base_vertex").get<std::string>();
  cd.base_lift = need(j, "base_lift").get<std::string>();
  cd.gen_names = need(j, "generators").get<std::vector<std::string>>();
  for (const Json& e : need(j, "generator_edges"))
    cd.gen_edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  for (const Json& w : need(j, "subgroup_words"))
    cd.subgroup_words.push_back(
        word_from_letters(w.get<std::string>(), static_cast<int>(cd.gen_names.size())));
  cd.table.num_generators = static_cast<int>(cd.gen_names.size());
  for (const Json& row : need(j, "coset_table")) cd.table.action.push_back(row.get<std::vector<int>>());
  cd.table.num_cosets = static_cast<int>(cd.table.action.size());
  for (const Json& w : need(j, "transversal"))
    cd.table.transversal.push_back(
        word_from_letters(w.get<std::string>(), static_cast<int>(cd.gen_names.size())));
  cd.vertex_proj.assign(cd.total.vertices.size(), -1);
  const Json& proj = need(j, "projection");
  for (std::size_t tv = 0; tv < cd.total.vertices.size(); ++tv)
    cd.vertex_proj[tv] = cd.base.require_vertex(proj.at(cd.total.vertices[tv]).get<std::string>());
  return cd;
}

Word word_from_letters(const std::string& s, int num_generators) {
  Word w;
  for (char ch : s) {
    if (ch == ' ' || ch == ',') continue;
    int idx;
    bool inverse;
    if (ch >= 'a' && ch <= 'z') {
      idx = ch - 'a';
      inverse = false;
    } else if (ch >= 'A' && ch <= 'Z') {
      idx = ch - 'A';
      inverse = true;
    } else {
      fail(ErrorKind::InvalidInput, std::string("bad letter in word: ") + ch);
    }
    if (idx >= num_generators)
      fail(ErrorKind::InvalidInput, std::string("word letter out of range: ") + ch);
    w.push_back(inverse ? -(idx + 1) : idx + 1);
  }
  return w;
}

std::string word_to_letters(const Word& w) {
  std::string s;
  for (int x : w) {
    int idx = std::abs(x) - 1;
    if (idx >= 26) fail(ErrorKind::InvalidInput, "word has too many generators for letters");
    s += static_cast<char>((x > 0 ? 'a' : 'A') + idx);
  }
  return s;
}

}  // namespace orbicell
