#include "orbicell/examples.hpp"

#include <algorithm>
#include <set>

#include "orbicell/io.hpp"

namespace orbicell {

GComplex example_reflection_path() {
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < 4; ++i)
    edges.push_back({"p" + std::to_string(i), "p" + std::to_string(i + 1)});
  SimplicialComplex path = make_simplicial(edges);
  FiniteGroup z2 = cyclic_group(2);
  std::vector<std::vector<int>> action(2);
  for (int v = 0; v < 5; ++v) {
    action[0].push_back(v);
    action[1].push_back(4 - v);
  }
  return make_gcomplex(std::move(path), std::move(z2), std::move(action), "p2");
}

GComplex example_hexagon_z3() {
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < 6; ++i)
    edges.push_back({"h" + std::to_string(i), "h" + std::to_string((i + 1) % 6)});
  SimplicialComplex circle = make_simplicial(edges);
  FiniteGroup z3 = cyclic_group(3);
  std::vector<std::vector<int>> action(3);
  for (int g = 0; g < 3; ++g)
    for (int v = 0; v < 6; ++v) action[g].push_back((v + 2 * g) % 6);
  return make_gcomplex(std::move(circle), std::move(z3), std::move(action), "h0");
}

SimplicialComplex example_wedge2() {
  return make_simplicial({{"o", "a1"}, {"a1", "a2"}, {"a2", "o"},
                          {"o", "b1"}, {"b1", "b2"}, {"b2", "o"}});
}

ComplexOfGroups example_z2_circle() {
  SimplicialComplex circle = make_simplicial({{"c0", "c1"}, {"c1", "c2"}, {"c0", "c2"}});
  CellComplex base = to_cell_complex(circle);
  std::vector<FiniteGroup> groups(base.size(), cyclic_group(2));
  std::map<int, std::vector<int>> psi;
  std::vector<Arrow> arrows = arrows_of(base);
  for (std::size_t a = 0; a < arrows.size(); ++a) psi[static_cast<int>(a)] = {0, 1};
  return make_cog(std::move(base), std::move(groups), psi, {});
}

AttachSpec example_z2_disk_spec() {
  AttachSpec spec;
  spec.id = "D";
  spec.dim = 2;
  spec.face_ids = {"c0", "c1", "c2", "c0+c1", "c1+c2", "c0+c2"};
  spec.group = cyclic_group(2);
  for (const std::string& f : spec.face_ids) spec.homs[f] = {0, 1};
  // identity twists: nothing to record
  return spec;
}

CellComplex example_sphere_poset() {
  std::vector<Cell> cells{{"v0", 0}, {"v1", 0}, {"v2", 0}, {"e01", 1}, {"e02", 1},
                          {"e12", 1}, {"N", 2},  {"S", 2}};
  std::vector<std::pair<std::string, std::string>> faces;
  auto edge = [&](const std::string& e, const std::string& a, const std::string& b) {
    faces.emplace_back(e, a);
    faces.emplace_back(e, b);
  };
  edge("e01", "v0", "v1");
  edge("e02", "v0", "v2");
  edge("e12", "v1", "v2");
  for (const char* top : {"N", "S"})
    for (const char* f : {"e01", "e02", "e12", "v0", "v1", "v2"})
      faces.emplace_back(top, f);
  return make_complex(std::move(cells), faces, /*close=*/false);
}

namespace {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    std::uint64_t x = (state += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

FiniteGroup pick_group(Rng& rng) {
  switch (rng.below(10)) {
    case 0: return cyclic_group(2);
    case 1: return cyclic_group(3);
    case 2: return cyclic_group(4);
    case 3: return direct_product(cyclic_group(2), cyclic_group(2));
    case 4: return cyclic_group(6);
    case 5: return symmetric_group_s3();
    case 6: return cyclic_group(8);
    case 7: return dihedral_group(4);
    case 8: return cyclic_group(12);
    default: return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4);  // A4
  }
}

std::string pad2(int x) { return (x < 10 ? "0" : "") + std::to_string(x); }

}  // namespace

GComplex random_gcomplex(std::uint64_t seed, int max_simplices) {
  Rng rng(seed);
  FiniteGroup gamma = pick_group(rng);

  // Vertex classes are coset spaces Gamma/U; stabilizers are conjugates of U.
  // Orbit-regularity forbids simplices with two vertices in one orbit, so
  // edges need two classes and triangles three.
  const int num_classes = 2 + rng.below(2);
  std::vector<std::string> vertex_tokens;
  std::vector<std::vector<int>> vertex_action;  // filled below
  struct VertexClass {
    std::vector<std::vector<int>> cosets;  // sorted member lists
  };
  std::vector<VertexClass> classes;
  std::vector<Subgroup> subs = all_subgroups(gamma);
  for (int i = 0; i < num_classes; ++i) {
    Subgroup u = trivial_subgroup();
    int roll = rng.below(10);
    if (roll >= 8)
      u = full_subgroup(gamma);
    else if (roll >= 5)
      u = subs[rng.below(static_cast<int>(subs.size()))];
    VertexClass vc;
    std::set<std::vector<int>> seen;
    for (int g = 0; g < gamma.order; ++g) {
      std::vector<int> coset;
      for (int m : u.members) coset.push_back(gamma.mul(g, m));
      std::sort(coset.begin(), coset.end());
      if (seen.insert(coset).second) vc.cosets.push_back(coset);
    }
    classes.push_back(std::move(vc));
  }
  std::vector<std::pair<int, int>> vertex_of;  // (class, coset index)
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t k = 0; k < classes[i].cosets.size(); ++k) {
      vertex_tokens.push_back("v" + std::to_string(i) + "c" + pad2(static_cast<int>(k)));
      vertex_of.emplace_back(static_cast<int>(i), static_cast<int>(k));
    }
  const int nv = static_cast<int>(vertex_tokens.size());
  auto act_vertex = [&](int g, int v) {
    auto [cls, k] = vertex_of[v];
    std::vector<int> moved;
    for (int m : classes[cls].cosets[k]) moved.push_back(gamma.mul(g, m));
    std::sort(moved.begin(), moved.end());
    for (std::size_t k2 = 0; k2 < classes[cls].cosets.size(); ++k2)
      if (classes[cls].cosets[k2] == moved) {
        int offset = 0;
        for (int c = 0; c < cls; ++c) offset += static_cast<int>(classes[c].cosets.size());
        return offset + static_cast<int>(k2);
      }
    fail(ErrorKind::InternalError, "coset action left the coset space");
  };
  vertex_action.assign(gamma.order, std::vector<int>(nv));
  for (int g = 0; g < gamma.order; ++g)
    for (int v = 0; v < nv; ++v) vertex_action[g][v] = act_vertex(g, v);

  // Grow an invariant simplex set by orbit closures of random candidates,
  // keeping the action admissible and orbit-regular throughout.  The vertex
  // tokens are constructed in sorted order, so indices survive
  // make_simplicial unchanged.
  std::set<std::vector<int>> chosen;  // committed candidate simplices (vertex index sets)
  auto build_simple = [&](const std::set<std::vector<int>>& extra) {
    std::vector<std::vector<std::string>> simplices;
    auto add = [&](const std::set<std::vector<int>>& src) {
      for (const auto& s : src) {
        std::vector<std::string> toks;
        for (int v : s) toks.push_back(vertex_tokens[v]);
        simplices.push_back(toks);
      }
    };
    add(chosen);
    add(extra);
    SimplicialComplex space = make_simplicial(simplices, vertex_tokens);
    return make_gcomplex(std::move(space), gamma, vertex_action, vertex_tokens.front());
  };

  std::vector<int> pinned;  // vertices with nontrivial stabilizer
  for (int v = 0; v < nv; ++v) {
    bool fixed_by_some = false;
    for (int g = 1; g < gamma.order; ++g)
      if (vertex_action[g][v] == v) fixed_by_some = true;
    if (fixed_by_some) pinned.push_back(v);
  }
  auto try_commit = [&](const std::set<int>& pick) {
    std::set<std::vector<int>> orbit;
    for (int g = 0; g < gamma.order; ++g) {
      std::vector<int> img;
      for (int v : pick) img.push_back(vertex_action[g][v]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
      orbit.insert(img);
    }
    GComplex trial = build_simple(orbit);
    if (static_cast<int>(trial.space.size()) > max_simplices) return false;
    if (!is_admissible(trial) || !is_orbit_regular(trial)) return false;
    for (const auto& s : orbit) chosen.insert(s);
    return true;
  };

  std::vector<std::vector<int>> by_class(classes.size());
  for (int v = 0; v < nv; ++v) by_class[vertex_of[v].first].push_back(v);

  const int attempts = 16;
  for (int t = 0; t < attempts; ++t) {
    int k = (rng.below(10) < 7 || classes.size() < 3) ? 2 : 3;
    // one vertex from each of k distinct classes; steer some attempts
    // through a stabilized vertex so the corpus exercises isotropy arrows
    int forced = -1;
    std::set<int> cls;
    if (!pinned.empty() && rng.below(2) == 0) {
      forced = pinned[rng.below(static_cast<int>(pinned.size()))];
      cls.insert(vertex_of[forced].first);
    }
    while (static_cast<int>(cls.size()) < k) cls.insert(rng.below(static_cast<int>(classes.size())));
    std::set<int> pick;
    for (int c : cls) {
      if (forced >= 0 && vertex_of[forced].first == c) {
        pick.insert(forced);
      } else {
        const auto& pool = by_class[c];
        pick.insert(pool[rng.below(static_cast<int>(pool.size()))]);
      }
    }
    try_commit(pick);
  }
  // a complex with no edges at all teaches nothing; add the first valid one
  bool has_edge = false;
  for (const auto& s : chosen)
    if (s.size() >= 2) has_edge = true;
  if (!has_edge)
    for (int u = 0; u < nv && !has_edge; ++u)
      for (int w = u + 1; w < nv && !has_edge; ++w)
        if (vertex_of[u].first != vertex_of[w].first && try_commit({u, w})) has_edge = true;
  return build_simple({});
}

std::vector<std::string> gen_examples(const std::string& name, const std::string& dir,
                                      std::uint64_t seed) {
  auto path_of = [&](const std::string& file) { return dir.empty() ? file : dir + "/" + file; };
  std::vector<std::string> written;
  if (name == "reflection-path") {
    std::string p = path_of("reflection-path.json");
    save_json_file(p, gcomplex_to_json(example_reflection_path()));
    written.push_back(p);
  } else if (name == "hexagon-z3") {
    std::string p = path_of("hexagon-z3.json");
    save_json_file(p, gcomplex_to_json(example_hexagon_z3()));
    written.push_back(p);
  } else if (name == "wedge2") {
    std::string p = path_of("wedge2.json");
    save_json_file(p, simplicial_to_json(example_wedge2()));
    written.push_back(p);
  } else if (name == "z2-disk") {
    std::string p = path_of("z2-disk.json");
    save_json_file(p, attach_to_json(example_z2_circle(), example_z2_disk_spec()));
    written.push_back(p);
  } else if (name == "random-gcomplex") {
    std::string p = path_of("random-gcomplex-" + std::to_string(seed) + ".json");
    save_json_file(p, gcomplex_to_json(random_gcomplex(seed)));
    written.push_back(p);
  } else {
    fail(ErrorKind::InvalidInput, "unknown example name: " + name);
  }
  return written;
}

}  // namespace orbicell
