#include "orbicell/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace orbicell {

Word reduce_word(Word w) {
  Word out;
  for (int x : w) {
    if (x == 0) fail(ErrorKind::InvalidInput, "zero letter in word");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat_words(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& gen_names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    int g = std::abs(w[i]) - 1;
    out += gen_names[g];
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

FpGroup make_fp_group(std::vector<std::string> generators, std::vector<Word> relators) {
  FpGroup g;
  g.generators = std::move(generators);
  for (Word& w : relators) {
    for (int x : w)
      if (x == 0 || std::abs(x) > static_cast<int>(g.generators.size()))
        fail(ErrorKind::InvalidInput, "relator references an unknown generator");
    g.relators.push_back(reduce_word(std::move(w)));
  }
  return g;
}

Mat relator_matrix(const FpGroup& g) {
  Mat m;
  for (const Word& w : g.relators) {
    Row row(g.generators.size(), 0);
    for (int x : w) row[std::abs(x) - 1] += (x > 0 ? 1 : -1);
    m.push_back(std::move(row));
  }
  return m;
}

AbelianGroup abelianization(const FpGroup& g) {
  return abelian_invariants(static_cast<int>(g.generators.size()), relator_matrix(g));
}

std::vector<Pi0Class> pi0(const SimplicialComplex& s) {
  std::vector<Pi0Class> out;
  for (const auto& comp : components(s)) {
    Pi0Class c;
    c.representative = s.vertices[comp.front()];
    for (int v : comp) c.members.push_back(s.vertices[v]);
    out.push_back(std::move(c));
  }
  return out;
}

EdgePath Pi1Data::tree_path(int from, int to) const {
  if (!in_component[from] || !in_component[to])
    fail(ErrorKind::InvalidInput, "tree path endpoints must lie in the base component");
  auto to_base = [&](int v) {
    std::vector<int> chain{v};
    while (parent[chain.back()] != -1) chain.push_back(parent[chain.back()]);
    return chain;  // v, ..., base
  };
  std::vector<int> a = to_base(from), b = to_base(to);
  // strip the common tail; the last entries stay equal throughout
  while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
    a.pop_back();
    b.pop_back();
  }
  EdgePath p;
  p.base = from;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) p.steps.emplace_back(a[i], a[i + 1]);
  for (std::size_t i = b.size() - 1; i > 0; --i) p.steps.emplace_back(b[i], b[i - 1]);
  return p;
}

Word Pi1Data::word_of_path(const EdgePath& p) const {
  Word w;
  for (const auto& [u, v] : p.steps) {
    auto it = gen_of_edge.find({std::min(u, v), std::max(u, v)});
    if (it == gen_of_edge.end()) continue;  // tree edge
    w.push_back(u < v ? it->second + 1 : -(it->second + 1));
  }
  return reduce_word(w);
}

Pi1Data pi1_presentation(const SimplicialComplex& s, const std::string& base) {
  Pi1Data d;
  d.space = s;
  d.base = s.require_vertex(base);
  const int nv = static_cast<int>(s.vertices.size());
  d.in_component.assign(nv, false);
  d.parent.assign(nv, -1);
  // breadth-first spanning tree with neighbors scanned in ascending order
  std::deque<int> queue{d.base};
  d.in_component[d.base] = true;
  std::set<std::pair<int, int>> tree;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : s.vertex_neighbors(v))
      if (!d.in_component[w]) {
        d.in_component[w] = true;
        d.parent[w] = v;
        tree.insert({std::min(v, w), std::max(v, w)});
        queue.push_back(w);
      }
  }
  std::vector<std::string> names;
  for (const auto& simp : s.simplices) {
    if (simp.size() != 2 || !d.in_component[simp[0]]) continue;
    std::pair<int, int> e{simp[0], simp[1]};
    if (tree.count(e)) continue;
    d.gen_of_edge[e] = static_cast<int>(names.size());
    names.push_back(s.vertices[e.first] + "|" + s.vertices[e.second]);
  }
  std::vector<Word> relators;
  for (const auto& simp : s.simplices) {
    if (simp.size() != 3 || !d.in_component[simp[0]]) continue;
    EdgePath boundary;
    boundary.base = simp[0];
    boundary.steps = {{simp[0], simp[1]}, {simp[1], simp[2]}, {simp[2], simp[0]}};
    relators.push_back(d.word_of_path(boundary));
  }
  d.group = make_fp_group(std::move(names), std::move(relators));
  return d;
}

namespace {

// Apply a group element to an edge path inside the fixed subcomplex; indices
// translate through the ambient space.
EdgePath act_on_path(const GComplex& gc, const SimplicialComplex& fixed, int g,
                     const EdgePath& p) {
  auto move = [&](int v) {
    int ambient = gc.space.require_vertex(fixed.vertices[v]);
    int image = gc.action[g][ambient];
    int back = fixed.index_of_vertex(gc.space.vertices[image]);
    if (back < 0) fail(ErrorKind::InternalError, "centralizer left the fixed subcomplex");
    return back;
  };
  EdgePath out;
  out.base = move(p.base);
  for (const auto& [u, v] : p.steps) out.steps.emplace_back(move(u), move(v));
  return out;
}

int component_of_vertex(const std::vector<std::vector<int>>& comps, int v) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (std::binary_search(comps[i].begin(), comps[i].end(), v)) return static_cast<int>(i);
  return -1;
}

}  // namespace

GuidedPi1 guided_pi1(const GComplex& gc, const Subgroup& h, const std::string& base) {
  if (!is_subgroup(gc.group, h)) fail(ErrorKind::InvalidInput, "guided_pi1: h is not a subgroup");
  GuidedPi1 gp;
  gp.subgroup_h = h;
  gp.rho = GroupHom{h.members};
  gp.fixed = fixed_subcomplex(gc, h);
  if (gp.fixed.vertices.empty())
    fail(ErrorKind::EmptyFixedSet, "the fixed-point set of H has no vertices");
  int base_fixed = gp.fixed.index_of_vertex(base);
  if (base_fixed < 0)
    fail(ErrorKind::InvalidInput, "basepoint " + base + " is not fixed by H");
  gp.basepoint = base;
  gp.fiber = pi1_presentation(gp.fixed, base);
  gp.num_fiber_gens = static_cast<int>(gp.fiber.group.generators.size());
  gp.centralizer_h = centralizer(gc.group, h);

  std::vector<std::vector<int>> comps = components(gp.fixed);
  const int base_comp = component_of_vertex(comps, base_fixed);
  auto moved_base = [&](int g) {
    int ambient = gc.space.require_vertex(base);
    return gp.fixed.index_of_vertex(gc.space.vertices[gc.action[g][ambient]]);
  };
  std::vector<int> ch0;
  for (int g : gp.centralizer_h.members)
    if (component_of_vertex(comps, moved_base(g)) == base_comp) ch0.push_back(g);
  gp.ch_base = Subgroup{ch0};
  if (!is_subgroup(gc.group, gp.ch_base))
    fail(ErrorKind::InternalError, "C(H)_o is not a subgroup");

  // Shortest paths o -> g.o, breadth first with lexicographic tie-breaking.
  std::map<int, EdgePath> gamma;
  for (int g : ch0) gamma[g] = gp.fiber.tree_path(base_fixed, moved_base(g));

  std::vector<std::string> names = gp.fiber.group.generators;
  std::vector<int> t_index(gc.group.order, -1);
  for (int g : ch0) {
    t_index[g] = static_cast<int>(names.size());
    names.push_back("t" + std::to_string(g));
    gp.t_elem.push_back(g);
  }
  std::vector<Word> relators = gp.fiber.group.relators;
  for (int g : ch0)
    for (int g2 : ch0) {
      EdgePath loop = concat_paths(gamma[g], act_on_path(gc, gp.fixed, g, gamma[g2]));
      int prod = gc.group.mul(g, g2);
      loop = concat_paths(loop, reverse_path(gamma[prod]));
      Word lambda = gp.fiber.word_of_path(loop);
      Word rel{t_index[g] + 1, t_index[g2] + 1, -(t_index[prod] + 1)};
      rel = concat_words(rel, inverse_word(lambda));
      relators.push_back(reduce_word(rel));
    }
  gp.presentation = make_fp_group(names, std::move(relators));
  gp.proj.assign(gp.presentation.generators.size(), 0);
  for (int i = 0; i < gp.num_fiber_gens; ++i) gp.fiber_incl.push_back(i);
  for (std::size_t i = 0; i < gp.t_elem.size(); ++i)
    gp.proj[gp.num_fiber_gens + i] = gp.t_elem[i];

  // proj must send every relator to the identity of C(H).
  for (const Word& rel : gp.presentation.relators) {
    int v = 0;
    for (int x : rel) {
      int e = gp.proj[std::abs(x) - 1];
      v = gc.group.mul(v, x > 0 ? e : gc.group.inv(e));
    }
    if (v != 0) fail(ErrorKind::InternalError, "projection is not a homomorphism");
  }
  return gp;
}

SequenceReport sequence_check(const GComplex& gc, const Subgroup& h, const std::string& base) {
  GuidedPi1 gp = guided_pi1(gc, h, base);
  SequenceReport rep;
  rep.proj_is_hom = true;  // guided_pi1 verified it

  // (i) exactness at C(H): the subgroup generated by proj images must equal
  // C(H)_o, the kernel of g -> [g.o] as a pointed map.
  std::vector<int> image_gens;
  for (std::size_t i = 0; i < gp.presentation.generators.size(); ++i)
    image_gens.push_back(gp.proj[i]);
  Subgroup image = generated_subgroup(gc.group, image_gens);
  rep.at_centralizer.holds = image.members == gp.ch_base.members;
  for (int g : image.members) rep.at_centralizer.left.push_back(gc.group.label(g));
  for (int g : gp.ch_base.members) rep.at_centralizer.right.push_back(gc.group.label(g));

  // (ii) exactness at pi_0(Y^H): the classes dying in guided pi_0 are the
  // C(H)-orbit of [o]; enumerate both sides.
  std::vector<std::vector<int>> comps = components(gp.fixed);
  rep.pi0_fixed = static_cast<int>(comps.size());
  auto comp_of = [&](int v) { return component_of_vertex(comps, v); };
  auto act_comp = [&](int g, int c) {
    int ambient = gc.space.require_vertex(gp.fixed.vertices[comps[c].front()]);
    int image_v = gp.fixed.index_of_vertex(gc.space.vertices[gc.action[g][ambient]]);
    if (image_v < 0) fail(ErrorKind::InternalError, "C(H) must preserve Y^H");
    return comp_of(image_v);
  };
  int base_comp = comp_of(gp.fixed.index_of_vertex(base));
  std::set<int> hit;
  for (int g : gp.centralizer_h.members) {
    int ambient = gc.space.require_vertex(base);
    hit.insert(comp_of(gp.fixed.index_of_vertex(gc.space.vertices[gc.action[g][ambient]])));
  }
  std::set<int> orbit{base_comp};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int c : std::vector<int>(orbit.begin(), orbit.end()))
      for (int g : gp.centralizer_h.members)
        if (orbit.insert(act_comp(g, c)).second) grew = true;
  }
  rep.at_pi0.holds = hit == orbit;
  for (int c : hit) rep.at_pi0.left.push_back(gp.fixed.vertices[comps[c].front()]);
  for (int c : orbit) rep.at_pi0.right.push_back(gp.fixed.vertices[comps[c].front()]);

  // guided pi_0 = pi_0(Y^H) / C(H)
  {
    std::vector<int> cls(comps.size());
    std::iota(cls.begin(), cls.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (cls[x] != x) x = cls[x] = cls[cls[x]];
      return x;
    };
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int g : gp.centralizer_h.members) {
        int a = find(static_cast<int>(c)), b = find(act_comp(g, static_cast<int>(c)));
        if (a != b) cls[std::max(a, b)] = std::min(a, b);
      }
    std::set<int> roots;
    for (std::size_t c = 0; c < comps.size(); ++c) roots.insert(find(static_cast<int>(c)));
    rep.pi0_guided = static_cast<int>(roots.size());
    for (int r : roots) rep.pi0_guided_reps.push_back(gp.fixed.vertices[comps[r].front()]);
  }

  // (iii) abelianized injectivity of the fiber inclusion, plus its cokernel.
  const int m = gp.num_fiber_gens;
  const int n = static_cast<int>(gp.presentation.generators.size());
  Mat images;
  for (int i = 0; i < m; ++i) {
    Row row(n, 0);
    row[i] = 1;
    images.push_back(std::move(row));
  }
  AbelianMapReport amr = abelian_map_report(m, relator_matrix(gp.fiber.group), n,
                                            relator_matrix(gp.presentation), images);
  rep.ab_injective = amr.injective;
  rep.fiber_ab = amr.source;
  rep.guided_ab = amr.target;
  rep.cokernel = amr.cokernel;
  return rep;
}

std::vector<IsotropyClass> pi0_isotropy(const GComplex& gc, const FiniteGroup& g,
                                        long long hom_budget) {
  std::vector<GroupHom> homs = injective_homs(g, gc.group, hom_budget);
  std::vector<IsotropyClass> out;
  if (homs.empty()) return out;

  struct Node {
    int hom;
    std::vector<int> verts;  // ambient vertex indices of the component, sorted
  };
  std::vector<Node> nodes;
  std::map<std::pair<int, std::vector<int>>, int> node_index;
  for (std::size_t hi = 0; hi < homs.size(); ++hi) {
    std::set<int> img(homs[hi].images.begin(), homs[hi].images.end());
    Subgroup sub{std::vector<int>(img.begin(), img.end())};
    SimplicialComplex fixed = fixed_subcomplex(gc, sub);
    for (const auto& comp : components(fixed)) {
      Node n;
      n.hom = static_cast<int>(hi);
      for (int v : comp) n.verts.push_back(gc.space.require_vertex(fixed.vertices[v]));
      std::sort(n.verts.begin(), n.verts.end());
      node_index[{n.hom, n.verts}] = static_cast<int>(nodes.size());
      nodes.push_back(std::move(n));
    }
  }
  std::vector<int> uf(nodes.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto hom_index_of = [&](const std::vector<int>& images) {
    for (std::size_t i = 0; i < homs.size(); ++i)
      if (homs[i].images == images) return static_cast<int>(i);
    fail(ErrorKind::InternalError, "conjugated homomorphism missing from the enumeration");
  };
  for (std::size_t nidx = 0; nidx < nodes.size(); ++nidx)
    for (int gamma = 0; gamma < gc.group.order; ++gamma) {
      std::vector<int> conj_images(homs[nodes[nidx].hom].images.size());
      for (std::size_t x = 0; x < conj_images.size(); ++x)
        conj_images[x] = gc.group.conj(gamma, homs[nodes[nidx].hom].images[x]);
      int hi = hom_index_of(conj_images);
      std::vector<int> moved;
      for (int v : nodes[nidx].verts) moved.push_back(gc.action[gamma][v]);
      std::sort(moved.begin(), moved.end());
      auto it = node_index.find({hi, moved});
      if (it == node_index.end())
        fail(ErrorKind::InternalError, "translated component missing from the enumeration");
      int a = find(static_cast<int>(nidx)), b = find(it->second);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  std::set<int> roots;
  for (std::size_t i = 0; i < nodes.size(); ++i) roots.insert(find(static_cast<int>(i)));
  for (int r : roots) {
    IsotropyClass c;
    c.hom_index = nodes[r].hom;
    c.hom_images = homs[nodes[r].hom].images;
    c.component_rep = gc.space.vertices[nodes[r].verts.front()];
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Word> conj_action(const GuidedPi1& gp, const Word& z) {
  for (int x : z)
    if (x == 0 || std::abs(x) > static_cast<int>(gp.presentation.generators.size()))
      fail(ErrorKind::InvalidInput, "conjugating word references an unknown generator");
  std::vector<Word> out;
  for (std::size_t i = 0; i < gp.presentation.generators.size(); ++i) {
    Word w{static_cast<int>(i) + 1};
    out.push_back(reduce_word(concat_words(concat_words(z, w), inverse_word(z))));
  }
  return out;
}

BasepointChange change_basepoint(const GComplex& gc, const Subgroup& h, const GuidedPi1& source,
                                 const EdgePath& path_in_fixed) {
  const SimplicialComplex& fixed = source.fixed;
  int o1 = fixed.index_of_vertex(source.basepoint);
  if (path_in_fixed.base != o1)
    fail(ErrorKind::InvalidInput, "path must start at the source basepoint");
  int o2 = path_in_fixed.end();
  BasepointChange out;
  out.target = guided_pi1(gc, h, fixed.vertices[o2]);
  const GuidedPi1& target = out.target;

  // Fiber generators: conjugate each non-tree-edge loop of the target
  // presentation by the path; t-generators pick up the path and its
  // translate.
  for (std::size_t i = 0; i < target.presentation.generators.size(); ++i) {
    if (static_cast<int>(i) < target.num_fiber_gens) {
      std::pair<int, int> edge{-1, -1};
      for (const auto& [e, gi] : target.fiber.gen_of_edge)
        if (gi == static_cast<int>(i)) edge = e;
      EdgePath loop = target.fiber.tree_path(o2, edge.first);
      loop.steps.emplace_back(edge.first, edge.second);
      loop = concat_paths(loop, target.fiber.tree_path(edge.second, o2));
      EdgePath total = concat_paths(concat_paths(path_in_fixed, loop), reverse_path(path_in_fixed));
      out.images.push_back(source.fiber.word_of_path(total));
    } else {
      int g = target.t_elem[i - target.num_fiber_gens];
      int ti = -1;
      for (std::size_t k = 0; k < source.t_elem.size(); ++k)
        if (source.t_elem[k] == g) ti = static_cast<int>(k);
      if (ti < 0)
        fail(ErrorKind::InternalError, "basepoints in one component disagree on C(H)_o");
      EdgePath gamma2 = target.fiber.tree_path(o2, [&] {
        int ambient = gc.space.require_vertex(fixed.vertices[o2]);
        return fixed.index_of_vertex(gc.space.vertices[gc.action[g][ambient]]);
      }());
      EdgePath carried = concat_paths(path_in_fixed, gamma2);
      // translate the reversed path by g
      EdgePath g_rev = reverse_path(path_in_fixed);
      {
        auto move = [&](int v) {
          int ambient = gc.space.require_vertex(fixed.vertices[v]);
          return fixed.index_of_vertex(gc.space.vertices[gc.action[g][ambient]]);
        };
        EdgePath tmp;
        tmp.base = move(g_rev.base);
        for (auto& [u, v] : g_rev.steps) tmp.steps.emplace_back(move(u), move(v));
        g_rev = tmp;
      }
      carried = concat_paths(carried, g_rev);
      // express through the source presentation: fiber word times t_g
      EdgePath gamma1 = source.fiber.tree_path(o1, [&] {
        int ambient = gc.space.require_vertex(source.basepoint);
        return fixed.index_of_vertex(gc.space.vertices[gc.action[g][ambient]]);
      }());
      Word w = source.fiber.word_of_path(concat_paths(carried, reverse_path(gamma1)));
      Word img = concat_words(w, Word{source.num_fiber_gens + ti + 1});
      out.images.push_back(reduce_word(img));
    }
  }

  // projection compatibility
  out.proj_compatible = true;
  for (std::size_t i = 0; i < target.presentation.generators.size(); ++i) {
    int v = 0;
    for (int x : out.images[i]) {
      int e = source.proj[std::abs(x) - 1];
      v = gc.group.mul(v, x > 0 ? e : gc.group.inv(e));
    }
    if (v != target.proj[i]) out.proj_compatible = false;
  }

  // abelianized isomorphism
  const int m = static_cast<int>(target.presentation.generators.size());
  const int n = static_cast<int>(source.presentation.generators.size());
  Mat images;
  for (int i = 0; i < m; ++i) {
    Row row(n, 0);
    for (int x : out.images[i]) row[std::abs(x) - 1] += (x > 0 ? 1 : -1);
    images.push_back(std::move(row));
  }
  AbelianMapReport amr = abelian_map_report(m, relator_matrix(target.presentation), n,
                                            relator_matrix(source.presentation), images);
  out.ab_isomorphism = amr.injective && amr.cokernel.trivial();
  return out;
}

}  // namespace orbicell
