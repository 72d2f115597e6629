#include "orbicell/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbicell {

namespace {

std::string lift_token(const std::string& base_vertex, int coset) {
  return base_vertex + "@" + std::to_string(coset);
}

}  // namespace

int CoverData::project_simplex(int ts) const {
  std::vector<int> img;
  for (int v : total.simplices[ts]) img.push_back(vertex_proj[v]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return base.index_of_simplex(img);
}

CoverData cover_from_subgroup(const SimplicialComplex& s, const std::string& base,
                              const std::vector<Word>& subgroup_words, int index_bound,
                              long long max_steps) {
  if (components(s).size() != 1)
    fail(ErrorKind::InvalidInput, "cover construction requires a connected base");
  Pi1Data pi1 = pi1_presentation(s, base);
  const int ngens = static_cast<int>(pi1.group.generators.size());
  for (const Word& w : subgroup_words)
    for (int x : w)
      if (x == 0 || std::abs(x) > ngens)
        fail(ErrorKind::InvalidInput, "subgroup word references an unknown generator");

  CoverData cd;
  cd.base = s;
  cd.base_vertex = base;
  cd.gen_names = pi1.group.generators;
  for (const auto& [edge, g] : pi1.gen_of_edge) {
    (void)g;
    cd.gen_edges.emplace_back(s.vertices[edge.first], s.vertices[edge.second]);
  }
  cd.subgroup_words = subgroup_words;
  cd.table = coset_enumeration(ngens, pi1.group.relators, subgroup_words, index_bound, max_steps);
  const int index = cd.table.num_cosets;

  // One copy of each simplex per coset, glued through the coset action of
  // the edge generators; tree edges act trivially.
  auto edge_word = [&](int u, int v) {
    EdgePath step;
    step.base = u;
    step.steps = {{u, v}};
    return pi1.word_of_path(step);
  };
  std::vector<std::vector<std::string>> simplices;
  for (const auto& simp : s.simplices) {
    for (int c = 0; c < index; ++c) {
      std::vector<std::string> lifted;
      for (int v : simp)
        lifted.push_back(lift_token(s.vertices[v], cd.table.apply_word(c, edge_word(simp[0], v))));
      simplices.push_back(std::move(lifted));
    }
  }
  cd.total = make_simplicial(simplices);
  cd.vertex_proj.assign(cd.total.vertices.size(), -1);
  for (std::size_t tv = 0; tv < cd.total.vertices.size(); ++tv) {
    const std::string& tok = cd.total.vertices[tv];
    auto at = tok.rfind('@');
    cd.vertex_proj[tv] = s.require_vertex(tok.substr(0, at));
  }
  cd.base_lift = lift_token(base, 0);
  return cd;
}

ValidationReport validate_cover(const CoverData& cd) {
  ValidationReport r;
  const int index = cd.index();
  std::vector<int> fiber_count(cd.base.size(), 0);
  for (std::size_t ts = 0; ts < cd.total.size(); ++ts) {
    int bs = cd.project_simplex(static_cast<int>(ts));
    if (bs < 0 || cd.base.simplices[bs].size() != cd.total.simplices[ts].size()) {
      r.violations.push_back({"simplicial", "projection degenerates simplex " +
                                                cd.total.simplex_token(static_cast<int>(ts))});
      continue;
    }
    ++fiber_count[bs];
  }
  for (std::size_t bs = 0; bs < cd.base.size(); ++bs)
    if (fiber_count[bs] != index)
      r.violations.push_back({"fiber", "simplex " + cd.base.simplex_token(static_cast<int>(bs)) +
                                           " has fiber of size " + std::to_string(fiber_count[bs]) +
                                           " (index is " + std::to_string(index) + ")"});
  // star bijectivity at each total vertex
  for (std::size_t tv = 0; tv < cd.total.vertices.size(); ++tv) {
    std::set<int> images;
    int count = 0;
    for (std::size_t ts = 0; ts < cd.total.size(); ++ts) {
      const auto& simp = cd.total.simplices[ts];
      if (std::find(simp.begin(), simp.end(), static_cast<int>(tv)) == simp.end()) continue;
      ++count;
      images.insert(cd.project_simplex(static_cast<int>(ts)));
    }
    int base_count = 0;
    int bv = cd.vertex_proj[tv];
    for (std::size_t bs = 0; bs < cd.base.size(); ++bs) {
      const auto& simp = cd.base.simplices[bs];
      if (std::find(simp.begin(), simp.end(), bv) != simp.end()) ++base_count;
    }
    if (count != static_cast<int>(images.size()) || count != base_count)
      r.violations.push_back({"star", "projection is not a bijection on the star of " +
                                          cd.total.vertices[tv]});
  }
  return r;
}

DeckGroup deck_group(const CoverData& cd) {
  const int nv = static_cast<int>(cd.total.vertices.size());
  // neighbor over a given base vertex; unique on a cover
  auto neighbor_over = [&](int tv, int bv) {
    int found = -1;
    for (int w : cd.total.vertex_neighbors(tv))
      if (cd.vertex_proj[w] == bv) {
        if (found >= 0) fail(ErrorKind::InternalError, "cover star is not bijective");
        found = w;
      }
    return found;
  };
  int seed = cd.total.require_vertex(cd.base_lift);
  std::vector<std::vector<int>> perms;
  for (int target = 0; target < nv; ++target) {
    if (cd.vertex_proj[target] != cd.vertex_proj[seed]) continue;
    std::vector<int> phi(nv, -1);
    phi[seed] = target;
    std::vector<int> queue{seed};
    bool ok = true;
    while (!queue.empty() && ok) {
      int v = queue.back();
      queue.pop_back();
      for (int w : cd.total.vertex_neighbors(v)) {
        int img = neighbor_over(phi[v], cd.vertex_proj[w]);
        if (img < 0) {
          ok = false;
          break;
        }
        if (phi[w] == -1) {
          phi[w] = img;
          queue.push_back(w);
        } else if (phi[w] != img) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || std::count(phi.begin(), phi.end(), -1) > 0) continue;
    // must be a bijection, simplicial both ways, and commute with projection
    std::vector<bool> hit(nv, false);
    for (int v : phi) {
      if (hit[v]) ok = false;
      hit[v] = true;
    }
    for (std::size_t ts = 0; ts < cd.total.size() && ok; ++ts) {
      std::vector<int> img;
      for (int v : cd.total.simplices[ts]) img.push_back(phi[v]);
      std::sort(img.begin(), img.end());
      if (cd.total.index_of_simplex(img) < 0) ok = false;
    }
    for (int v = 0; v < nv && ok; ++v)
      if (cd.vertex_proj[phi[v]] != cd.vertex_proj[v]) ok = false;
    if (ok) perms.push_back(std::move(phi));
  }
  std::sort(perms.begin(), perms.end());  // identity is lex-least
  DeckGroup out;
  out.vertex_perms = perms;
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(nv);
      for (int v = 0; v < nv; ++v) comp[v] = perms[a][perms[b][v]];
      auto it = index.find(comp);
      if (it == index.end())
        fail(ErrorKind::InternalError, "deck transformations are not closed under composition");
      table[a][b] = it->second;
    }
  out.group = make_group(std::move(table));
  return out;
}

EdgePath lift_path_in_cover(const CoverData& cd, const EdgePath& base_path,
                            const std::string& start_lift) {
  int at = cd.total.require_vertex(start_lift);
  if (cd.vertex_proj[at] != base_path.base)
    fail(ErrorKind::InvalidInput, "start lift does not project to the path base");
  EdgePath out;
  out.base = at;
  for (const auto& [u, v] : base_path.steps) {
    (void)u;
    int next = -1;
    for (int w : cd.total.vertex_neighbors(at))
      if (cd.vertex_proj[w] == v) {
        if (next >= 0) fail(ErrorKind::InternalError, "cover lift is ambiguous");
        next = w;
      }
    if (next < 0) fail(ErrorKind::InternalError, "cover lift does not exist");
    out.steps.emplace_back(at, next);
    at = next;
  }
  return out;
}

LiftResult lift_edge_path(const GComplex& gc, const QuotientData& q, const QuotientPath& p,
                          const std::string& start_lift) {
  LiftResult out;
  int at = gc.space.require_vertex(start_lift);
  std::vector<int> at_simplex{at};
  int at_vertex_simplex = gc.space.index_of_simplex(at_simplex);
  if (p.start_cell < 0 || p.start_cell >= static_cast<int>(q.quotient.size()))
    fail(ErrorKind::InvalidInput, "quotient path start cell out of range");
  if (q.orbit_map[at_vertex_simplex] != p.start_cell)
    fail(ErrorKind::InvalidInput, "start lift does not project to the path start");
  out.path.base = at;
  for (const QuotientPathStep& step : p.steps) {
    if (step.edge_cell < 0 || step.edge_cell >= static_cast<int>(q.quotient.size()) ||
        q.quotient.cells[step.edge_cell].dim != 1)
      fail(ErrorKind::InvalidInput, "quotient path step is not an edge cell");
    const auto& lift = gc.space.simplices[q.section[step.edge_cell]];
    int entry = step.forward ? lift[0] : lift[1];
    int exit = step.forward ? lift[1] : lift[0];
    // candidates: translates of the chosen lift entering at the current vertex
    std::set<std::pair<int, int>> targets;  // (moved edge simplex, moved exit)
    for (int g = 0; g < gc.group.order; ++g)
      if (gc.action[g][entry] == at)
        targets.emplace(gc.act_simplex_index(g, q.section[step.edge_cell]), gc.action[g][exit]);
    if (targets.empty())
      fail(ErrorKind::InternalError, "no lift of a quotient step exists");
    out.max_candidates = std::max(out.max_candidates, static_cast<int>(targets.size()));
    if (targets.size() > 1) out.unique = false;
    int next = targets.begin()->second;  // transversal rule: least candidate
    out.path.steps.emplace_back(at, next);
    at = next;
  }
  return out;
}

CanonicalDeckReport canonical_cover_deck(const GComplex& gc) {
  if (components(gc.space).size() != 1)
    fail(ErrorKind::InvalidInput, "canonical cover requires a connected space");
  CanonicalDeckReport rep;

  std::vector<int> kernel;
  for (int g = 0; g < gc.group.order; ++g) {
    bool fixes_all = true;
    for (std::size_t v = 0; v < gc.space.vertices.size(); ++v)
      if (gc.action[g][v] != static_cast<int>(v)) fixes_all = false;
    if (fixes_all) kernel.push_back(g);
  }
  rep.action_kernel = Subgroup{kernel};

  std::set<std::vector<int>> perm_set;
  for (int g = 0; g < gc.group.order; ++g) perm_set.insert(gc.action[g]);
  std::vector<std::vector<int>> perms(perm_set.begin(), perm_set.end());
  if (static_cast<int>(perms.size()) * static_cast<int>(kernel.size()) != gc.group.order)
    fail(ErrorKind::InternalError, "action image size disagrees with the kernel index");
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  const int nv = static_cast<int>(gc.space.vertices.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(nv);
      for (int v = 0; v < nv; ++v) comp[v] = perms[a][perms[b][v]];
      table[a][b] = index.at(comp);
    }
  rep.via_action.group = make_group(std::move(table));
  rep.via_action.vertex_perms = perms;

  rep.free_action = true;
  for (std::size_t v = 0; v < gc.space.vertices.size(); ++v)
    if (gc.vertex_stabilizer(static_cast<int>(v)).size() > 1) rep.free_action = false;
  rep.trivial_isotropy_cover = rep.free_action;
  if (!rep.free_action) return rep;

  // Independent computation for free actions: propagate over the orbit map
  // using end labels carried by the chosen edge lifts.
  QuotientData q = quotient(gc);
  struct EdgeEnds {
    int end0, end1;
  };
  std::map<int, EdgeEnds> ends;  // edge simplex -> labeled endpoints
  for (std::size_t s = 0; s < gc.space.size(); ++s) {
    if (gc.space.simplices[s].size() != 2) continue;
    int cell = q.orbit_map[s];
    const auto& lift = gc.space.simplices[q.section[cell]];
    for (int g = 0; g < gc.group.order; ++g)
      if (gc.act_simplex_index(g, q.section[cell]) == static_cast<int>(s)) {
        ends[static_cast<int>(s)] = {gc.action[g][lift[0]], gc.action[g][lift[1]]};
        break;  // free: the carrier is unique
      }
  }
  auto edges_at = [&](int v) {
    std::vector<int> out;
    for (std::size_t s = 0; s < gc.space.size(); ++s)
      if (gc.space.simplices[s].size() == 2 &&
          (gc.space.simplices[s][0] == v || gc.space.simplices[s][1] == v))
        out.push_back(static_cast<int>(s));
    return out;
  };
  int seed = 0;
  std::vector<std::vector<int>> found;
  for (int target = 0; target < nv; ++target) {
    if (q.orbit_map[gc.space.index_of_simplex({target})] !=
        q.orbit_map[gc.space.index_of_simplex({seed})])
      continue;
    std::vector<int> phi(nv, -1);
    phi[seed] = target;
    std::vector<int> queue{seed};
    bool ok = true;
    while (!queue.empty() && ok) {
      int v = queue.back();
      queue.pop_back();
      for (int e : edges_at(v)) {
        const EdgeEnds& ee = ends.at(e);
        int other = (ee.end0 == v) ? ee.end1 : ee.end0;
        bool at_end0 = (ee.end0 == v);
        // the unique edge at phi[v] with the same orbit entering at the same end
        int img_other = -1;
        for (int e2 : edges_at(phi[v])) {
          if (q.orbit_map[e2] != q.orbit_map[e]) continue;
          const EdgeEnds& f = ends.at(e2);
          if ((at_end0 && f.end0 == phi[v]) || (!at_end0 && f.end1 == phi[v])) {
            if (img_other >= 0) {
              ok = false;
              break;
            }
            img_other = at_end0 ? f.end1 : f.end0;
          }
        }
        if (img_other < 0) {
          ok = false;
          break;
        }
        if (phi[other] == -1) {
          phi[other] = img_other;
          queue.push_back(other);
        } else if (phi[other] != img_other) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || std::count(phi.begin(), phi.end(), -1) > 0) continue;
    for (std::size_t s = 0; s < gc.space.size() && ok; ++s) {
      std::vector<int> img;
      for (int v : gc.space.simplices[s]) img.push_back(phi[v]);
      std::sort(img.begin(), img.end());
      int is = gc.space.index_of_simplex(img);
      if (is < 0 || q.orbit_map[is] != q.orbit_map[s]) ok = false;
    }
    if (ok) found.push_back(std::move(phi));
  }
  std::sort(found.begin(), found.end());
  DeckGroup prop;
  prop.vertex_perms = found;
  std::map<std::vector<int>, int> pidx;
  for (std::size_t i = 0; i < found.size(); ++i) pidx[found[i]] = static_cast<int>(i);
  const int pn = static_cast<int>(found.size());
  std::vector<std::vector<int>> ptable(pn, std::vector<int>(pn));
  for (int a = 0; a < pn; ++a)
    for (int b = 0; b < pn; ++b) {
      std::vector<int> comp(nv);
      for (int v = 0; v < nv; ++v) comp[v] = found[a][found[b][v]];
      auto it = pidx.find(comp);
      if (it == pidx.end())
        fail(ErrorKind::InternalError, "propagated deck set is not closed under composition");
      ptable[a][b] = it->second;
    }
  prop.group = make_group(std::move(ptable));
  rep.match = (found == rep.via_action.vertex_perms);
  rep.via_propagation = std::move(prop);
  return rep;
}

}  // namespace orbicell
