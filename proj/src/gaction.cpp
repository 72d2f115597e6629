#include "orbicell/gaction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbicell {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_choice(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return splitmix64(h);
}

}  // namespace

std::vector<int> GComplex::act_simplex(int g, const std::vector<int>& s) const {
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(action[g][v]);
  std::sort(out.begin(), out.end());
  return out;
}

int GComplex::act_simplex_index(int g, int s) const {
  return space.index_of_simplex(act_simplex(g, space.simplices[s]));
}

std::vector<int> GComplex::vertex_stabilizer(int v) const {
  std::vector<int> out;
  for (int g = 0; g < group.order; ++g)
    if (action[g][v] == v) out.push_back(g);
  return out;
}

std::vector<int> GComplex::simplex_stabilizer(int s) const {
  std::vector<int> out;
  for (int g = 0; g < group.order; ++g)
    if (act_simplex(g, space.simplices[s]) == space.simplices[s]) out.push_back(g);
  return out;
}

GComplex make_gcomplex(SimplicialComplex space, FiniteGroup group,
                       std::vector<std::vector<int>> action, std::string base_vertex) {
  const int nv = static_cast<int>(space.vertices.size());
  if (static_cast<int>(action.size()) != group.order)
    fail(ErrorKind::InvalidInput, "action must assign a vertex map to every group element");
  for (int g = 0; g < group.order; ++g) {
    if (static_cast<int>(action[g].size()) != nv)
      fail(ErrorKind::InvalidInput, "action map size mismatch for element " + group.label(g));
    std::vector<bool> seen(nv, false);
    for (int v : action[g]) {
      if (v < 0 || v >= nv || seen[v])
        fail(ErrorKind::InvalidInput, "non-bijective action of element " + group.label(g));
      seen[v] = true;
    }
  }
  if (!base_vertex.empty()) space.require_vertex(base_vertex);
  GComplex gc;
  gc.space = std::move(space);
  gc.group = std::move(group);
  gc.action = std::move(action);
  gc.base_vertex = std::move(base_vertex);
  return gc;
}

ActionReport validate_action(const GComplex& gc) {
  ActionReport r;
  const int nv = static_cast<int>(gc.space.vertices.size());
  for (int v = 0; v < nv; ++v)
    if (gc.action[0][v] != v) {
      r.violations.push_back({"group-law", "identity element moves vertex " + gc.space.vertices[v]});
      break;
    }
  for (int g = 0; g < gc.group.order; ++g)
    for (int h = 0; h < gc.group.order; ++h)
      for (int v = 0; v < nv; ++v)
        if (gc.action[gc.group.mul(g, h)][v] != gc.action[g][gc.action[h][v]]) {
          r.violations.push_back({"group-law", "(" + gc.group.label(g) + "*" + gc.group.label(h) +
                                                   ")." + gc.space.vertices[v] +
                                                   " != " + gc.group.label(g) + ".(" +
                                                   gc.group.label(h) + "." + gc.space.vertices[v] +
                                                   ")"});
          g = h = gc.group.order;  // one witness is enough
          break;
        }
  for (int g = 0; g < gc.group.order; ++g)
    for (std::size_t s = 0; s < gc.space.size(); ++s)
      if (gc.act_simplex_index(g, static_cast<int>(s)) < 0) {
        r.violations.push_back({"simplicial", "element " + gc.group.label(g) +
                                                  " does not map simplex " +
                                                  gc.space.simplex_token(static_cast<int>(s)) +
                                                  " to a simplex"});
        g = gc.group.order;
        break;
      }
  if (r.violations.empty()) {
    for (int g = 1; g < gc.group.order; ++g)
      for (std::size_t s = 0; s < gc.space.size(); ++s) {
        const auto& simp = gc.space.simplices[s];
        if (gc.act_simplex(g, simp) == simp) {
          bool pointwise = true;
          for (int v : simp)
            if (gc.action[g][v] != v) pointwise = false;
          if (!pointwise)
            r.violations.push_back({"admissibility",
                                    "element " + gc.group.label(g) + " fixes simplex " +
                                        gc.space.simplex_token(static_cast<int>(s)) +
                                        " setwise but not vertex-wise"});
        }
      }
    r.admissible =
        std::none_of(r.violations.begin(), r.violations.end(),
                     [](const Violation& v) { return v.check == "admissibility"; });
    r.suggest_subdivision = !r.admissible;
    r.regular = r.admissible && is_orbit_regular(gc);
  }
  return r;
}

bool is_admissible(const GComplex& gc) {
  for (int g = 1; g < gc.group.order; ++g)
    for (std::size_t s = 0; s < gc.space.size(); ++s) {
      const auto& simp = gc.space.simplices[s];
      if (gc.act_simplex(g, simp) == simp)
        for (int v : simp)
          if (gc.action[g][v] != v) return false;
    }
  return true;
}

bool is_orbit_regular(const GComplex& gc) {
  // No simplex may have two distinct proper faces in one orbit.
  for (std::size_t s = 0; s < gc.space.size(); ++s) {
    const auto& simp = gc.space.simplices[s];
    const int k = static_cast<int>(simp.size());
    if (k < 2) continue;
    std::vector<std::vector<int>> subs;
    for (int mask = 1; mask < (1 << k) - 1; ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) sub.push_back(simp[b]);
      subs.push_back(std::move(sub));
    }
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) {
        if (subs[i].size() != subs[j].size()) continue;
        for (int g = 0; g < gc.group.order; ++g)
          if (gc.act_simplex(g, subs[i]) == subs[j]) return false;
      }
  }
  return true;
}

GComplex barycentric_subdivision(const GComplex& gc) {
  SimplicialComplex sd = barycentric_subdivision(gc.space);
  // Subdivision vertices are simplex tokens of the original complex.
  std::vector<int> simplex_of_sd_vertex(sd.vertices.size(), -1);
  for (std::size_t s = 0; s < gc.space.size(); ++s) {
    int v = sd.index_of_vertex(gc.space.simplex_token(static_cast<int>(s)));
    if (v < 0) fail(ErrorKind::InternalError, "subdivision lost a simplex vertex");
    simplex_of_sd_vertex[v] = static_cast<int>(s);
  }
  std::vector<std::vector<int>> action(gc.group.order,
                                       std::vector<int>(sd.vertices.size(), -1));
  for (int g = 0; g < gc.group.order; ++g)
    for (std::size_t v = 0; v < sd.vertices.size(); ++v) {
      int img = gc.act_simplex_index(g, simplex_of_sd_vertex[v]);
      if (img < 0) fail(ErrorKind::InvalidInput, "subdivision of a non-simplicial action");
      action[g][v] = sd.index_of_vertex(gc.space.simplex_token(img));
    }
  std::string base;
  if (!gc.base_vertex.empty()) base = gc.base_vertex;  // original vertices survive as 0-simplices
  return make_gcomplex(std::move(sd), gc.group, std::move(action), base);
}

GComplex skeleton(const GComplex& gc, int n) {
  return make_gcomplex(skeleton(gc.space, n), gc.group, gc.action,
                       n >= 0 ? gc.base_vertex : "");
}

QuotientData quotient(const GComplex& gc) {
  QuotientData q;
  const int ns = static_cast<int>(gc.space.size());
  q.orbit_map.assign(ns, -1);
  std::vector<int> least_lift;
  for (int s = 0; s < ns; ++s) {
    if (q.orbit_map[s] != -1) continue;
    // Simplices are listed in (size, lex) order, so the first unseen member
    // of an orbit is its lex-least representative.
    int cell = static_cast<int>(least_lift.size());
    for (int g = 0; g < gc.group.order; ++g) {
      int img = gc.act_simplex_index(g, s);
      if (img < 0) fail(ErrorKind::InvalidInput, "quotient of a non-simplicial action");
      q.orbit_map[img] = cell;
    }
    least_lift.push_back(s);
  }
  std::vector<Cell> cells;
  for (std::size_t c = 0; c < least_lift.size(); ++c)
    cells.push_back({gc.space.simplex_token(least_lift[c]),
                     static_cast<int>(gc.space.simplices[least_lift[c]].size()) - 1});
  std::set<std::pair<std::string, std::string>> pair_set;
  for (int s = 0; s < ns; ++s) {
    const auto& simp = gc.space.simplices[s];
    const int k = static_cast<int>(simp.size());
    for (int mask = 1; mask < (1 << k) - 1; ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) sub.push_back(simp[b]);
      int f = gc.space.index_of_simplex(sub);
      pair_set.emplace(cells[q.orbit_map[s]].id, cells[q.orbit_map[f]].id);
    }
  }
  std::vector<std::pair<std::string, std::string>> pairs(pair_set.begin(), pair_set.end());
  q.quotient = make_complex(cells, pairs, /*close=*/false);
  // make_complex re-sorted the cells; rebuild the index maps against it.
  std::vector<int> new_of_old(least_lift.size());
  for (std::size_t c = 0; c < least_lift.size(); ++c)
    new_of_old[c] = q.quotient.require(cells[c].id);
  for (int s = 0; s < ns; ++s) q.orbit_map[s] = new_of_old[q.orbit_map[s]];
  q.section.assign(q.quotient.size(), -1);
  for (std::size_t c = 0; c < least_lift.size(); ++c) q.section[new_of_old[c]] = least_lift[c];
  q.stabilizers.clear();
  for (std::size_t c = 0; c < q.quotient.size(); ++c)
    q.stabilizers.push_back(Subgroup{gc.simplex_stabilizer(q.section[c])});
  return q;
}

SimplicialComplex fixed_subcomplex(const GComplex& gc, const Subgroup& h) {
  if (!is_subgroup(gc.group, h)) fail(ErrorKind::InvalidInput, "fixed_subcomplex: not a subgroup");
  std::vector<bool> vertex_fixed(gc.space.vertices.size(), true);
  for (std::size_t v = 0; v < gc.space.vertices.size(); ++v)
    for (int g : h.members)
      if (gc.action[g][v] != static_cast<int>(v)) vertex_fixed[v] = false;
  SimplicialComplex out;
  std::vector<int> new_index(gc.space.vertices.size(), -1);
  for (std::size_t v = 0; v < gc.space.vertices.size(); ++v)
    if (vertex_fixed[v]) {
      new_index[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(gc.space.vertices[v]);
    }
  for (const auto& simp : gc.space.simplices) {
    bool all = true;
    for (int v : simp)
      if (!vertex_fixed[v]) all = false;
    if (!all) continue;
    std::vector<int> re;
    for (int v : simp) re.push_back(new_index[v]);
    out.simplices.push_back(std::move(re));
  }
  return out;
}

Extraction extract_cog(const GComplex& gc, std::uint64_t seed) {
  ActionReport ar = validate_action(gc);
  if (!ar.ok())
    fail(ErrorKind::ValidationFailed,
         "extraction requires a valid admissible action (" + ar.violations.front().check + ": " +
             ar.violations.front().detail + ")");
  if (!ar.regular)
    fail(ErrorKind::ValidationFailed,
         "extraction requires an orbit-regular action; apply barycentric subdivision first");

  Extraction ex;
  ex.quot = quotient(gc);
  const CellComplex& base = ex.quot.quotient;
  const int ncells = static_cast<int>(base.size());

  std::vector<CompiledSubgroup> compiled;
  std::vector<FiniteGroup> groups;
  for (int c = 0; c < ncells; ++c) {
    compiled.push_back(compile_subgroup(gc.group, ex.quot.stabilizers[c]));
    groups.push_back(compiled.back().group);
    ex.members.push_back(compiled.back().members);
  }

  std::vector<Arrow> arrows = arrows_of(base);
  ex.transporter.assign(arrows.size(), 0);
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int tau_hat = ex.quot.section[arrows[a].initial];
    const int sigma_cell = arrows[a].terminal;
    const int sigma_hat = ex.quot.section[sigma_cell];
    // The unique face of the lift lying over the terminal orbit.
    const auto& simp = gc.space.simplices[tau_hat];
    const int k = static_cast<int>(simp.size());
    int face = -1;
    for (int mask = 1; mask < (1 << k) - 1; ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) sub.push_back(simp[b]);
      int f = gc.space.index_of_simplex(sub);
      if (ex.quot.orbit_map[f] == sigma_cell) {
        if (face >= 0) fail(ErrorKind::InternalError, "regularity check missed a repeated face");
        face = f;
      }
    }
    if (face < 0) fail(ErrorKind::InternalError, "lift has no face over a quotient face");
    std::vector<int> candidates;
    for (int g = 0; g < gc.group.order; ++g)
      if (gc.act_simplex_index(g, face) == sigma_hat) candidates.push_back(g);
    if (candidates.empty()) fail(ErrorKind::InternalError, "no transporter carries a face to its lift");
    std::size_t pick = 0;
    if (seed != 0) {
      std::string tag = base.cells[arrows[a].initial].id + ">" + base.cells[arrows[a].terminal].id;
      pick = static_cast<std::size_t>(hash_choice(seed, tag) % candidates.size());
    }
    ex.transporter[a] = candidates[pick];
  }

  std::map<int, std::vector<int>> psi_by_arrow;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const CompiledSubgroup& src = compiled[arrows[a].initial];
    const CompiledSubgroup& dst = compiled[arrows[a].terminal];
    std::vector<int> images(src.group.order);
    for (int x = 0; x < src.group.order; ++x) {
      int conj = gc.group.conj(ex.transporter[a], src.members[x]);
      int idx = dst.index_in_parent[conj];
      if (idx < 0)
        fail(ErrorKind::InternalError, "transported stabilizer escapes the face stabilizer");
      images[x] = idx;
    }
    psi_by_arrow[static_cast<int>(a)] = images;
  }

  std::vector<ComposablePair> pairs = composable_pairs(arrows);
  std::map<int, int> twists_by_pair;
  ex.twist_ambient.assign(pairs.size(), 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const ComposablePair& pr = pairs[p];
    int g = gc.group.mul(gc.group.mul(ex.transporter[pr.a], ex.transporter[pr.b]),
                         gc.group.inv(ex.transporter[pr.ab]));
    ex.twist_ambient[p] = g;
    const CompiledSubgroup& gt = compiled[arrows[pr.a].terminal];
    int idx = gt.index_in_parent[g];
    if (idx < 0)
      fail(ErrorKind::InternalError,
           "twist element leaves its stabilizer; the action is not orbit-regular");
    twists_by_pair[static_cast<int>(p)] = idx;
  }

  ex.cog = make_cog(base, std::move(groups), psi_by_arrow, twists_by_pair);
  CogReport check = validate_cog(ex.cog);
  if (!check.ok())
    fail(ErrorKind::InternalError, "extracted complex of groups fails validation at " +
                                       check.violations.front().where);
  return ex;
}

CogReport validate_extraction(const GComplex& gc, const Extraction& ex) {
  CogReport r = validate_cog(ex.cog);
  const ComplexOfGroups& c = ex.cog;
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    const std::vector<int>& src_members = ex.members[c.arrows[a].initial];
    const std::vector<int>& dst_members = ex.members[c.arrows[a].terminal];
    for (std::size_t x = 0; x < src_members.size(); ++x) {
      int expect = gc.group.conj(ex.transporter[a], src_members[x]);
      int got = c.psi[a].images[x] < static_cast<int>(dst_members.size())
                    ? dst_members[c.psi[a].images[x]]
                    : -1;
      if (expect != got) {
        r.violations.push_back({"transporter", c.arrow_name(static_cast<int>(a)),
                                "psi differs from Ad(k_a) at " + gc.group.label(src_members[x])});
        break;
      }
    }
  }
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const ComposablePair& pr = c.pairs[p];
    const std::vector<int>& members = ex.members[c.arrows[pr.a].terminal];
    int expect = gc.group.mul(gc.group.mul(ex.transporter[pr.a], ex.transporter[pr.b]),
                              gc.group.inv(ex.transporter[pr.ab]));
    if (ex.twist_ambient[p] != expect) {
      r.violations.push_back({"transporter", c.pair_name(static_cast<int>(p)),
                              "twist is " + gc.group.label(ex.twist_ambient[p]) +
                                  " but k_a k_b k_ab^-1 = " + gc.group.label(expect)});
      continue;
    }
    auto it = std::find(members.begin(), members.end(), ex.twist_ambient[p]);
    if (it == members.end()) {
      r.violations.push_back({"twist-membership", c.pair_name(static_cast<int>(p)),
                              gc.group.label(ex.twist_ambient[p]) + " is not in the stabilizer"});
      continue;
    }
    if (c.twists[p] != static_cast<int>(it - members.begin()))
      r.violations.push_back({"twist-encoding", c.pair_name(static_cast<int>(p)),
                              "stored index disagrees with the ambient element"});
  }
  return r;
}

StarWithAction star_of_lift(const GComplex& gc, const Extraction& ex, int qcell) {
  StarWithAction out;
  const int sigma_hat = ex.quot.section[qcell];
  const auto& sigma = gc.space.simplices[sigma_hat];
  std::vector<int> star_simplices;
  for (std::size_t s = 0; s < gc.space.size(); ++s)
    if (std::includes(gc.space.simplices[s].begin(), gc.space.simplices[s].end(), sigma.begin(),
                      sigma.end()))
      star_simplices.push_back(static_cast<int>(s));

  std::vector<Cell> cells;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int s : star_simplices)
    cells.push_back({gc.space.simplex_token(s),
                     static_cast<int>(gc.space.simplices[s].size()) - 1});
  for (int s : star_simplices)
    for (int t : star_simplices)
      if (s != t &&
          std::includes(gc.space.simplices[s].begin(), gc.space.simplices[s].end(),
                        gc.space.simplices[t].begin(), gc.space.simplices[t].end()))
        pairs.emplace_back(gc.space.simplex_token(s), gc.space.simplex_token(t));
  out.complex = make_complex(cells, pairs, /*close=*/false);
  out.center = out.complex.require(gc.space.simplex_token(sigma_hat));
  out.simplex_of.assign(out.complex.size(), -1);
  for (int s : star_simplices)
    out.simplex_of[out.complex.require(gc.space.simplex_token(s))] = s;

  CompiledSubgroup stab = compile_subgroup(gc.group, ex.quot.stabilizers[qcell]);
  out.group = stab.group;
  out.members = stab.members;
  out.action.assign(out.group.order, std::vector<int>(out.complex.size(), -1));
  for (int g = 0; g < out.group.order; ++g)
    for (std::size_t i = 0; i < out.complex.size(); ++i) {
      int img = gc.act_simplex_index(stab.members[g], out.simplex_of[i]);
      int cell = img >= 0 ? out.complex.index_of(gc.space.simplex_token(img)) : -1;
      if (cell < 0) fail(ErrorKind::InternalError, "stabilizer does not preserve the star");
      out.action[g][i] = cell;
    }
  return out;
}

RoundTripReport development_matches_star(const GComplex& gc, const Extraction& ex, int qcell) {
  RoundTripReport rep;
  LocalDevelopment dev = local_development(ex.cog, qcell);
  StarWithAction sa = star_of_lift(gc, ex, qcell);
  const std::string where = "cell " + ex.cog.base.cells[qcell].id;
  if (!dev.group.same_as(sa.group)) {
    rep.detail = where + ": stabilizer groups differ";
    return rep;
  }
  if (dev.complex.size() != sa.complex.size()) {
    rep.detail = where + ": development has " + std::to_string(dev.complex.size()) +
                 " cells, star has " + std::to_string(sa.complex.size());
    return rep;
  }
  // Canonical map (tau, h) -> h k_d . tau_hat.
  std::vector<int> to_star(dev.complex.size(), -1);
  for (std::size_t i = 0; i < dev.complex.size(); ++i) {
    int image;
    if (static_cast<int>(i) == dev.center) {
      image = sa.center;
    } else {
      int tau = dev.over[i];
      int d = ex.cog.arrow_index(tau, qcell);
      int gamma = gc.group.mul(ex.members[qcell][dev.coset_rep[i]], ex.transporter[d]);
      int simp = gc.act_simplex_index(gamma, ex.quot.section[tau]);
      image = simp >= 0 ? sa.complex.index_of(gc.space.simplex_token(simp)) : -1;
    }
    if (image < 0) {
      rep.detail = where + ": canonical map leaves the star";
      return rep;
    }
    to_star[i] = image;
  }
  std::vector<bool> hit(sa.complex.size(), false);
  for (int v : to_star) {
    if (hit[v]) {
      rep.detail = where + ": canonical map is not injective";
      return rep;
    }
    hit[v] = true;
  }
  for (std::size_t i = 0; i < dev.complex.size(); ++i)
    for (std::size_t j = 0; j < dev.complex.size(); ++j) {
      bool df = dev.complex.has_face(static_cast<int>(i), static_cast<int>(j));
      bool sf = sa.complex.has_face(to_star[i], to_star[j]);
      if (df != sf) {
        rep.detail = where + ": face relation mismatch between " +
                     dev.complex.cells[i].id + " and " + dev.complex.cells[j].id;
        return rep;
      }
    }
  for (int g = 0; g < dev.group.order; ++g)
    for (std::size_t i = 0; i < dev.complex.size(); ++i)
      if (to_star[dev.action[g][i]] != sa.action[g][to_star[i]]) {
        rep.detail = where + ": action is not equivariant at element " + dev.group.label(g);
        return rep;
      }
  rep.ok = true;
  return rep;
}

}  // namespace orbicell
