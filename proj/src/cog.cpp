#include "orbicell/cog.hpp"

#include <algorithm>
#include <set>

namespace orbicell {

int ComplexOfGroups::arrow_index(int initial, int terminal) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].initial == initial && arrows[i].terminal == terminal)
      return static_cast<int>(i);
  return -1;
}

int ComplexOfGroups::pair_index(int a, int b) const {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].a == a && pairs[i].b == b) return static_cast<int>(i);
  return -1;
}

std::string ComplexOfGroups::arrow_name(int a) const {
  return base.cells[arrows[a].initial].id + ">" + base.cells[arrows[a].terminal].id;
}

std::string ComplexOfGroups::pair_name(int p) const {
  const ComposablePair& pr = pairs[p];
  return base.cells[arrows[pr.b].initial].id + ">" + base.cells[arrows[pr.a].initial].id + ">" +
         base.cells[arrows[pr.a].terminal].id;
}

std::vector<Arrow> arrows_of(const CellComplex& base) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < static_cast<int>(base.size()); ++i)
    for (int f : base.faces[i]) arrows.push_back(Arrow{i, f});
  std::sort(arrows.begin(), arrows.end());
  return arrows;
}

std::vector<ComposablePair> composable_pairs(const std::vector<Arrow>& arrows) {
  auto find_arrow = [&](int initial, int terminal) {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].initial == initial && arrows[i].terminal == terminal)
        return static_cast<int>(i);
    return -1;
  };
  std::vector<ComposablePair> pairs;
  for (std::size_t b = 0; b < arrows.size(); ++b)
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (arrows[b].terminal == arrows[a].initial) {
        int ab = find_arrow(arrows[b].initial, arrows[a].terminal);
        if (ab < 0) fail(ErrorKind::InternalError, "face relation not transitive under arrows");
        pairs.push_back({static_cast<int>(a), static_cast<int>(b), ab});
      }
  std::sort(pairs.begin(), pairs.end(), [&](const ComposablePair& p, const ComposablePair& q) {
    auto key = [&](const ComposablePair& x) {
      return std::tuple(arrows[x.b].initial, arrows[x.a].initial, arrows[x.a].terminal);
    };
    return key(p) < key(q);
  });
  return pairs;
}

ComplexOfGroups make_cog(CellComplex base, std::vector<FiniteGroup> groups,
                         const std::map<int, std::vector<int>>& psi_by_arrow,
                         const std::map<int, int>& twists_by_pair) {
  ComplexOfGroups c;
  if (groups.size() != base.size())
    fail(ErrorKind::InvalidInput, "group assignment size does not match cell count");
  c.base = std::move(base);
  c.groups = std::move(groups);
  c.arrows = arrows_of(c.base);
  c.pairs = composable_pairs(c.arrows);
  c.psi.resize(c.arrows.size());
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    auto it = psi_by_arrow.find(static_cast<int>(a));
    const FiniteGroup& src = c.groups[c.arrows[a].initial];
    const FiniteGroup& dst = c.groups[c.arrows[a].terminal];
    if (it == psi_by_arrow.end()) {
      if (src.order != 1)
        fail(ErrorKind::InvalidInput,
             "missing homomorphism for arrow " + c.arrow_name(static_cast<int>(a)));
      c.psi[a] = GroupHom{{0}};
    } else {
      if (static_cast<int>(it->second.size()) != src.order)
        fail(ErrorKind::InvalidInput,
             "homomorphism image size mismatch on arrow " + c.arrow_name(static_cast<int>(a)));
      for (int v : it->second)
        if (v < 0 || v >= dst.order)
          fail(ErrorKind::InvalidInput,
               "homomorphism image out of range on arrow " + c.arrow_name(static_cast<int>(a)));
      c.psi[a] = GroupHom{it->second};
    }
  }
  c.twists.assign(c.pairs.size(), 0);
  for (const auto& [p, val] : twists_by_pair) {
    if (p < 0 || p >= static_cast<int>(c.pairs.size()))
      fail(ErrorKind::InvalidInput, "twist references unknown composable pair");
    const FiniteGroup& g = c.group_at_terminal(c.pairs[p].a);
    if (val < 0 || val >= g.order)
      fail(ErrorKind::InvalidInput, "twist element out of range on pair " + c.pair_name(p));
    c.twists[p] = val;
  }
  return c;
}

ComplexOfGroups trivial_cog(const CellComplex& base) {
  std::vector<FiniteGroup> groups(base.size(), trivial_group());
  return make_cog(base, std::move(groups), {}, {});
}

CogReport validate_cog(const ComplexOfGroups& c) {
  CogReport r;
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    const FiniteGroup& src = c.groups[c.arrows[a].initial];
    const FiniteGroup& dst = c.groups[c.arrows[a].terminal];
    if (!hom_law_holds(src, dst, c.psi[a].images)) {
      r.violations.push_back({"hom-law", c.arrow_name(static_cast<int>(a)), ""});
      continue;
    }
    if (!hom_injective(c.psi[a]))
      r.violations.push_back({"injective", c.arrow_name(static_cast<int>(a)), ""});
  }
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const ComposablePair& pr = c.pairs[p];
    const FiniteGroup& gt = c.group_at_terminal(pr.a);
    if (c.twists[p] < 0 || c.twists[p] >= gt.order) {
      r.violations.push_back({"twist-range", c.pair_name(static_cast<int>(p)), ""});
      continue;
    }
    const FiniteGroup& src = c.groups[c.arrows[pr.b].initial];
    for (int x = 0; x < src.order; ++x) {
      int lhs = gt.conj(c.twists[p], c.psi[pr.ab].images[x]);
      int rhs = c.psi[pr.a].images[c.psi[pr.b].images[x]];
      if (lhs != rhs) {
        r.violations.push_back({"compatibility", c.pair_name(static_cast<int>(p)),
                                "element " + src.label(x) + ": Ad(g)psi_ab gives " + gt.label(lhs) +
                                    ", psi_a psi_b gives " + gt.label(rhs)});
        break;
      }
    }
  }
  // cocycle over composable triples (a, b, c): t(b)=i(a), t(c)=i(b)
  for (std::size_t pab = 0; pab < c.pairs.size(); ++pab) {
    const ComposablePair& ab = c.pairs[pab];
    for (std::size_t cc = 0; cc < c.arrows.size(); ++cc) {
      if (c.arrows[cc].terminal != c.arrows[ab.b].initial) continue;
      int a = ab.a, b = ab.b;
      int pbc = c.pair_index(b, static_cast<int>(cc));
      int pa_bc = c.pair_index(a, c.pairs[pbc].ab);
      int pab_c = c.pair_index(ab.ab, static_cast<int>(cc));
      if (pbc < 0 || pa_bc < 0 || pab_c < 0)
        fail(ErrorKind::InternalError, "composable pair table incomplete");
      const FiniteGroup& gt = c.group_at_terminal(a);
      int lhs = gt.mul(c.psi[a].images[c.twists[pbc]], c.twists[pa_bc]);
      int rhs = gt.mul(c.twists[pab], c.twists[pab_c]);
      if (lhs != rhs) {
        std::string where = c.base.cells[c.arrows[cc].initial].id + ">" +
                            c.base.cells[c.arrows[b].initial].id + ">" +
                            c.base.cells[c.arrows[a].initial].id + ">" +
                            c.base.cells[c.arrows[a].terminal].id;
        r.violations.push_back({"cocycle", where,
                                "psi_a(g_bc) g_a,bc = " + gt.label(lhs) + " but g_ab g_ab,c = " +
                                    gt.label(rhs)});
      }
    }
  }
  return r;
}

Gauge identity_gauge(const ComplexOfGroups& c) {
  return Gauge{std::vector<int>(c.arrows.size(), 0)};
}

Gauge compose_gauges(const ComplexOfGroups& c, const Gauge& first, const Gauge& second) {
  Gauge out;
  out.per_arrow.resize(c.arrows.size());
  for (std::size_t a = 0; a < c.arrows.size(); ++a)
    out.per_arrow[a] = c.group_at_terminal(static_cast<int>(a))
                           .mul(second.per_arrow[a], first.per_arrow[a]);
  return out;
}

Gauge inverse_gauge(const ComplexOfGroups& c, const Gauge& g) {
  Gauge out;
  out.per_arrow.resize(c.arrows.size());
  for (std::size_t a = 0; a < c.arrows.size(); ++a)
    out.per_arrow[a] = c.group_at_terminal(static_cast<int>(a)).inv(g.per_arrow[a]);
  return out;
}

ComplexOfGroups apply_gauge(const ComplexOfGroups& c, const Gauge& g) {
  if (g.per_arrow.size() != c.arrows.size())
    fail(ErrorKind::InvalidInput, "gauge size does not match arrow count");
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    const FiniteGroup& gt = c.group_at_terminal(static_cast<int>(a));
    if (g.per_arrow[a] < 0 || g.per_arrow[a] >= gt.order)
      fail(ErrorKind::InvalidInput, "gauge element outside the terminal group on arrow " +
                                        c.arrow_name(static_cast<int>(a)));
  }
  ComplexOfGroups out = c;
  for (std::size_t a = 0; a < c.arrows.size(); ++a) {
    const FiniteGroup& gt = c.group_at_terminal(static_cast<int>(a));
    for (int x = 0; x < static_cast<int>(c.psi[a].images.size()); ++x)
      out.psi[a].images[x] = gt.conj(g.per_arrow[a], c.psi[a].images[x]);
  }
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const ComposablePair& pr = c.pairs[p];
    const FiniteGroup& gt = c.group_at_terminal(pr.a);
    int v = gt.mul(g.per_arrow[pr.a], c.psi[pr.a].images[g.per_arrow[pr.b]]);
    v = gt.mul(v, c.twists[p]);
    v = gt.mul(v, gt.inv(g.per_arrow[pr.ab]));
    out.twists[p] = v;
  }
  if (!validate_cog(c).ok()) return out;  // garbage in, garbage out
  CogReport check = validate_cog(out);
  if (!check.ok())
    fail(ErrorKind::InternalError, "gauge transform broke the axioms at " +
                                       check.violations.front().where);
  return out;
}

EquivResult are_equivalent(const ComplexOfGroups& c1, const ComplexOfGroups& c2,
                           long long budget) {
  if (!(c1.base == c2.base)) fail(ErrorKind::InvalidInput, "equivalence requires equal bases");
  if (c1.groups.size() != c2.groups.size())
    fail(ErrorKind::InvalidInput, "equivalence requires equal group assignments");
  for (std::size_t i = 0; i < c1.groups.size(); ++i)
    if (!c1.groups[i].same_as(c2.groups[i]))
      fail(ErrorKind::InvalidInput, "equivalence requires identical groups on cell " +
                                        c1.base.cells[i].id);

  const std::size_t na = c1.arrows.size();
  // Per-arrow candidates: elements g with Ad(g) o psi1_a = psi2_a.
  std::vector<std::vector<int>> candidates(na);
  for (std::size_t a = 0; a < na; ++a) {
    const FiniteGroup& gt = c1.group_at_terminal(static_cast<int>(a));
    for (int g = 0; g < gt.order; ++g) {
      bool match = true;
      for (std::size_t x = 0; x < c1.psi[a].images.size() && match; ++x)
        if (gt.conj(g, c1.psi[a].images[x]) != c2.psi[a].images[x]) match = false;
      if (match) candidates[a].push_back(g);
    }
    if (candidates[a].empty()) return {EquivStatus::Inequivalent, std::nullopt, 0};
  }
  // Pairs become checkable once all three arrows are assigned; index them by
  // the latest arrow in assignment order.
  std::vector<std::vector<int>> checks_at(na);
  for (std::size_t p = 0; p < c1.pairs.size(); ++p) {
    const ComposablePair& pr = c1.pairs[p];
    int latest = std::max({pr.a, pr.b, pr.ab});
    checks_at[latest].push_back(static_cast<int>(p));
  }
  std::vector<int> assign(na, 0);
  long long nodes = 0;
  bool exhausted_budget = false;
  auto pair_ok = [&](int p) {
    const ComposablePair& pr = c1.pairs[p];
    const FiniteGroup& gt = c1.group_at_terminal(pr.a);
    int v = gt.mul(assign[pr.a], c1.psi[pr.a].images[assign[pr.b]]);
    v = gt.mul(v, c1.twists[p]);
    v = gt.mul(v, gt.inv(assign[pr.ab]));
    return v == c2.twists[p];
  };
  auto dfs = [&](auto&& self, std::size_t a) -> bool {
    if (a == na) return true;
    for (int g : candidates[a]) {
      if (++nodes > budget) {
        exhausted_budget = true;
        return false;
      }
      assign[a] = g;
      bool ok = true;
      for (int p : checks_at[a])
        if (!pair_ok(p)) {
          ok = false;
          break;
        }
      if (ok && self(self, a + 1)) return true;
      if (exhausted_budget) return false;
    }
    return false;
  };
  if (dfs(dfs, 0)) {
    Gauge witness{assign};
    return {EquivStatus::Equivalent, witness, nodes};
  }
  if (exhausted_budget) return {EquivStatus::Exhausted, std::nullopt, nodes};
  return {EquivStatus::Inequivalent, std::nullopt, nodes};
}

ComplexOfGroups restrict_to_skeleton(const ComplexOfGroups& c, int n) {
  CellComplex sk = skeleton(c.base, n);
  std::vector<FiniteGroup> groups;
  std::vector<int> old_index;  // new cell -> old cell
  for (const Cell& cell : sk.cells) {
    int oi = c.base.index_of(cell.id);
    old_index.push_back(oi);
    groups.push_back(c.groups[oi]);
  }
  ComplexOfGroups out;
  out.base = std::move(sk);
  out.groups = std::move(groups);
  out.arrows = arrows_of(out.base);
  out.pairs = composable_pairs(out.arrows);
  out.psi.resize(out.arrows.size());
  for (std::size_t a = 0; a < out.arrows.size(); ++a) {
    int oa = c.arrow_index(old_index[out.arrows[a].initial], old_index[out.arrows[a].terminal]);
    if (oa < 0) fail(ErrorKind::InternalError, "skeleton lost an arrow");
    out.psi[a] = c.psi[oa];
  }
  out.twists.resize(out.pairs.size());
  for (std::size_t p = 0; p < out.pairs.size(); ++p) {
    const ComposablePair& pr = out.pairs[p];
    int oa = c.arrow_index(old_index[out.arrows[pr.a].initial], old_index[out.arrows[pr.a].terminal]);
    int ob = c.arrow_index(old_index[out.arrows[pr.b].initial], old_index[out.arrows[pr.b].terminal]);
    int op = c.pair_index(oa, ob);
    if (op < 0) fail(ErrorKind::InternalError, "skeleton lost a composable pair");
    out.twists[p] = c.twists[op];
  }
  return out;
}

AttachResult attach_cell(const ComplexOfGroups& c, const AttachSpec& spec) {
  if (c.base.index_of(spec.id) >= 0)
    fail(ErrorKind::InvalidInput, "attach: cell id already present: " + spec.id);
  if (spec.dim <= 0) fail(ErrorKind::InvalidInput, "attach: dimension must be positive");
  // The declared faces must form a closed subcomplex of strictly lower dim.
  std::set<int> face_set;
  for (const std::string& f : spec.face_ids) face_set.insert(c.base.require(f));
  if (face_set.empty()) fail(ErrorKind::InvalidInput, "attach: no faces declared");
  for (int f : face_set) {
    if (c.base.cells[f].dim >= spec.dim)
      fail(ErrorKind::InvalidInput, "attach: face " + c.base.cells[f].id + " does not drop dimension");
    for (int ff : c.base.faces[f])
      if (!face_set.count(ff))
        fail(ErrorKind::InvalidInput, "attach: declared faces are not a closed subcomplex (missing " +
                                          c.base.cells[ff].id + ")");
  }

  std::vector<Cell> cells = c.base.cells;
  cells.push_back({spec.id, spec.dim});
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < c.base.size(); ++i)
    for (int f : c.base.faces[i]) pairs.emplace_back(c.base.cells[i].id, c.base.cells[f].id);
  for (int f : face_set) pairs.emplace_back(spec.id, c.base.cells[f].id);
  CellComplex ext = make_complex(std::move(cells), pairs, /*close=*/false);

  std::vector<FiniteGroup> groups(ext.size());
  std::vector<int> old_of(ext.size(), -1);
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (ext.cells[i].id == spec.id) {
      groups[i] = spec.group;
    } else {
      old_of[i] = c.base.require(ext.cells[i].id);
      groups[i] = c.groups[old_of[i]];
    }
  }
  std::vector<Arrow> arrows = arrows_of(ext);
  std::map<int, std::vector<int>> psi_by_arrow;
  const int e_idx = ext.require(spec.id);
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    if (arrows[a].initial == e_idx) {
      const std::string& face_id = ext.cells[arrows[a].terminal].id;
      auto it = spec.homs.find(face_id);
      if (it == spec.homs.end()) {
        if (spec.group.order != 1)
          fail(ErrorKind::InvalidInput, "attach: missing homomorphism onto face " + face_id);
        psi_by_arrow[static_cast<int>(a)] = {0};
      } else {
        psi_by_arrow[static_cast<int>(a)] = it->second;
      }
    } else {
      int oa = c.arrow_index(old_of[arrows[a].initial], old_of[arrows[a].terminal]);
      psi_by_arrow[static_cast<int>(a)] = c.psi[oa].images;
    }
  }
  std::vector<ComposablePair> new_pairs = composable_pairs(arrows);
  std::map<int, int> twists_by_pair;
  auto pair_key = [&](const ComposablePair& pr) {
    return ext.cells[arrows[pr.b].initial].id + ">" + ext.cells[arrows[pr.a].initial].id + ">" +
           ext.cells[arrows[pr.a].terminal].id;
  };
  std::set<std::string> used_keys;
  for (std::size_t p = 0; p < new_pairs.size(); ++p) {
    const ComposablePair& pr = new_pairs[p];
    if (arrows[pr.b].initial == e_idx) {
      auto it = spec.twists.find(pair_key(pr));
      if (it != spec.twists.end()) {
        twists_by_pair[static_cast<int>(p)] = it->second;
        used_keys.insert(pair_key(pr));
      }
    } else {
      int oa = c.arrow_index(old_of[arrows[pr.a].initial], old_of[arrows[pr.a].terminal]);
      int ob = c.arrow_index(old_of[arrows[pr.b].initial], old_of[arrows[pr.b].terminal]);
      twists_by_pair[static_cast<int>(p)] = c.twists[c.pair_index(oa, ob)];
    }
  }
  for (const auto& [key, val] : spec.twists)
    if (!used_keys.count(key))
      fail(ErrorKind::InvalidInput, "attach: twist key does not name a new composable pair: " + key);

  AttachResult out;
  out.result = make_cog(std::move(ext), std::move(groups), psi_by_arrow, twists_by_pair);
  out.failure = validate_cog(out.result);
  out.ok = out.failure.ok();
  if (out.ok) {
    // The extension restricted below the new cell must be the input restricted
    // likewise.
    ComplexOfGroups lhs = restrict_to_skeleton(out.result, spec.dim - 1);
    ComplexOfGroups rhs = restrict_to_skeleton(c, spec.dim - 1);
    if (!(lhs == rhs)) fail(ErrorKind::InternalError, "attach changed the lower skeleton");
  }
  return out;
}

LocalDevelopment local_development(const ComplexOfGroups& c, int s) {
  CogReport valid = validate_cog(c);
  if (!valid.ok())
    fail(ErrorKind::InvalidInput,
         "local development requires a valid complex of groups (" +
             valid.violations.front().check + " at " + valid.violations.front().where + ")");
  if (s < 0 || s >= static_cast<int>(c.base.size()))
    fail(ErrorKind::InvalidInput, "local development: cell index out of range");

  const FiniteGroup& gs = c.groups[s];
  std::vector<int> st = star(c.base, s);

  // Cells over tau: least representatives of left cosets h psi_d(G_tau).
  struct DevCell {
    int over;  // star cell (base index)
    int rep;   // least element of the coset; 0 for the center
  };
  std::vector<DevCell> dev;
  std::vector<std::vector<int>> coset_of(c.base.size());  // element -> least rep, per tau
  std::vector<int> arrow_to_s(c.base.size(), -1);
  for (int tau : st) {
    if (tau == s) {
      dev.push_back({tau, 0});
      continue;
    }
    int d = c.arrow_index(tau, s);
    if (d < 0) fail(ErrorKind::InternalError, "star cell without arrow to the center");
    arrow_to_s[tau] = d;
    std::vector<int>& rep = coset_of[tau];
    rep.assign(gs.order, -1);
    for (int h = 0; h < gs.order; ++h) {
      if (rep[h] != -1) continue;
      for (int x : c.psi[d].images) {
        int m = gs.mul(h, x);
        if (rep[m] == -1) rep[m] = h;  // h is least in its coset: we scan h ascending
      }
      dev.push_back({tau, h});
    }
  }
  std::sort(dev.begin(), dev.end(), [&](const DevCell& x, const DevCell& y) {
    return std::tuple(c.base.cells[x.over].dim, c.base.cells[x.over].id, x.rep) <
           std::tuple(c.base.cells[y.over].dim, c.base.cells[y.over].id, y.rep);
  });

  auto dev_id = [&](const DevCell& d) {
    return c.base.cells[d.over].id + "#" + std::to_string(d.rep);
  };

  // Face of (tau1, h) over tau2: (tau2, rep(h g_{d2,a}^{-1})) for a = (tau1, tau2),
  // d2 = (tau2, s); every cell has the center as a face.
  std::vector<Cell> cells;
  std::vector<std::pair<std::string, std::string>> face_pairs;
  for (const DevCell& d : dev) cells.push_back({dev_id(d), c.base.cells[d.over].dim});
  for (std::size_t i = 0; i < dev.size(); ++i) {
    if (dev[i].over == s) continue;
    face_pairs.emplace_back(dev_id(dev[i]), c.base.cells[s].id + "#0");
    for (int tau2 : c.base.faces[dev[i].over]) {
      if (tau2 == s || !c.base.has_face(tau2, s)) continue;
      int a = c.arrow_index(dev[i].over, tau2);
      int d2 = arrow_to_s[tau2];
      int p = c.pair_index(d2, a);
      if (a < 0 || p < 0) fail(ErrorKind::InternalError, "development face bookkeeping failed");
      int shifted = gs.mul(dev[i].rep, gs.inv(c.twists[p]));
      face_pairs.emplace_back(dev_id(dev[i]), dev_id({tau2, coset_of[tau2][shifted]}));
    }
  }
  LocalDevelopment out;
  bool closure_added = false;
  out.complex = make_complex(std::move(cells), face_pairs, /*close=*/true, &closure_added);
  if (closure_added)
    fail(ErrorKind::InternalError, "development face relation was not transitive");
  out.group = gs;
  out.center = out.complex.require(c.base.cells[s].id + "#0");

  // Identify development cells after the canonical re-sort inside make_complex.
  out.over.assign(out.complex.size(), -1);
  out.coset_rep.assign(out.complex.size(), 0);
  for (const DevCell& d : dev) {
    int idx = out.complex.require(dev_id(d));
    out.over[idx] = d.over;
    out.coset_rep[idx] = d.rep;
  }

  // G_s acts by left translation on coset labels.
  out.action.assign(gs.order, std::vector<int>(out.complex.size(), -1));
  for (int g = 0; g < gs.order; ++g)
    for (std::size_t i = 0; i < out.complex.size(); ++i) {
      if (static_cast<int>(i) == out.center) {
        out.action[g][i] = out.center;
        continue;
      }
      int tau = out.over[i];
      int moved = coset_of[tau][gs.mul(g, out.coset_rep[i])];
      out.action[g][i] =
          out.complex.require(c.base.cells[tau].id + "#" + std::to_string(moved));
    }

  // Def-style sanity: the star of the center is the whole development.
  if (star(out.complex, out.center).size() != out.complex.size())
    fail(ErrorKind::InternalError, "development star condition failed");
  return out;
}

}  // namespace orbicell
