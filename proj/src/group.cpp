#include "orbicell/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbicell {

int FiniteGroup::element_order(int x) const {
  int n = 1, y = x;
  while (y != 0) {
    y = mul(y, x);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::label(int x) const {
  if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty()) return labels[x];
  return "g" + std::to_string(x);
}

std::optional<std::string> group_table_violation(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return "empty table";
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) return "table is not square";
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        return "entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a) return "row 0 is not the identity at " + std::to_string(a);
    if (table[a][0] != a) return "column 0 is not the identity at " + std::to_string(a);
  }
  // Row/column bijectivity: with the axioms below this makes every single
  // entry corruption detectable.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int b = 0; b < n; ++b) {
      if (seen_row[table[a][b]]) return "row " + std::to_string(a) + " repeats a value";
      seen_row[table[a][b]] = true;
      if (seen_col[table[b][a]]) return "column " + std::to_string(a) + " repeats a value";
      seen_col[table[b][a]] = true;
    }
  }
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) has_inverse = true;
    if (!has_inverse) return "element " + std::to_string(a) + " has no inverse";
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
  return std::nullopt;
}

FiniteGroup make_group(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  if (auto bad = group_table_violation(table))
    fail(ErrorKind::InvalidInput, "not a group table: " + *bad);
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  g.table = std::move(table);
  if (!labels.empty() && static_cast<int>(labels.size()) != g.order)
    fail(ErrorKind::InvalidInput, "label list size does not match group order");
  g.labels = std::move(labels);
  g.inverse.assign(g.order, 0);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.table[a][b] == 0) g.inverse[a] = b;
  return g;
}

FiniteGroup trivial_group() { return make_group({{0}}, {"e"}); }

FiniteGroup cyclic_group(int n) {
  if (n <= 0) fail(ErrorKind::InvalidInput, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = a == 0 ? "e" : "r" + std::to_string(a);
  return make_group(std::move(t), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order * b.order;
  auto enc = [&](int x, int y) { return x * b.order + y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          t[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::string> labels(n);
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y) labels[enc(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
  return make_group(std::move(t), std::move(labels));
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens, int degree,
                                    int max_order) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      fail(ErrorKind::InvalidInput, "permutation degree mismatch");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]) fail(ErrorKind::InvalidInput, "not a permutation");
      seen[v] = true;
    }
  }
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<int>> elems{id};
  std::vector<std::vector<int>> queue{id};
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(degree);
    for (int i = 0; i < degree; ++i) r[i] = p[q[i]];  // apply q, then p
    return r;
  };
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      auto nxt = compose(g, cur);
      if (elems.insert(nxt).second) {
        if (static_cast<int>(elems.size()) > max_order)
          fail(ErrorKind::ResourceLimit, "permutation closure exceeds group order bound");
        queue.push_back(nxt);
      }
    }
  }
  std::vector<std::vector<int>> sorted(elems.begin(), elems.end());  // identity is lex-least
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  const int n = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index[compose(sorted[a], sorted[b])];
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    std::string s = "[";
    for (int i = 0; i < degree; ++i) {
      if (i) s += ' ';
      s += std::to_string(sorted[a][i]);
    }
    labels[a] = s + "]";
  }
  return make_group(std::move(t), std::move(labels));
}

FiniteGroup symmetric_group_s3() {
  return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
}

FiniteGroup dihedral_group(int n) {
  if (n < 3) fail(ErrorKind::InvalidInput, "dihedral group needs n >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return group_from_permutations({rot, refl}, n, 2 * n);
}

bool hom_law_holds(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != src.order) return false;
  for (int v : images)
    if (v < 0 || v >= dst.order) return false;
  if (images[0] != 0) return false;
  for (int a = 0; a < src.order; ++a)
    for (int b = 0; b < src.order; ++b)
      if (images[src.mul(a, b)] != dst.mul(images[a], images[b])) return false;
  return true;
}

GroupHom make_hom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<int> images) {
  if (!hom_law_holds(src, dst, images))
    fail(ErrorKind::InvalidInput, "image array is not a homomorphism");
  return GroupHom{std::move(images)};
}

bool hom_injective(const GroupHom& h) {
  std::set<int> seen(h.images.begin(), h.images.end());
  return seen.size() == h.images.size();
}

GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<int> im(g.order);
  for (int i = 0; i < g.order; ++i) im[i] = i;
  return GroupHom{std::move(im)};
}

GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner) {
  std::vector<int> im(inner.images.size());
  for (std::size_t i = 0; i < inner.images.size(); ++i) im[i] = outer.images[inner.images[i]];
  return GroupHom{std::move(im)};
}

GroupHom conjugation(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order) fail(ErrorKind::InvalidInput, "conjugation: element out of range");
  std::vector<int> im(g.order);
  for (int y = 0; y < g.order; ++y) im[y] = g.conj(x, y);
  return GroupHom{std::move(im)};
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.members.empty() || h.members[0] != 0) {
    if (!h.contains(0)) return false;
  }
  for (int a : h.members) {
    if (a < 0 || a >= g.order) return false;
    if (!h.contains(g.inv(a))) return false;
    for (int b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return h.contains(0);
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h{std::move(members)};
  if (!is_subgroup(g, h)) fail(ErrorKind::InvalidInput, "member set is not a subgroup");
  return h;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup h;
  h.members.resize(g.order);
  for (int i = 0; i < g.order; ++i) h.members[i] = i;
  return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> elems{0};
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.back();
    queue.pop_back();
    for (int x : gens) {
      if (x < 0 || x >= g.order) fail(ErrorKind::InvalidInput, "generator out of range");
      for (int nxt : {g.mul(cur, x), g.mul(cur, g.inv(x))})
        if (elems.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return Subgroup{std::vector<int>(elems.begin(), elems.end())};
}

Subgroup conjugate_subgroup(const FiniteGroup& g, int x, const Subgroup& h) {
  std::vector<int> members;
  members.reserve(h.members.size());
  for (int m : h.members) members.push_back(g.conj(x, m));
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) fail(ErrorKind::InvalidInput, "centralizer: not a subgroup");
  std::vector<int> members;
  for (int x = 0; x < g.order; ++x) {
    bool commutes = true;
    for (int y : h.members)
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) members.push_back(x);
  }
  return Subgroup{std::move(members)};
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, full_subgroup(g)); }

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_order) {
  if (g.order > max_order)
    fail(ErrorKind::ResourceLimit, "group order exceeds the subgroup enumeration bound");
  std::set<std::vector<int>> found;
  std::vector<Subgroup> queue;
  Subgroup triv = trivial_subgroup();
  found.insert(triv.members);
  queue.push_back(triv);
  while (!queue.empty()) {
    Subgroup cur = queue.back();
    queue.pop_back();
    for (int x = 1; x < g.order; ++x) {
      if (cur.contains(x)) continue;
      std::vector<int> gens = cur.members;
      gens.push_back(x);
      Subgroup next = generated_subgroup(g, gens);
      if (found.insert(next.members).second) queue.push_back(next);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& m : found) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::make_pair(a.members.size(), std::cref(a.members)) <
           std::make_pair(b.members.size(), std::cref(b.members));
  });
  return out;
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const FiniteGroup& g, int max_order) {
  std::vector<Subgroup> subs = all_subgroups(g, max_order);
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> reps;
  for (const Subgroup& h : subs) {
    if (seen.count(h.members)) continue;
    // canonical representative: lexicographically least member set in the class
    std::vector<std::vector<int>> orbit;
    for (int x = 0; x < g.order; ++x) orbit.push_back(conjugate_subgroup(g, x, h).members);
    std::sort(orbit.begin(), orbit.end());
    reps.push_back(Subgroup{orbit.front()});
    for (const auto& m : orbit) seen.insert(m);
  }
  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::make_pair(a.members.size(), std::cref(a.members)) <
           std::make_pair(b.members.size(), std::cref(b.members));
  });
  return reps;
}

namespace {

// Greedy minimal generating sequence: repeatedly take the least element
// outside the subgroup generated so far.
std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup have = trivial_subgroup();
  while (have.order() < g.order) {
    int next = -1;
    for (int x = 1; x < g.order; ++x)
      if (!have.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    std::vector<int> all = have.members;
    all.push_back(next);
    have = generated_subgroup(g, all);
  }
  return gens;
}

}  // namespace

std::vector<GroupHom> injective_homs(const FiniteGroup& src, const FiniteGroup& dst,
                                     long long max_candidates) {
  std::vector<GroupHom> out;
  if (dst.order % src.order != 0) return out;  // Lagrange obstruction
  std::vector<int> gens = generating_sequence(src);

  // Express every source element as a word in the generating sequence so a
  // generator assignment determines the whole image array.
  std::vector<int> expr_prev(src.order, -1), expr_gen(src.order, -1);
  {
    std::vector<int> order_found{0};
    for (std::size_t qi = 0; qi < order_found.size(); ++qi) {
      int cur = order_found[qi];
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        int nxt = src.mul(cur, gens[gi]);
        if (nxt != 0 && expr_prev[nxt] == -1) {
          expr_prev[nxt] = cur;
          expr_gen[nxt] = static_cast<int>(gi);
          order_found.push_back(nxt);
        }
      }
    }
  }

  long long candidates = 0;
  std::vector<int> gen_image(gens.size(), -1);
  auto build_and_check = [&]() {
    std::vector<int> images(src.order, -1);
    images[0] = 0;
    std::vector<int> order_found{0};
    for (std::size_t qi = 0; qi < order_found.size(); ++qi) {
      int cur = order_found[qi];
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        int nxt = src.mul(cur, gens[gi]);
        if (nxt != 0 && images[nxt] == -1 && expr_prev[nxt] == cur &&
            expr_gen[nxt] == static_cast<int>(gi)) {
          images[nxt] = dst.mul(images[cur], gen_image[gi]);
          order_found.push_back(nxt);
        }
      }
    }
    GroupHom h{std::move(images)};
    if (hom_law_holds(src, dst, h.images) && hom_injective(h)) out.push_back(h);
  };
  auto assign = [&](auto&& self, std::size_t gi) -> void {
    if (gi == gens.size()) {
      build_and_check();
      return;
    }
    const int need = src.element_order(gens[gi]);
    for (int y = 0; y < dst.order; ++y) {
      if (dst.element_order(y) != need) continue;  // injectivity forces equal orders
      if (++candidates > max_candidates)
        fail(ErrorKind::ResourceLimit, "injective hom enumeration exceeded the candidate budget");
      gen_image[gi] = y;
      self(self, gi + 1);
    }
  };
  assign(assign, 0);
  std::sort(out.begin(), out.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CompiledSubgroup compile_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) fail(ErrorKind::InvalidInput, "compile_subgroup: not a subgroup");
  CompiledSubgroup out;
  out.members = h.members;
  out.index_in_parent.assign(g.order, -1);
  for (std::size_t i = 0; i < h.members.size(); ++i)
    out.index_in_parent[h.members[i]] = static_cast<int>(i);
  const int n = h.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a][b] = out.index_in_parent[g.mul(h.members[a], h.members[b])];
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = g.label(h.members[a]);
  out.group = make_group(std::move(t), std::move(labels));
  return out;
}

}  // namespace orbicell
