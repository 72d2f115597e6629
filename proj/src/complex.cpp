#include "orbicell/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace orbicell {

namespace {

// Union-find over 0..n-1 with deterministic roots.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // smaller index wins, keeps components canonical
  }
};

std::vector<std::vector<int>> groups_of(UnionFind& uf, int n) {
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

}  // namespace

int CellComplex::dim() const {
  int d = -1;
  for (const Cell& c : cells) d = std::max(d, c.dim);
  return d;
}

int CellComplex::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].id == id) return static_cast<int>(i);
  return -1;
}

int CellComplex::require(const std::string& id) const {
  int i = index_of(id);
  if (i < 0) fail(ErrorKind::InvalidInput, "unknown cell id: " + id);
  return i;
}

bool CellComplex::has_face(int big, int small) const {
  return std::binary_search(faces[big].begin(), faces[big].end(), small);
}

CellComplex make_complex(std::vector<Cell> cells,
                         const std::vector<std::pair<std::string, std::string>>& face_pairs,
                         bool close, bool* closure_added) {
  CellComplex c;
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.dim, a.id) < std::tie(b.dim, b.id);
  });
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].dim < 0) fail(ErrorKind::InvalidInput, "negative dimension: " + cells[i].id);
    if (cells[i].id.empty() || cells[i].id.find('>') != std::string::npos)
      fail(ErrorKind::InvalidInput, "cell ids must be nonempty and free of '>': " + cells[i].id);
    if (!index.emplace(cells[i].id, static_cast<int>(i)).second)
      fail(ErrorKind::InvalidInput, "duplicate cell id: " + cells[i].id);
  }
  c.cells = std::move(cells);
  const int n = static_cast<int>(c.cells.size());
  std::vector<std::set<int>> face_sets(n);
  for (const auto& [big, small] : face_pairs) {
    auto bi = index.find(big);
    auto si = index.find(small);
    if (bi == index.end()) fail(ErrorKind::InvalidInput, "face pair uses unknown cell: " + big);
    if (si == index.end()) fail(ErrorKind::InvalidInput, "face pair uses unknown cell: " + small);
    if (bi->second == si->second)
      fail(ErrorKind::InvalidInput, "cell recorded as face of itself: " + big);
    face_sets[bi->second].insert(si->second);
  }
  bool added = false;
  if (close) {
    // Floyd-Warshall style closure; complexes are small.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        std::vector<int> mids(face_sets[i].begin(), face_sets[i].end());
        for (int m : mids)
          for (int f : face_sets[m])
            if (face_sets[i].insert(f).second) changed = added = true;
      }
    }
  }
  if (closure_added) *closure_added = added;
  c.faces.assign(n, {});
  c.cofaces.assign(n, {});
  for (int i = 0; i < n; ++i) {
    c.faces[i].assign(face_sets[i].begin(), face_sets[i].end());
    for (int f : face_sets[i]) c.cofaces[f].push_back(i);
  }
  for (auto& v : c.cofaces) std::sort(v.begin(), v.end());
  return c;
}

ValidationReport validate_complex(const CellComplex& c) {
  ValidationReport r;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    for (int f : c.faces[i])
      if (c.cells[f].dim >= c.cells[i].dim)
        r.violations.push_back({"dimension", "face " + c.cells[f].id + " of " + c.cells[i].id +
                                                 " does not drop dimension"});
    if (c.cells[i].dim > 0 && c.faces[i].empty())
      r.violations.push_back({"boundary", "positive-dimensional cell " + c.cells[i].id +
                                              " has no recorded faces"});
  }
  for (int i = 0; i < n; ++i)
    for (int m : c.faces[i])
      for (int f : c.faces[m])
        if (!c.has_face(i, f))
          r.violations.push_back({"closure", "face relation not closed: " + c.cells[i].id + " > " +
                                                 c.cells[m].id + " > " + c.cells[f].id +
                                                 " but the outer pair is missing"});
  return r;
}

std::vector<int> star(const CellComplex& c, int s) {
  if (s < 0 || s >= static_cast<int>(c.size()))
    fail(ErrorKind::InvalidInput, "star: cell index out of range");
  std::vector<int> out = c.cofaces[s];
  out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

CellComplex skeleton(const CellComplex& c, int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "skeleton: negative dimension");
  std::vector<Cell> cells;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Cell& cell : c.cells)
    if (cell.dim <= n) cells.push_back(cell);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.cells[i].dim > n) continue;
    for (int f : c.faces[i]) pairs.emplace_back(c.cells[i].id, c.cells[f].id);
  }
  return make_complex(std::move(cells), pairs, /*close=*/false);
}

std::vector<std::vector<int>> components(const CellComplex& c) {
  UnionFind uf(static_cast<int>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int f : c.faces[i]) uf.unite(static_cast<int>(i), f);
  return groups_of(uf, static_cast<int>(c.size()));
}

int euler_characteristic(const CellComplex& c) {
  int chi = 0;
  for (const Cell& cell : c.cells) chi += (cell.dim % 2 == 0) ? 1 : -1;
  return chi;
}

// ---------------------------------------------------------------------------

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

int SimplicialComplex::index_of_vertex(const std::string& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it != vertices.end() && *it == v) return static_cast<int>(it - vertices.begin());
  return -1;
}

int SimplicialComplex::require_vertex(const std::string& v) const {
  int i = index_of_vertex(v);
  if (i < 0) fail(ErrorKind::InvalidInput, "unknown vertex: " + v);
  return i;
}

int SimplicialComplex::index_of_simplex(const std::vector<int>& s) const {
  auto cmp = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::tie(a) < std::tie(b);
  };
  (void)cmp;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    if (simplices[i] == s) return static_cast<int>(i);
  return -1;
}

bool SimplicialComplex::has_edge(int u, int v) const {
  if (u == v) return false;
  std::vector<int> e{std::min(u, v), std::max(u, v)};
  return index_of_simplex(e) >= 0;
}

std::string SimplicialComplex::simplex_token(int s) const {
  std::string out;
  for (std::size_t i = 0; i < simplices[s].size(); ++i) {
    if (i) out += '+';
    out += vertices[simplices[s][i]];
  }
  return out;
}

std::vector<int> SimplicialComplex::vertex_neighbors(int v) const {
  std::vector<int> out;
  for (const auto& s : simplices)
    if (s.size() == 2) {
      if (s[0] == v) out.push_back(s[1]);
      if (s[1] == v) out.push_back(s[0]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex make_simplicial(const std::vector<std::vector<std::string>>& simplices,
                                  const std::vector<std::string>& extra_vertices) {
  std::set<std::string> vset(extra_vertices.begin(), extra_vertices.end());
  for (const auto& s : simplices)
    for (const auto& v : s) vset.insert(v);
  SimplicialComplex out;
  out.vertices.assign(vset.begin(), vset.end());
  std::set<std::vector<int>> sset;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) sset.insert({static_cast<int>(i)});
  for (const auto& s : simplices) {
    std::vector<int> idx;
    for (const auto& v : s) idx.push_back(out.index_of_vertex(v));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      fail(ErrorKind::InvalidInput, "simplex with repeated vertex");
    // close under subsets
    const int k = static_cast<int>(idx.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) sub.push_back(idx[b]);
      sset.insert(sub);
    }
  }
  out.simplices.assign(sset.begin(), sset.end());
  std::sort(out.simplices.begin(), out.simplices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return std::make_pair(a.size(), std::cref(a)) < std::make_pair(b.size(), std::cref(b));
            });
  return out;
}

ValidationReport validate_simplicial(const SimplicialComplex& s) {
  ValidationReport r;
  std::set<std::vector<int>> present(s.simplices.begin(), s.simplices.end());
  for (const auto& simp : s.simplices) {
    const int k = static_cast<int>(simp.size());
    for (int v : simp)
      if (v < 0 || v >= static_cast<int>(s.vertices.size())) {
        r.violations.push_back({"reference", "simplex references unknown vertex index"});
        return r;
      }
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) sub.push_back(simp[b]);
      if (!present.count(sub)) {
        std::string tok;
        for (std::size_t i = 0; i < sub.size(); ++i) {
          if (i) tok += '+';
          tok += s.vertices[sub[i]];
        }
        r.violations.push_back({"subset-closure", "missing face {" + tok + "}"});
      }
    }
  }
  return r;
}

SimplicialComplex skeleton(const SimplicialComplex& s, int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "skeleton: negative dimension");
  SimplicialComplex out;
  out.vertices = s.vertices;
  for (const auto& simp : s.simplices)
    if (static_cast<int>(simp.size()) - 1 <= n) out.simplices.push_back(simp);
  return out;
}

std::vector<std::vector<int>> components(const SimplicialComplex& s) {
  UnionFind uf(static_cast<int>(s.vertices.size()));
  for (const auto& simp : s.simplices)
    for (std::size_t i = 1; i < simp.size(); ++i) uf.unite(simp[0], simp[i]);
  return groups_of(uf, static_cast<int>(s.vertices.size()));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& s) {
  // One vertex per simplex; chains under strict inclusion become simplices.
  std::vector<std::vector<std::string>> chains;
  std::vector<std::string> tokens(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) tokens[i] = s.simplex_token(static_cast<int>(i));

  auto is_face = [&](int small, int big) {
    return std::includes(s.simplices[big].begin(), s.simplices[big].end(),
                         s.simplices[small].begin(), s.simplices[small].end()) &&
           small != big;
  };
  // Enumerate maximal chains by DFS; subset closure restores the others.
  std::vector<std::string> chain;
  auto extend = [&](auto&& self, int top) -> void {
    chain.push_back(tokens[top]);
    bool maximal_below = true;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (is_face(static_cast<int>(j), top)) {
        maximal_below = false;
        self(self, static_cast<int>(j));
      }
    if (maximal_below) chains.push_back(chain);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool is_top = true;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (is_face(static_cast<int>(i), static_cast<int>(j))) is_top = false;
    if (is_top) extend(extend, static_cast<int>(i));
  }
  return make_simplicial(chains);
}

CellComplex to_cell_complex(const SimplicialComplex& s) {
  std::vector<Cell> cells;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < s.size(); ++i)
    cells.push_back({s.simplex_token(static_cast<int>(i)),
                     static_cast<int>(s.simplices[i].size()) - 1});
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j &&
          std::includes(s.simplices[i].begin(), s.simplices[i].end(), s.simplices[j].begin(),
                        s.simplices[j].end()))
        pairs.emplace_back(s.simplex_token(static_cast<int>(i)), s.simplex_token(static_cast<int>(j)));
  return make_complex(std::move(cells), pairs, /*close=*/false);
}

int euler_characteristic(const SimplicialComplex& s) {
  int chi = 0;
  for (const auto& simp : s.simplices) chi += (simp.size() % 2 == 1) ? 1 : -1;
  return chi;
}

// ---------------------------------------------------------------------------

EdgePath make_edge_path(const SimplicialComplex& s, const std::string& base,
                        const std::vector<std::pair<std::string, std::string>>& steps) {
  EdgePath p;
  p.base = s.require_vertex(base);
  int at = p.base;
  for (const auto& [u, v] : steps) {
    int ui = s.require_vertex(u), vi = s.require_vertex(v);
    if (ui != at) fail(ErrorKind::InvalidInput, "edge path steps do not chain at " + u);
    if (!s.has_edge(ui, vi)) fail(ErrorKind::InvalidInput, "edge path uses missing edge " + u + "-" + v);
    p.steps.emplace_back(ui, vi);
    at = vi;
  }
  return p;
}

EdgePath reverse_path(const EdgePath& p) {
  EdgePath r;
  r.base = p.end();
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    r.steps.emplace_back(it->second, it->first);
  return r;
}

EdgePath concat_paths(const EdgePath& p, const EdgePath& q) {
  if (p.end() != q.base) fail(ErrorKind::InvalidInput, "edge path concatenation endpoint mismatch");
  EdgePath r = p;
  r.steps.insert(r.steps.end(), q.steps.begin(), q.steps.end());
  return r;
}

}  // namespace orbicell
