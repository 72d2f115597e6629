#pragma once

// Finite regular cell complexes stored as posets (cells, dimensions and the
// strict face relation), plus abstract simplicial complexes and edge paths.
// Cells carry no geometry: every construction downstream (arrows, stars,
// skeleta, complexes of groups) reads only the face poset.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbicell/error.hpp"

namespace orbicell {

struct Cell {
  std::string id;
  int dim = 0;
  bool operator==(const Cell&) const = default;
};

// An arrow is an ordered pair of cells (initial, terminal) where the
// terminal cell is a proper face of the initial one.  Two arrows a, b
// compose iff t(b) = i(a); then ab = (i(b), t(a)).
struct Arrow {
  int initial = -1;
  int terminal = -1;
  bool operator==(const Arrow&) const = default;
  auto operator<=>(const Arrow&) const = default;
};

struct CellComplex {
  std::vector<Cell> cells;  // sorted by (dim, id); this order is canonical
  std::vector<std::vector<int>> faces;    // faces[i]: all proper faces of cell i, sorted
  std::vector<std::vector<int>> cofaces;  // cofaces[i]: all cells having i as a face, sorted

  std::size_t size() const { return cells.size(); }
  int dim() const;
  int index_of(const std::string& id) const;  // -1 if absent
  int require(const std::string& id) const;   // InvalidInput if absent
  bool has_face(int big, int small) const;
  bool operator==(const CellComplex& o) const {
    return cells == o.cells && faces == o.faces;
  }
};

// Builds a complex from raw parts.  Throws InvalidInput on duplicate ids or
// dangling references.  When close is set, the face relation is completed to
// its transitive closure; *closure_added reports whether that added pairs.
CellComplex make_complex(std::vector<Cell> cells,
                         const std::vector<std::pair<std::string, std::string>>& face_pairs,
                         bool close = true, bool* closure_added = nullptr);

struct Violation {
  std::string check;   // short machine-readable tag
  std::string detail;  // offending cells / witnesses
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the poset invariants on the relation as stored: strictly decreasing
// dimensions, transitive closure, nonempty boundary in positive dimension.
ValidationReport validate_complex(const CellComplex& c);

// St(s): the cell s together with every cell that has s as a face (the cells
// whose interiors make up the open star).
std::vector<int> star(const CellComplex& c, int s);

// Subcomplex of all cells of dimension <= n with the restricted relation.
CellComplex skeleton(const CellComplex& c, int n);

// Connected components under face-sharing adjacency.  Each component is a
// sorted cell-index list; components are ordered by smallest contained cell.
std::vector<std::vector<int>> components(const CellComplex& c);

int euler_characteristic(const CellComplex& c);

// ---------------------------------------------------------------------------

struct SimplicialComplex {
  std::vector<std::string> vertices;        // sorted tokens
  std::vector<std::vector<int>> simplices;  // sorted vertex-index sets, ordered by (size, lex)

  std::size_t size() const { return simplices.size(); }
  int dim() const;
  int index_of_vertex(const std::string& v) const;
  int require_vertex(const std::string& v) const;
  int index_of_simplex(const std::vector<int>& s) const;  // -1 if absent
  bool has_edge(int u, int v) const;
  std::string simplex_token(int s) const;  // vertex tokens joined by '+'
  std::vector<int> vertex_neighbors(int v) const;  // sorted
  bool operator==(const SimplicialComplex&) const = default;
};

// Builds a simplicial complex from vertex tokens per simplex; closes under
// subsets.  Duplicate vertices inside a simplex or unknown tokens are
// InvalidInput.  Vertices not covered by `simplices` may be passed separately.
SimplicialComplex make_simplicial(const std::vector<std::vector<std::string>>& simplices,
                                  const std::vector<std::string>& extra_vertices = {});

// Subset-closure check on raw data (the loader normally closes for you).
ValidationReport validate_simplicial(const SimplicialComplex& s);

SimplicialComplex skeleton(const SimplicialComplex& s, int n);

// Partition of the vertex set under edge adjacency, ordered by least vertex.
std::vector<std::vector<int>> components(const SimplicialComplex& s);

// Vertices of the subdivision are the simplices of s; simplices are chains
// under strict inclusion.  Vertex tokens join the original ones with '+'.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& s);

// The face poset of s as a CellComplex; cell ids are simplex tokens.
CellComplex to_cell_complex(const SimplicialComplex& s);

int euler_characteristic(const SimplicialComplex& s);

// ---------------------------------------------------------------------------

// A combinatorial path in the 1-skeleton: a start vertex and a sequence of
// oriented edges with matching endpoints.
struct EdgePath {
  int base = -1;
  std::vector<std::pair<int, int>> steps;
  int end() const { return steps.empty() ? base : steps.back().second; }
  bool operator==(const EdgePath&) const = default;
};

EdgePath make_edge_path(const SimplicialComplex& s, const std::string& base,
                        const std::vector<std::pair<std::string, std::string>>& steps);
EdgePath reverse_path(const EdgePath& p);
EdgePath concat_paths(const EdgePath& p, const EdgePath& q);  // requires p.end() == q.base

}  // namespace orbicell
