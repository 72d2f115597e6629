#pragma once

// Finite groups as explicit multiplication tables, with homomorphisms,
// subgroups, centralizers and conjugacy machinery.  Everything is brute
// force over tables; all target groups are small (order <= 48 by default).

#include <optional>
#include <string>
#include <vector>

#include "orbicell/error.hpp"

namespace orbicell {

struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> table;  // table[a][b] = a * b; element 0 is the identity
  std::vector<int> inverse;
  std::vector<std::string> labels;  // optional, size == order when present

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int element_order(int x) const;
  bool is_abelian() const;
  std::string label(int x) const;
  // Structural identity: same order and same table (labels are cosmetic).
  bool same_as(const FiniteGroup& o) const { return order == o.order && table == o.table; }
};

// Returns an explanation of the first axiom failure, or nullopt when the
// table is a group table with identity 0.  Checks identity, row/column
// bijectivity, inverses and associativity; together these catch any single
// corrupted entry.
std::optional<std::string> group_table_violation(const std::vector<std::vector<int>>& table);

FiniteGroup make_group(std::vector<std::vector<int>> table,
                       std::vector<std::string> labels = {});  // InvalidInput on bad table
FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Closes a set of permutations of {0..degree-1} under composition and
// compiles the multiplication table.  Elements are sorted lexicographically,
// which places the identity at index 0.  ResourceLimit beyond max_order.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens, int degree,
                                    int max_order = 48);

FiniteGroup symmetric_group_s3();
FiniteGroup dihedral_group(int n);  // order 2n, on the n-gon's vertices

// A homomorphism is the image array over all source elements; source and
// target are passed alongside.  Constructions validate the law exhaustively.
struct GroupHom {
  std::vector<int> images;
  bool operator==(const GroupHom&) const = default;
};

bool hom_law_holds(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& images);
GroupHom make_hom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<int> images);
bool hom_injective(const GroupHom& h);
GroupHom identity_hom(const FiniteGroup& g);
GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner);  // outer o inner

// Ad(x): y -> x y x^-1 on g.
GroupHom conjugation(const FiniteGroup& g, int x);

struct Subgroup {
  std::vector<int> members;  // sorted, contains 0
  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup&) const = default;
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members);  // InvalidInput if not closed
Subgroup trivial_subgroup();
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup conjugate_subgroup(const FiniteGroup& g, int x, const Subgroup& h);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);

// {x in g : xy = yx for all y in h}.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);

// All subgroups, sorted by (order, members).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_order = 48);

// One representative per conjugacy class: the lexicographically least member
// set in its class.  ResourceLimit when order(g) exceeds the bound.
std::vector<Subgroup> subgroups_up_to_conjugacy(const FiniteGroup& g, int max_order = 48);

// All injective homomorphisms src -> dst in a deterministic order
// (sorted by image array).  ResourceLimit past max_candidates.
std::vector<GroupHom> injective_homs(const FiniteGroup& src, const FiniteGroup& dst,
                                     long long max_candidates = 1000000);

// The subgroup table of h inside g: element i of the result is members[i].
struct CompiledSubgroup {
  FiniteGroup group;
  std::vector<int> members;          // result element -> parent element
  std::vector<int> index_in_parent;  // parent element -> result element or -1
};
CompiledSubgroup compile_subgroup(const FiniteGroup& g, const Subgroup& h);

}  // namespace orbicell
