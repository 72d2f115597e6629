#pragma once

// Complexes of groups over a finite cell poset: a group per cell, an
// injective homomorphism per arrow, a twist element per composable pair of
// arrows, subject to the compatibility and cocycle equations.  Gauge
// transformations act on (psi, twist) with the groups held fixed; local
// developments realize the coset geometry over a star.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbicell/complex.hpp"
#include "orbicell/group.hpp"

namespace orbicell {

// A composable pair (a, b) of arrow indices with t(b) = i(a); ab is the
// arrow (i(b), t(a)).  The twist of the pair lives in the group of t(a).
struct ComposablePair {
  int a = -1;
  int b = -1;
  int ab = -1;
  bool operator==(const ComposablePair&) const = default;
};

struct ComplexOfGroups {
  CellComplex base;
  std::vector<FiniteGroup> groups;  // one per cell, indexed like base.cells
  std::vector<Arrow> arrows;        // every face pair, sorted by (initial, terminal)
  std::vector<GroupHom> psi;        // per arrow: G_{i(a)} -> G_{t(a)}
  std::vector<ComposablePair> pairs;  // sorted by (i(b), i(a), t(a))
  std::vector<int> twists;            // per pair: element of G_{t(a)}

  int arrow_index(int initial, int terminal) const;  // -1 if absent
  int pair_index(int a, int b) const;                // -1 if absent
  const FiniteGroup& group_at_terminal(int arrow) const { return groups[arrows[arrow].terminal]; }
  std::string arrow_name(int a) const;
  std::string pair_name(int p) const;  // big>mid>small
  bool operator==(const ComplexOfGroups& o) const {
    if (!(base == o.base) || arrows != o.arrows || pairs != o.pairs || twists != o.twists ||
        psi != o.psi || groups.size() != o.groups.size())
      return false;
    for (std::size_t i = 0; i < groups.size(); ++i)
      if (!groups[i].same_as(o.groups[i])) return false;
    return true;
  }
};

// Enumerates arrows and composable pairs of a complex in canonical order.
std::vector<Arrow> arrows_of(const CellComplex& base);
std::vector<ComposablePair> composable_pairs(const std::vector<Arrow>& arrows);

// Assembles a complex of groups.  psi_by_arrow maps arrow index -> images;
// arrows with a trivial source group may be omitted (the unique map is
// filled in).  twists_by_pair maps pair index -> element; omitted pairs
// default to the identity.  Structural gaps are InvalidInput; the returned
// structure is not yet validated mathematically.
ComplexOfGroups make_cog(CellComplex base, std::vector<FiniteGroup> groups,
                         const std::map<int, std::vector<int>>& psi_by_arrow,
                         const std::map<int, int>& twists_by_pair);

ComplexOfGroups trivial_cog(const CellComplex& base);  // all groups trivial

struct CogViolation {
  std::string check;    // "hom-law" | "injective" | "compatibility" | "cocycle" | "twist-range"
  std::string where;    // arrow or pair/triple name
  std::string witness;  // element-level witness
};

struct CogReport {
  std::vector<CogViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks, for every arrow, pair and composable triple:
//   psi_a is an injective homomorphism,
//   Ad(g_{a,b}) o psi_{ab} = psi_a o psi_b,
//   psi_a(g_{b,c}) g_{a,bc} = g_{a,b} g_{ab,c}.
CogReport validate_cog(const ComplexOfGroups& c);

// A gauge is an element of G_{t(a)} per arrow.
struct Gauge {
  std::vector<int> per_arrow;
  bool operator==(const Gauge&) const = default;
};

Gauge identity_gauge(const ComplexOfGroups& c);
// Pointwise product (second o first); gauges form a group per arrow.
Gauge compose_gauges(const ComplexOfGroups& c, const Gauge& first, const Gauge& second);
Gauge inverse_gauge(const ComplexOfGroups& c, const Gauge& g);

// psi'_a = Ad(g_a) o psi_a and g'_{a,b} = g_a psi_a(g_b) g_{a,b} g_{ab}^-1.
// The output is re-validated; failure would be an internal error.
ComplexOfGroups apply_gauge(const ComplexOfGroups& c, const Gauge& g);

enum class EquivStatus { Equivalent, Inequivalent, Exhausted };

struct EquivResult {
  EquivStatus status = EquivStatus::Exhausted;
  std::optional<Gauge> witness;  // set when Equivalent; verifiable by apply_gauge
  long long nodes = 0;           // search nodes visited
};

// Decides gauge equivalence by depth-first search over per-arrow candidate
// sets (elements whose conjugation matches the psi constraint), pruning each
// twist equation as soon as its three arrows are assigned.  Requires equal
// bases and identical group assignments (InvalidInput otherwise).
// "Inequivalent" is only returned once the pruned space provably contains no
// witness; running past `budget` nodes yields Exhausted.
EquivResult are_equivalent(const ComplexOfGroups& c1, const ComplexOfGroups& c2, long long budget);

ComplexOfGroups restrict_to_skeleton(const ComplexOfGroups& c, int n);

// Extension of a complex of groups by one new top cell.
struct AttachSpec {
  std::string id;
  int dim = 0;
  std::vector<std::string> face_ids;  // must be a closed subcomplex of the base
  FiniteGroup group;                  // G_e
  std::map<std::string, std::vector<int>> homs;  // face id -> images of psi_(e,face)
  // twist for new pairs keyed "big>mid>small" with big == id; identity default
  std::map<std::string, int> twists;
};

struct AttachResult {
  bool ok = false;
  ComplexOfGroups result;  // valid when ok
  CogReport failure;       // witnesses when not ok
};

AttachResult attach_cell(const ComplexOfGroups& c, const AttachSpec& spec);

// The local development over the star of a cell s: one cell per left coset
// of psi_d(G_tau) in G_s over each tau in St(s) (the cell over s itself is
// unique), faces induced through the twists, G_s acting by left translation.
struct LocalDevelopment {
  CellComplex complex;
  FiniteGroup group;                       // copy of G_s
  std::vector<std::vector<int>> action;    // per group element: permutation of cells
  std::vector<int> over;                   // development cell -> star cell (base index)
  std::vector<int> coset_rep;              // development cell -> least coset element
  int center = -1;                         // the unique cell over s
};

LocalDevelopment local_development(const ComplexOfGroups& c, int s);

}  // namespace orbicell
