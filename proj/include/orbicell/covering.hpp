#pragma once

// Covers of connected simplicial complexes built from finite-index subgroups
// of the edge-path group by coset enumeration, deck transformation groups,
// path lifting, and the canonical cover of a global quotient.

#include <optional>
#include <string>
#include <vector>

#include "orbicell/complex.hpp"
#include "orbicell/gaction.hpp"
#include "orbicell/group.hpp"
#include "orbicell/homotopy.hpp"
#include "orbicell/tc.hpp"

namespace orbicell {

struct CoverData {
  SimplicialComplex total;
  SimplicialComplex base;
  std::vector<int> vertex_proj;   // total vertex -> base vertex
  std::string base_vertex;        // basepoint in the base
  std::string base_lift;          // its lift at coset 0
  std::vector<std::string> gen_names;                  // pi_1 generators (letters)
  std::vector<std::pair<std::string, std::string>> gen_edges;  // generator -> oriented edge
  std::vector<Word> subgroup_words;
  CosetTable table;

  int index() const { return table.num_cosets; }
  int project_vertex(int tv) const { return vertex_proj[tv]; }
  int project_simplex(int ts) const;  // index into base.simplices
};

// Builds the connected cover whose pushed-forward pi_1 is the subgroup
// generated by the given words (over the presentation's generators).
// InvalidInput when the base is disconnected or a word is malformed;
// ResourceLimit when enumeration exceeds index_bound or max_steps.
CoverData cover_from_subgroup(const SimplicialComplex& s, const std::string& base,
                              const std::vector<Word>& subgroup_words, int index_bound,
                              long long max_steps);

// Covering-map conditions: simplicial projection, surjectivity, star
// bijectivity, constant fiber size equal to the index.
ValidationReport validate_cover(const CoverData& cd);

struct DeckGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> vertex_perms;  // per element: permutation of total vertices
};

// All simplicial automorphisms of the total complex commuting with the
// projection, found by seeding the image of the base lift and propagating
// along edges (each step has a unique continuation on a cover).
DeckGroup deck_group(const CoverData& cd);

// Unique lift of a base edge path through the covering projection.
EdgePath lift_path_in_cover(const CoverData& cd, const EdgePath& base_path,
                            const std::string& start_lift);

// Edge paths in the quotient poset of a global quotient: each step names an
// edge cell and a direction relative to the chosen lift of that cell.
struct QuotientPathStep {
  int edge_cell = -1;
  bool forward = true;  // entry at the smaller end of the chosen lift
};

struct QuotientPath {
  int start_cell = -1;  // vertex cell of the quotient
  std::vector<QuotientPathStep> steps;
};

struct LiftResult {
  EdgePath path;            // in gc.space
  bool unique = true;       // no step had more than one candidate
  int max_candidates = 1;   // worst step, before the transversal rule
};

// Lifts a quotient path step-wise, starting at a chosen vertex over the
// start cell.  For free actions the lift is unique; otherwise ties are
// resolved by the least candidate (the chosen transversal), and the result
// records that a tie occurred.
LiftResult lift_edge_path(const GComplex& gc, const QuotientData& q, const QuotientPath& p,
                          const std::string& start_lift);

struct CanonicalDeckReport {
  DeckGroup via_action;                       // Gamma / ker(action), acting over the quotient
  Subgroup action_kernel;
  bool free_action = false;                   // trivial isotropy everywhere
  bool trivial_isotropy_cover = false;        // the orbit map is a cover of spaces
  std::optional<DeckGroup> via_propagation;   // computed when the action is free
  bool match = true;                          // propagation agrees with the action
};

// Deck group of the orbit map Y -> Y/Gamma computed from the action, and,
// for free actions, independently by propagation over the quotient poset.
CanonicalDeckReport canonical_cover_deck(const GComplex& gc);

}  // namespace orbicell
