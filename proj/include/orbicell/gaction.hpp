#pragma once

// Finite group actions on finite simplicial complexes: admissibility and
// regularity checks, quotients with stabilizers, fixed subcomplexes, and the
// extraction of the associated complex of groups from chosen lifts and
// transporters.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbicell/cog.hpp"
#include "orbicell/complex.hpp"
#include "orbicell/group.hpp"

namespace orbicell {

struct GComplex {
  SimplicialComplex space;
  FiniteGroup group;
  std::vector<std::vector<int>> action;  // per element: vertex permutation
  std::string base_vertex;               // optional

  int act_vertex(int g, int v) const { return action[g][v]; }
  std::vector<int> act_simplex(int g, const std::vector<int>& s) const;
  int act_simplex_index(int g, int s) const;
  std::vector<int> vertex_stabilizer(int v) const;
  std::vector<int> simplex_stabilizer(int s) const;  // setwise
};

// Checks that each element's vertex map is a bijection (InvalidInput when
// not) and wires up the structure; mathematical checks live in
// validate_action.
GComplex make_gcomplex(SimplicialComplex space, FiniteGroup group,
                       std::vector<std::vector<int>> action, std::string base_vertex = "");

struct ActionReport {
  std::vector<Violation> violations;  // group-law | simplicial | admissibility
  bool admissible = false;
  bool regular = false;  // no simplex has two distinct faces in one orbit
  bool suggest_subdivision = false;
  bool ok() const { return violations.empty(); }
};

ActionReport validate_action(const GComplex& gc);

bool is_admissible(const GComplex& gc);
// Orbit-regularity: no simplex has two distinct proper faces in the same
// orbit.  This is the combinatorial star-chart condition; extraction
// requires it, and one barycentric subdivision of an admissible action
// always provides it.
bool is_orbit_regular(const GComplex& gc);

GComplex barycentric_subdivision(const GComplex& gc);
GComplex skeleton(const GComplex& gc, int n);

struct QuotientData {
  CellComplex quotient;             // orbit poset; cell ids are least-lift tokens
  std::vector<int> orbit_map;       // simplex index -> quotient cell index
  std::vector<int> section;         // quotient cell -> lex-least lift (simplex index)
  std::vector<Subgroup> stabilizers;  // per quotient cell: stabilizer of the lift
};

QuotientData quotient(const GComplex& gc);

// Simplices all of whose vertices are fixed by every element of h.
SimplicialComplex fixed_subcomplex(const GComplex& gc, const Subgroup& h);

// The associated complex of groups over the quotient poset, together with
// the transporter record that produced it.  Seeds permute the transporter
// choices (the lift of each quotient cell stays the lex-least one, so the
// group assignment is seed-independent and different seeds are gauge
// equivalent).  Requires an admissible, orbit-regular action.
struct Extraction {
  QuotientData quot;
  ComplexOfGroups cog;
  std::vector<int> transporter;            // per arrow: k_a in the acting group
  std::vector<int> twist_ambient;          // per pair: k_a k_b k_ab^-1 in the acting group
  std::vector<std::vector<int>> members;   // per quotient cell: cog element -> group element
};

Extraction extract_cog(const GComplex& gc, std::uint64_t seed = 0);

// Full validation of an extraction: the cog axioms plus the transporter
// equations (psi_a = Ad(k_a) and g_{a,b} = k_a k_b k_ab^-1, each twist lying
// in its stabilizer).  A single corrupted twist entry is always caught.
CogReport validate_extraction(const GComplex& gc, const Extraction& ex);

// The star of the chosen lift of a quotient cell, as a cell complex carrying
// the stabilizer action; the reference object for the development round trip.
struct StarWithAction {
  CellComplex complex;
  FiniteGroup group;                     // compiled stabilizer
  std::vector<int> members;              // group element -> acting group element
  std::vector<std::vector<int>> action;  // per group element: permutation of cells
  std::vector<int> simplex_of;           // complex cell -> simplex index in the space
  int center = -1;                       // the lift itself
};

StarWithAction star_of_lift(const GComplex& gc, const Extraction& ex, int qcell);

// Equivariant comparison of local_development(ex.cog, qcell) with the star
// of the chosen lift, via the canonical map (tau, h) -> h k_d . tau_hat.
struct RoundTripReport {
  bool ok = false;
  std::string detail;
};

RoundTripReport development_matches_star(const GComplex& gc, const Extraction& ex, int qcell);

}  // namespace orbicell
