#pragma once

// pi_0 and pi_1 of simplicial complexes via spanning trees, guided-loop
// fundamental groups of global quotients fibered over the centralizer, the
// five-term sequence checker, and isotropy pi_0 classes.

#include <map>
#include <string>
#include <vector>

#include "orbicell/abelian.hpp"
#include "orbicell/complex.hpp"
#include "orbicell/gaction.hpp"
#include "orbicell/group.hpp"

namespace orbicell {

// Words are sequences of signed 1-based generator references: +k means
// generator k-1, -k its inverse.  Concatenation composes left to right.
using Word = std::vector<int>;

Word reduce_word(Word w);
Word inverse_word(const Word& w);
Word concat_words(const Word& a, const Word& b);
std::string word_to_string(const Word& w, const std::vector<std::string>& gen_names);

struct FpGroup {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely reduced; empty relators are kept
};

FpGroup make_fp_group(std::vector<std::string> generators, std::vector<Word> relators);

Mat relator_matrix(const FpGroup& g);          // exponent-sum rows
AbelianGroup abelianization(const FpGroup& g);

// Edge-path presentation of pi_1 restricted to the component of the base:
// generators are the non-tree edges of a breadth-first spanning tree,
// relators the boundaries of 2-simplices.
struct Pi1Data {
  FpGroup group;
  SimplicialComplex space;
  int base = -1;
  std::vector<bool> in_component;            // per vertex
  std::vector<int> parent;                   // BFS tree; -1 at base and outside
  std::map<std::pair<int, int>, int> gen_of_edge;  // (u,v) with u<v -> generator

  EdgePath tree_path(int from, int to) const;
  Word word_of_path(const EdgePath& p) const;  // tree closure of the path
};

struct Pi0Class {
  std::string representative;       // least vertex token
  std::vector<std::string> members; // vertex tokens
};

std::vector<Pi0Class> pi0(const SimplicialComplex& s);

Pi1Data pi1_presentation(const SimplicialComplex& s, const std::string& base);

// pi_1^{(H,rho)} of the quotient at a basepoint fixed by H, presented by the
// fiber generators of pi_1(Y^H, o) together with one symbol per element of
// C(H)_o = { g in C(H) : g.o lies in the component of o }, realized by
// breadth-first paths; proj records the fibration onto C(H).
struct GuidedPi1 {
  FpGroup presentation;
  std::vector<int> proj;        // per generator: ambient group element (fiber -> identity)
  std::vector<int> fiber_incl;  // generator indices of the fiber inclusion
  std::string basepoint;
  Subgroup subgroup_h;
  GroupHom rho;                 // inclusion H -> Gamma
  Subgroup centralizer_h;       // C(H)
  Subgroup ch_base;             // C(H)_o
  SimplicialComplex fixed;      // Y^H
  Pi1Data fiber;
  std::vector<int> t_elem;      // per t-generator: ambient element
  int num_fiber_gens = 0;
};

GuidedPi1 guided_pi1(const GComplex& gc, const Subgroup& h, const std::string& base);

struct Junction {
  bool holds = false;
  std::vector<std::string> left, right;  // the two finite enumerations compared
};

struct SequenceReport {
  bool proj_is_hom = false;   // every relator maps to the identity in C(H)
  Junction at_centralizer;    // image(proj) vs kernel of g -> [g.o]
  Junction at_pi0;            // classes killed in guided pi_0 vs the C(H)-orbit of [o]
  bool ab_injective = false;  // pi_1(Y^H)_ab -> guided_ab
  AbelianGroup fiber_ab, guided_ab, cokernel;
  int pi0_fixed = 0;
  int pi0_guided = 0;
  std::vector<std::string> pi0_guided_reps;
};

SequenceReport sequence_check(const GComplex& gc, const Subgroup& h, const std::string& base);

struct IsotropyClass {
  int hom_index = 0;
  std::vector<int> hom_images;
  std::string component_rep;
};

// Pairs (injective rho: g -> Gamma, component of Y^{rho(g)}) modulo
// (rho, [y]) ~ (Ad(gamma) o rho, [gamma.y]).
std::vector<IsotropyClass> pi0_isotropy(const GComplex& gc, const FiniteGroup& g,
                                        long long hom_budget = 1000000);

// Conjugation z . w . z^-1 on each generator, freely reduced.
std::vector<Word> conj_action(const GuidedPi1& gp, const Word& z);

struct BasepointChange {
  GuidedPi1 target;           // the presentation at the far end of the path
  std::vector<Word> images;   // per target generator: a word over the source generators
  bool proj_compatible = false;
  bool ab_isomorphism = false;
};

// u_*: the presentation-level isomorphism from the basepoint at the end of
// `path_in_fixed` back to the one at its start (conjugation along the path).
BasepointChange change_basepoint(const GComplex& gc, const Subgroup& h, const GuidedPi1& source,
                                 const EdgePath& path_in_fixed);

}  // namespace orbicell
