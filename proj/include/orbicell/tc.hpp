#pragma once

// Systematic coset enumeration over a finite presentation: relator tables
// processed in fixed order, cosets numbered in discovery order and
// standardized afterwards, with a hard step budget.

#include <vector>

#include "orbicell/error.hpp"
#include "orbicell/homotopy.hpp"

namespace orbicell {

struct CosetTable {
  int num_generators = 0;
  int num_cosets = 0;
  // action[c][2g] = c.gen_g, action[c][2g+1] = c.gen_g^-1; coset 0 is the subgroup
  std::vector<std::vector<int>> action;
  std::vector<Word> transversal;  // representative word per coset
  long long steps = 0;

  int apply_letter(int coset, int letter) const;  // signed 1-based letter
  int apply_word(int coset, const Word& w) const;
};

// Enumerates the cosets of <subgroup_gens> in the group presented by
// (num_generators, relators).  Throws ResourceLimit when the coset or step
// budget is exceeded before the table closes.
CosetTable coset_enumeration(int num_generators, const std::vector<Word>& relators,
                             const std::vector<Word>& subgroup_gens, long long max_cosets,
                             long long max_steps);

// Order of a finitely presented group via enumeration over the trivial
// subgroup; ResourceLimit if it does not close within the budgets.
long long fp_group_order(const FpGroup& g, long long max_cosets, long long max_steps);

// Number of cosets fixed by every subgroup generator word: the size of
// N(H)/H read off the coset permutation action.
int normalizer_quotient_order(const CosetTable& t, const std::vector<Word>& subgroup_gens);

}  // namespace orbicell
