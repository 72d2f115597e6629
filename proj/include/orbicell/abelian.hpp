#pragma once

// Exact integer linear algebra at desk scale: Smith normal form, row-lattice
// normal forms, kernels, and finitely generated abelian group invariants.
// Everything is checked 64-bit arithmetic; overflow aborts loudly.

#include <string>
#include <vector>

#include "orbicell/error.hpp"

namespace orbicell {

using Row = std::vector<long long>;
using Mat = std::vector<Row>;  // row major

long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);

// Invariant factors d1 | d2 | ... of the matrix (nonnegative, zeros dropped).
std::vector<long long> smith_normal_form(Mat m);

struct AbelianGroup {
  int rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, in divisibility order
  bool operator==(const AbelianGroup&) const = default;
  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

// Z^num_gens modulo the row lattice of `relators`.
AbelianGroup abelian_invariants(int num_gens, const Mat& relators);

// Hermite-style canonical basis of the lattice spanned by the rows
// (row echelon, positive pivots, reduced above); empty rows dropped.
Mat row_lattice_normal_form(Mat m, int width);

bool lattices_equal(const Mat& a, const Mat& b, int width);
bool lattice_contains(const Mat& lattice, const Row& v, int width);

// Basis of { x : x * m == 0 } (x a row vector of length rows(m)).
Mat left_kernel(const Mat& m, int width);

// The map Z^m -> Z^n/rowlat(target_relators) sending basis vector i to
// row images[i].  Reports injectivity and the cokernel of the induced map
// between the two presented groups (source = Z^m / rowlat(source_relators)).
struct AbelianMapReport {
  bool injective = false;
  AbelianGroup source, target, cokernel;
};

AbelianMapReport abelian_map_report(int m, const Mat& source_relators, int n,
                                    const Mat& target_relators, const Mat& images);

}  // namespace orbicell
