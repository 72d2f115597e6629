#pragma once

// Canonical worked examples used across the test suites, plus a seeded
// generator of admissible, orbit-regular group actions.

#include <cstdint>
#include <string>
#include <vector>

#include "orbicell/cog.hpp"
#include "orbicell/complex.hpp"
#include "orbicell/gaction.hpp"

namespace orbicell {

// Five-vertex path p0-p1-p2-p3-p4 with the order-two flip about p2.
GComplex example_reflection_path();

// Six-vertex circle with the free rotation by two steps (order three).
GComplex example_hexagon_z3();

// Wedge of two triangle circles at the vertex "o"; edge-path group free of
// rank two.
SimplicialComplex example_wedge2();

// Triangle boundary with all groups of order two and identity structure.
ComplexOfGroups example_z2_circle();

// Attachment of a 2-cell of order-two isotropy onto that circle.
AttachSpec example_z2_disk_spec();

// Two 2-cells sharing a full triangle boundary (a cellular 2-sphere); its
// order-two structures carry a parity invariant that gauges cannot change.
CellComplex example_sphere_poset();

// Seeded generator of admissible, orbit-regular actions: |group| in
// {2,3,4,6,8,12}, at most `max_simplices` simplices, dimension <= 2.
GComplex random_gcomplex(std::uint64_t seed, int max_simplices = 40);

// Writes the named example to <dir>/<name>.json (random-gcomplex includes
// the seed in the file name); returns the paths written.
std::vector<std::string> gen_examples(const std::string& name, const std::string& dir,
                                      std::uint64_t seed = 0);

}  // namespace orbicell
