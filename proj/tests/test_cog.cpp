#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "orbicell/cog.hpp"
#include "orbicell/examples.hpp"

using namespace orbicell;

namespace {

// A single maximal chain w > T > e > v: the smallest poset with a
// composable triple, so the cocycle condition has something to say.
CellComplex chain4() {
  std::vector<Cell> cells{{"w", 3}, {"T", 2}, {"e", 1}, {"v", 0}};
  std::vector<std::pair<std::string, std::string>> faces{{"w", "T"}, {"w", "e"}, {"w", "v"},
                                                         {"T", "e"}, {"T", "v"}, {"e", "v"}};
  return make_complex(cells, faces, false);
}

ComplexOfGroups constant_cog(const CellComplex& base, const FiniteGroup& g) {
  std::vector<FiniteGroup> groups(base.size(), g);
  std::map<int, std::vector<int>> psi;
  std::vector<Arrow> arrows = arrows_of(base);
  for (std::size_t a = 0; a < arrows.size(); ++a) psi[static_cast<int>(a)] = identity_hom(g).images;
  return make_cog(base, std::move(groups), psi, {});
}

std::uint64_t rng_state = 12345;
int rnd(int n) {
  rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<int>((rng_state >> 33) % static_cast<std::uint64_t>(n));
}

}  // namespace

TEST_CASE("validate_cog: trivial structures are valid") {
  CellComplex sphere = example_sphere_poset();
  CHECK(validate_cog(trivial_cog(sphere)).ok());
  ComplexOfGroups z2 = constant_cog(sphere, cyclic_group(2));
  CHECK(validate_cog(z2).ok());
  CHECK(oracle::cocycle_scan(z2));
  CHECK(oracle::compatibility_scan(z2));
}

TEST_CASE("validate_cog: a flipped twist violates the cocycle on a chain") {
  ComplexOfGroups c = constant_cog(chain4(), cyclic_group(2));
  REQUIRE(validate_cog(c).ok());
  // flip g_{(e,v),(T,e)}: the unique triple (w > T > e > v) now fails
  int a = c.arrow_index(c.base.require("e"), c.base.require("v"));
  int b = c.arrow_index(c.base.require("T"), c.base.require("e"));
  int p = c.pair_index(a, b);
  REQUIRE(p >= 0);
  ComplexOfGroups bad = c;
  bad.twists[p] = 1;
  CogReport r = validate_cog(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().check == "cocycle");
  CHECK(r.violations.front().where == "w>T>e>v");
  CHECK_FALSE(oracle::cocycle_scan(bad));
}

TEST_CASE("validate_cog: compatibility bites with nonabelian groups") {
  CellComplex chain = make_complex({{"T", 2}, {"e", 1}, {"v", 0}},
                                   {{"T", "e"}, {"T", "v"}, {"e", "v"}}, false);
  ComplexOfGroups c = constant_cog(chain, symmetric_group_s3());
  REQUIRE(validate_cog(c).ok());
  ComplexOfGroups bad = c;
  bad.twists[0] = 1;  // any non-central element breaks Ad(g) = id
  CogReport r = validate_cog(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().check == "compatibility");
  CHECK_FALSE(oracle::compatibility_scan(bad));
}

TEST_CASE("validate_cog: missing homomorphism data is InvalidInput") {
  CellComplex chain = make_complex({{"e", 1}, {"v", 0}}, {{"e", "v"}}, false);
  std::vector<FiniteGroup> groups{cyclic_group(2), cyclic_group(2)};
  CHECK_THROWS_AS(make_cog(chain, std::move(groups), {}, {}), Error);
}

TEST_CASE("apply_gauge: identity, explicit hand-computed flip, round trip") {
  ComplexOfGroups c = constant_cog(example_sphere_poset(), cyclic_group(2));
  Gauge id = identity_gauge(c);
  CHECK(apply_gauge(c, id) == c);

  // gauge a single arrow d: the new twists must be [d==a] + [d==b] + [d==ab]
  // evaluated in Z/2 (the displayed formula with identity psi).
  for (std::size_t d = 0; d < c.arrows.size(); ++d) {
    Gauge g = id;
    g.per_arrow[d] = 1;
    ComplexOfGroups out = apply_gauge(c, g);
    for (std::size_t p = 0; p < c.pairs.size(); ++p) {
      int expect = ((c.pairs[p].a == static_cast<int>(d)) + (c.pairs[p].b == static_cast<int>(d)) +
                    (c.pairs[p].ab == static_cast<int>(d))) %
                   2;
      CHECK(out.twists[p] == expect);
    }
  }

  // random gauge then its inverse composite returns the input
  for (int trial = 0; trial < 20; ++trial) {
    Gauge g = id;
    for (std::size_t a = 0; a < c.arrows.size(); ++a) g.per_arrow[a] = rnd(2);
    ComplexOfGroups moved = apply_gauge(c, g);
    CHECK(validate_cog(moved).ok());
    CHECK(apply_gauge(moved, inverse_gauge(c, g)) == c);
  }
}

TEST_CASE("apply_gauge preserves validity on nonabelian structures") {
  CellComplex chain = make_complex({{"T", 2}, {"e", 1}, {"v", 0}},
                                   {{"T", "e"}, {"T", "v"}, {"e", "v"}}, false);
  ComplexOfGroups c = constant_cog(chain, symmetric_group_s3());
  for (int trial = 0; trial < 50; ++trial) {
    Gauge g = identity_gauge(c);
    for (std::size_t a = 0; a < c.arrows.size(); ++a) g.per_arrow[a] = rnd(6);
    ComplexOfGroups moved = apply_gauge(c, g);
    CHECK(validate_cog(moved).ok());
    CHECK(oracle::cocycle_scan(moved));
    CHECK(oracle::compatibility_scan(moved));
    // gauges compose as a pointwise group
    Gauge h = identity_gauge(c);
    for (std::size_t a = 0; a < c.arrows.size(); ++a) h.per_arrow[a] = rnd(6);
    CHECK(apply_gauge(moved, h) == apply_gauge(c, compose_gauges(c, g, h)));
  }
}

TEST_CASE("are_equivalent: reflexive with identity witness") {
  ComplexOfGroups c = constant_cog(example_sphere_poset(), cyclic_group(2));
  EquivResult r = are_equivalent(c, c, 1000000);
  REQUIRE(r.status == EquivStatus::Equivalent);
  CHECK(*r.witness == identity_gauge(c));
}

TEST_CASE("are_equivalent: gauge orbits are recognized with verified witnesses") {
  ComplexOfGroups c = constant_cog(example_sphere_poset(), cyclic_group(2));
  for (int trial = 0; trial < 10; ++trial) {
    Gauge g = identity_gauge(c);
    for (std::size_t a = 0; a < c.arrows.size(); ++a) g.per_arrow[a] = rnd(2);
    ComplexOfGroups moved = apply_gauge(c, g);
    EquivResult r = are_equivalent(c, moved, 1000000);
    REQUIRE(r.status == EquivStatus::Equivalent);
    CHECK(apply_gauge(c, *r.witness) == moved);  // witness re-checked
    // symmetry
    EquivResult back = are_equivalent(moved, c, 1000000);
    REQUIRE(back.status == EquivStatus::Equivalent);
    CHECK(apply_gauge(moved, *back.witness) == c);
  }
}

TEST_CASE("are_equivalent: the flipped sphere twist is a genuine invariant") {
  // On the two-triangle sphere the total twist parity over all pairs is
  // gauge invariant (every gauge entry enters the sum an even number of
  // times), so one flipped pair cannot be gauged away.
  ComplexOfGroups c = constant_cog(example_sphere_poset(), cyclic_group(2));
  ComplexOfGroups flipped = c;
  flipped.twists[0] = 1;
  REQUIRE(validate_cog(flipped).ok());
  EquivResult r = are_equivalent(c, flipped, 1000000);
  CHECK(r.status == EquivStatus::Inequivalent);
  // with a tiny budget the same search reports exhaustion instead
  EquivResult tiny = are_equivalent(c, flipped, 3);
  CHECK(tiny.status == EquivStatus::Exhausted);
}

TEST_CASE("are_equivalent rejects mismatched bases or groups") {
  ComplexOfGroups a = constant_cog(example_sphere_poset(), cyclic_group(2));
  ComplexOfGroups b = constant_cog(chain4(), cyclic_group(2));
  CHECK_THROWS_AS(are_equivalent(a, b, 100), Error);
  ComplexOfGroups c = trivial_cog(example_sphere_poset());
  CHECK_THROWS_AS(are_equivalent(a, c, 100), Error);
}

TEST_CASE("restrict_to_skeleton: top dimension, zero, and validity") {
  ComplexOfGroups c = constant_cog(example_sphere_poset(), cyclic_group(2));
  CHECK(restrict_to_skeleton(c, 2) == c);
  ComplexOfGroups sk0 = restrict_to_skeleton(c, 0);
  CHECK(sk0.arrows.empty());
  CHECK(sk0.twists.empty());
  CHECK(sk0.base.size() == 3);
  ComplexOfGroups sk1 = restrict_to_skeleton(c, 1);
  CHECK(validate_cog(sk1).ok());
  CHECK(sk1.pairs.empty());  // no composable pairs below dimension 2
}

TEST_CASE("restrict_to_skeleton commutes with apply_gauge") {
  ComplexOfGroups c = constant_cog(example_sphere_poset(), cyclic_group(2));
  for (int trial = 0; trial < 10; ++trial) {
    Gauge g = identity_gauge(c);
    for (std::size_t a = 0; a < c.arrows.size(); ++a) g.per_arrow[a] = rnd(2);
    ComplexOfGroups left = restrict_to_skeleton(apply_gauge(c, g), 1);
    ComplexOfGroups sk = restrict_to_skeleton(c, 1);
    Gauge restricted = identity_gauge(sk);
    for (std::size_t a = 0; a < sk.arrows.size(); ++a) {
      int oa = c.arrow_index(c.base.require(sk.base.cells[sk.arrows[a].initial].id),
                             c.base.require(sk.base.cells[sk.arrows[a].terminal].id));
      restricted.per_arrow[a] = g.per_arrow[oa];
    }
    CHECK(left == apply_gauge(sk, restricted));
  }
}

TEST_CASE("attach_cell: a 1-cell with trivial groups extends a two-point complex") {
  CellComplex pts = make_complex({{"x", 0}, {"y", 0}}, {});
  ComplexOfGroups c = trivial_cog(pts);
  AttachSpec spec;
  spec.id = "e";
  spec.dim = 1;
  spec.face_ids = {"x", "y"};
  spec.group = trivial_group();
  AttachResult r = attach_cell(c, spec);
  REQUIRE(r.ok);
  CHECK(r.result.base.size() == 3);
  CHECK(validate_cog(r.result).ok());
}

TEST_CASE("attach_cell: the order-two disk is accepted") {
  ComplexOfGroups circle = example_z2_circle();
  AttachResult r = attach_cell(circle, example_z2_disk_spec());
  REQUIRE(r.ok);
  CHECK(validate_cog(r.result).ok());
  CHECK(restrict_to_skeleton(r.result, 1) == circle);
}

TEST_CASE("attach_cell: corrupted homomorphism data is rejected with a witness") {
  ComplexOfGroups circle = example_z2_circle();
  AttachSpec spec = example_z2_disk_spec();
  spec.homs["c0"] = {0, 0};  // no longer injective
  AttachResult r = attach_cell(circle, spec);
  REQUIRE_FALSE(r.ok);
  CHECK(r.failure.violations.front().check == "injective");
  CHECK(r.failure.violations.front().where == "D>c0");
}

TEST_CASE("attach_cell: structural errors are InvalidInput") {
  ComplexOfGroups circle = example_z2_circle();
  AttachSpec dup = example_z2_disk_spec();
  dup.id = "c0";
  CHECK_THROWS_AS(attach_cell(circle, dup), Error);
  AttachSpec open_faces = example_z2_disk_spec();
  open_faces.face_ids = {"c0+c1"};  // not closed: endpoints missing
  CHECK_THROWS_AS(attach_cell(circle, open_faces), Error);
  AttachSpec missing_hom = example_z2_disk_spec();
  missing_hom.homs.erase("c1");
  CHECK_THROWS_AS(attach_cell(circle, missing_hom), Error);
}

TEST_CASE("local development: trivial groups give the star itself") {
  CellComplex sphere = example_sphere_poset();
  ComplexOfGroups c = trivial_cog(sphere);
  for (int s = 0; s < static_cast<int>(sphere.size()); ++s) {
    LocalDevelopment dev = local_development(c, s);
    CHECK(dev.complex.size() == star(sphere, s).size());
    CHECK(dev.group.order == 1);
    CHECK(star(dev.complex, dev.center).size() == dev.complex.size());
  }
}

TEST_CASE("local development: coset counts over an attached isotropy cell") {
  ComplexOfGroups circle = example_z2_circle();
  // isotropy disk: psi is an isomorphism, so a single cell sits over D
  AttachResult iso = attach_cell(circle, example_z2_disk_spec());
  REQUIRE(iso.ok);
  {
    LocalDevelopment dev = local_development(iso.result, iso.result.base.require("c0"));
    int over_d = 0;
    for (std::size_t i = 0; i < dev.complex.size(); ++i)
      if (iso.result.base.cells[dev.over[i]].id == "D") ++over_d;
    CHECK(over_d == 1);
  }
  // trivial-isotropy disk: two cells over D, swapped by the vertex group
  AttachSpec trivial_spec;
  trivial_spec.id = "D";
  trivial_spec.dim = 2;
  trivial_spec.face_ids = example_z2_disk_spec().face_ids;
  trivial_spec.group = trivial_group();
  AttachResult triv = attach_cell(circle, trivial_spec);
  REQUIRE(triv.ok);
  {
    LocalDevelopment dev = local_development(triv.result, triv.result.base.require("c0"));
    std::vector<int> over_d;
    for (std::size_t i = 0; i < dev.complex.size(); ++i)
      if (triv.result.base.cells[dev.over[i]].id == "D") over_d.push_back(static_cast<int>(i));
    REQUIRE(over_d.size() == 2);
    CHECK(dev.action[1][over_d[0]] == over_d[1]);
    CHECK(star(dev.complex, dev.center).size() == dev.complex.size());
  }
}

TEST_CASE("local development rejects invalid input") {
  ComplexOfGroups bad = constant_cog(chain4(), cyclic_group(2));
  bad.twists[bad.pair_index(bad.arrow_index(bad.base.require("e"), bad.base.require("v")),
                            bad.arrow_index(bad.base.require("T"), bad.base.require("e")))] = 1;
  CHECK_THROWS_AS(local_development(bad, 0), Error);
}
