#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orbicell/examples.hpp"
#include "orbicell/gaction.hpp"

using namespace orbicell;

namespace {

GComplex trivial_action_on(const SimplicialComplex& s, const FiniteGroup& g) {
  std::vector<std::vector<int>> action(g.order);
  for (int e = 0; e < g.order; ++e)
    for (std::size_t v = 0; v < s.vertices.size(); ++v) action[e].push_back(static_cast<int>(v));
  return make_gcomplex(s, g, std::move(action));
}

// The inadmissible swap of a single edge's endpoints.
GComplex edge_swap() {
  SimplicialComplex edge = make_simplicial({{"a", "b"}});
  std::vector<std::vector<int>> action{{0, 1}, {1, 0}};
  return make_gcomplex(edge, cyclic_group(2), std::move(action));
}

}  // namespace

TEST_CASE("validate_action: trivial actions are fine") {
  GComplex gc = trivial_action_on(example_wedge2(), symmetric_group_s3());
  ActionReport r = validate_action(gc);
  CHECK(r.ok());
  CHECK(r.admissible);
  CHECK(r.regular);
}

TEST_CASE("validate_action: the edge swap is inadmissible, its subdivision is not") {
  GComplex swap = edge_swap();
  ActionReport r = validate_action(swap);
  CHECK_FALSE(r.ok());
  CHECK(r.violations.front().check == "admissibility");
  CHECK(r.suggest_subdivision);
  GComplex divided = barycentric_subdivision(swap);
  ActionReport r2 = validate_action(divided);
  CHECK(r2.ok());
  CHECK(r2.admissible);
  CHECK(r2.regular);
}

TEST_CASE("subdivision of an admissible action is admissible and orbit-regular") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    GComplex gc = random_gcomplex(seed);
    REQUIRE(is_admissible(gc));
    GComplex divided = barycentric_subdivision(gc);
    CHECK(is_admissible(divided));
    CHECK(is_orbit_regular(divided));
  }
  // the free rotation of the hollow triangle is admissible but not
  // orbit-regular; one subdivision fixes it
  SimplicialComplex tri = make_simplicial({{"t0", "t1"}, {"t1", "t2"}, {"t0", "t2"}});
  std::vector<std::vector<int>> rot{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  GComplex gc = make_gcomplex(tri, cyclic_group(3), std::move(rot));
  CHECK(is_admissible(gc));
  CHECK_FALSE(is_orbit_regular(gc));
  CHECK(is_orbit_regular(barycentric_subdivision(gc)));
  CHECK_THROWS_AS(extract_cog(gc), Error);  // extraction demands regularity
  CHECK_NOTHROW(extract_cog(barycentric_subdivision(gc)));
}

TEST_CASE("non-bijective action data is InvalidInput") {
  SimplicialComplex edge = make_simplicial({{"a", "b"}});
  std::vector<std::vector<int>> action{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(make_gcomplex(edge, cyclic_group(2), std::move(action)), Error);
}

TEST_CASE("quotient: trivial action copies the complex with full stabilizers") {
  SimplicialComplex w = example_wedge2();
  GComplex gc = trivial_action_on(w, cyclic_group(3));
  QuotientData q = quotient(gc);
  CHECK(q.quotient.size() == w.size());
  for (const Subgroup& s : q.stabilizers) CHECK(s.order() == 3);
}

TEST_CASE("quotient: hexagon by rotation is the 2-vertex 2-edge circle") {
  QuotientData q = quotient(example_hexagon_z3());
  CHECK(q.quotient.size() == 4);
  int verts = 0, edges = 0;
  for (const Cell& c : q.quotient.cells) (c.dim == 0 ? verts : edges)++;
  CHECK(verts == 2);
  CHECK(edges == 2);
  for (const Subgroup& s : q.stabilizers) CHECK(s.order() == 1);
}

TEST_CASE("quotient: reflection path gives a 3-vertex path with one fixed end") {
  GComplex gc = example_reflection_path();
  QuotientData q = quotient(gc);
  CHECK(q.quotient.size() == 5);  // 3 vertices, 2 edges
  std::map<std::string, int> stab_order;
  for (std::size_t c = 0; c < q.quotient.size(); ++c)
    stab_order[q.quotient.cells[c].id] = q.stabilizers[c].order();
  CHECK(stab_order["p2"] == 2);
  CHECK(stab_order["p0"] == 1);
  CHECK(stab_order["p0+p1"] == 1);
}

TEST_CASE("orbit counting identity on random instances") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GComplex gc = random_gcomplex(seed);
    QuotientData q = quotient(gc);
    long long total = 0;
    for (const Subgroup& s : q.stabilizers) total += gc.group.order / s.order();
    CHECK(total == static_cast<long long>(gc.space.size()));
  }
}

TEST_CASE("fixed_subcomplex: trivial subgroup, reflection center, free action") {
  GComplex refl = example_reflection_path();
  SimplicialComplex all = fixed_subcomplex(refl, trivial_subgroup());
  CHECK(all.size() == refl.space.size());
  SimplicialComplex center = fixed_subcomplex(refl, full_subgroup(refl.group));
  CHECK(center.vertices == std::vector<std::string>{"p2"});
  CHECK(center.size() == 1);
  GComplex hex = example_hexagon_z3();
  SimplicialComplex empty = fixed_subcomplex(hex, full_subgroup(hex.group));
  CHECK(empty.vertices.empty());
}

TEST_CASE("fixed_subcomplex is monotone in the subgroup") {
  for (std::uint64_t seed : {3u, 7u, 11u}) {
    GComplex gc = random_gcomplex(seed);
    std::vector<Subgroup> subs = all_subgroups(gc.group);
    for (const Subgroup& h1 : subs)
      for (const Subgroup& h2 : subs) {
        bool contained = std::includes(h2.members.begin(), h2.members.end(), h1.members.begin(),
                                       h1.members.end());
        if (!contained) continue;
        SimplicialComplex big = fixed_subcomplex(gc, h1);
        SimplicialComplex small = fixed_subcomplex(gc, h2);
        for (const std::string& v : small.vertices) CHECK(big.index_of_vertex(v) >= 0);
      }
  }
}

TEST_CASE("extract_cog: trivial action gives constant groups and identity twists") {
  SimplicialComplex tri = make_simplicial({{"a", "b", "c"}});
  GComplex gc = trivial_action_on(tri, symmetric_group_s3());
  Extraction ex = extract_cog(gc);
  for (const FiniteGroup& g : ex.cog.groups) CHECK(g.order == 6);
  for (int t : ex.cog.twists) CHECK(t == 0);
  for (std::size_t a = 0; a < ex.cog.arrows.size(); ++a)
    CHECK(ex.cog.psi[a].images == identity_hom(symmetric_group_s3()).images);
  CHECK(validate_extraction(gc, ex).ok());
}

TEST_CASE("extract_cog: reflection path matches the worked example") {
  Extraction ex = extract_cog(example_reflection_path());
  const CellComplex& base = ex.cog.base;
  CHECK(ex.cog.groups[base.require("p2")].order == 2);
  CHECK(ex.cog.groups[base.require("p0")].order == 1);
  CHECK(ex.cog.groups[base.require("p1+p2")].order == 1);
  int arrow = ex.cog.arrow_index(base.require("p1+p2"), base.require("p2"));
  REQUIRE(arrow >= 0);
  CHECK(hom_injective(ex.cog.psi[arrow]));
  CHECK(validate_extraction(example_reflection_path(), ex).ok());
}

TEST_CASE("extract_cog: free hexagon action gives the trivial structure") {
  Extraction ex = extract_cog(example_hexagon_z3());
  for (const FiniteGroup& g : ex.cog.groups) CHECK(g.order == 1);
  for (int t : ex.cog.twists) CHECK(t == 0);
  CHECK(validate_cog(ex.cog).ok());
}

TEST_CASE("extraction is valid on random instances; the oracle agrees") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GComplex gc = random_gcomplex(seed);
    Extraction ex = extract_cog(gc);
    CHECK(validate_cog(ex.cog).ok());
    CHECK(validate_extraction(gc, ex).ok());
    CHECK(oracle::cocycle_scan(ex.cog));
    CHECK(oracle::compatibility_scan(ex.cog));
  }
}

TEST_CASE("choice independence: different seeds are gauge equivalent") {
  int nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GComplex gc = random_gcomplex(seed);
    Extraction a = extract_cog(gc, 0);
    Extraction b = extract_cog(gc, 1);
    REQUIRE(a.cog.base == b.cog.base);
    EquivResult r = are_equivalent(a.cog, b.cog, 1000000);
    REQUIRE(r.status == EquivStatus::Equivalent);
    CHECK(apply_gauge(a.cog, *r.witness) == b.cog);
    if (!(a.cog == b.cog)) ++nontrivial;
  }
  CHECK(nontrivial > 0);  // the seeds genuinely move the transporters
}

TEST_CASE("skeleton coherence: restriction commutes with extraction") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GComplex gc = random_gcomplex(seed);
    for (int n : {0, 1}) {
      ComplexOfGroups restricted = restrict_to_skeleton(extract_cog(gc).cog, n);
      ComplexOfGroups from_skeleton = extract_cog(skeleton(gc, n)).cog;
      REQUIRE(restricted.base == from_skeleton.base);
      EquivResult r = are_equivalent(restricted, from_skeleton, 1000000);
      CHECK(r.status == EquivStatus::Equivalent);
    }
  }
}

TEST_CASE("local development reproduces the star of the lift, equivariantly") {
  // the worked example: develop the reflection quotient at the center
  GComplex refl = example_reflection_path();
  Extraction ex = extract_cog(refl);
  int center = ex.cog.base.require("p2");
  LocalDevelopment dev = local_development(ex.cog, center);
  CHECK(dev.group.order == 2);
  CHECK(dev.complex.size() == 3);  // the open star of the middle vertex in Y
  RoundTripReport rt = development_matches_star(refl, ex, center);
  CHECK(rt.ok);

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GComplex gc = random_gcomplex(seed);
    Extraction e2 = extract_cog(gc);
    for (int c = 0; c < static_cast<int>(e2.cog.base.size()); ++c) {
      RoundTripReport r = development_matches_star(gc, e2, c);
      INFO(r.detail);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("gauge transforms respect extracted twisted structures") {
  // extracted instances carry genuinely nontrivial twists; random gauges
  // must preserve validity and compose as a group
  std::uint64_t state = 99;
  auto rnd = [&](int n) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(n));
  };
  int twisted_seen = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GComplex gc = random_gcomplex(seed);
    Extraction ex = extract_cog(gc);
    bool twisted = false;
    for (int t : ex.cog.twists)
      if (t != 0) twisted = true;
    if (twisted) ++twisted_seen;
    if (ex.cog.arrows.empty()) continue;
    for (int trial = 0; trial < 3; ++trial) {
      Gauge g = identity_gauge(ex.cog);
      for (std::size_t a = 0; a < ex.cog.arrows.size(); ++a)
        g.per_arrow[a] = rnd(ex.cog.group_at_terminal(static_cast<int>(a)).order);
      ComplexOfGroups moved = apply_gauge(ex.cog, g);
      CHECK(validate_cog(moved).ok());
      CHECK(apply_gauge(moved, inverse_gauge(ex.cog, g)) == ex.cog);
      EquivResult r = are_equivalent(ex.cog, moved, 1000000);
      REQUIRE(r.status == EquivStatus::Equivalent);
      CHECK(apply_gauge(ex.cog, *r.witness) == moved);
    }
  }
  CHECK(twisted_seen > 0);
}

TEST_CASE("random instances satisfy the generator contract") {
  std::set<int> orders;
  int with_isotropy = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GComplex gc = random_gcomplex(seed);
    orders.insert(gc.group.order);
    CHECK(gc.space.size() <= 40);
    CHECK(gc.space.dim() <= 2);
    CHECK(is_admissible(gc));
    CHECK(is_orbit_regular(gc));
    for (std::size_t v = 0; v < gc.space.vertices.size(); ++v)
      if (gc.vertex_stabilizer(static_cast<int>(v)).size() > 1) {
        ++with_isotropy;
        break;
      }
  }
  CHECK(orders.size() >= 4);
  CHECK(with_isotropy > 5);  // the corpus exercises nontrivial stabilizers
}
