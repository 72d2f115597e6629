#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbicell/covering.hpp"
#include "orbicell/examples.hpp"
#include "orbicell/io.hpp"

using namespace orbicell;

namespace {

SimplicialComplex hexagon_circle() { return example_hexagon_z3().space; }

// Push a total-space edge path through the projection.
EdgePath project_path(const CoverData& cd, const EdgePath& p) {
  EdgePath out;
  out.base = cd.vertex_proj[p.base];
  for (const auto& [u, v] : p.steps)
    out.steps.emplace_back(cd.vertex_proj[u], cd.vertex_proj[v]);
  return out;
}

}  // namespace

TEST_CASE("identity cover: the whole group gives index one") {
  SimplicialComplex w = example_wedge2();
  CoverData cd = cover_from_subgroup(w, "o", {Word{1}, Word{2}}, 16, 100000);
  CHECK(cd.index() == 1);
  CHECK(cd.total.size() == w.size());
  CHECK(validate_cover(cd).ok());
  CHECK(deck_group(cd).group.order == 1);
}

TEST_CASE("wedge2: all three index-two covers behave") {
  SimplicialComplex w = example_wedge2();
  std::vector<std::vector<Word>> kernels = {
      {Word{2}, Word{1, 1}, Word{1, 2, -1}},    // a -> 1, b -> 0
      {Word{1}, Word{2, 2}, Word{2, 1, -2}},    // a -> 0, b -> 1
      {Word{2, -1}, Word{1, 1}, Word{1, 2}}};   // a -> 1, b -> 1
  for (const auto& words : kernels) {
    CoverData cd = cover_from_subgroup(w, "o", words, 16, 100000);
    CHECK(cd.index() == 2);
    CHECK(euler_characteristic(cd.total) == 2 * euler_characteristic(cd.base));
    CHECK(validate_cover(cd).ok());
    CHECK(components(cd.total).size() == 1);
    DeckGroup deck = deck_group(cd);
    CHECK(deck.group.order == 2);  // index-two subgroups are normal
    CHECK(normalizer_quotient_order(cd.table, cd.subgroup_words) == 2);
  }
}

TEST_CASE("hexagon circle: the cube of the loop gives the connected triple cover") {
  CoverData cd = cover_from_subgroup(hexagon_circle(), "h0", {Word{1, 1, 1}}, 16, 100000);
  CHECK(cd.index() == 3);
  CHECK(cd.total.vertices.size() == 18);
  int edges = 0;
  for (const auto& s : cd.total.simplices)
    if (s.size() == 2) ++edges;
  CHECK(edges == 18);
  CHECK(components(cd.total).size() == 1);
  CHECK(validate_cover(cd).ok());
  DeckGroup deck = deck_group(cd);
  CHECK(deck.group.order == 3);
  CHECK(deck.group.element_order(1) == 3);  // the deck rotation generates Z/3
  CHECK(normalizer_quotient_order(cd.table, cd.subgroup_words) == 3);
}

TEST_CASE("a non-normal index-three subgroup has a strictly smaller deck group") {
  // preimage of a point stabilizer under F2 ->> S3 (a -> (12), b -> (13))
  SimplicialComplex w = example_wedge2();
  std::vector<Word> words = {Word{1, 1}, Word{1, 2, -1}, Word{2, 1, -2}, Word{2, 2}};
  CoverData cd = cover_from_subgroup(w, "o", words, 16, 100000);
  CHECK(cd.index() == 3);
  CHECK(validate_cover(cd).ok());
  int nq = normalizer_quotient_order(cd.table, cd.subgroup_words);
  DeckGroup deck = deck_group(cd);
  CHECK(deck.group.order == nq);
  CHECK(nq == 1);
  CHECK(deck.group.order < 3);
}

TEST_CASE("chi multiplicativity and fiber size on assorted covers") {
  SimplicialComplex filled = make_simplicial({{"a", "b", "c"}, {"c", "d"}, {"d", "e", "a"}});
  Pi1Data pi1 = pi1_presentation(filled, "a");
  REQUIRE(pi1.group.generators.size() >= 1);
  for (const auto& [base, words, bound] :
       std::vector<std::tuple<SimplicialComplex, std::vector<Word>, int>>{
           {hexagon_circle(), {Word{1, 1}}, 8},
           {example_wedge2(), {Word{1}, Word{2, 2, 2}, Word{2, 1, -2, -2}, Word{2, 2, 1, -2}}, 8},
       }) {
    CoverData cd = cover_from_subgroup(base, base.vertices.front(), words, bound, 100000);
    CHECK(euler_characteristic(cd.total) == cd.index() * euler_characteristic(cd.base));
    CHECK(validate_cover(cd).ok());
    for (std::size_t bs = 0; bs < cd.base.size(); ++bs) {
      int count = 0;
      for (std::size_t ts = 0; ts < cd.total.size(); ++ts)
        if (cd.project_simplex(static_cast<int>(ts)) == static_cast<int>(bs)) ++count;
      CHECK(count == cd.index());
    }
  }
}

TEST_CASE("path lifting through a cover: existence, uniqueness, projection") {
  CoverData cd = cover_from_subgroup(hexagon_circle(), "h0", {Word{1, 1, 1}}, 16, 100000);
  // the loop around the base lifts to an arc; three times around closes
  EdgePath once = make_edge_path(cd.base, "h0",
                                 {{"h0", "h1"}, {"h1", "h2"}, {"h2", "h3"},
                                  {"h3", "h4"}, {"h4", "h5"}, {"h5", "h0"}});
  EdgePath lift1 = lift_path_in_cover(cd, once, cd.base_lift);
  CHECK(project_path(cd, lift1) == once);
  CHECK(lift1.end() != lift1.base);
  EdgePath cubed = concat_paths(concat_paths(once, once), once);
  EdgePath lift3 = lift_path_in_cover(cd, cubed, cd.base_lift);
  CHECK(lift3.end() == cd.total.require_vertex(cd.base_lift));
}

TEST_CASE("subgroup recovery at the abelianized level") {
  SimplicialComplex w = example_wedge2();
  std::vector<std::vector<Word>> subgroups = {
      {Word{2}, Word{1, 1}, Word{1, 2, -1}},
      {Word{1, 1}, Word{1, 2, -1}, Word{2, 1, -2}, Word{2, 2}},
      {Word{1}, Word{2}}};
  for (const auto& words : subgroups) {
    CoverData cd = cover_from_subgroup(w, "o", words, 16, 100000);
    Pi1Data base_pi1 = pi1_presentation(cd.base, cd.base_vertex);
    Pi1Data total_pi1 = pi1_presentation(cd.total, cd.base_lift);
    const int n = static_cast<int>(base_pi1.group.generators.size());
    // generators of pi1(total) push into the base through the projection
    Mat pushed;
    for (const auto& [edge, gi] : total_pi1.gen_of_edge) {
      (void)gi;
      EdgePath loop = total_pi1.tree_path(total_pi1.base, edge.first);
      loop.steps.emplace_back(edge.first, edge.second);
      loop = concat_paths(loop, total_pi1.tree_path(edge.second, total_pi1.base));
      Word w_base = base_pi1.word_of_path(project_path(cd, loop));
      Row row(n, 0);
      for (int x : w_base) row[std::abs(x) - 1] += (x > 0 ? 1 : -1);
      pushed.push_back(row);
    }
    // the pushed lattice must match the subgroup words' lattice
    Mat expected;
    for (const Word& word : words) {
      Row row(n, 0);
      for (int x : word) row[std::abs(x) - 1] += (x > 0 ? 1 : -1);
      expected.push_back(row);
    }
    CHECK(lattices_equal(pushed, expected, n));
    // rank times count: chi multiplicativity pins the generator count
    CHECK(static_cast<int>(total_pi1.group.generators.size()) ==
          1 - cd.index() * euler_characteristic(cd.base));
  }
}

TEST_CASE("cover construction rejects bad input") {
  SimplicialComplex disconnected = make_simplicial({{"a", "b"}, {"x", "y"}});
  CHECK_THROWS_AS(cover_from_subgroup(disconnected, "a", {}, 8, 1000), Error);
  SimplicialComplex w = example_wedge2();
  CHECK_THROWS_AS(cover_from_subgroup(w, "o", {Word{7}}, 8, 1000), Error);
  // infinite index: the trivial subgroup of a free group exhausts the bound
  try {
    cover_from_subgroup(w, "o", {}, 8, 1000);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("quotient path lifting on the hexagon action") {
  GComplex gc = example_hexagon_z3();
  QuotientData q = quotient(gc);
  int e01 = q.quotient.require("h0+h1");
  int e05 = q.quotient.require("h0+h5");
  // constant path
  QuotientPath constant;
  constant.start_cell = q.quotient.require("h0");
  LiftResult r0 = lift_edge_path(gc, q, constant, "h2");
  CHECK(r0.path.steps.empty());
  CHECK(r0.unique);
  // the two-step quotient loop lifts to an open arc
  QuotientPath loop;
  loop.start_cell = q.quotient.require("h0");
  loop.steps = {{e01, true}, {e05, false}};
  LiftResult r1 = lift_edge_path(gc, q, loop, "h0");
  CHECK(r1.unique);
  CHECK(gc.space.vertices[r1.path.end()] == "h2");
  // three times around closes up
  QuotientPath triple = loop;
  for (int k = 0; k < 2; ++k) {
    triple.steps.push_back({e01, true});
    triple.steps.push_back({e05, false});
  }
  LiftResult r3 = lift_edge_path(gc, q, triple, "h0");
  CHECK(r3.unique);
  CHECK(gc.space.vertices[r3.path.end()] == "h0");
  // lifting a concatenation equals concatenating lifts
  LiftResult second_leg = lift_edge_path(gc, q, loop, "h2");
  EdgePath glued = concat_paths(r1.path, second_leg.path);
  QuotientPath two_loops = loop;
  two_loops.steps.push_back({e01, true});
  two_loops.steps.push_back({e05, false});
  CHECK(lift_edge_path(gc, q, two_loops, "h0").path == glued);
}

TEST_CASE("quotient path lifting flags non-free ambiguity") {
  GComplex refl = example_reflection_path();
  QuotientData q = quotient(refl);
  QuotientPath step;
  step.start_cell = q.quotient.require("p2");
  step.steps = {{q.quotient.require("p1+p2"), false}};  // from the fixed end
  LiftResult r = lift_edge_path(refl, q, step, "p2");
  CHECK_FALSE(r.unique);  // the flip exchanges the two lifts
  CHECK(r.max_candidates == 2);
  CHECK(refl.space.vertices[r.path.end()] == "p1");  // the least candidate
}

TEST_CASE("canonical cover deck: free, trivial, and mixed actions") {
  // free hexagon: deck = Z/3 both ways
  CanonicalDeckReport hex = canonical_cover_deck(example_hexagon_z3());
  CHECK(hex.free_action);
  CHECK(hex.trivial_isotropy_cover);
  CHECK(hex.via_action.group.order == 3);
  REQUIRE(hex.via_propagation.has_value());
  CHECK(hex.via_propagation->group.order == 3);
  CHECK(hex.match);
  CHECK(hex.action_kernel.order() == 1);

  // trivial action of Z/2 on a triangle: everything is kernel
  SimplicialComplex tri = make_simplicial({{"a", "b", "c"}});
  std::vector<std::vector<int>> action(2, {0, 1, 2});
  GComplex trivial = make_gcomplex(tri, cyclic_group(2), std::move(action));
  CanonicalDeckReport t = canonical_cover_deck(trivial);
  CHECK(t.via_action.group.order == 1);
  CHECK(t.action_kernel.order() == 2);
  CHECK_FALSE(t.free_action);  // fixed points everywhere

  // reflection path: faithful but not free; the orbit map is not a cover
  CanonicalDeckReport r = canonical_cover_deck(example_reflection_path());
  CHECK_FALSE(r.trivial_isotropy_cover);
  CHECK(r.via_action.group.order == 2);
  CHECK(r.action_kernel.order() == 1);
  CHECK_FALSE(r.via_propagation.has_value());
}

TEST_CASE("canonical cover deck requires a connected space") {
  SimplicialComplex two = make_simplicial({{"a", "b"}, {"x", "y"}});
  std::vector<std::vector<int>> action(1, {0, 1, 2, 3});
  GComplex gc = make_gcomplex(two, trivial_group(), std::move(action));
  CHECK_THROWS_AS(canonical_cover_deck(gc), Error);
}

TEST_CASE("cover JSON round trip preserves the deck computation") {
  CoverData cd = cover_from_subgroup(hexagon_circle(), "h0", {Word{1, 1, 1}}, 16, 100000);
  Json j = cover_to_json(cd);
  CoverData back = cover_from_json(j);
  CHECK(validate_cover(back).ok());
  CHECK(deck_group(back).group.order == 3);
  CHECK(dump_json(cover_to_json(back)) == dump_json(j));
}
