#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orbicell/group.hpp"

using namespace orbicell;

TEST_CASE("group construction and axioms") {
  FiniteGroup z6 = cyclic_group(6);
  CHECK(z6.order == 6);
  CHECK(z6.is_abelian());
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  FiniteGroup s3 = symmetric_group_s3();
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.is_abelian());
}

TEST_CASE("every single corrupted table entry is rejected") {
  for (const FiniteGroup& g : {cyclic_group(4), symmetric_group_s3(),
                               direct_product(cyclic_group(2), cyclic_group(2))}) {
    REQUIRE_FALSE(group_table_violation(g.table).has_value());
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        for (int wrong = 0; wrong < g.order; ++wrong) {
          if (wrong == g.table[a][b]) continue;
          auto table = g.table;
          table[a][b] = wrong;
          CHECK(group_table_violation(table).has_value());
        }
  }
}

TEST_CASE("centralizers: trivial subgroup, whole S3, abelian group") {
  FiniteGroup s3 = symmetric_group_s3();
  CHECK(centralizer(s3, trivial_subgroup()).members.size() == 6);
  // center of S3 is trivial; frozen by the brute scan over all six elements
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  CHECK(oracle::centralizer_scan(s3, all) == std::vector<int>{0});
  CHECK(centralizer(s3, full_subgroup(s3)).members == std::vector<int>{0});
  FiniteGroup z6 = cyclic_group(6);
  for (const Subgroup& h : all_subgroups(z6))
    CHECK(centralizer(z6, h).members.size() == 6);
}

TEST_CASE("centralizer always contains the center") {
  for (const FiniteGroup& g : {symmetric_group_s3(), dihedral_group(4), cyclic_group(8)}) {
    Subgroup z = center(g);
    for (const Subgroup& h : all_subgroups(g)) {
      Subgroup c = centralizer(g, h);
      for (int x : z.members) CHECK(c.contains(x));
      CHECK(is_subgroup(g, c));
    }
  }
}

TEST_CASE("conjugation: identity, transposition on 3-cycles, abelian") {
  FiniteGroup s3 = symmetric_group_s3();
  CHECK(conjugation(s3, 0).images == identity_hom(s3).images);
  // find the two 3-cycles and one transposition by element orders
  std::vector<int> cycles, transpositions;
  for (int x = 1; x < 6; ++x)
    (s3.element_order(x) == 3 ? cycles : transpositions).push_back(x);
  REQUIRE(cycles.size() == 2);
  REQUIRE(transpositions.size() == 3);
  GroupHom ad = conjugation(s3, transpositions[0]);
  CHECK(ad.images[cycles[0]] == cycles[1]);
  CHECK(ad.images[cycles[1]] == cycles[0]);
  FiniteGroup z6 = cyclic_group(6);
  for (int x = 0; x < 6; ++x) CHECK(conjugation(z6, x).images == identity_hom(z6).images);
}

TEST_CASE("conjugation satisfies the composition law") {
  FiniteGroup g = dihedral_group(4);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      CHECK(compose_homs(conjugation(g, x), conjugation(g, y)).images ==
            conjugation(g, g.mul(x, y)).images);
}

TEST_CASE("subgroups up to conjugacy: Z/2, S3, Z/4") {
  CHECK(subgroups_up_to_conjugacy(cyclic_group(2)).size() == 2);
  // S3: trivial, <transposition>, <3-cycle>, S3 itself
  std::vector<Subgroup> s3_classes = subgroups_up_to_conjugacy(symmetric_group_s3());
  CHECK(s3_classes.size() == 4);
  std::multiset<std::size_t> sizes;
  for (const Subgroup& h : s3_classes) sizes.insert(h.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3, 6});
  CHECK(subgroups_up_to_conjugacy(cyclic_group(4)).size() == 3);
}

TEST_CASE("conjugacy representatives are canonical") {
  FiniteGroup s3 = symmetric_group_s3();
  std::vector<Subgroup> reps = subgroups_up_to_conjugacy(s3);
  for (const Subgroup& h : all_subgroups(s3)) {
    // the representative of h's class is the least conjugate member set
    std::vector<std::vector<int>> orbit;
    for (int x = 0; x < s3.order; ++x) orbit.push_back(conjugate_subgroup(s3, x, h).members);
    std::sort(orbit.begin(), orbit.end());
    bool found = false;
    for (const Subgroup& r : reps)
      if (r.members == orbit.front()) found = true;
    CHECK(found);
  }
}

TEST_CASE("injective homomorphisms: counts and the order obstruction") {
  CHECK(injective_homs(cyclic_group(2), cyclic_group(2)).size() == 1);
  // Z/3 -> S3: the generator can land on either 3-cycle
  CHECK(injective_homs(cyclic_group(3), symmetric_group_s3()).size() == 2);
  CHECK(injective_homs(cyclic_group(2), cyclic_group(3)).empty());
  for (const GroupHom& h : injective_homs(cyclic_group(3), symmetric_group_s3())) {
    CHECK(hom_law_holds(cyclic_group(3), symmetric_group_s3(), h.images));
    CHECK(hom_injective(h));
  }
}

TEST_CASE("hom construction validates the law exhaustively") {
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup z2 = cyclic_group(2);
  CHECK_NOTHROW(make_hom(z4, z2, {0, 1, 0, 1}));
  CHECK_THROWS_AS(make_hom(z4, z2, {0, 1, 1, 0}), Error);
  CHECK_THROWS_AS(make_hom(z4, z2, {1, 0, 1, 0}), Error);
}

TEST_CASE("subgroup compilation keeps the embedding") {
  FiniteGroup s3 = symmetric_group_s3();
  for (const Subgroup& h : all_subgroups(s3)) {
    CompiledSubgroup cs = compile_subgroup(s3, h);
    CHECK(cs.group.order == h.order());
    for (int a = 0; a < cs.group.order; ++a)
      for (int b = 0; b < cs.group.order; ++b)
        CHECK(cs.members[cs.group.mul(a, b)] == s3.mul(cs.members[a], cs.members[b]));
  }
}

TEST_CASE("permutation closure hits the resource bound") {
  CHECK_THROWS_AS(group_from_permutations({{1, 2, 3, 4, 5, 6, 0}}, 7, 5), Error);
  FiniteGroup a4 = group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4);
  CHECK(a4.order == 12);
}
