#include <catch2/catch_amalgamated.hpp>

#include "pierce/generators.hpp"
#include "pierce/io.hpp"
#include "pierce/matching.hpp"

using namespace pierce;

TEST_CASE("gon edge families: structure") {
  for (int p = 1; p <= 5; ++p) {
    FamilyR f = regular_gon_edges(p);
    const int n = 2 * p + 1;
    REQUIRE(static_cast<int>(f.sets.size()) == n);
    // e0 is anchored at angle 0 (vertex order is canonicalized, so membership)
    const PointR anchor{rat(1), rat(0)};
    bool has_anchor = false;
    for (const auto& v : f.sets[0].vertices) has_anchor |= (v == anchor);
    CHECK(has_anchor);
    for (int i = 0; i < n; ++i) {
      const auto& s = f.sets[i];
      CHECK(s.id == "e" + std::to_string(i));
      REQUIRE(s.is_segment());
      for (const auto& v : s.vertices) CHECK(norm2(v) == 1);  // exactly on the circle
    }
    // consecutive edges share exactly one endpoint; the family is a closed chain
    for (int i = 0; i < n; ++i) {
      auto shared = intersect_convex(f.sets[i], f.sets[(i + 1) % n]);
      REQUIRE(shared.has_value());
      CHECK(shared->is_point());
    }
    CHECK(matching_number(f).nu == p);
  }
  CHECK_THROWS_AS(regular_gon_edges(0), precondition_error);
  CHECK_THROWS_AS(regular_gon_edges(-3), precondition_error);
}

TEST_CASE("random families are deterministic and valid") {
  RandomFamilyParams par;
  par.n = 7;
  FamilyR a = random_family(42, par);
  FamilyR b = random_family(42, par);
  CHECK(family_to_json(a).dump() == family_to_json(b).dump());
  CHECK(family_to_json(a).dump() != family_to_json(random_family(43, par)).dump());

  for (unsigned long seed = 1; seed <= 20; ++seed) {
    FamilyR f = random_family(seed, par);
    REQUIRE(f.sets.size() == 7);
    for (const auto& s : f.sets) {
      CHECK(s.vertices.size() >= 3);
      CHECK(s.vertices.size() <= 8);
      // revalidation must accept the vertices unchanged
      ConvexSetR again = make_convex_set(s.id, s.vertices);
      CHECK(again.vertices == s.vertices);
    }
  }
  CHECK_THROWS_AS(random_family(1, RandomFamilyParams{.n = 0}), precondition_error);
}

TEST_CASE("no-isolated filter") {
  for (unsigned long seed = 1; seed <= 20; ++seed) {
    RandomFamilyParams par;
    par.n = 3 + static_cast<int>(seed % 7);
    par.filter = RandomFamilyParams::Filter::no_isolated;
    par.center_range = 2;  // spread out: isolation actually occurs pre-filter
    FamilyR f = random_family(seed, par);
    CHECK(isolated_sets(f).empty());
  }
}

TEST_CASE("pairwise filter") {
  for (unsigned long seed = 1; seed <= 10; ++seed) {
    RandomFamilyParams par;
    par.n = 5;
    par.filter = RandomFamilyParams::Filter::pairwise;
    FamilyR f = random_family(seed, par);
    REQUIRE(f.sets.size() == 5);
    CHECK(matching_number(f).nu == 1);
  }
  // unsatisfiable: tiny sets scattered over a huge range exhaust the retries
  RandomFamilyParams hopeless;
  hopeless.n = 10;
  hopeless.filter = RandomFamilyParams::Filter::pairwise;
  hopeless.center_range = 60;
  hopeless.radius_min = rat(1, 100);
  hopeless.radius_max = rat(1, 50);
  hopeless.retry_budget = 25;
  CHECK_THROWS_AS(random_family(7, hopeless), budget_error);
}

TEST_CASE("rainbow filter") {
  for (int classes : {2, 4}) {
    for (unsigned long seed = 1; seed <= 8; ++seed) {
      RandomFamilyParams par;
      par.n = classes * 2;
      par.filter = RandomFamilyParams::Filter::rainbow;
      par.color_classes = classes;
      FamilyR f = random_family(seed, par);

      // colors are a partition into the requested classes
      REQUIRE(f.colors.size() == f.sets.size());
      std::vector<int> sizes(classes, 0);
      for (const auto& [id, c] : f.colors) {
        REQUIRE(c >= 0);
        REQUIRE(c < classes);
        ++sizes[c];
      }
      for (int c = 0; c < classes; ++c) CHECK(sizes[c] > 0);

      // exhaustive rainbow verification: every cross-class selection has
      // two intersecting members
      std::vector<std::vector<const ConvexSetR*>> by_class(classes);
      for (const auto& s : f.sets) by_class[f.colors.at(s.id)].push_back(&s);
      std::vector<int> pick(classes, 0);
      bool all_ok = true;
      for (;;) {
        bool pair_found = false;
        for (int a = 0; a < classes && !pair_found; ++a)
          for (int b = a + 1; b < classes && !pair_found; ++b)
            if (intersect_convex(*by_class[a][pick[a]], *by_class[b][pick[b]]).has_value())
              pair_found = true;
        if (!pair_found) all_ok = false;
        int carry = classes - 1;
        while (carry >= 0 && ++pick[carry] == static_cast<int>(by_class[carry].size()))
          pick[carry--] = 0;
        if (carry < 0) break;
      }
      CHECK(all_ok);
    }
  }
  RandomFamilyParams bad;
  bad.filter = RandomFamilyParams::Filter::rainbow;
  bad.color_classes = 3;  // odd
  bad.n = 6;
  CHECK_THROWS_AS(random_family(1, bad), precondition_error);
  bad.color_classes = 8;
  bad.n = 4;  // fewer sets than classes
  CHECK_THROWS_AS(random_family(1, bad), precondition_error);
}
