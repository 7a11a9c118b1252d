#include <doctest.h>

#include "clutterlab/harness.hpp"
#include "fixtures.hpp"

using namespace clutterlab;

TEST_CASE("exhaustive enumeration hits the antichain counts") {
  const std::uint64_t expected[] = {2, 3, 6, 20, 168};
  for (int n = 0; n <= 4; ++n) {
    std::uint64_t count = 0;
    for_each_clutter(n, [&count](const Clutter&) { ++count; });
    CHECK(count == expected[n]);
  }
  CHECK_THROWS_WITH_AS(for_each_clutter(7, [](const Clutter&) {}),
                       doctest::Contains("BoundExceeded"), Error);
}

TEST_CASE("exhaustive enumeration emits distinct valid clutters") {
  const std::vector<Clutter> all = enumerate_clutters(3);
  CHECK(all.size() == 20);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK(!(all[i] == all[j]));
  // trivial clutters come first
  CHECK(all[0] == Clutter::validate(3, {}));
  CHECK(all[1] == Clutter::validate(3, {ElemSet{}}));
}

TEST_CASE("family constructors") {
  CHECK(make_delta(3) == fixtures::delta3());
  CHECK(make_delta(4) ==
        Clutter::validate(4, {ElemSet::of({1, 2}), ElemSet::of({1, 3}),
                              ElemSet::of({1, 4}), ElemSet::of({2, 3, 4})}));
  CHECK_THROWS_WITH_AS((void)make_delta(2), doctest::Contains("BadDimension"),
                       Error);

  CHECK(make_odd_hole(5) ==
        Clutter::validate(5, {ElemSet::of({1, 2}), ElemSet::of({1, 5}),
                              ElemSet::of({2, 3}), ElemSet::of({3, 4}),
                              ElemSet::of({4, 5})}));
  CHECK_THROWS_AS((void)make_odd_hole(4), Error);
  CHECK_THROWS_AS((void)make_odd_hole(3), Error);

  CHECK(make_cuboid(fixtures::f6_points()) ==
        Clutter::validate(6, {ElemSet::of({2, 4, 5}), ElemSet::of({2, 3, 6}),
                              ElemSet::of({1, 4, 6}), ElemSet::of({2, 3, 5}),
                              ElemSet::of({1, 4, 5}), ElemSet::of({1, 3, 6})}));
  CHECK(make_cuboid(full_cube(2)) ==
        Clutter::validate(4, {ElemSet::of({2, 4}), ElemSet::of({1, 4}),
                              ElemSet::of({2, 3}), ElemSet::of({1, 3})}));
}

TEST_CASE("make_family dispatches on the config") {
  GeneratorConfig config;
  config.kind = GenKind::Family;
  config.family = FamilyKind::Delta;
  config.n = 5;
  CHECK(make_family(config) == make_delta(5));
  config.family = FamilyKind::OddHole;
  CHECK(make_family(config) == make_odd_hole(5));
  config.family = FamilyKind::Cuboid;
  config.cuboid_points = fixtures::f6_points();
  CHECK(make_family(config) == fixtures::f6());
}

TEST_CASE("random streams are reproducible") {
  GeneratorConfig config;
  config.kind = GenKind::Random;
  config.n = 6;
  config.seed = 99;
  RandomClutterStream a(config), b(config);
  for (int i = 0; i < 40; ++i) {
    const Clutter ca = a.next();
    CHECK(ca == b.next());
    CHECK(ca.ground_size() == 6);
    CHECK(ca.member_count() >= 1);
  }
  CHECK(random_clutter(config) == RandomClutterStream(config).next());

  GeneratorConfig other = config;
  other.seed = 100;
  bool any_differ = false;
  RandomClutterStream c(config), d(other);
  for (int i = 0; i < 40; ++i)
    if (!(c.next() == d.next())) any_differ = true;
  CHECK(any_differ);
}

TEST_CASE("random streams respect the member size range") {
  GeneratorConfig config;
  config.kind = GenKind::Random;
  config.n = 8;
  config.seed = 5;
  config.min_member_size = 3;
  config.max_member_size = 4;
  RandomClutterStream stream(config);
  for (int i = 0; i < 30; ++i) {
    const Clutter c = stream.next();
    for (ElemSet m : c.members()) {
      CHECK(m.size() >= 3);
      CHECK(m.size() <= 4);
    }
  }

  GeneratorConfig bad = config;
  bad.min_member_size = 9;
  CHECK_THROWS_WITH_AS(RandomClutterStream{bad},
                       doctest::Contains("SizeRangeInfeasible"), Error);
}

TEST_CASE("verify_theorem passes on the exhaustive n <= 4 sweep") {
  GeneratorConfig config;
  config.kind = GenKind::Exhaustive;
  config.n = 4;
  const VerificationReport r = verify_theorem(config);
  CHECK(r.passed());
  CHECK(r.instances_total == 2 + 3 + 6 + 20 + 168);
  CHECK(r.clean_tangled_count > 0);
  CHECK(!r.config_echo.empty());
}

TEST_CASE("verify_lemmas passes on the exhaustive n <= 3 sweep") {
  GeneratorConfig config;
  config.kind = GenKind::Exhaustive;
  config.n = 3;
  const VerificationReport r = verify_lemmas(config);
  CHECK(r.passed());
  CHECK(r.instances_total == 2 + 3 + 6 + 20);
}

TEST_CASE("verify_lemmas passes on a random n = 5 batch") {
  GeneratorConfig config;
  config.kind = GenKind::Random;
  config.n = 5;
  config.count = 50;
  config.seed = 1234;
  const VerificationReport r = verify_lemmas(config);
  CHECK(r.passed());
  CHECK(r.instances_total == 50);
}

TEST_CASE("family campaigns handle obstruction instances gracefully") {
  GeneratorConfig config;
  config.kind = GenKind::Family;
  config.family = FamilyKind::Delta;
  config.n = 4;
  const VerificationReport r = verify_theorem(config);
  CHECK(r.passed());  // deltas are not clean, so the theorem does not apply
  CHECK(r.clean_tangled_count == 0);
  CHECK(r.instances_total == 1);

  config.family = FamilyKind::Cuboid;
  config.cuboid_points = fixtures::f6_points();
  const VerificationReport rf = verify_theorem(config);
  CHECK(rf.passed());
  CHECK(rf.clean_tangled_count == 1);
}

TEST_CASE("check names are exposed and runnable") {
  for (const std::string& name : theorem_check_names())
    CHECK(!run_check(name, fixtures::f6()).has_value());
  for (const std::string& name : lemma_check_names())
    CHECK(!run_check(name, fixtures::f6()).has_value());
  CHECK_THROWS_AS((void)run_check("no-such-check", fixtures::f6()), Error);
}
