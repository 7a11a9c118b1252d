#include <doctest.h>

#include "clutterlab/harness.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clutterlab;

TEST_CASE("validate accepts deltas and canonicalizes member order") {
  const Clutter c = Clutter::validate(
      3, {ElemSet::of({2, 3}), ElemSet::of({1, 3}), ElemSet::of({1, 2})});
  CHECK(c == fixtures::delta3());
  CHECK(c.members()[0] == ElemSet::of({1, 2}));
  CHECK(c.members()[1] == ElemSet::of({1, 3}));
  CHECK(c.members()[2] == ElemSet::of({2, 3}));
}

TEST_CASE("validate rejects non-antichains instead of minimalizing") {
  CHECK_THROWS_WITH_AS(
      Clutter::validate(2, {ElemSet::of({1}), ElemSet::of({1, 2})}),
      doctest::Contains("NotAntichain"), Error);
  CHECK_THROWS_WITH_AS(
      Clutter::validate(2, {ElemSet::of({1}), ElemSet::of({1})}),
      doctest::Contains("DuplicateMember"), Error);
  CHECK_THROWS_WITH_AS(Clutter::validate(2, {ElemSet::of({3})}),
                       doctest::Contains("ElementOutOfRange"), Error);
}

TEST_CASE("trivial clutters") {
  const Clutter none = Clutter::validate(0, {});
  const Clutter empty_member = Clutter::validate(0, {ElemSet{}});
  CHECK(covering_number(none) == ExtNat(0));
  CHECK(covering_number(empty_member) == ExtNat::infinity());
  CHECK(blocker(none) == empty_member);
  CHECK(blocker(empty_member) == none);
  CHECK(is_cover(none, ElemSet{}));
  CHECK_THROWS_AS((void)minimum_covers(empty_member), Error);
}

TEST_CASE("is_cover") {
  const Clutter d3 = fixtures::delta3();
  CHECK(is_cover(d3, ElemSet::of({1, 2})));
  CHECK(!is_cover(d3, ElemSet::of({1})));
}

TEST_CASE("covering number and minimum covers on the fixtures") {
  CHECK(covering_number(Clutter::validate(1, {ElemSet::of({1})})) == ExtNat(1));
  CHECK(covering_number(fixtures::delta3()) ==
        oracle::covering_number(fixtures::delta3()));
  CHECK(covering_number(fixtures::delta3()) == ExtNat(2));

  CHECK(minimum_covers(fixtures::delta3()) ==
        std::vector<ElemSet>{ElemSet::of({1, 2}), ElemSet::of({1, 3}),
                             ElemSet::of({2, 3})});
  CHECK(minimum_covers(fixtures::two_singletons()) ==
        std::vector<ElemSet>{ElemSet::of({1, 2})});
  CHECK(minimum_covers(fixtures::c4()) ==
        std::vector<ElemSet>{ElemSet::of({1, 3}), ElemSet::of({2, 4})});
}

TEST_CASE("blocker matches the subset-enumeration oracle on fixtures") {
  CHECK(blocker(fixtures::delta3()) == fixtures::delta3());
  const Clutter single = Clutter::validate(1, {ElemSet::of({1})});
  CHECK(blocker(single) == single);
  CHECK(blocker(fixtures::c4()) ==
        Clutter::validate(4, {ElemSet::of({1, 3}), ElemSet::of({2, 4})}));
  for (const Clutter& c :
       {fixtures::c4(), fixtures::f6(), make_odd_hole(7), make_delta(5)})
    CHECK(blocker(c) == oracle::blocker(c));
}

TEST_CASE("blocker involution, exhaustively for n <= 4") {
  for (int n = 0; n <= 4; ++n)
    for_each_clutter(n, [](const Clutter& c) {
      REQUIRE(blocker(blocker(c)) == c);
    });
}

TEST_CASE("blocker members are minimal covers and dominate every cover") {
  GeneratorConfig config;
  config.kind = GenKind::Random;
  config.n = 7;
  config.seed = 7;
  RandomClutterStream stream(config);
  for (int i = 0; i < 50; ++i) {
    const Clutter c = stream.next();
    const Clutter b = blocker(c);
    for (ElemSet m : b.members()) CHECK(is_cover(c, m));
    // every cover contains a blocker member
    const std::uint64_t top = (std::uint64_t{1} << c.ground_size()) - 1;
    for (std::uint64_t mask = 0; mask <= top; ++mask) {
      if (!oracle::mask_is_cover(c, mask)) continue;
      bool contains_member = false;
      for (ElemSet m : b.members())
        if (m.subset_of(ElemSet::from_bits(mask))) {
          contains_member = true;
          break;
        }
      CHECK(contains_member);
    }
    // tau equals the smallest blocker member
    if (b.member_count() > 0) {
      int smallest = 65;
      for (ElemSet m : b.members()) smallest = std::min(smallest, m.size());
      CHECK(covering_number(c) ==
            ExtNat(static_cast<std::uint64_t>(smallest)));
    }
  }
}

TEST_CASE("minor examples") {
  const MinorResult r1 = minor(fixtures::c4(), {ElemSet::of({1}), ElemSet{}});
  CHECK(r1.clutter ==
        Clutter::validate(3, {ElemSet::of({1, 2}), ElemSet::of({2, 3})}));
  CHECK(r1.old_label == std::vector<int>{2, 3, 4});

  const MinorResult r2 =
      minor(fixtures::delta3(), {ElemSet{}, ElemSet::of({1})});
  CHECK(r2.clutter ==
        Clutter::validate(2, {ElemSet::of({1}), ElemSet::of({2})}));

  const MinorResult r3 = minor(fixtures::f6(), {ElemSet{}, ElemSet{}});
  CHECK(r3.clutter == fixtures::f6());
}

TEST_CASE("minor duality against the blocker, random instances") {
  GeneratorConfig config;
  config.kind = GenKind::Random;
  config.n = 6;
  config.seed = 11;
  RandomClutterStream stream(config);
  std::mt19937_64 engine(13);
  std::uniform_int_distribution<int> role(0, 2);
  for (int i = 0; i < 100; ++i) {
    const Clutter c = stream.next();
    ElemSet del, con;
    for (int e = 1; e <= c.ground_size(); ++e) {
      const int r = role(engine);
      if (r == 1) del = del.with(e);
      if (r == 2) con = con.with(e);
    }
    CHECK(blocker(minor(c, {del, con}).clutter) ==
          minor(blocker(c), {con, del}).clutter);
  }
}

TEST_CASE("all_minor_specs enumerates 3^n pairs in increasing size") {
  const auto specs = all_minor_specs(3);
  CHECK(specs.size() == 27);
  int prev = 0;
  for (const MinorSpec& s : specs) {
    CHECK(!s.deleted.intersects(s.contracted));
    const int size = s.deleted.size() + s.contracted.size();
    CHECK(size >= prev);
    prev = size;
  }
}
