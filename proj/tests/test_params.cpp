#include <doctest.h>

#include "clutterlab/obstructions.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clutterlab;

namespace {

// Fixture with a reducible covering pattern. Its minimum covers are exactly
// {1,2}, {3,4}, {5,6}, {6,7}, so G has components {1,2}, {3,4} and the path
// 5-6-7 with bipartition ({5,7}, {6}). The pattern (V,V,U) = {2,4,5,7}
// covers, and so does its component-3 flip (V,V,V) = {2,4,6}.
Clutter reducible_fixture() {
  return Clutter::validate(
      7, {ElemSet::of({1, 3, 5, 6}), ElemSet::of({2, 3, 5, 7}),
          ElemSet::of({1, 4, 6}), ElemSet::of({2, 4, 6, 7}),
          ElemSet::of({2, 3, 6}), ElemSet::of({1, 4, 5, 7}),
          ElemSet::of({2, 4, 5, 7})});
}

}  // namespace

TEST_CASE("is_rainbow_cover") {
  const Clutter f6 = fixtures::f6();
  const MinCoverGraph g = min_cover_graph(f6);
  CHECK(is_rainbow_cover(f6, g, ElemSet::of({2, 4, 6})));
  CHECK(!is_rainbow_cover(f6, g, ElemSet::of({1, 2, 3})));  // hits {1,2} twice
  const Clutter c4 = fixtures::c4();
  CHECK(!is_rainbow_cover(c4, min_cover_graph(c4), ElemSet::of({1, 2})));
}

TEST_CASE("rainbow covering number") {
  const Clutter f6 = fixtures::f6();
  const MinCoverGraph g = min_cover_graph(f6);
  const CoverSearchResult r = rainbow_covering_number(f6, g);
  CHECK(r.value == ExtNat(3));
  REQUIRE(r.witness.has_value());
  CHECK(is_rainbow_cover(f6, g, *r.witness));
  CHECK(*r.witness == ElemSet::of({1, 3, 5}));  // lexicographically least
  // {2,4,6} is an optimal witness too
  CHECK(is_rainbow_cover(f6, g, ElemSet::of({2, 4, 6})));

  const Clutter c4 = fixtures::c4();
  CHECK(rainbow_covering_number(c4, min_cover_graph(c4)).value ==
        ExtNat::infinity());
  const Clutter pair = fixtures::two_singletons();
  CHECK(rainbow_covering_number(pair, min_cover_graph(pair)).value ==
        ExtNat::infinity());
}

TEST_CASE("mu1 over the core") {
  const Clutter f6 = fixtures::f6();
  CHECK(mu1(f6, min_cover_graph(f6)).value == ExtNat(3));
  const Clutter c4 = fixtures::c4();
  CHECK(mu1(c4, min_cover_graph(c4)).value == ExtNat::infinity());
  const Clutter pair = fixtures::two_singletons();
  CHECK(mu1(pair, min_cover_graph(pair)).value == ExtNat::infinity());
}

TEST_CASE("mu2 and mu3 over full-side patterns") {
  const Clutter f6 = fixtures::f6();
  const MinCoverGraph g = min_cover_graph(f6);
  const PatternSearchResult m2 = mu2(f6, g);
  CHECK(m2.value == ExtNat(3));
  REQUIRE(m2.witness.has_value());
  CHECK(is_cover(f6, pattern_union(g, *m2.witness)));
  CHECK(pattern_chosen_count(*m2.witness) == 3);
  const PatternSearchResult m3 = mu3(f6, g);
  CHECK(m3.value == ExtNat(3));
  CHECK(is_irreducible(f6, g, *m3.witness));

  const Clutter c4 = fixtures::c4();
  const MinCoverGraph gc4 = min_cover_graph(c4);
  CHECK(mu2(c4, gc4).value == ExtNat::infinity());
  CHECK(mu3(c4, gc4).value == ExtNat::infinity());
  const Clutter pair = fixtures::two_singletons();
  const MinCoverGraph gp = min_cover_graph(pair);
  CHECK(mu2(pair, gp).value == ExtNat::infinity());
  CHECK(mu3(pair, gp).value == ExtNat::infinity());
}

TEST_CASE("is_irreducible") {
  const Clutter f6 = fixtures::f6();
  const MinCoverGraph g = min_cover_graph(f6);
  CHECK(is_irreducible(f6, g,
                       {SideChoice::V, SideChoice::V, SideChoice::V}));
  CHECK_THROWS_WITH_AS(
      (void)is_irreducible(f6, g,
                           {SideChoice::U, SideChoice::Skip, SideChoice::Skip}),
      doctest::Contains("NotACover"), Error);

  const Clutter red = reducible_fixture();
  const MinCoverGraph gr = min_cover_graph(red);
  REQUIRE(gr.component_count() == 3);
  CHECK(gr.components[2].side_u == ElemSet::of({5, 7}));
  // flipping component 3 turns {2,4,5,7} into {2,4,6}, which still covers
  CHECK(!is_irreducible(red, gr,
                        {SideChoice::V, SideChoice::V, SideChoice::U}));
  CHECK(!is_irreducible(red, gr,
                        {SideChoice::V, SideChoice::V, SideChoice::V}));
  CHECK(is_irreducible(red, gr,
                       {SideChoice::U, SideChoice::U, SideChoice::U}));
}

TEST_CASE("gsc_valid") {
  std::vector<ElemSet> pts;
  for (std::uint64_t b = 0; b < 7; ++b) pts.push_back(ElemSet::from_bits(b));
  const SetSystem cube_minus_111 = make_set_system(3, std::move(pts));
  CHECK(gsc_valid(cube_minus_111, {ElemSet{}, ElemSet::of({1, 2, 3})}));
  CHECK(!gsc_valid(cube_minus_111, {ElemSet::of({1}), ElemSet{}}));
  CHECK(!gsc_valid(cube_minus_111, {ElemSet{}, ElemSet{}}));
  CHECK(gsc_valid(make_set_system(2, {}), {ElemSet{}, ElemSet{}}));
  CHECK_THROWS_WITH_AS(
      (void)gsc_valid(cube_minus_111, {ElemSet::of({4}), ElemSet{}}),
      doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("connectivity") {
  for (int d = 0; d <= 3; ++d)
    CHECK(connectivity(full_cube(d)).value == ExtNat::infinity());

  std::vector<ElemSet> pts;
  for (std::uint64_t b = 0; b < 7; ++b) pts.push_back(ElemSet::from_bits(b));
  const ConnectivityResult r = connectivity(make_set_system(3, std::move(pts)));
  CHECK(r.value == ExtNat(3));
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->positive == ElemSet{});
  CHECK(r.witness->negated == ElemSet::of({1, 2, 3}));

  const ConnectivityResult origin =
      connectivity(make_set_system(2, {ElemSet{}}));
  CHECK(origin.value == ExtNat(1));
  CHECK(origin.witness->positive == ElemSet{});
  CHECK(origin.witness->negated == ElemSet::of({1}));

  // degenerate convention: empty set-system gets 0 with the empty inequality
  const ConnectivityResult empty = connectivity(make_set_system(3, {}));
  CHECK(empty.value == ExtNat(0));
  CHECK(empty.witness->variable_count() == 0);
}

TEST_CASE("connectivity matches the unpruned 3^d oracle on random systems") {
  std::mt19937_64 engine(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = static_cast<int>(engine() % 6) + 1;
    std::vector<ElemSet> pts;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << d); ++b)
      if (engine() % 2) pts.push_back(ElemSet::from_bits(b));
    const SetSystem s = make_set_system(d, std::move(pts));
    CHECK(connectivity(s).value == oracle::connectivity(s));
  }
}

TEST_CASE("param_report computes all five parameters independently") {
  const ParamReport f6 = param_report(fixtures::f6());
  CHECK(f6.mu == ExtNat(3));
  CHECK(f6.mu1 == ExtNat(3));
  CHECK(f6.mu2 == ExtNat(3));
  CHECK(f6.mu3 == ExtNat(3));
  CHECK(f6.lambda == ExtNat(3));
  CHECK(f6.lambda_witness->variable_count() == 3);

  const ParamReport c4 = param_report(fixtures::c4());
  CHECK(c4.mu == ExtNat::infinity());
  CHECK(c4.mu1 == ExtNat::infinity());
  CHECK(c4.mu2 == ExtNat::infinity());
  CHECK(c4.mu3 == ExtNat::infinity());
  CHECK(c4.lambda == ExtNat::infinity());

  const ParamReport pair = param_report(fixtures::two_singletons());
  CHECK(pair.mu == ExtNat::infinity());
  CHECK(pair.lambda == ExtNat::infinity());

  CHECK_THROWS_WITH_AS((void)param_report(make_odd_hole(5)),
                       doctest::Contains("NotTangled"), Error);
}

TEST_CASE("five-way equality and witness checks across the n <= 4 sweep") {
  for (int n = 0; n <= 4; ++n)
    for_each_clutter(n, [](const Clutter& c) {
      if (!is_tangled(c) || !is_clean(c).clean) return;
      for (const char* name :
           {"theorem-min-min", "mu-chain", "mu1-lambda-bijection",
            "rainbow-monochromatic", "witness-revalidation", "irred-mono"}) {
        const auto failure = run_check(name, c);
        if (failure) FAIL(name, ": ", *failure);
      }
    });
}
