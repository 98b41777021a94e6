#include <doctest.h>

#include <array>

#include "annc/errors.hpp"
#include "annc/noncrossing.hpp"
#include "support.hpp"

using namespace annc;

namespace {

const Annulus kBig(6, 7);
const Permutation kPi0 = parse_cycles("(2,6)(3,4)(7,10,13)(11,12)", 13);
const Permutation kLeft = parse_cycles("(1)(2,10,13,7,6)(3,4,9)(5)(8)(11,12)", 13);

Permutation cyc(const char* text, std::size_t n) { return parse_cycles(text, n); }

std::size_t catalan_small(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

TEST_CASE("noncrossing examples") {
  CHECK_FALSE(is_noncrossing_on(cyc("(1,3)(2,4)", 4), cyc("(1,2,3,4)", 4)));
  CHECK(is_noncrossing_on(kLeft, kBig.tau()));
  CHECK(is_noncrossing_on(Permutation(5), cyc("(1,3)(2,5,4)", 5)));

  CHECK_FALSE(is_disc_noncrossing_on(cyc("(1,2)", 3), Annulus(1, 2).tau()));
  CHECK(is_disc_noncrossing_on(kPi0, kBig.tau()));
  CHECK(is_disc_noncrossing_on(kLeft, kLeft));
  CHECK_FALSE(is_disc_noncrossing_on(kLeft, kBig.tau()));
}

TEST_CASE("pattern checkers") {
  CHECK_FALSE(biane_check(cyc("(1,3,2)", 3), 3));
  CHECK_FALSE(biane_check(cyc("(1,3)(2,4)", 4), 4));
  CHECK(biane_check(cyc("(1,2)(3,4)", 4), 4));

  CHECK(mingo_nica_check(kLeft, kBig));
  CHECK_FALSE(mingo_nica_check(cyc("(1,3,2)(4,5)", 5), Annulus(3, 2)));
  CHECK(mingo_nica_check(Permutation(5), Annulus(2, 3)));
}

TEST_CASE("class enumeration") {
  const auto all11 = enumerate_class(Annulus(1, 1), NcClass::AllNc);
  REQUIRE(all11.size() == 2);
  CHECK(format_cycles(all11[0]) == "(1)(2)");
  CHECK(format_cycles(all11[1]) == "(1,2)");
  CHECK(enumerate_class(Annulus(1, 2), NcClass::AllNc).size() == 6);

  const auto bridges12 = enumerate_class(Annulus(1, 2), NcClass::AllBridges);
  REQUIRE(bridges12.size() == 2);
  CHECK(format_cycles(bridges12[0]) == "(1,2,3)");
  CHECK(format_cycles(bridges12[1]) == "(1,3,2)");
  CHECK(is_all_bridges(cyc("(1,2,3)", 3), Annulus(1, 2)));
  CHECK_FALSE(is_all_bridges(cyc("(1,2)(3)", 3), Annulus(1, 2)));

  CHECK_THROWS_AS(enumerate_class(Annulus(5, 5), NcClass::AllNc, 9), ResourceLimitError);
  CHECK(parse_nc_class("bridges") == NcClass::AllBridges);
  CHECK_THROWS(parse_nc_class("annulus"));
}

TEST_CASE("disc classes on one circle are counted by Catalan numbers") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const Permutation cycle = make_tau(std::array<std::size_t, 1>{n});
    std::size_t count = 0;
    for (const Permutation& pi : testing::all_permutations(n)) count += is_noncrossing_on(pi, cycle);
    CHECK(count == catalan_small(n));
  }
  // Disc permutations of an annulus split into two independent disc pieces.
  for (const Annulus& ann : testing::annuli_up_to(7)) {
    CHECK(enumerate_class(ann, NcClass::Disc).size() == catalan_small(ann.p) * catalan_small(ann.q));
  }
}

TEST_CASE("outside faces") {
  const OutsideFaces kr = outside_faces(kLeft, kBig, FaceDirection::Kr);
  CHECK(kr.first == std::vector<Element>{1, 3, 4});
  CHECK(kr.second == std::vector<Element>{6, 7, 8});
  const OutsideFaces kr_inv = outside_faces(kLeft, kBig, FaceDirection::KrInv);
  CHECK(kr_inv.first == std::vector<Element>{2, 4, 5});
  CHECK(kr_inv.second == std::vector<Element>{7, 8, 9});

  const OutsideFaces small = outside_faces(cyc("(1,2)", 2), Annulus(1, 1), FaceDirection::Kr);
  CHECK(small.first == std::vector<Element>{0});
  CHECK(small.second == std::vector<Element>{1});
  CHECK_THROWS_AS(outside_faces(kPi0, kBig, FaceDirection::Kr), std::invalid_argument);
}

TEST_CASE("disc part of an annular permutation") {
  CHECK(disc_part(kLeft, kBig) == kPi0);
  CHECK(disc_part(kPi0, kBig) == kPi0);
}

TEST_CASE("checker equivalence on small annuli") {
  for (const Annulus& ann : testing::annuli_up_to(6)) {
    const Permutation tau = ann.tau();
    for (const Permutation& pi : testing::all_permutations(ann.size())) {
      REQUIRE(mingo_nica_check(pi, ann) == is_noncrossing_on(pi, tau));
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const Permutation cycle = make_tau(std::array<std::size_t, 1>{n});
    for (const Permutation& pi : testing::all_permutations(n)) REQUIRE(biane_check(pi, n) == is_noncrossing_on(pi, cycle));
  }
}

TEST_CASE("structural lemmas on small annuli") {
  for (const Annulus& ann : testing::annuli_up_to(6)) {
    CAPTURE(ann.p);
    CAPTURE(ann.q);
    CHECK(testing::contiguous_bridge_failures(ann) == 0);
    CHECK(testing::normal_forms_match(ann));
    CHECK(testing::cycle_count_failures(ann) == 0);
    CHECK(testing::outside_face_failures(ann) == 0);
    CHECK(testing::below_hat_disagreements(ann) == 0);
    CHECK(testing::product_construction_failures(ann, 20, 7) == 0);
  }
}

TEST_CASE("face structure below hatted disc elements") {
  for (const Annulus& ann : testing::annuli_up_to(5)) {
    CAPTURE(ann.p);
    CAPTURE(ann.q);
    const auto fs = testing::face_structure(ann);
    CHECK(fs.pairs > 0);
    CHECK(fs.two_cycles == 0);
    CHECK(fs.clean_split == 0);
    CHECK(fs.spare_cycles == 0);
    CHECK(fs.skeleton_count == 0);
    CHECK(fs.face_choices == 0);
  }
}

TEST_CASE("skeleton counts equal all-bridge class sizes") {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t s = 1; r + s <= 7; ++s) {
      CHECK(testing::skeleton_count(static_cast<std::int64_t>(r), static_cast<std::int64_t>(s)) ==
            static_cast<std::int64_t>(enumerate_class(Annulus(r, s), NcClass::AllBridges).size()));
    }
  }
}
