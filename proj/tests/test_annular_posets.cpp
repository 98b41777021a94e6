#include <doctest.h>

#include <algorithm>
#include <set>

#include "annc/annular_posets.hpp"
#include "annc/errors.hpp"
#include "support.hpp"

using namespace annc;

namespace {

template <class T>
std::vector<std::string> maximal_keys(const AnnularPoset<T>& poset) {
  std::vector<std::string> out;
  for (std::size_t i : poset.order.maximal_elements()) out.push_back(poset.order.key(i));
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
bool is_chain(const AnnularPoset<T>& poset, const std::vector<std::string>& keys) {
  if (poset.size() != keys.size()) return false;
  for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
    if (!poset.order.less(poset.index_of(keys[i]), poset.index_of(keys[i + 1]))) return false;
  }
  return true;
}

/// 1 unless u has exactly one bridge, which then has r and s elements on the circles.
std::size_t expected_preimages(const SetPartition& u, const Annulus& ann) {
  const auto br = bridges(u, ann);
  if (br.size() != 1) return 1;
  const auto r = static_cast<std::size_t>(std::count_if(br[0].begin(), br[0].end(), [&](Element x) { return ann.in_first(x); }));
  return r * (br[0].size() - r);
}

}  // namespace

TEST_CASE("builders on the smallest annuli") {
  const auto snc11 = build_snc(Annulus(1, 1));
  CHECK(is_chain(snc11, {"(1)(2)", "(1,2)"}));

  const auto snc12 = build_snc(Annulus(1, 2));
  CHECK(snc12.size() == 6);
  CHECK(maximal_keys(snc12) == std::vector<std::string>{"(1,2,3)", "(1,3,2)"});

  CHECK(is_chain(build_sd(Annulus(1, 1)), {"(1)(2)", "(1,2)", "hat(1)(2)"}));
  CHECK(is_chain(build_ps(Annulus(1, 1)), {"{1}{2}|(1)(2)", "{1,2}|(1,2)", "{1,2}|(1)(2)"}));

  const auto pnc12 = build_pnc(Annulus(1, 2));
  CHECK(pnc12.size() == 5);
  CHECK(build_pnc(Annulus(2, 2)).size() == 15);
  for (std::size_t x = 0; x < pnc12.size(); ++x) {
    for (std::size_t y = 0; y < pnc12.size(); ++y) {
      CHECK(pnc12.order.leq(x, y) == refines(pnc12.elements[x].partition, pnc12.elements[y].partition));
    }
  }
}

TEST_CASE("P_nc(3,3) comparison") {
  const Annulus ann(3, 3);
  const auto poset = build_pnc(ann);
  const auto lo = poset.index_of(element_key(parse_pnc_element("{1,5}{2,6}{3}{4}", ann)));
  const auto hi = poset.index_of(element_key(parse_pnc_element("{1,2,5,6}{3,4}", ann)));
  CHECK(poset.order.less(lo, hi));
}

TEST_CASE("element parsers") {
  const Annulus ann(1, 2);
  CHECK(parse_sd_element("hat(1)(2)(3)", ann).kind == SdKind::DiscHat);
  CHECK(parse_sd_element("(1,2,3)", ann).kind == SdKind::Annular);
  CHECK(parse_sd_element("(2,3)", ann).kind == SdKind::Disc);
  CHECK_THROWS(parse_sd_element("hat(1,2,3)", ann));

  const auto ps = parse_ps_element("{1,2}{3}|(1)(2)(3)", ann);
  REQUIRE(ps.nontrivial.has_value());
  CHECK(*ps.nontrivial == Block{0, 1});
  CHECK_FALSE(parse_ps_element("{1,2}{3}|(1,2)(3)", ann).nontrivial.has_value());
  CHECK_THROWS(parse_ps_element("{1,2,3}|(1)(2)(3)", ann));
  CHECK_THROWS_AS(parse_pnc_element("{1,2", ann), ParseError);
}

TEST_CASE("sizes and the structural order agree") {
  for (const Annulus& ann : testing::annuli_up_to(6)) {
    CAPTURE(ann.p);
    CAPTURE(ann.q);
    const std::size_t disc = enumerate_class(ann, NcClass::Disc).size();
    const std::size_t annular = enumerate_class(ann, NcClass::AnnularConnected).size();
    // build_sd rechecks the Kreweras order structurally and throws on disagreement.
    CHECK(build_sd(ann).size() == annular + 2 * disc);
  }
}

TEST_CASE("Kr-hat reverses the order of S_nc-sd") {
  for (const Annulus& ann : testing::annuli_up_to(5)) {
    CAPTURE(ann.p);
    CAPTURE(ann.q);
    const auto sd = build_sd(ann);
    const MobiusTable mu(sd.order);
    std::vector<std::size_t> image(sd.size());
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < sd.size(); ++i) {
      const SdElement k = kr_hat(sd.elements[i], ann);
      CHECK(kr_hat_inv(k, ann) == sd.elements[i]);
      image[i] = sd.index_of(element_key(k));
      seen.insert(image[i]);
    }
    CHECK(seen.size() == sd.size());
    for (std::size_t x = 0; x < sd.size(); ++x) {
      for (std::size_t y = 0; y < sd.size(); ++y) {
        REQUIRE(sd.order.leq(x, y) == sd.order.leq(image[y], image[x]));
        if (sd.order.leq(x, y)) REQUIRE(mu(x, y) == mu(image[y], image[x]));
      }
    }
  }
}

TEST_CASE("S_nc-sd(1,2) is not a lattice") {
  const auto sd = build_sd(Annulus(1, 2));
  const LatticeReport report = lattice_report(sd.order);
  CHECK_FALSE(report.is_lattice);
  const auto a = sd.index_of("(1,2)(3)");
  const auto b = sd.index_of("(1,3)(2)");
  const bool witnessed = std::any_of(report.failures.begin(), report.failures.end(), [&](const auto& f) {
    return (f.first == a && f.second == b) || (f.first == b && f.second == a);
  });
  CHECK(witnessed);
  CHECK(sd.order.less(a, sd.index_of("(1,2,3)")));
  CHECK(sd.order.less(b, sd.index_of("(1,3,2)")));
}

TEST_CASE("PS' without nontrivial blocks is S_nc") {
  for (const Annulus& ann : testing::annuli_up_to(6)) {
    const auto ps = build_ps(ann);
    const auto snc = build_snc(ann);
    std::vector<std::size_t> plain;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (!ps.elements[i].nontrivial) plain.push_back(i);
    }
    REQUIRE(plain.size() == snc.size());
    for (std::size_t a : plain) {
      const std::size_t sa = snc.index_of(element_key(ps.elements[a].perm));
      for (std::size_t b : plain) {
        REQUIRE(ps.order.leq(a, b) == snc.order.leq(sa, snc.index_of(element_key(ps.elements[b].perm))));
      }
    }
  }
}

TEST_CASE("Pi maps S_nc onto P_nc monotonically") {
  for (const Annulus& ann : testing::annuli_up_to(6)) {
    const auto snc = build_snc(ann);
    const auto pnc = build_pnc(ann);
    std::vector<std::size_t> image(snc.size());
    std::set<std::size_t> hit;
    for (std::size_t i = 0; i < snc.size(); ++i) {
      image[i] = pnc.index_of(element_key(NcPartition{orbits_of(snc.elements[i])}));
      hit.insert(image[i]);
    }
    CHECK(hit.size() == pnc.size());
    for (std::size_t x = 0; x < snc.size(); ++x) {
      for (std::size_t y : snc.order.up_set(x).indices()) REQUIRE(pnc.order.leq(image[x], image[y]));
    }
  }
}

TEST_CASE("constructed preimages") {
  const Annulus a12(1, 2);
  const auto full = pnc_preimages(parse_partition("{1,2,3}", 3), a12);
  REQUIRE(full.size() == 2);
  CHECK(format_cycles(full[0]) == "(1,2,3)");
  CHECK(format_cycles(full[1]) == "(1,3,2)");

  const auto crossed = pnc_preimages(parse_partition("{1,3}{2,4}", 4), Annulus(2, 2));
  REQUIRE(crossed.size() == 1);
  CHECK(format_cycles(crossed[0]) == "(1,3)(2,4)");

  const Permutation pi0 = parse_cycles("(2,6)(3,4)(7,10,13)(11,12)", 13);
  CHECK(pnc_preimages(orbits_of(pi0), Annulus(6, 7)) == std::vector<Permutation>{pi0});

  CHECK_THROWS_AS(pnc_preimages(parse_partition("{1,3}{2,4}", 5), Annulus(4, 1)), std::invalid_argument);

  for (const Annulus& ann : testing::annuli_up_to(6)) {
    const PreimageIndex index = preimage_index(ann);
    for (const auto& [u, perms] : index) {
      REQUIRE(pnc_preimages(u, ann) == perms);
      REQUIRE(perms.size() == expected_preimages(u, ann));
    }
  }
}

TEST_CASE("disc permutations of partitions") {
  const Annulus ann(2, 3);
  CHECK(format_cycles(disc_perm(parse_partition("{1,2}{3,5}{4}", 5), ann)) == "(1,2)(3,5)(4)");
  CHECK_THROWS(disc_perm(parse_partition("{1,3}", 5), ann));
}
