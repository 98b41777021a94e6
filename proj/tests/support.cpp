#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "annc/formulas.hpp"
#include "annc/noncrossing.hpp"

namespace annc::testing {

namespace {

using Images = std::vector<Element>;

Images images_of(const Permutation& a) { return {a.images().begin(), a.images().end()}; }

bool meets_both(const Cycle& c, const Annulus& ann) {
  const bool first = std::any_of(c.begin(), c.end(), [&](Element x) { return ann.in_first(x); });
  const bool second = std::any_of(c.begin(), c.end(), [&](Element x) { return !ann.in_first(x); });
  return first && second;
}

/// Lifts a permutation on positions of `domain` back to original labels.
void lift_into(Images& images, const std::vector<Element>& domain, const Permutation& local) {
  for (Element i = 0; i < domain.size(); ++i) images[domain[i]] = domain[local(i)];
}

}  // namespace

std::vector<Permutation> all_permutations(std::size_t n) {
  Images images(n);
  std::iota(images.begin(), images.end(), Element{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<SetPartition> all_set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  std::vector<Block> blocks;
  auto place = [&](auto&& self, Element x) -> void {
    if (x == n) {
      out.push_back(SetPartition::from_blocks(n, blocks));
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(x);
      self(self, x + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({x});
    self(self, x + 1);
    blocks.pop_back();
  };
  place(place, 0);
  return out;
}

std::vector<Annulus> annuli_up_to(std::size_t max_total) {
  std::vector<Annulus> out;
  for (std::size_t n = 2; n <= max_total; ++n) {
    for (std::size_t p = 1; p < n; ++p) out.emplace_back(p, n - p);
  }
  return out;
}

std::size_t contiguous_bridge_failures(const Annulus& ann) {
  std::size_t bad = 0;
  for (const Permutation& pi : enumerate_class(ann, NcClass::AnnularConnected)) {
    for (const Cycle& c : cycles(pi)) {
      if (!meets_both(c, ann)) continue;
      std::size_t out_of_first = 0, out_of_second = 0;
      for (Element x : c) {
        if (ann.in_first(x) && !ann.in_first(pi(x))) ++out_of_first;
        if (!ann.in_first(x) && ann.in_first(pi(x))) ++out_of_second;
      }
      if (out_of_first != 1 || out_of_second != 1) ++bad;
    }
  }
  return bad;
}

bool normal_forms_match(const Annulus& ann) {
  return all_bridge_normal_forms(ann) == enumerate_class(ann, NcClass::AllBridges);
}

std::size_t cycle_count_failures(const Annulus& ann) {
  const Permutation tau = ann.tau();
  std::size_t bad = 0;
  for (const Permutation& pi : enumerate_class(ann, NcClass::AllNc)) {
    const std::size_t total = num_cycles(pi) + num_cycles(kreweras(pi, tau));
    const std::size_t expected = ann.size() + (is_disc(pi, ann) ? 2 : 0);
    if (total != expected) ++bad;
  }
  return bad;
}

std::size_t outside_face_failures(const Annulus& ann) {
  std::size_t bad = 0;
  for (const Permutation& pi : enumerate_class(ann, NcClass::AnnularConnected)) {
    for (FaceDirection dir : {FaceDirection::Kr, FaceDirection::KrInv}) {
      try {
        const OutsideFaces f = outside_faces(pi, ann, dir);
        if (f.first.empty() || f.second.empty()) ++bad;
      } catch (const std::exception&) {
        ++bad;
      }
    }
  }
  return bad;
}

std::size_t below_hat_disagreements(const Annulus& ann) {
  const Permutation tau = ann.tau();
  const auto disc = enumerate_class(ann, NcClass::Disc);
  std::size_t bad = 0;
  for (const Permutation& pi : enumerate_class(ann, NcClass::AnnularConnected)) {
    const Permutation kr_pi = kreweras(pi, tau);
    for (const Permutation& rho : disc) {
      const bool by_kreweras = is_disc_noncrossing_on(kreweras(rho, tau), kr_pi);
      if (by_kreweras != below_hat_structural(pi, rho, ann)) ++bad;
    }
  }
  return bad;
}

std::size_t product_construction_failures(const Annulus& ann, std::size_t per_choice, std::uint32_t seed) {
  std::mt19937 rng(seed);
  const Permutation tau = ann.tau();
  std::map<std::size_t, std::vector<Permutation>> perms_of_size;
  auto perms = [&](std::size_t m) -> const std::vector<Permutation>& {
    auto it = perms_of_size.find(m);
    if (it == perms_of_size.end()) it = perms_of_size.emplace(m, all_permutations(m)).first;
    return it->second;
  };

  std::size_t bad = 0;
  for (const Permutation& rho : enumerate_class(ann, NcClass::Disc)) {
    const auto rho_cycles = cycles(rho);
    for (const Cycle& a : rho_cycles) {
      if (!ann.in_first(a.front())) continue;
      for (const Cycle& b : rho_cycles) {
        if (ann.in_first(b.front())) continue;
        Block joint = a;
        joint.insert(joint.end(), b.begin(), b.end());
        std::sort(joint.begin(), joint.end());
        Block rest;
        for (Element x = 0; x < ann.size(); ++x) {
          if (!std::binary_search(joint.begin(), joint.end(), x)) rest.push_back(x);
        }

        const Restriction on_joint = restrict(rho, joint);
        const SetPartition joint_orbits = orbits_of(on_joint.relabeled());
        std::vector<Permutation> first_factors;
        for (const Permutation& s : perms(joint.size())) {
          if (is_noncrossing_on(s, on_joint.relabeled()) && !refines(orbits_of(s), joint_orbits)) {
            first_factors.push_back(s);
          }
        }
        std::vector<Permutation> second_factors;
        std::vector<Element> rest_domain;
        if (rest.empty()) {
          second_factors.emplace_back(0);
        } else {
          const Restriction on_rest = restrict(rho, rest);
          rest_domain = on_rest.domain();
          for (const Permutation& s : perms(rest.size())) {
            if (is_disc_noncrossing_on(s, on_rest.relabeled())) second_factors.push_back(s);
          }
        }

        const std::size_t total = first_factors.size() * second_factors.size();
        std::uniform_int_distribution<std::size_t> pick(0, total - 1);
        const std::size_t draws = std::min(per_choice, total);
        for (std::size_t d = 0; d < draws; ++d) {
          const std::size_t k = total <= per_choice ? d : pick(rng);
          Images images(ann.size());
          std::iota(images.begin(), images.end(), Element{0});
          lift_into(images, on_joint.domain(), first_factors[k / second_factors.size()]);
          if (!rest.empty()) lift_into(images, rest_domain, second_factors[k % second_factors.size()]);
          if (!is_noncrossing_on(Permutation::from_images(images), tau)) ++bad;
        }
      }
    }
  }
  return bad;
}

std::int64_t skeleton_count(std::int64_t r, std::int64_t s) {
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= std::min(r, s); ++k) total += binomial(r, k) * binomial(s, k) * k;
  return total;
}

FaceStructure face_structure(const Annulus& ann) {
  const Permutation tau = ann.tau();
  const std::size_t n = ann.size();
  const auto disc = enumerate_class(ann, NcClass::Disc);
  FaceStructure out;

  using Key = std::tuple<Images, Images, std::vector<bool>>;
  std::map<Key, std::set<Images>> skeletons;

  for (const Permutation& pi : enumerate_class(ann, NcClass::AnnularConnected)) {
    const Permutation pi0 = disc_part(pi, ann);
    const Permutation kr_pi = kreweras(pi, tau);
    const auto pi_bridges = bridges(orbits_of(pi), ann);

    std::vector<bool> in_i(n, false);
    for (const Block& b : bridges(orbits_of(kreweras_inv(pi, tau)), ann)) {
      for (Element x : b) in_i[x] = true;
    }

    for (const Permutation& rho : disc) {
      if (!is_disc_noncrossing_on(kreweras(rho, tau), kr_pi)) continue;
      ++out.pairs;

      const SetPartition rho_orbits = orbits_of(rho);
      std::vector<bool> in_j(n, false);
      for (const Block& b : pi_bridges) {
        for (Element x : b) {
          for (Element y : rho_orbits.blocks()[rho_orbits.block_of(x)]) in_j[y] = true;
        }
      }
      std::vector<bool> in_k(n);
      std::size_t k_size = 0;
      for (Element x = 0; x < n; ++x) {
        in_k[x] = in_i[x] && in_j[x];
        k_size += in_k[x];
      }
      auto inside_k = [&](const Cycle& c) { return std::all_of(c.begin(), c.end(), [&](Element x) { return in_k[x]; }); };
      auto touches_k = [&](const Cycle& c) { return std::any_of(c.begin(), c.end(), [&](Element x) { return in_k[x]; }); };

      const Permutation r0 = compose(rho, inverse(pi0));
      const Permutation r1 = compose(rho, inverse(pi));

      std::vector<Cycle> k_cycles;
      for (const Cycle& c : cycles(r0)) {
        if (inside_k(c)) k_cycles.push_back(c);
      }
      const bool shape_ok = k_cycles.size() == 2 && k_cycles[0].size() + k_cycles[1].size() == k_size &&
                            ann.in_first(k_cycles[0].front()) != ann.in_first(k_cycles[1].front()) &&
                            !meets_both(k_cycles[0], ann) && !meets_both(k_cycles[1], ann);
      if (!shape_ok) ++out.two_cycles;

      for (const Cycle& c : cycles(r1)) {
        if (inside_k(c)) {
          if (!meets_both(c, ann)) ++out.clean_split;
        } else if (touches_k(c)) {
          ++out.clean_split;
        } else if (std::any_of(c.begin(), c.end(), [&](Element x) { return r0(x) != r1(x); })) {
          ++out.spare_cycles;
        }
      }

      Images skeleton;
      for (Element x = 0; x < n; ++x) {
        if (in_k[x]) skeleton.push_back(r1(x));
      }
      skeletons[{images_of(pi0), images_of(rho), in_k}].insert(std::move(skeleton));
    }
  }

  for (const auto& [key, group] : skeletons) {
    const auto& k = std::get<2>(key);
    std::int64_t r = 0, s = 0;
    for (Element x = 0; x < n; ++x) {
      if (k[x]) (ann.in_first(x) ? r : s) += 1;
    }
    if (static_cast<std::int64_t>(group.size()) != skeleton_count(r, s)) ++out.skeleton_count;
  }

  for (const Permutation& pi0 : disc) {
    for (const Permutation& rho : disc) {
      if (!is_disc_noncrossing_on(pi0, rho)) continue;
      const auto cs = cycles(compose(rho, inverse(pi0)));
      for (const Cycle& c1 : cs) {
        if (!ann.in_first(c1.front())) continue;
        for (const Cycle& c2 : cs) {
          if (ann.in_first(c2.front())) continue;
          std::vector<bool> k(n, false);
          for (Element x : c1) k[x] = true;
          for (Element x : c2) k[x] = true;
          auto it = skeletons.find({images_of(pi0), images_of(rho), k});
          const std::size_t realized = it == skeletons.end() ? 0 : it->second.size();
          const auto expected = skeleton_count(static_cast<std::int64_t>(c1.size()), static_cast<std::int64_t>(c2.size()));
          if (static_cast<std::int64_t>(realized) != expected) ++out.face_choices;
        }
      }
    }
  }
  return out;
}

std::int64_t first_bridge_class_sum(std::size_t r, std::size_t s) {
  std::int64_t total = 0;
  const auto first_of_second = static_cast<Element>(r);
  const auto last = static_cast<Element>(r + s - 1);
  for (const Permutation& sigma : enumerate_class(Annulus(r, s), NcClass::AllBridges)) {
    const auto cs = cycles(sigma);
    const bool joined = std::find(cs.front().begin(), cs.front().end(), first_of_second) != cs.front().end();
    if (joined && sigma(last) != first_of_second) total += mu_product(sigma);
  }
  return total;
}

}  // namespace annc::testing
