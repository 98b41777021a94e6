#include "annc/noncrossing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "annc/errors.hpp"

namespace annc {

namespace {

/// Cycle membership and position, for cyclic-order queries on one
/// permutation.
struct CycleIndex {
  std::vector<std::size_t> cycle_id;
  std::vector<std::size_t> position;
  std::vector<std::size_t> length;  // per cycle

  explicit CycleIndex(const Permutation& a) : cycle_id(a.size()), position(a.size()) {
    const auto cs = cycles(a);
    for (std::size_t c = 0; c < cs.size(); ++c) {
      length.push_back(cs[c].size());
      for (std::size_t i = 0; i < cs[c].size(); ++i) {
        cycle_id[cs[c][i]] = c;
        position[cs[c][i]] = i;
      }
    }
  }

  bool same(Element x, Element y) const { return cycle_id[x] == cycle_id[y]; }

  /// The induced permutation on the given distinct elements is the single
  /// cycle listing them in this order.
  template <std::size_t K>
  bool induces_cycle(const Element (&xs)[K]) const {
    const std::size_t c = cycle_id[xs[0]];
    for (Element x : xs) {
      if (cycle_id[x] != c) return false;
    }
    const std::size_t len = length[c];
    std::size_t prev = 0;
    for (std::size_t i = 1; i < K; ++i) {
      const std::size_t offset = (position[xs[i]] + len - position[xs[0]]) % len;
      if (offset <= prev) return false;
      prev = offset;
    }
    return true;
  }
};

/// The single cycle lambda_{x,y}: tau(x), ..., tau^{-1}(x), tau(y), ..., tau^{-1}(y).
/// Stores positions; x and y themselves are absent.
struct Lambda {
  std::vector<int> position;
  std::size_t length = 0;

  Lambda(const Permutation& tau, Element x, Element y) : position(tau.size(), -1) {
    for (Element start : {x, y}) {
      for (Element z = tau(start); z != start; z = tau(z)) position[z] = static_cast<int>(length++);
    }
  }

  template <std::size_t K>
  bool induces_cycle(const Element (&xs)[K]) const {
    for (Element v : xs) {
      if (position[v] < 0) return false;
    }
    std::size_t prev = 0;
    for (std::size_t i = 1; i < K; ++i) {
      const std::size_t offset =
          (static_cast<std::size_t>(position[xs[i]]) + length - static_cast<std::size_t>(position[xs[0]])) % length;
      if (offset <= prev) return false;
      prev = offset;
    }
    return true;
  }
};

bool distinct(std::initializer_list<Element> xs) {
  for (auto i = xs.begin(); i != xs.end(); ++i) {
    for (auto j = std::next(i); j != xs.end(); ++j) {
      if (*i == *j) return false;
    }
  }
  return true;
}

// tau|_{a,b,c} = (a,b,c) and pi|_{a,b,c} = (a,c,b).
bool reversed_triple(const CycleIndex& tau, const CycleIndex& pi, Element n) {
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b == a || !tau.same(a, b) || !pi.same(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (!distinct({a, b, c})) continue;
        if (tau.induces_cycle({a, b, c}) && pi.induces_cycle({a, c, b})) return true;
      }
    }
  }
  return false;
}

// tau|_{a,b,c,d} = (a,b,c,d) and pi|_{a,b,c,d} = (a,c)(b,d).
bool crossing_pair(const CycleIndex& tau, const CycleIndex& pi, Element n) {
  for (Element a = 0; a < n; ++a) {
    for (Element c = 0; c < n; ++c) {
      if (c == a || !pi.same(a, c) || !tau.same(a, c)) continue;
      for (Element b = 0; b < n; ++b) {
        if (pi.same(a, b) || !tau.same(a, b)) continue;
        for (Element d = 0; d < n; ++d) {
          if (!distinct({a, b, c, d}) || !pi.same(b, d)) continue;
          if (tau.induces_cycle({a, b, c, d})) return true;
        }
      }
    }
  }
  return false;
}

// tau|_{a,b,c,d} = (a,b)(c,d) and pi|_{a,b,c,d} = (a,c,b,d).
bool alternating_bridge(const CycleIndex& tau, const CycleIndex& pi, Element n) {
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b == a || !tau.same(a, b) || !pi.same(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (tau.same(a, c) || !pi.same(a, c)) continue;
        for (Element d = 0; d < n; ++d) {
          if (!distinct({a, b, c, d}) || !tau.same(c, d)) continue;
          if (pi.induces_cycle({a, c, b, d})) return true;
        }
      }
    }
  }
  return false;
}

// lambda_{x,y}|_{a,b,c} = (a,b,c) and pi|_{a,b,c,x,y} = (a,c,b)(x,y).
bool lambda_reversed_triple(const Permutation& tau_perm, const CycleIndex& tau, const CycleIndex& pi, Element n) {
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (tau.same(x, y) || !pi.same(x, y)) continue;
      const Lambda lambda(tau_perm, x, y);
      for (Element a = 0; a < n; ++a) {
        if (a == x || a == y || pi.same(a, x)) continue;
        for (Element b = 0; b < n; ++b) {
          if (!pi.same(a, b) || !distinct({a, b, x, y})) continue;
          for (Element c = 0; c < n; ++c) {
            if (!pi.same(a, c) || !distinct({a, b, c, x, y})) continue;
            if (lambda.induces_cycle({a, b, c}) && pi.induces_cycle({a, c, b})) return true;
          }
        }
      }
    }
  }
  return false;
}

// lambda_{x,y}|_{a,b,c,d} = (a,b,c,d) and pi|_{a,b,c,d,x,y} = (a,c)(b,d)(x,y).
bool lambda_crossing_pair(const Permutation& tau_perm, const CycleIndex& tau, const CycleIndex& pi, Element n) {
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (tau.same(x, y) || !pi.same(x, y)) continue;
      const Lambda lambda(tau_perm, x, y);
      for (Element a = 0; a < n; ++a) {
        if (a == x || a == y || pi.same(a, x)) continue;
        for (Element c = 0; c < n; ++c) {
          if (c == a || !pi.same(a, c)) continue;
          for (Element b = 0; b < n; ++b) {
            if (pi.same(b, a) || pi.same(b, x)) continue;
            for (Element d = 0; d < n; ++d) {
              if (d == b || !pi.same(b, d)) continue;
              if (lambda.induces_cycle({a, b, c, d})) return true;
            }
          }
        }
      }
    }
  }
  return false;
}

void require_annulus_size(const Permutation& pi, const Annulus& ann) {
  if (pi.size() != ann.size()) throw std::invalid_argument("permutation size differs from annulus p+q");
}

}  // namespace

NcClass parse_nc_class(std::string_view name) {
  if (name == "disc") return NcClass::Disc;
  if (name == "annular") return NcClass::AnnularConnected;
  if (name == "all") return NcClass::AllNc;
  if (name == "bridges") return NcClass::AllBridges;
  throw std::invalid_argument("unknown class '" + std::string(name) + "' (expected disc|annular|all|bridges)");
}

std::string_view to_string(NcClass cls) {
  switch (cls) {
    case NcClass::Disc: return "disc";
    case NcClass::AnnularConnected: return "annular";
    case NcClass::AllNc: return "all";
    case NcClass::AllBridges: return "bridges";
  }
  return "?";
}

bool is_noncrossing_on(const Permutation& rho, const Permutation& base) {
  const std::size_t lhs = num_cycles(base) + num_cycles(rho) + num_cycles(kreweras(rho, base));
  return lhs == base.size() + 2 * joint_orbit_count(base, rho);
}

bool is_disc_noncrossing_on(const Permutation& rho, const Permutation& base) {
  return is_noncrossing_on(rho, base) && refines(orbits_of(rho), orbits_of(base));
}

bool biane_check(const Permutation& pi, std::size_t n) {
  if (pi.size() != n) throw std::invalid_argument("biane_check: permutation size differs from n");
  const std::size_t lengths[] = {n};
  const CycleIndex tau(make_tau(lengths));
  const CycleIndex idx(pi);
  const auto m = static_cast<Element>(n);
  return !reversed_triple(tau, idx, m) && !crossing_pair(tau, idx, m);
}

bool mingo_nica_check(const Permutation& pi, const Annulus& ann) {
  require_annulus_size(pi, ann);
  const Permutation tau_perm = ann.tau();
  const CycleIndex tau(tau_perm);
  const CycleIndex idx(pi);
  const auto n = static_cast<Element>(pi.size());
  return !reversed_triple(tau, idx, n) && !alternating_bridge(tau, idx, n) && !crossing_pair(tau, idx, n) &&
         !lambda_reversed_triple(tau_perm, tau, idx, n) && !lambda_crossing_pair(tau_perm, tau, idx, n);
}

bool is_disc(const Permutation& pi, const Annulus& ann) {
  require_annulus_size(pi, ann);
  for (Element x = 0; x < pi.size(); ++x) {
    if (ann.circle_of(x) != ann.circle_of(pi(x))) return false;
  }
  return true;
}

bool is_annular_connected(const Permutation& pi, const Annulus& ann) {
  return !is_disc(pi, ann) && is_noncrossing_on(pi, ann.tau());
}

bool is_all_bridges(const Permutation& pi, const Annulus& ann) {
  require_annulus_size(pi, ann);
  for (const Cycle& c : cycles(pi)) {
    const bool first = std::any_of(c.begin(), c.end(), [&](Element x) { return ann.in_first(x); });
    const bool second = std::any_of(c.begin(), c.end(), [&](Element x) { return !ann.in_first(x); });
    if (!first || !second) return false;
  }
  return true;
}

bool in_class(const Permutation& pi, const Annulus& ann, NcClass cls) {
  if (!is_noncrossing_on(pi, ann.tau())) return false;
  switch (cls) {
    case NcClass::AllNc: return true;
    case NcClass::Disc: return is_disc(pi, ann);
    case NcClass::AnnularConnected: return !is_disc(pi, ann);
    case NcClass::AllBridges: return is_all_bridges(pi, ann);
  }
  return false;
}

std::vector<Permutation> enumerate_class(const Annulus& ann, NcClass cls, std::size_t size_limit) {
  const std::size_t n = ann.size();
  if (n > size_limit) {
    throw ResourceLimitError("enumeration of S_" + std::to_string(n) + " exceeds size limit " +
                             std::to_string(size_limit));
  }
  const Permutation tau = ann.tau();
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  std::vector<Permutation> out;
  do {
    Permutation pi = Permutation::from_images(images);
    if (!is_noncrossing_on(pi, tau)) continue;
    const bool keep = [&] {
      switch (cls) {
        case NcClass::AllNc: return true;
        case NcClass::Disc: return is_disc(pi, ann);
        case NcClass::AnnularConnected: return !is_disc(pi, ann);
        case NcClass::AllBridges: return is_all_bridges(pi, ann);
      }
      return false;
    }();
    if (keep) out.push_back(std::move(pi));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> all_bridge_normal_forms(const Annulus& ann) {
  const std::size_t p = ann.p;
  const std::size_t q = ann.q;
  std::set<Permutation> found;

  // Arc starts on each circle are chosen by bitmask; arcs run in tau order.
  auto arcs = [](std::size_t offset, std::size_t len, unsigned mask) {
    std::vector<std::vector<Element>> out;
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < len; ++i) {
      if (mask & (1u << i)) starts.push_back(i);
    }
    for (std::size_t k = 0; k < starts.size(); ++k) {
      const std::size_t from = starts[k];
      const std::size_t to = starts[(k + 1) % starts.size()];
      std::vector<Element> arc;
      std::size_t i = from;
      do {
        arc.push_back(static_cast<Element>(offset + i));
        i = (i + 1) % len;
      } while (i != to);
      out.push_back(std::move(arc));
    }
    return out;
  };

  for (unsigned m1 = 1; m1 < (1u << p); ++m1) {
    const auto first = arcs(0, p, m1);
    for (unsigned m2 = 1; m2 < (1u << q); ++m2) {
      if (static_cast<std::size_t>(std::popcount(m2)) != first.size()) continue;
      const auto second = arcs(p, q, m2);
      const std::size_t k = first.size();
      for (std::size_t shift = 0; shift < k; ++shift) {
        std::vector<Cycle> cs;
        for (std::size_t i = 0; i < k; ++i) {
          Cycle c = first[i];
          const auto& other = second[(shift + k - i) % k];
          c.insert(c.end(), other.begin(), other.end());
          cs.push_back(std::move(c));
        }
        found.insert(Permutation::from_cycles(ann.size(), cs));
      }
    }
  }
  return {found.begin(), found.end()};
}

Permutation disc_part(const Permutation& pi, const Annulus& ann) {
  require_annulus_size(pi, ann);
  return restrict_to(pi, orbits_of(ann.tau()));
}

OutsideFaces outside_faces(const Permutation& pi, const Annulus& ann, FaceDirection direction) {
  if (!is_annular_connected(pi, ann)) throw std::invalid_argument("outside_faces: permutation is not annular-connected");
  const Permutation tau = ann.tau();
  const Permutation pi0 = disc_part(pi, ann);
  const bool kr = direction == FaceDirection::Kr;
  const Permutation complement = kr ? kreweras(pi, tau) : kreweras_inv(pi, tau);
  const Permutation complement0 = kr ? kreweras(pi0, tau) : kreweras_inv(pi0, tau);

  OutsideFaces faces;
  for (const Block& b : bridges(orbits_of(complement), ann)) {
    for (Element x : b) (ann.in_first(x) ? faces.first : faces.second).push_back(x);
  }
  std::sort(faces.first.begin(), faces.first.end());
  std::sort(faces.second.begin(), faces.second.end());

  const SetPartition orbits0 = orbits_of(complement0);
  for (const auto* side : {&faces.first, &faces.second}) {
    if (side->empty() || orbits0.find_block(*side) == SetPartition::npos) {
      throw std::logic_error("outside face is not a single orbit of the complement of the disc part");
    }
  }
  return faces;
}

bool below_hat_structural(const Permutation& pi, const Permutation& rho, const Annulus& ann) {
  if (!is_disc_noncrossing_on(disc_part(pi, ann), rho)) return false;
  const SetPartition rho_blocks = orbits_of(rho);
  std::set<std::size_t> touched;
  for (const Block& b : bridges(orbits_of(pi), ann)) {
    for (Element x : b) touched.insert(rho_blocks.block_of(x));
  }
  return touched.size() == 2;
}

}  // namespace annc
