#include "annc/formulas.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "annc/checked.hpp"
#include "annc/errors.hpp"
#include "annc/noncrossing.hpp"

namespace annc {

namespace {

__extension__ using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticError("int64 overflow");
  }
  return static_cast<std::int64_t>(v);
}

/// (-1)^{s-1} C_{s-1} for a block of size s.
std::int64_t block_weight(std::size_t s) {
  return sign_pow(static_cast<long>(s) - 1) * catalan(static_cast<std::int64_t>(s) - 1);
}

bool inside(const Cycle& c, const Block& sorted_block) {
  return std::all_of(c.begin(), c.end(),
                     [&](Element x) { return std::binary_search(sorted_block.begin(), sorted_block.end(), x); });
}

bool within_first(const Cycle& c, const Annulus& ann) {
  return std::all_of(c.begin(), c.end(), [&](Element x) { return ann.in_first(x); });
}

bool within_second(const Cycle& c, const Annulus& ann) {
  return std::none_of(c.begin(), c.end(), [&](Element x) { return ann.in_first(x); });
}

std::int64_t kernel_without(const std::vector<Cycle>& cs, std::size_t skip_a, std::size_t skip_b) {
  std::int64_t out = 1;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (k != skip_a && k != skip_b) out = checked_mul(out, block_weight(cs[k].size()));
  }
  return out;
}

/// Sum over a cycle A of kr in the first circle and B in the second, both
/// accepted by `keep`, of (-1)^{|A|+|B|} coefficient(|A|,|B|) times the
/// kernel of the other cycles.
std::int64_t face_pair_sum(const std::vector<Cycle>& cs, const Annulus& ann,
                           const std::function<bool(const Cycle&, const Cycle&)>& keep,
                           const std::function<std::int64_t(std::int64_t, std::int64_t)>& coefficient) {
  std::int64_t total = 0;
  for (std::size_t a = 0; a < cs.size(); ++a) {
    if (!within_first(cs[a], ann)) continue;
    for (std::size_t b = 0; b < cs.size(); ++b) {
      if (!within_second(cs[b], ann) || !keep(cs[a], cs[b])) continue;
      const auto r = static_cast<std::int64_t>(cs[a].size());
      const auto s = static_cast<std::int64_t>(cs[b].size());
      const std::int64_t term = checked_mul(sign_pow(r + s), checked_mul(coefficient(r, s), kernel_without(cs, a, b)));
      total = checked_add(total, term);
    }
  }
  return total;
}

std::int64_t kappa_gamma(std::int64_t r, std::int64_t s, IdentityVariant variant) {
  const std::int64_t num = variant == IdentityVariant::AsPrinted ? 2 : 1;
  return exact_div(checked_mul(num, gamma(r, s)), r + s - 1);
}

/// Number of cycles of pi meeting `part`.
std::int64_t cycles_meeting(const Permutation& pi, const Block& part) {
  if (part.empty()) return 0;
  return static_cast<std::int64_t>(restrict(pi, part).num_cycles());
}

Block split(const Block& b, const Annulus& ann, bool first) {
  Block out;
  for (Element x : b) {
    if (ann.in_first(x) == first) out.push_back(x);
  }
  return out;
}

std::int64_t direct_term(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t j) {
  const std::int64_t a = i + q - j - 1;
  const std::int64_t b = p - i + j - 1;
  return checked_mul(checked_mul(sign_pow(a), catalan(a)), checked_mul(sign_pow(b), catalan(b)));
}

}  // namespace

IdentityVariant parse_variant(std::string_view name) {
  if (name == "corrected") return IdentityVariant::Corrected;
  if (name == "as-printed") return IdentityVariant::AsPrinted;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected corrected|as-printed)");
}

std::string_view to_string(IdentityVariant v) {
  return v == IdentityVariant::Corrected ? "corrected" : "as-printed";
}

IdentityKind parse_identity_kind(std::string_view name) {
  if (name == "two-bridge") return IdentityKind::TwoBridge;
  if (name == "partition-face") return IdentityKind::PartitionFace;
  throw std::invalid_argument("unknown table '" + std::string(name) + "' (expected two-bridge|partition-face)");
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide b = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;  // exact: b is C(n-k+i, i) afterwards
    narrow(b);
  }
  return narrow(b);
}

std::int64_t catalan(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("catalan of a negative index");
  static const std::vector<std::int64_t> cache = [] {
    std::vector<std::int64_t> c{1};
    for (std::int64_t m = 1;; ++m) {
      const Wide next = static_cast<Wide>(c.back()) * 2 * (2 * m - 1) / (m + 1);
      if (next > std::numeric_limits<std::int64_t>::max()) break;
      c.push_back(static_cast<std::int64_t>(next));
    }
    return c;
  }();
  if (static_cast<std::size_t>(n) >= cache.size()) {
    throw ArithmeticError("C_" + std::to_string(n) + " exceeds int64");
  }
  return cache[static_cast<std::size_t>(n)];
}

std::int64_t gamma(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw std::invalid_argument("gamma needs p, q >= 1");
  // (2m-1)!/(m-1)!^2 = m C(2m-1, m).
  const Wide a = static_cast<Wide>(p) * binomial(2 * p - 1, p);
  const Wide b = static_cast<Wide>(q) * binomial(2 * q - 1, q);
  const Wide num = 2 * a * b;
  if (num % (p + q) != 0) throw ArithmeticError("gamma is not integral");
  return narrow(num / (p + q));
}

std::int64_t catalan_kernel(const std::vector<std::size_t>& sizes) {
  std::int64_t out = 1;
  for (std::size_t s : sizes) out = checked_mul(out, block_weight(s));
  return out;
}

std::int64_t mu_product(const Permutation& kr) {
  std::vector<std::size_t> sizes;
  for (const Cycle& c : cycles(kr)) sizes.push_back(c.size());
  return catalan_kernel(sizes);
}

std::int64_t mu_snc_formula(const Permutation& lo, const Permutation& hi) {
  if (!is_disc_noncrossing_on(lo, hi)) throw IncomparableError("incomparable pair");
  return mu_product(kreweras(lo, hi));
}

std::int64_t mu_sd_formula(const SdElement& lo, const SdElement& hi, const Annulus& ann) {
  if (!sd_leq(lo, hi, ann)) throw IncomparableError("incomparable pair " + element_key(lo) + ", " + element_key(hi));
  const Permutation kr = kreweras(lo.perm, hi.perm);
  if (!(lo.kind == SdKind::Disc && hi.kind == SdKind::DiscHat)) return mu_product(kr);

  const auto cs = cycles(kr);
  const std::int64_t sum = face_pair_sum(
      cs, ann, [](const Cycle&, const Cycle&) { return true; }, [](std::int64_t r, std::int64_t s) { return gamma(r, s); });
  return checked_sub(sum, mu_product(kr));
}

std::int64_t mu_ps_formula(const PartitionedPermutation& lo, const PartitionedPermutation& hi, const Annulus& ann) {
  if (!ps_leq(lo, hi)) throw IncomparableError("incomparable pair " + element_key(lo) + ", " + element_key(hi));
  const Permutation kr = kreweras(lo.perm, hi.perm);
  const bool hard = !lo.nontrivial && is_disc(lo.perm, ann) && hi.nontrivial;
  if (!hard) return mu_product(kr);

  const Block& v0 = *hi.nontrivial;
  const auto cs = cycles(kr);
  const std::int64_t sum = face_pair_sum(
      cs, ann, [&](const Cycle& a, const Cycle& b) { return inside(a, v0) && inside(b, v0); },
      [](std::int64_t r, std::int64_t s) { return gamma(r, s); });
  const std::int64_t faces =
      checked_mul(cycles_meeting(lo.perm, split(v0, ann, true)), cycles_meeting(lo.perm, split(v0, ann, false)));
  return checked_sub(sum, checked_mul(faces, mu_product(kr)));
}

std::int64_t mu_pnc_formula(const NcPartition& lo, const NcPartition& hi, const Annulus& ann,
                            IdentityVariant variant, const PreimageIndex& index) {
  if (!refines(lo.partition, hi.partition)) {
    throw IncomparableError("incomparable pair " + element_key(lo) + ", " + element_key(hi));
  }
  auto preimages = [&](const SetPartition& u) -> const std::vector<Permutation>& {
    auto it = index.find(u);
    if (it == index.end()) throw std::invalid_argument(format_partition(u) + " is not annular noncrossing");
    return it->second;
  };
  const auto& lo_pre = preimages(lo.partition);
  const auto& hi_pre = preimages(hi.partition);
  const auto lo_bridges = bridges(lo.partition, ann);
  const auto hi_bridges = bridges(hi.partition, ann);
  const SetPartition circles = orbits_of(ann.tau());

  if (hi_bridges.size() != 1) {
    const Permutation& rho = hi_pre.front();
    for (const Permutation& pi : lo_pre) {
      if (is_disc_noncrossing_on(pi, rho)) return mu_product(kreweras(pi, rho));
    }
    return 0;
  }

  const Block& v0 = hi_bridges.front();
  const Permutation rho0 = disc_perm(meet(hi.partition, circles), ann);

  if (lo_bridges.empty()) {
    const Permutation& pi = lo_pre.front();
    const Permutation kr = kreweras(pi, rho0);
    const auto cs = cycles(kr);
    const std::int64_t sum = face_pair_sum(
        cs, ann, [&](const Cycle& a, const Cycle& b) { return inside(a, v0) && inside(b, v0); },
        [](std::int64_t r, std::int64_t s) {
          return checked_sub(gamma(r, s), checked_mul(r * s, catalan(r + s - 1)));
        });
    const std::int64_t faces =
        checked_mul(cycles_meeting(pi, split(v0, ann, true)), cycles_meeting(pi, split(v0, ann, false)));
    return checked_sub(sum, checked_mul(faces, mu_product(kr)));
  }

  if (lo_bridges.size() == 1) {
    const Block& u0 = lo_bridges.front();
    const Permutation pi0 = disc_perm(meet(lo.partition, circles), ann);
    const Permutation kr = kreweras(pi0, rho0);
    const auto cs = cycles(kr);
    auto touches_u0 = [&](const Cycle& c) {
      return std::any_of(c.begin(), c.end(),
                         [&](Element x) { return std::binary_search(u0.begin(), u0.end(), rho0(x)); });
    };
    const std::int64_t sum = face_pair_sum(
        cs, ann, [&](const Cycle& a, const Cycle& b) { return touches_u0(a) && touches_u0(b); },
        [&](std::int64_t r, std::int64_t s) {
          return checked_sub(kappa_gamma(r, s, variant), catalan(r + s - 1));
        });
    return checked_add(mu_product(kr), sum);
  }

  const Permutation& pi = lo_pre.front();
  const Permutation kr = kreweras(pi, rho0);
  const auto cs = cycles(kr);
  std::int64_t total = mu_product(kr);
  for (std::size_t a = 0; a < cs.size(); ++a) {
    const auto r = static_cast<std::int64_t>(
        std::count_if(cs[a].begin(), cs[a].end(), [&](Element x) { return ann.in_first(x); }));
    const auto s = static_cast<std::int64_t>(cs[a].size()) - r;
    if (r == 0 || s == 0) continue;
    const std::int64_t term =
        checked_mul(sign_pow(r + s), checked_mul(kappa_gamma(r, s, variant), kernel_without(cs, a, a)));
    total = checked_add(total, term);
  }
  return total;
}

std::int64_t mu_pnc_formula(const NcPartition& lo, const NcPartition& hi, const Annulus& ann,
                            IdentityVariant variant) {
  return mu_pnc_formula(lo, hi, ann, variant, preimage_index(ann));
}

std::int64_t two_bridge_direct(std::int64_t p, std::int64_t q) {
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= p - 1; ++i) {
    for (std::int64_t j = 1; j <= q - 1; ++j) total = checked_add(total, direct_term(p, q, i, j));
  }
  return total;
}

std::int64_t partition_face_direct(std::int64_t p, std::int64_t q) {
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= p; ++i) {
    for (std::int64_t j = 1; j <= q; ++j) total = checked_add(total, direct_term(p, q, i, j));
  }
  return total;
}

std::int64_t identity_closed(std::int64_t p, std::int64_t q, IdentityKind which, IdentityVariant variant) {
  if (p < 1 || q < 1) throw std::invalid_argument("identity_closed needs p, q >= 1");
  const std::int64_t face = checked_mul(sign_pow(p + q), kappa_gamma(p, q, variant));
  if (which == IdentityKind::PartitionFace) return face;
  return checked_add(face, checked_mul(sign_pow(p + q - 1), catalan(p + q - 1)));
}

std::int64_t all_bridge_sum(std::size_t r, std::size_t s, std::size_t size_limit) {
  std::int64_t total = 0;
  for (const Permutation& sigma : enumerate_class(Annulus(r, s), NcClass::AllBridges, size_limit)) {
    total = checked_add(total, mu_product(sigma));
  }
  return total;
}

BridgeSeries bridge_series(std::size_t max_p, std::size_t max_q) {
  if (max_p < 1 || max_q < 1) throw std::invalid_argument("bridge_series needs max_p, max_q >= 1");
  using Table = std::vector<std::vector<std::int64_t>>;
  const Table zero(max_p + 1, std::vector<std::int64_t>(max_q + 1, 0));
  Table g1 = zero, g2 = zero, h1 = zero, h2 = zero;
  for (std::size_t r = 1; r <= max_p; ++r) {
    for (std::size_t s = 1; s <= max_q; ++s) {
      const auto rs = static_cast<std::int64_t>(r + s);
      g1[r][s] = checked_mul(sign_pow(rs - 1), catalan(rs - 1));
      g2[r][s] = checked_mul(static_cast<std::int64_t>(s), g1[r][s]);
      h1[r][s] = checked_mul(static_cast<std::int64_t>(r), g1[r][s]);
      h2[r][s] = checked_mul(static_cast<std::int64_t>(s - 1), h1[r][s]);
    }
  }
  // Neither factor has terms with a zero exponent, so (F*G)[r][s] only
  // involves F at strictly smaller r and s.
  auto conv = [](const Table& F, const Table& G, std::size_t r, std::size_t s) {
    std::int64_t acc = 0;
    for (std::size_t a = 1; a < r; ++a) {
      for (std::size_t b = 1; b < s; ++b) acc = checked_add(acc, checked_mul(F[a][b], G[r - a][s - b]));
    }
    return acc;
  };
  BridgeSeries out{zero, zero, zero};
  for (std::size_t r = 1; r <= max_p; ++r) {
    for (std::size_t s = 1; s <= max_q; ++s) {
      out.f1[r][s] = checked_add(conv(out.f1, g1, r, s), h1[r][s]);
    }
  }
  for (std::size_t r = 1; r <= max_p; ++r) {
    for (std::size_t s = 1; s <= max_q; ++s) {
      out.f2[r][s] = checked_add(checked_add(conv(out.f1, g2, r, s), conv(out.f2, g1, r, s)), h2[r][s]);
      out.f[r][s] = checked_sub(0, checked_add(out.f1[r][s], out.f2[r][s]));
    }
  }
  return out;
}

}  // namespace annc
