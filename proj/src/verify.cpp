#include "annc/verify.hpp"

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "annc/annular_posets.hpp"
#include "annc/errors.hpp"
#include "annc/poset.hpp"

namespace annc {

namespace {

IdentityVariant other(IdentityVariant v) {
  return v == IdentityVariant::Corrected ? IdentityVariant::AsPrinted : IdentityVariant::Corrected;
}

template <class T, class Formula>
void sweep(const AnnularPoset<T>& poset, VerifyReport& report, IdentityVariant variant, Formula formula) {
  const MobiusTable mu(poset.order);
  report.elements = poset.size();
  for (std::size_t x = 0; x < poset.size(); ++x) {
    for (std::size_t y : poset.order.up_set(x).indices()) {
      ++report.pairs_checked;
      const std::int64_t oracle = mu(x, y);
      const std::int64_t value = formula(poset.elements[x], poset.elements[y]);
      if (value != oracle) {
        report.mismatches.push_back({poset.order.key(x), poset.order.key(y), oracle, value, variant});
      }
    }
  }
}

std::string canonical_key(const Annulus& ann, PosetKind kind, std::string_view text) {
  switch (kind) {
    case PosetKind::Snc: return element_key(parse_cycles(text, ann.size()));
    case PosetKind::Sd: return element_key(parse_sd_element(text, ann));
    case PosetKind::Ps: return element_key(parse_ps_element(text, ann));
    case PosetKind::Pnc: return element_key(parse_pnc_element(text, ann));
  }
  throw std::logic_error("unreachable");
}

template <class T, class Formula>
PairValue pair_value(const AnnularPoset<T>& poset, const std::string& lo, const std::string& hi, Formula formula) {
  const std::size_t x = poset.index_of(lo);
  const std::size_t y = poset.index_of(hi);
  if (!poset.order.leq(x, y)) throw IncomparableError("incomparable pair " + lo + ", " + hi);
  return {mobius(poset.order, x, y), formula(poset.elements[x], poset.elements[y])};
}

}  // namespace

PosetKind parse_poset_kind(std::string_view name) {
  if (name == "snc") return PosetKind::Snc;
  if (name == "sd") return PosetKind::Sd;
  if (name == "ps") return PosetKind::Ps;
  if (name == "pnc") return PosetKind::Pnc;
  throw std::invalid_argument("unknown kind '" + std::string(name) + "' (expected snc|sd|ps|pnc)");
}

std::string_view to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::Snc: return "snc";
    case PosetKind::Sd: return "sd";
    case PosetKind::Ps: return "ps";
    case PosetKind::Pnc: return "pnc";
  }
  return "?";
}

std::size_t default_size_guard(PosetKind kind) {
  return (kind == PosetKind::Snc || kind == PosetKind::Pnc) ? 7 : 6;
}

VerifyReport verify(const Annulus& ann, PosetKind kind, IdentityVariant variant, std::size_t size_limit) {
  VerifyReport report;
  report.p = ann.p;
  report.q = ann.q;
  report.kind = kind;
  report.variant = variant;

  switch (kind) {
    case PosetKind::Snc:
      sweep(build_snc(ann, size_limit), report, variant,
            [](const Permutation& a, const Permutation& b) { return mu_snc_formula(a, b); });
      break;
    case PosetKind::Sd:
      sweep(build_sd(ann, size_limit), report, variant,
            [&](const SdElement& a, const SdElement& b) { return mu_sd_formula(a, b, ann); });
      break;
    case PosetKind::Ps:
      sweep(build_ps(ann, size_limit), report, variant, [&](const PartitionedPermutation& a,
                                                            const PartitionedPermutation& b) {
        return mu_ps_formula(a, b, ann);
      });
      break;
    case PosetKind::Pnc: {
      const auto poset = build_pnc(ann, size_limit);
      const PreimageIndex index = preimage_index(ann, size_limit);
      sweep(poset, report, variant, [&](const NcPartition& a, const NcPartition& b) {
        return mu_pnc_formula(a, b, ann, variant, index);
      });
      VerifyReport shadow;
      const IdentityVariant alt = other(variant);
      sweep(poset, shadow, alt, [&](const NcPartition& a, const NcPartition& b) {
        return mu_pnc_formula(a, b, ann, alt, index);
      });
      report.notes.push_back(std::string(to_string(alt)) + " coefficient: " +
                             std::to_string(shadow.mismatches.size()) + " of " +
                             std::to_string(shadow.pairs_checked) + " pairs disagree with the oracle");
      break;
    }
  }
  if (kind == PosetKind::Pnc || variant == IdentityVariant::AsPrinted) {
    report.notes.push_back("partition-face identity at (1,1): direct sum " +
                           std::to_string(partition_face_direct(1, 1)) + ", corrected closed form " +
                           std::to_string(identity_closed(1, 1, IdentityKind::PartitionFace,
                                                          IdentityVariant::Corrected)) +
                           ", as-printed closed form " +
                           std::to_string(identity_closed(1, 1, IdentityKind::PartitionFace,
                                                          IdentityVariant::AsPrinted)));
  }
  return report;
}

std::string report_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["p"] = report.p;
  j["q"] = report.q;
  j["kind"] = std::string(to_string(report.kind));
  j["variant"] = std::string(to_string(report.variant));
  j["elements"] = report.elements;
  j["pairs_checked"] = report.pairs_checked;
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const Mismatch& m : report.mismatches) {
    nlohmann::ordered_json e;
    e["lo"] = m.lo;
    e["hi"] = m.hi;
    e["mu_oracle"] = m.oracle;
    e["mu_formula"] = m.formula;
    e["variant"] = std::string(to_string(m.variant));
    j["mismatches"].push_back(std::move(e));
  }
  j["notes"] = report.notes;
  return j.dump(2);
}

PairValue mobius_pair(const Annulus& ann, PosetKind kind, std::string_view lo, std::string_view hi,
                      IdentityVariant variant, std::size_t size_limit) {
  const std::string lo_key = canonical_key(ann, kind, lo);
  const std::string hi_key = canonical_key(ann, kind, hi);
  switch (kind) {
    case PosetKind::Snc:
      return pair_value(build_snc(ann, size_limit), lo_key, hi_key,
                        [](const Permutation& a, const Permutation& b) { return mu_snc_formula(a, b); });
    case PosetKind::Sd:
      return pair_value(build_sd(ann, size_limit), lo_key, hi_key,
                        [&](const SdElement& a, const SdElement& b) { return mu_sd_formula(a, b, ann); });
    case PosetKind::Ps:
      return pair_value(build_ps(ann, size_limit), lo_key, hi_key,
                        [&](const PartitionedPermutation& a, const PartitionedPermutation& b) {
                          return mu_ps_formula(a, b, ann);
                        });
    case PosetKind::Pnc: {
      const PreimageIndex index = preimage_index(ann, size_limit);
      return pair_value(build_pnc(ann, size_limit), lo_key, hi_key, [&](const NcPartition& a, const NcPartition& b) {
        return mu_pnc_formula(a, b, ann, variant, index);
      });
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace annc
