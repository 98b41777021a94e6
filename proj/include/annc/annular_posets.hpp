#pragma once

// The four posets of annular noncrossing objects, each carried as typed
// elements alongside a FinitePoset over their canonical keys.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "annc/noncrossing.hpp"
#include "annc/permutation.hpp"
#include "annc/poset.hpp"
#include "annc/set_partition.hpp"

namespace annc {

template <class T>
struct AnnularPoset {
  Annulus annulus;
  std::vector<T> elements;  // elements[i] has key order.key(i)
  FinitePoset order;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t index_of(const std::string& key) const {
    auto i = order.index_of(key);
    if (!i) throw std::invalid_argument("no element with key " + key);
    return *i;
  }
};

enum class SdKind { Disc, Annular, DiscHat };

struct SdElement {
  SdKind kind;
  Permutation perm;
  friend bool operator==(const SdElement&, const SdElement&) = default;
};

/// (U, pi) with U either Pi(pi) or Pi(pi) with one block from each circle
/// merged; `nontrivial` holds the merged block in the second case.
struct PartitionedPermutation {
  SetPartition partition;
  Permutation perm;
  std::optional<Block> nontrivial;
  friend bool operator==(const PartitionedPermutation&, const PartitionedPermutation&) = default;
};

struct NcPartition {
  SetPartition partition;
  friend bool operator==(const NcPartition&, const NcPartition&) = default;
};

// Keys: "(1)(2,3)", "hat(1)(2)(3)", "{1,2}{3}|(1,2)(3)", "{1,2}{3}".
std::string element_key(const Permutation& pi);
std::string element_key(const SdElement& x);
std::string element_key(const PartitionedPermutation& x);
std::string element_key(const NcPartition& x);

SdElement parse_sd_element(std::string_view text, const Annulus& ann);
PartitionedPermutation parse_ps_element(std::string_view text, const Annulus& ann);
NcPartition parse_pnc_element(std::string_view text, const Annulus& ann);

// Order relations used by the builders, exposed for formula preconditions.
bool sd_leq(const SdElement& x, const SdElement& y, const Annulus& ann);
bool ps_leq(const PartitionedPermutation& x, const PartitionedPermutation& y);

/// Pi ordered by disc-noncrossing containment.
AnnularPoset<Permutation> build_snc(const Annulus& ann, std::size_t size_limit = kDefaultSizeLimit);

/// Disc, annular and hatted disc elements. The Kreweras order on
/// (annular, hat) pairs is recomputed structurally; any disagreement throws
/// ConstructionError.
AnnularPoset<SdElement> build_sd(const Annulus& ann, std::size_t size_limit = kDefaultSizeLimit);

AnnularPoset<PartitionedPermutation> build_ps(const Annulus& ann, std::size_t size_limit = kDefaultSizeLimit);

AnnularPoset<NcPartition> build_pnc(const Annulus& ann, std::size_t size_limit = kDefaultSizeLimit);

/// Every pi in S_nc(p,q) with Pi(pi) = u, in canonical order. Built from the
/// candidate cycle orders (tau order inside each circle, one rotation per
/// circle for a bridge) rather than by enumeration, so any p+q works.
/// Throws std::invalid_argument when there is none.
std::vector<Permutation> pnc_preimages(const SetPartition& u, const Annulus& ann);

/// All of S_nc(p,q) grouped by Pi, each group in canonical order.
using PreimageIndex = std::map<SetPartition, std::vector<Permutation>>;
PreimageIndex preimage_index(const Annulus& ann, std::size_t size_limit = kDefaultSizeLimit);

/// The order Kr-hat reverses: toggles the hat on disc elements and replaces
/// the underlying permutation by its Kreweras complement relative to tau.
/// Annular elements stay annular.
SdElement kr_hat(const SdElement& x, const Annulus& ann);
SdElement kr_hat_inv(const SdElement& x, const Annulus& ann);

/// The permutation acting on each block as tau does, i.e. the unique disc
/// preimage of a partition refining Pi(tau) that is noncrossing on tau.
Permutation disc_perm(const SetPartition& w, const Annulus& ann);

}  // namespace annc
