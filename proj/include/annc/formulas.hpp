#pragma once

// Closed-form Möbius values and the Catalan-type identities behind them.
// All arithmetic is exact int64 and throws ArithmeticError on overflow or on
// a division that does not come out even.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "annc/annular_posets.hpp"
#include "annc/permutation.hpp"

namespace annc {

/// Coefficient of the one-bridge gamma terms: 2/(k-1) as printed, or 1/(k-1).
enum class IdentityVariant { AsPrinted, Corrected };

IdentityVariant parse_variant(std::string_view name);
std::string_view to_string(IdentityVariant v);

std::int64_t binomial(std::int64_t n, std::int64_t k);
std::int64_t catalan(std::int64_t n);

/// (2/(p+q)) (2p-1)!/(p-1)!^2 (2q-1)!/(q-1)!^2.
std::int64_t gamma(std::int64_t p, std::int64_t q);

/// Product of (-1)^{s-1} C_{s-1} over the given block sizes.
std::int64_t catalan_kernel(const std::vector<std::size_t>& sizes);

/// catalan_kernel over the cycle lengths of kr.
std::int64_t mu_product(const Permutation& kr);

std::int64_t mu_snc_formula(const Permutation& lo, const Permutation& hi);
std::int64_t mu_sd_formula(const SdElement& lo, const SdElement& hi, const Annulus& ann);
std::int64_t mu_ps_formula(const PartitionedPermutation& lo, const PartitionedPermutation& hi, const Annulus& ann);

/// `index` must come from preimage_index(ann).
std::int64_t mu_pnc_formula(const NcPartition& lo, const NcPartition& hi, const Annulus& ann,
                            IdentityVariant variant, const PreimageIndex& index);
/// Convenience overload that enumerates the preimages itself.
std::int64_t mu_pnc_formula(const NcPartition& lo, const NcPartition& hi, const Annulus& ann,
                            IdentityVariant variant = IdentityVariant::Corrected);

/// Double sum over i in [1,p-1], j in [1,q-1] of the two Catalan factors.
std::int64_t two_bridge_direct(std::int64_t p, std::int64_t q);
/// The same summand with i in [1,p], j in [1,q].
std::int64_t partition_face_direct(std::int64_t p, std::int64_t q);

enum class IdentityKind { TwoBridge, PartitionFace };
IdentityKind parse_identity_kind(std::string_view name);

std::int64_t identity_closed(std::int64_t p, std::int64_t q, IdentityKind which, IdentityVariant variant);

/// Sum of the Catalan kernel of sigma over all-bridge sigma in S_nc(r,s).
std::int64_t all_bridge_sum(std::size_t r, std::size_t s, std::size_t size_limit = kDefaultSizeLimit);

/// Coefficient tables indexed [r][s] for 1 <= r <= max_p, 1 <= s <= max_q;
/// row and column 0 are unused zeros.
struct BridgeSeries {
  std::vector<std::vector<std::int64_t>> f1, f2, f;
};

/// Solves f1 = f1 g1 + h1 and f2 = f1 g2 + f2 g1 + h2 coefficientwise, where
/// g1 has coefficients (-1)^{r+s-1} C_{r+s-1}, h1 = x d/dx g1,
/// g2 = y d/dy g1 and h2 = y d/dy h1 - h1. Then f = -(f1 + f2).
BridgeSeries bridge_series(std::size_t max_p, std::size_t max_q);

}  // namespace annc
