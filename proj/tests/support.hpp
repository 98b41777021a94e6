#pragma once

// Exhaustive generators and structural checkers shared by the unit tests and
// the acceptance runner. Each checker returns a count of failures.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "annc/permutation.hpp"
#include "annc/set_partition.hpp"

namespace annc::testing {

std::vector<Permutation> all_permutations(std::size_t n);
std::vector<SetPartition> all_set_partitions(std::size_t n);

/// Every (p, q) with p, q >= 1 and p + q <= max_total.
std::vector<Annulus> annuli_up_to(std::size_t max_total);

/// Each bridge leaves each circle exactly once.
std::size_t contiguous_bridge_failures(const Annulus& ann);

/// Constructed all-bridge normal forms versus the filtered enumeration.
bool normal_forms_match(const Annulus& ann);

/// #pi + #Kr(pi) is p+q on annular and p+q+2 on disc permutations.
std::size_t cycle_count_failures(const Annulus& ann);

/// outside_faces succeeds in both directions with nonempty sides.
std::size_t outside_face_failures(const Annulus& ann);

/// Kreweras order versus the structural test on every (annular, disc) pair.
std::size_t below_hat_disagreements(const Annulus& ann);

/// Products of an annular-noncrossing permutation on two chosen cycles of a
/// disc rho with a disc-noncrossing one on the rest stay noncrossing.
/// Exhaustive over rho and the two cycles; at most `per_choice` factor pairs
/// are sampled per choice.
std::size_t product_construction_failures(const Annulus& ann, std::size_t per_choice, std::uint32_t seed);

struct FaceStructure {
  std::size_t pairs = 0;           // (pi, rho) with pi annular below hat(rho)
  std::size_t two_cycles = 0;      // K is not two cycles of rho pi0^{-1}
  std::size_t clean_split = 0;     // a cycle of rho pi^{-1} straddles K, or is not a bridge inside K
  std::size_t spare_cycles = 0;    // a cycle outside K is not a cycle of rho pi0^{-1}
  std::size_t skeleton_count = 0;  // group sizes differ from sum_k C(r,k) C(s,k) k
  std::size_t face_choices = 0;    // a choice of two faces is not realized the expected number of times

  std::size_t failures() const { return two_cycles + clean_split + spare_cycles + skeleton_count + face_choices; }
};

FaceStructure face_structure(const Annulus& ann);

/// Number of all-bridge noncrossing permutations on two cycles of sizes r, s.
std::int64_t skeleton_count(std::int64_t r, std::int64_t s);

/// Sum of the Catalan kernel over all-bridge sigma in S_nc(r,s) whose cycle
/// through 1 contains r+1 and with sigma(r+s) != r+1.
std::int64_t first_bridge_class_sum(std::size_t r, std::size_t s);

}  // namespace annc::testing
