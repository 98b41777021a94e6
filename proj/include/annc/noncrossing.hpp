#pragma once

// Noncrossing predicates relative to a reference permutation, and the
// enumerators for the annular classes built on tau_{p,q}.

#include <cstddef>
#include <string_view>
#include <vector>

#include "annc/permutation.hpp"
#include "annc/set_partition.hpp"

namespace annc {

inline constexpr std::size_t kDefaultSizeLimit = 9;

enum class NcClass {
  Disc,              // Pi(pi) refines Pi(tau)
  AnnularConnected,  // noncrossing and connecting the two circles
  AllNc,
  AllBridges,        // annular-connected with every cycle a bridge
};

NcClass parse_nc_class(std::string_view name);
std::string_view to_string(NcClass cls);

/// #(base) + #(rho) + #(Kr_base(rho)) == n + 2 #<base, rho>.
bool is_noncrossing_on(const Permutation& rho, const Permutation& base);

/// Noncrossing on base with every orbit of rho inside an orbit of base.
bool is_disc_noncrossing_on(const Permutation& rho, const Permutation& base);

/// Pattern test against the single cycle (0,1,...,n-1): no (a,b,c) reversed
/// inside a cycle and no crossing pair (a,c)(b,d).
bool biane_check(const Permutation& pi, std::size_t n);

/// Pattern test for annular noncrossing: none of the two annular-nonstandard
/// or three annular-crossing configurations occurs.
bool mingo_nica_check(const Permutation& pi, const Annulus& ann);

bool is_disc(const Permutation& pi, const Annulus& ann);
bool is_annular_connected(const Permutation& pi, const Annulus& ann);
bool in_class(const Permutation& pi, const Annulus& ann, NcClass cls);

/// True iff every cycle of pi meets both circles.
bool is_all_bridges(const Permutation& pi, const Annulus& ann);

/// Filters all of S_{p+q} in lexicographic order of image arrays.
/// Throws ResourceLimitError when p+q exceeds `size_limit`.
std::vector<Permutation> enumerate_class(const Annulus& ann, NcClass cls,
                                         std::size_t size_limit = kDefaultSizeLimit);

/// Builds every all-bridge permutation directly from the normal form: each
/// bridge is a tau-arc on each circle, and the arcs are paired in opposite
/// cyclic order on the two circles. Sorted like enumerate_class.
std::vector<Permutation> all_bridge_normal_forms(const Annulus& ann);

/// pi|_tau: the disc permutation induced on each circle.
Permutation disc_part(const Permutation& pi, const Annulus& ann);

enum class FaceDirection { Kr, KrInv };

/// Elements lying in bridges of Kr(pi) (or Kr^{-1}(pi)), split by circle.
struct OutsideFaces {
  std::vector<Element> first;
  std::vector<Element> second;
};

/// Throws std::invalid_argument unless pi is annular-connected; throws
/// std::logic_error if a side is not a single orbit of the complement of
/// disc_part(pi).
OutsideFaces outside_faces(const Permutation& pi, const Annulus& ann, FaceDirection direction);

/// Order test for an annular pi against a hatted disc rho that does not go
/// through Kreweras complements: disc_part(pi) <= rho and the bridges of pi
/// meet exactly two cycles of rho.
bool below_hat_structural(const Permutation& pi, const Permutation& rho, const Annulus& ann);

}  // namespace annc
