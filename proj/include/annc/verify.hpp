#pragma once

// Oracle-versus-formula sweeps over every comparable pair of one poset.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "annc/formulas.hpp"
#include "annc/permutation.hpp"

namespace annc {

enum class PosetKind { Snc, Sd, Ps, Pnc };

PosetKind parse_poset_kind(std::string_view name);
std::string_view to_string(PosetKind kind);

/// Largest p+q handled without an explicit override.
std::size_t default_size_guard(PosetKind kind);

struct Mismatch {
  std::string lo;
  std::string hi;
  std::int64_t oracle;
  std::int64_t formula;
  IdentityVariant variant;
};

struct VerifyReport {
  std::size_t p = 0;
  std::size_t q = 0;
  PosetKind kind = PosetKind::Snc;
  IdentityVariant variant = IdentityVariant::Corrected;
  std::size_t elements = 0;
  std::size_t pairs_checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Builds the poset, its full Möbius table, and compares the closed form on
/// every comparable pair. For P_nc the other coefficient variant is also
/// evaluated and summarized in `notes`.
VerifyReport verify(const Annulus& ann, PosetKind kind, IdentityVariant variant, std::size_t size_limit);

/// Fixed key order, no whitespace variation.
std::string report_json(const VerifyReport& report);

/// Oracle value and closed form for one pair of keys. Throws
/// std::invalid_argument for unknown keys or an incomparable pair.
struct PairValue {
  std::int64_t oracle;
  std::int64_t formula;
};
PairValue mobius_pair(const Annulus& ann, PosetKind kind, std::string_view lo, std::string_view hi,
                      IdentityVariant variant, std::size_t size_limit);

}  // namespace annc
