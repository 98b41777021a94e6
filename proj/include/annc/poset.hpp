#pragma once

// Finite posets over string-keyed elements with an exact Möbius engine.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace annc {

/// Packed row of a relation matrix.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n) : words_((n + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  /// True iff every bit of this row is also set in `other`.
  bool subset_of(const BitRow& other) const;
  std::size_t count() const;
  BitRow& operator&=(const BitRow& other);
  BitRow& operator|=(const BitRow& other);
  /// Clears the bits set in `other`.
  BitRow& subtract(const BitRow& other);
  std::vector<std::size_t> indices() const;

 private:
  std::vector<std::uint64_t> words_;
};

class FinitePoset {
 public:
  using Leq = std::function<bool(std::size_t, std::size_t)>;

  /// Materializes `leq` on index pairs and validates the partial-order
  /// axioms. Throws ConstructionError naming the violating keys, or
  /// std::invalid_argument on duplicate keys.
  static FinitePoset build(std::vector<std::string> keys, const Leq& leq);

  std::size_t size() const noexcept { return keys_.size(); }
  const std::string& key(std::size_t i) const { return keys_[i]; }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  std::optional<std::size_t> index_of(const std::string& key) const;

  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && up_[x].test(y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  const BitRow& up_set(std::size_t x) const { return up_[x]; }
  const BitRow& down_set(std::size_t x) const { return down_[x]; }

  /// Indices sorted so that x < y in the order implies x comes first.
  const std::vector<std::size_t>& linear_extension() const noexcept { return linear_; }
  /// Covering pairs (x, y): x < y with nothing strictly between.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }

  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;
  std::vector<std::size_t> maximal_elements() const;

  std::size_t comparable_pairs() const;

 private:
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<BitRow> up_;
  std::vector<BitRow> down_;
  std::vector<std::size_t> linear_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Möbius values on every comparable pair.
class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset& poset);

  /// Throws std::invalid_argument unless lo <= hi.
  std::int64_t operator()(std::size_t lo, std::size_t hi) const;
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<BitRow> up_;
  std::vector<std::string> keys_;
  std::vector<std::int64_t> values_;
};

/// Single value via the recursion over [x, y] only.
std::int64_t mobius(const FinitePoset& poset, std::size_t x, std::size_t y);

/// Sum of mu(z, y) over z in [x, y]; 1 when x == y and 0 otherwise for a
/// correct table.
std::int64_t delta_sum(const FinitePoset& poset, const MobiusTable& mu, std::size_t x, std::size_t y);

struct LatticeReport {
  bool is_lattice = true;
  /// Pairs lacking a least upper bound or a greatest lower bound.
  std::vector<std::pair<std::size_t, std::size_t>> failures;
};

LatticeReport lattice_report(const FinitePoset& poset);
inline bool is_lattice(const FinitePoset& poset) { return lattice_report(poset).is_lattice; }

/// Same elements with the order reversed.
FinitePoset dual(const FinitePoset& poset);

/// Element (i, j) sits at index i * b.size() + j; keys are "<ka>,<kb>".
FinitePoset product_poset(const FinitePoset& a, const FinitePoset& b);

/// Builds the product explicitly and compares its Möbius table with the
/// product of the factor tables.
bool product_mobius_check(const FinitePoset& a, const FinitePoset& b);

/// Chain 0 < 1 < ... < n-1 with keys "0".."n-1".
FinitePoset chain(std::size_t n);
/// Subsets of an m-set ordered by inclusion; keys are bit strings.
FinitePoset boolean_lattice(std::size_t m);

}  // namespace annc
