#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "annc/permutation.hpp"

namespace annc {

using Block = std::vector<Element>;

/// Partition of {0..n-1}. Blocks are kept sorted internally and by minimum
/// across blocks, so structural equality is set equality.
class SetPartition {
 public:
  SetPartition() = default;

  /// All singletons.
  explicit SetPartition(std::size_t n);

  /// Validates disjointness and coverage; canonicalizes order.
  static SetPartition from_blocks(std::size_t n, std::vector<Block> blocks);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  /// Index into blocks() of the block containing x.
  std::size_t block_of(Element x) const { return block_of_[x]; }
  bool same_block(Element x, Element y) const { return block_of_[x] == block_of_[y]; }
  /// Index of a block equal to `b`, or npos.
  std::size_t find_block(const Block& b) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.blocks_ == b.blocks_; }
  friend bool operator<(const SetPartition& a, const SetPartition& b) { return a.blocks_ < b.blocks_; }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
};

SetPartition orbits_of(const Permutation& a);

/// True iff every block of a lies inside a block of b.
bool refines(const SetPartition& a, const SetPartition& b);

SetPartition meet(const SetPartition& a, const SetPartition& b);
SetPartition join(const SetPartition& a, const SetPartition& b);

/// Blocks meeting both circles of the annulus, in canonical order.
std::vector<Block> bridges(const SetPartition& a, const Annulus& ann);

/// Replaces blocks b1 and b2 of `a` with their union.
SetPartition merge_blocks(const SetPartition& a, const Block& b1, const Block& b2);

/// a|_U: the product of the restrictions of `a` to each block of U.
Permutation restrict_to(const Permutation& a, const SetPartition& u);

/// Brace notation "{1,3}{2}" (1-based, canonical order, no whitespace).
std::string format_partition(const SetPartition& a);
SetPartition parse_partition(std::string_view text, std::size_t n);

}  // namespace annc
