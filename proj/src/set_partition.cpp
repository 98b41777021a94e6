#include "annc/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "annc/errors.hpp"

namespace annc {

namespace {

void require_same_size(const SetPartition& a, const SetPartition& b, const char* op) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(op) + ": partitions of different sets");
}

}  // namespace

SetPartition::SetPartition(std::size_t n) : block_of_(n) {
  blocks_.reserve(n);
  for (Element x = 0; x < n; ++x) {
    blocks_.push_back({x});
    block_of_[x] = x;
  }
}

SetPartition SetPartition::from_blocks(std::size_t n, std::vector<Block> blocks) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (Block& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    std::sort(b.begin(), b.end());
    for (Element x : b) {
      if (x >= n) throw std::invalid_argument("partition element out of range");
      if (seen[x]) throw std::invalid_argument("partition blocks overlap");
      seen[x] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("partition does not cover the ground set");
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });

  SetPartition out;
  out.blocks_ = std::move(blocks);
  out.block_of_.assign(n, 0);
  for (std::size_t i = 0; i < out.blocks_.size(); ++i) {
    for (Element x : out.blocks_[i]) out.block_of_[x] = i;
  }
  return out;
}

std::size_t SetPartition::find_block(const Block& b) const {
  if (b.empty() || b.front() >= size()) return npos;
  Block sorted = b;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t i = block_of_[sorted.front()];
  return blocks_[i] == sorted ? i : npos;
}

SetPartition orbits_of(const Permutation& a) {
  return SetPartition::from_blocks(a.size(), cycles(a));
}

bool refines(const SetPartition& a, const SetPartition& b) {
  require_same_size(a, b, "refines");
  for (const Block& blk : a.blocks()) {
    const std::size_t target = b.block_of(blk.front());
    for (Element x : blk) {
      if (b.block_of(x) != target) return false;
    }
  }
  return true;
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
  require_same_size(a, b, "meet");
  std::vector<Block> blocks;
  for (const Block& x : a.blocks()) {
    for (const Block& y : b.blocks()) {
      Block both;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
      if (!both.empty()) blocks.push_back(std::move(both));
    }
  }
  return SetPartition::from_blocks(a.size(), std::move(blocks));
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  require_same_size(a, b, "join");
  const std::size_t n = a.size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const SetPartition* part : {&a, &b}) {
    for (const Block& blk : part->blocks()) {
      for (Element x : blk) parent[find(x)] = find(blk.front());
    }
  }
  std::vector<Block> groups(n);
  for (Element x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::erase_if(groups, [](const Block& g) { return g.empty(); });
  return SetPartition::from_blocks(n, std::move(groups));
}

std::vector<Block> bridges(const SetPartition& a, const Annulus& ann) {
  if (a.size() != ann.size()) throw std::invalid_argument("bridges: partition size differs from annulus");
  std::vector<Block> out;
  for (const Block& b : a.blocks()) {
    // Blocks are sorted, so the ends decide whether both circles are hit.
    if (ann.in_first(b.front()) && !ann.in_first(b.back())) out.push_back(b);
  }
  return out;
}

SetPartition merge_blocks(const SetPartition& a, const Block& b1, const Block& b2) {
  const std::size_t i = a.find_block(b1);
  const std::size_t j = a.find_block(b2);
  if (i == SetPartition::npos || j == SetPartition::npos) {
    throw std::invalid_argument("merge_blocks: argument is not a block of the partition");
  }
  if (i == j) throw std::invalid_argument("merge_blocks: blocks must be distinct");
  std::vector<Block> blocks;
  Block merged = a.blocks()[i];
  merged.insert(merged.end(), a.blocks()[j].begin(), a.blocks()[j].end());
  blocks.push_back(std::move(merged));
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    if (k != i && k != j) blocks.push_back(a.blocks()[k]);
  }
  return SetPartition::from_blocks(a.size(), std::move(blocks));
}

Permutation restrict_to(const Permutation& a, const SetPartition& u) {
  if (a.size() != u.size()) throw std::invalid_argument("restrict_to: size mismatch");
  std::vector<Element> images(a.size());
  for (const Block& b : u.blocks()) {
    const Restriction r = restrict(a, b);
    for (Element x : b) images[x] = r(x);
  }
  return Permutation::from_images(std::move(images));
}

std::string format_partition(const SetPartition& a) {
  std::string out;
  for (const Block& b : a.blocks()) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i] + 1);
    }
    out += '}';
  }
  return out;
}

SetPartition parse_partition(std::string_view text, std::size_t n) {
  std::vector<Block> blocks;
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto read_int = [&]() -> Element {
    skip_ws();
    const std::size_t start = i;
    if (i >= text.size() || text[i] < '0' || text[i] > '9') throw ParseError("expected integer", i);
    std::size_t value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + static_cast<std::size_t>(text[i] - '0');
      if (value > n) throw ParseError("element out of range 1.." + std::to_string(n), start);
      ++i;
    }
    if (value == 0) throw ParseError("element out of range 1.." + std::to_string(n), start);
    if (used[value - 1]) throw ParseError("repeated element " + std::to_string(value), start);
    used[value - 1] = true;
    return static_cast<Element>(value - 1);
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{'", i);
    ++i;
    Block b{read_int()};
    skip_ws();
    while (i < text.size() && text[i] == ',') {
      ++i;
      b.push_back(read_int());
      skip_ws();
    }
    if (i >= text.size() || text[i] != '}') throw ParseError("expected ',' or '}'", i);
    ++i;
    blocks.push_back(std::move(b));
    skip_ws();
  }
  // Unlisted elements become singletons, mirroring omitted fixed points.
  for (Element x = 0; x < n; ++x) {
    if (!used[x]) blocks.push_back({x});
  }
  return SetPartition::from_blocks(n, std::move(blocks));
}

}  // namespace annc
