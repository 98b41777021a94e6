#include "annc/poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "annc/checked.hpp"
#include "annc/errors.hpp"

namespace annc {

bool BitRow::subset_of(const BitRow& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::size_t BitRow::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitRow& BitRow::operator&=(const BitRow& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitRow& BitRow::operator|=(const BitRow& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitRow& BitRow::subtract(const BitRow& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> BitRow::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

FinitePoset FinitePoset::build(std::vector<std::string> keys, const Leq& leq) {
  FinitePoset P;
  const std::size_t n = keys.size();
  P.keys_ = std::move(keys);
  for (std::size_t i = 0; i < n; ++i) {
    if (!P.index_.emplace(P.keys_[i], i).second) {
      throw std::invalid_argument("duplicate poset element " + P.keys_[i]);
    }
  }

  P.up_.assign(n, BitRow(n));
  P.down_.assign(n, BitRow(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (leq(x, y)) {
        P.up_[x].set(y);
        P.down_[y].set(x);
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!P.up_[x].test(x)) throw ConstructionError("not reflexive at " + P.keys_[x]);
    for (std::size_t y : P.up_[x].indices()) {
      if (y != x && P.up_[y].test(x)) {
        throw ConstructionError("not antisymmetric: " + P.keys_[x] + " and " + P.keys_[y]);
      }
      if (!P.up_[y].subset_of(P.up_[x])) {
        BitRow missing = P.up_[y];
        missing.subtract(P.up_[x]);
        const std::size_t z = missing.indices().front();
        throw ConstructionError("not transitive: " + P.keys_[x] + " <= " + P.keys_[y] + " <= " + P.keys_[z]);
      }
    }
  }

  P.linear_.resize(n);
  std::vector<std::size_t> below(n);
  for (std::size_t x = 0; x < n; ++x) {
    P.linear_[x] = x;
    below[x] = P.down_[x].count();
  }
  // A strictly larger element has a strictly larger down-set.
  std::stable_sort(P.linear_.begin(), P.linear_.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });

  for (std::size_t x = 0; x < n; ++x) {
    BitRow strict = P.up_[x];
    strict.reset(x);
    BitRow candidates = strict;
    for (std::size_t z : strict.indices()) {
      BitRow above_z = P.up_[z];
      above_z.reset(z);
      candidates.subtract(above_z);
    }
    for (std::size_t y : candidates.indices()) P.covers_.emplace_back(x, y);
  }
  return P;
}

std::optional<std::size_t> FinitePoset::index_of(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FinitePoset::minimum() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (up_[x].count() == size()) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::maximum() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (down_[x].count() == size()) return x;
  }
  return std::nullopt;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (up_[x].count() == 1) out.push_back(x);
  }
  return out;
}

std::size_t FinitePoset::comparable_pairs() const {
  std::size_t c = 0;
  for (const BitRow& r : up_) c += r.count();
  return c;
}

MobiusTable::MobiusTable(const FinitePoset& poset) : n_(poset.size()), keys_(poset.keys()), values_(n_ * n_, 0) {
  for (std::size_t x = 0; x < n_; ++x) up_.push_back(poset.up_set(x));
  std::vector<std::size_t> rank(n_);
  for (std::size_t i = 0; i < n_; ++i) rank[poset.linear_extension()[i]] = i;

  for (std::size_t x = 0; x < n_; ++x) {
    std::vector<std::size_t> up = poset.up_set(x).indices();
    std::sort(up.begin(), up.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    std::int64_t* row = &values_[x * n_];
    for (std::size_t y : up) {
      if (y == x) {
        row[y] = 1;
        continue;
      }
      std::int64_t sum = 0;
      BitRow between = poset.up_set(x);
      between &= poset.down_set(y);
      for (std::size_t z : between.indices()) {
        if (z != y) sum = checked_add(sum, row[z]);
      }
      row[y] = checked_sub(0, sum);
    }
  }
}

std::int64_t MobiusTable::operator()(std::size_t lo, std::size_t hi) const {
  if (lo >= n_ || hi >= n_) throw std::out_of_range("Möbius index out of range");
  if (!up_[lo].test(hi)) {
    throw IncomparableError("incomparable pair " + keys_[lo] + ", " + keys_[hi]);
  }
  return values_[lo * n_ + hi];
}

std::int64_t mobius(const FinitePoset& poset, std::size_t x, std::size_t y) {
  if (!poset.leq(x, y)) throw IncomparableError("incomparable pair " + poset.key(x) + ", " + poset.key(y));
  BitRow interval = poset.up_set(x);
  interval &= poset.down_set(y);
  std::vector<std::size_t> members;
  for (std::size_t z : poset.linear_extension()) {
    if (interval.test(z)) members.push_back(z);
  }
  std::vector<std::int64_t> mu(poset.size(), 0);
  for (std::size_t z : members) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t w : members) {
      if (w != z && poset.leq(w, z)) sum = checked_add(sum, mu[w]);
    }
    mu[z] = checked_sub(0, sum);
  }
  return mu[y];
}

std::int64_t delta_sum(const FinitePoset& poset, const MobiusTable& mu, std::size_t x, std::size_t y) {
  BitRow interval = poset.up_set(x);
  interval &= poset.down_set(y);
  std::int64_t sum = 0;
  for (std::size_t z : interval.indices()) sum = checked_add(sum, mu(z, y));
  return sum;
}

namespace {

/// The unique least element of `bounds` in the order given by `up`, if any.
std::optional<std::size_t> least_in(const BitRow& bounds, const std::vector<BitRow>& up) {
  for (std::size_t z : bounds.indices()) {
    if (bounds.subset_of(up[z])) return z;
  }
  return std::nullopt;
}

}  // namespace

LatticeReport lattice_report(const FinitePoset& poset) {
  LatticeReport report;
  const std::size_t n = poset.size();
  std::vector<BitRow> up(n), down(n);
  for (std::size_t x = 0; x < n; ++x) {
    up[x] = poset.up_set(x);
    down[x] = poset.down_set(x);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      BitRow upper = up[x];
      upper &= up[y];
      BitRow lower = down[x];
      lower &= down[y];
      if (!least_in(upper, up) || !least_in(lower, down)) {
        report.is_lattice = false;
        report.failures.emplace_back(x, y);
      }
    }
  }
  return report;
}

FinitePoset dual(const FinitePoset& poset) {
  return FinitePoset::build(poset.keys(), [&](std::size_t x, std::size_t y) { return poset.leq(y, x); });
}

FinitePoset product_poset(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t nb = b.size();
  std::vector<std::string> keys;
  keys.reserve(a.size() * nb);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) keys.push_back(a.key(i) + "," + b.key(j));
  }
  return FinitePoset::build(std::move(keys), [&](std::size_t x, std::size_t y) {
    return a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb);
  });
}

bool product_mobius_check(const FinitePoset& a, const FinitePoset& b) {
  const FinitePoset prod = product_poset(a, b);
  const MobiusTable mu(prod), mu_a(a), mu_b(b);
  const std::size_t nb = b.size();
  for (std::size_t x = 0; x < prod.size(); ++x) {
    for (std::size_t y : prod.up_set(x).indices()) {
      const std::int64_t expected = checked_mul(mu_a(x / nb, y / nb), mu_b(x % nb, y % nb));
      if (mu(x, y) != expected) return false;
    }
  }
  return true;
}

FinitePoset chain(std::size_t n) {
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < n; ++i) keys.push_back(std::to_string(i));
  return FinitePoset::build(std::move(keys), [](std::size_t x, std::size_t y) { return x <= y; });
}

FinitePoset boolean_lattice(std::size_t m) {
  std::vector<std::string> keys;
  for (std::size_t s = 0; s < (std::size_t{1} << m); ++s) {
    std::string k(m, '0');
    for (std::size_t i = 0; i < m; ++i) {
      if (s & (std::size_t{1} << i)) k[i] = '1';
    }
    keys.push_back(std::move(k));
  }
  return FinitePoset::build(std::move(keys), [](std::size_t x, std::size_t y) { return (x & ~y) == 0; });
}

}  // namespace annc
