#pragma once

// Exact permutation algebra on {0..n-1}. Every text form is 1-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace annc {

using Element = std::uint32_t;
using Cycle = std::vector<Element>;

class Permutation {
 public:
  Permutation() = default;

  /// Identity on n elements.
  explicit Permutation(std::size_t n);

  /// Takes 0-based images; throws std::invalid_argument unless a bijection.
  static Permutation from_images(std::vector<Element> images);

  /// Builds from 0-based cycles; unspecified points are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<Cycle>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  std::span<const Element> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

/// Reference permutation for an annulus with circles {0..p-1} and {p..p+q-1}.
struct Annulus {
  std::size_t p = 1;
  std::size_t q = 1;

  Annulus() = default;
  Annulus(std::size_t p_, std::size_t q_);

  std::size_t size() const noexcept { return p + q; }
  bool in_first(Element x) const noexcept { return x < p; }
  /// 0 for the first circle, 1 for the second.
  int circle_of(Element x) const noexcept { return x < p ? 0 : 1; }
  Permutation tau() const;
};

/// Product of consecutive cycles with the given lengths.
Permutation make_tau(std::span<const std::size_t> lengths);

/// Right-to-left: compose(a, b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

/// Canonical cycles: each rotated to start at its minimum, sorted by minimum,
/// fixed points included.
std::vector<Cycle> cycles(const Permutation& a);
std::size_t num_cycles(const Permutation& a);

/// Kr_base(a) = a^{-1} base.
Permutation kreweras(const Permutation& a, const Permutation& base);
/// Kr_base^{-1}(a) = base a^{-1}.
Permutation kreweras_inv(const Permutation& a, const Permutation& base);

/// Number of orbits of the group generated by a and b.
std::size_t joint_orbit_count(const Permutation& a, const Permutation& b);

/// The induced permutation a|_J. Keeps the original labels of J and also a
/// relabeled copy acting on positions 0..|J|-1 in sorted order of J.
class Restriction {
 public:
  Restriction(std::vector<Element> domain, Permutation relabeled);

  const std::vector<Element>& domain() const noexcept { return domain_; }
  const Permutation& relabeled() const noexcept { return relabeled_; }

  /// Applies a|_J to an original label in J.
  Element operator()(Element x) const;
  bool contains(Element x) const;

  std::vector<Cycle> cycles() const;  // original labels
  std::size_t num_cycles() const;
  /// Permutation on {0..n-1} acting as a|_J on J and fixing the rest.
  Permutation extended(std::size_t n) const;

  friend bool operator==(const Restriction&, const Restriction&) = default;

 private:
  std::vector<Element> domain_;
  Permutation relabeled_;
};

Restriction restrict(const Permutation& a, std::span<const Element> subset);

// Cycle notation, e.g. "(1,2)(3)". Fixed points may be omitted on input.
Permutation parse_cycles(std::string_view text, std::size_t n);
std::string format_cycles(const Permutation& a);
std::string format_cycle_list(const std::vector<Cycle>& cycles);

}  // namespace annc

template <>
struct std::hash<annc::Permutation> {
  std::size_t operator()(const annc::Permutation& p) const noexcept;
};
