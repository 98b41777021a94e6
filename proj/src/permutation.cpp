#include "annc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "annc/errors.hpp"

namespace annc {

namespace {

void require_same_size(const Permutation& a, const Permutation& b, const char* op) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(op) + ": ground sets differ (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
}

std::vector<Cycle> canonical_cycles(std::span<const Element> images) {
  const std::size_t n = images.size();
  std::vector<Cycle> out;
  std::vector<bool> seen(n, false);
  // Scanning x upward makes the first visited element of each orbit its
  // minimum, so cycles come out rotated and sorted already.
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    Cycle c;
    for (Element y = x; !seen[y]; y = images[y]) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), Element{0});
}

Permutation Permutation::from_images(std::vector<Element> images) {
  std::vector<bool> hit(images.size(), false);
  for (Element y : images) {
    if (y >= images.size() || hit[y]) throw std::invalid_argument("images do not form a bijection");
    hit[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<Cycle>& cycles) {
  Permutation p(n);
  std::vector<bool> used(n, false);
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Element x = c[i];
      if (x >= n) throw std::invalid_argument("cycle element out of range");
      if (used[x]) throw std::invalid_argument("cycle element repeated");
      used[x] = true;
      p.images_[x] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (Element x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Annulus::Annulus(std::size_t p_, std::size_t q_) : p(p_), q(q_) {
  if (p == 0 || q == 0) throw std::invalid_argument("annulus circles must be nonempty");
}

Permutation Annulus::tau() const {
  const std::size_t lengths[] = {p, q};
  return make_tau(lengths);
}

Permutation make_tau(std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw std::invalid_argument("make_tau: no cycle lengths");
  std::size_t n = 0;
  for (std::size_t len : lengths) {
    if (len == 0) throw std::invalid_argument("make_tau: zero cycle length");
    n += len;
  }
  std::vector<Element> images(n);
  Element start = 0;
  for (std::size_t len : lengths) {
    for (std::size_t i = 0; i < len; ++i) {
      images[start + i] = static_cast<Element>(start + (i + 1) % len);
    }
    start += static_cast<Element>(len);
  }
  return Permutation::from_images(std::move(images));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_size(a, b, "compose");
  std::vector<Element> images(a.size());
  for (Element x = 0; x < a.size(); ++x) images[x] = a(b(x));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& a) {
  std::vector<Element> images(a.size());
  for (Element x = 0; x < a.size(); ++x) images[a(x)] = x;
  return Permutation::from_images(std::move(images));
}

std::vector<Cycle> cycles(const Permutation& a) { return canonical_cycles(a.images()); }

std::size_t num_cycles(const Permutation& a) {
  std::vector<bool> seen(a.size(), false);
  std::size_t count = 0;
  for (Element x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (Element y = x; !seen[y]; y = a(y)) seen[y] = true;
  }
  return count;
}

Permutation kreweras(const Permutation& a, const Permutation& base) {
  require_same_size(a, base, "kreweras");
  return compose(inverse(a), base);
}

Permutation kreweras_inv(const Permutation& a, const Permutation& base) {
  require_same_size(a, base, "kreweras_inv");
  return compose(base, inverse(a));
}

std::size_t joint_orbit_count(const Permutation& a, const Permutation& b) {
  require_same_size(a, b, "joint_orbit_count");
  std::vector<Element> parent(a.size());
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = a.size();
  auto unite = [&](Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
      --components;
    }
  };
  for (Element x = 0; x < a.size(); ++x) {
    unite(x, a(x));
    unite(x, b(x));
  }
  return components;
}

Restriction::Restriction(std::vector<Element> domain, Permutation relabeled)
    : domain_(std::move(domain)), relabeled_(std::move(relabeled)) {}

bool Restriction::contains(Element x) const {
  return std::binary_search(domain_.begin(), domain_.end(), x);
}

Element Restriction::operator()(Element x) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), x);
  if (it == domain_.end() || *it != x) throw std::invalid_argument("element outside restriction domain");
  return domain_[relabeled_(static_cast<Element>(it - domain_.begin()))];
}

std::vector<Cycle> Restriction::cycles() const {
  std::vector<Cycle> out = annc::cycles(relabeled_);
  for (Cycle& c : out) {
    for (Element& x : c) x = domain_[x];
  }
  return out;
}

std::size_t Restriction::num_cycles() const { return annc::num_cycles(relabeled_); }

Permutation Restriction::extended(std::size_t n) const {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  for (Element i = 0; i < domain_.size(); ++i) {
    if (domain_[i] >= n) throw std::invalid_argument("restriction domain exceeds ground set");
    images[domain_[i]] = domain_[relabeled_(i)];
  }
  return Permutation::from_images(std::move(images));
}

Restriction restrict(const Permutation& a, std::span<const Element> subset) {
  if (subset.empty()) throw std::invalid_argument("restrict: empty subset");
  std::vector<Element> domain(subset.begin(), subset.end());
  std::sort(domain.begin(), domain.end());
  if (std::adjacent_find(domain.begin(), domain.end()) != domain.end()) {
    throw std::invalid_argument("restrict: repeated element in subset");
  }
  if (domain.back() >= a.size()) throw std::invalid_argument("restrict: element outside ground set");

  std::vector<int> position(a.size(), -1);
  for (std::size_t i = 0; i < domain.size(); ++i) position[domain[i]] = static_cast<int>(i);

  std::vector<Element> local(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    Element y = a(domain[i]);
    while (position[y] < 0) y = a(y);
    local[i] = static_cast<Element>(position[y]);
  }
  return Restriction(std::move(domain), Permutation::from_images(std::move(local)));
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  std::vector<Cycle> cycles;
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
    const Element x = static_cast<Element>(value - 1);
    if (used[x]) throw ParseError("repeated element " + std::to_string(value), start);
    used[x] = true;
    return x;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    Cycle c{read_int()};
    skip_ws();
    while (i < text.size() && text[i] == ',') {
      ++i;
      c.push_back(read_int());
      skip_ws();
    }
    if (i >= text.size() || text[i] != ')') throw ParseError("expected ',' or ')'", i);
    ++i;
    cycles.push_back(std::move(c));
    skip_ws();
  }
  return Permutation::from_cycles(n, cycles);
}

std::string format_cycle_list(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const Cycle& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::string format_cycles(const Permutation& a) { return format_cycle_list(cycles(a)); }

}  // namespace annc

std::size_t std::hash<annc::Permutation>::operator()(const annc::Permutation& p) const noexcept {
  std::size_t h = p.size();
  for (annc::Element x : p.images()) h = h * 1000003u ^ x;
  return h;
}
