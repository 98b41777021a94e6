#include "annc/annular_posets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "annc/errors.hpp"

namespace annc {

namespace {

template <class T>
AnnularPoset<T> assemble(const Annulus& ann, std::vector<T> elements,
                         const std::function<bool(const T&, const T&)>& leq) {
  std::vector<std::string> keys;
  keys.reserve(elements.size());
  for (const T& e : elements) keys.push_back(element_key(e));
  FinitePoset order = FinitePoset::build(std::move(keys), [&](std::size_t x, std::size_t y) {
    return leq(elements[x], elements[y]);
  });
  return AnnularPoset<T>{ann, std::move(elements), std::move(order)};
}

bool has_prefix(std::string_view text, std::string_view prefix) {
  return text.substr(0, prefix.size()) == prefix;
}

}  // namespace

std::string element_key(const Permutation& pi) { return format_cycles(pi); }

std::string element_key(const SdElement& x) {
  return (x.kind == SdKind::DiscHat ? "hat" : "") + format_cycles(x.perm);
}

std::string element_key(const PartitionedPermutation& x) {
  return format_partition(x.partition) + "|" + format_cycles(x.perm);
}

std::string element_key(const NcPartition& x) { return format_partition(x.partition); }

SdElement parse_sd_element(std::string_view text, const Annulus& ann) {
  const bool hat = has_prefix(text, "hat");
  Permutation perm = parse_cycles(hat ? text.substr(3) : text, ann.size());
  const bool disc = is_disc(perm, ann);
  if (hat && !disc) throw std::invalid_argument("hatted element must be a disc permutation");
  return {hat ? SdKind::DiscHat : (disc ? SdKind::Disc : SdKind::Annular), std::move(perm)};
}

PartitionedPermutation parse_ps_element(std::string_view text, const Annulus& ann) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|' between partition and permutation", text.size());
  SetPartition u = parse_partition(text.substr(0, bar), ann.size());
  Permutation pi = parse_cycles(text.substr(bar + 1), ann.size());
  const SetPartition orbits = orbits_of(pi);
  if (u == orbits) return {std::move(u), std::move(pi), std::nullopt};

  if (!refines(orbits, u) || orbits.num_blocks() != u.num_blocks() + 1 || !is_disc(pi, ann)) {
    throw std::invalid_argument("partition is neither Pi(pi) nor a merge of two cycles of a disc pi");
  }
  for (const Block& b : u.blocks()) {
    if (orbits.find_block(b) == SetPartition::npos) return {std::move(u), std::move(pi), b};
  }
  throw std::logic_error("merged block not found");
}

NcPartition parse_pnc_element(std::string_view text, const Annulus& ann) {
  return {parse_partition(text, ann.size())};
}

bool sd_leq(const SdElement& x, const SdElement& y, const Annulus& ann) {
  if (y.kind != SdKind::DiscHat) return x.kind != SdKind::DiscHat && is_disc_noncrossing_on(x.perm, y.perm);
  const Permutation tau = ann.tau();
  return is_disc_noncrossing_on(kreweras(y.perm, tau), kreweras(x.perm, tau));
}

bool ps_leq(const PartitionedPermutation& x, const PartitionedPermutation& y) {
  if (x.nontrivial && !y.nontrivial) return false;
  return refines(x.partition, y.partition) && is_noncrossing_on(x.perm, y.perm);
}

AnnularPoset<Permutation> build_snc(const Annulus& ann, std::size_t size_limit) {
  return assemble<Permutation>(ann, enumerate_class(ann, NcClass::AllNc, size_limit),
                               [](const Permutation& a, const Permutation& b) { return is_disc_noncrossing_on(a, b); });
}

AnnularPoset<SdElement> build_sd(const Annulus& ann, std::size_t size_limit) {
  const Permutation tau = ann.tau();
  std::vector<SdElement> elements;
  const auto disc = enumerate_class(ann, NcClass::Disc, size_limit);
  for (const Permutation& d : disc) elements.push_back({SdKind::Disc, d});
  for (const Permutation& a : enumerate_class(ann, NcClass::AnnularConnected, size_limit)) {
    elements.push_back({SdKind::Annular, a});
  }
  for (const Permutation& d : disc) elements.push_back({SdKind::DiscHat, d});

  std::vector<Permutation> kr(elements.size());
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    kr[i] = kreweras(elements[i].perm, tau);
    slot.emplace(element_key(elements[i]), i);
  }

  auto leq = [&](const SdElement& x, const SdElement& y) {
    if (y.kind != SdKind::DiscHat) {
      return x.kind != SdKind::DiscHat && is_disc_noncrossing_on(x.perm, y.perm);
    }
    const std::size_t i = slot.at(element_key(x));
    const std::size_t j = slot.at(element_key(y));
    const bool by_kreweras = is_disc_noncrossing_on(kr[j], kr[i]);
    if (x.kind == SdKind::Annular && by_kreweras != below_hat_structural(x.perm, y.perm, ann)) {
      throw ConstructionError("Kreweras and structural orders disagree on " + element_key(x) + " <= " +
                              element_key(y));
    }
    return by_kreweras;
  };
  return assemble<SdElement>(ann, std::move(elements), leq);
}

AnnularPoset<PartitionedPermutation> build_ps(const Annulus& ann, std::size_t size_limit) {
  std::vector<PartitionedPermutation> elements;
  for (const Permutation& pi : enumerate_class(ann, NcClass::AllNc, size_limit)) {
    const SetPartition orbits = orbits_of(pi);
    elements.push_back({orbits, pi, std::nullopt});
    if (!is_disc(pi, ann)) continue;
    for (const Block& b1 : orbits.blocks()) {
      if (!ann.in_first(b1.back())) continue;
      for (const Block& b2 : orbits.blocks()) {
        if (!ann.in_first(b2.front())) {
          SetPartition merged = merge_blocks(orbits, b1, b2);
          Block v0 = b1;
          v0.insert(v0.end(), b2.begin(), b2.end());
          std::sort(v0.begin(), v0.end());
          elements.push_back({std::move(merged), pi, std::move(v0)});
        }
      }
    }
  }
  return assemble<PartitionedPermutation>(
      ann, std::move(elements), [](const PartitionedPermutation& x, const PartitionedPermutation& y) { return ps_leq(x, y); });
}

AnnularPoset<NcPartition> build_pnc(const Annulus& ann, std::size_t size_limit) {
  std::vector<SetPartition> images;
  for (const Permutation& pi : enumerate_class(ann, NcClass::AllNc, size_limit)) images.push_back(orbits_of(pi));
  std::sort(images.begin(), images.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
    return a < b;
  });
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<NcPartition> elements;
  for (SetPartition& u : images) elements.push_back({std::move(u)});
  return assemble<NcPartition>(ann, std::move(elements), [](const NcPartition& x, const NcPartition& y) {
    return refines(x.partition, y.partition);
  });
}

std::vector<Permutation> pnc_preimages(const SetPartition& u, const Annulus& ann) {
  if (u.size() != ann.size()) throw std::invalid_argument("pnc_preimages: partition size differs from annulus");
  // Per block, the admissible cycles. Blocks are sorted, so increasing order
  // within a circle is tau order.
  std::vector<std::vector<Cycle>> options;
  for (const Block& b : u.blocks()) {
    const auto mid = std::partition_point(b.begin(), b.end(), [&](Element x) { return ann.in_first(x); });
    const Block first(b.begin(), mid), second(mid, b.end());
    if (first.empty() || second.empty()) {
      options.push_back({b});
      continue;
    }
    std::vector<Cycle> rotations;
    for (std::size_t i = 0; i < first.size(); ++i) {
      for (std::size_t j = 0; j < second.size(); ++j) {
        Cycle c;
        for (std::size_t k = 0; k < first.size(); ++k) c.push_back(first[(i + k) % first.size()]);
        for (std::size_t k = 0; k < second.size(); ++k) c.push_back(second[(j + k) % second.size()]);
        rotations.push_back(std::move(c));
      }
    }
    options.push_back(std::move(rotations));
  }

  const Permutation tau = ann.tau();
  std::vector<Permutation> out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<Cycle> chosen;
    for (std::size_t k = 0; k < options.size(); ++k) chosen.push_back(options[k][pick[k]]);
    Permutation pi = Permutation::from_cycles(ann.size(), chosen);
    if (is_noncrossing_on(pi, tau)) out.push_back(std::move(pi));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  if (out.empty()) throw std::invalid_argument("partition " + format_partition(u) + " is not annular noncrossing");
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    return std::lexicographical_compare(a.images().begin(), a.images().end(), b.images().begin(), b.images().end());
  });
  return out;
}

PreimageIndex preimage_index(const Annulus& ann, std::size_t size_limit) {
  PreimageIndex index;
  for (Permutation& pi : enumerate_class(ann, NcClass::AllNc, size_limit)) {
    index[orbits_of(pi)].push_back(std::move(pi));
  }
  return index;
}

SdElement kr_hat(const SdElement& x, const Annulus& ann) {
  const Permutation k = kreweras(x.perm, ann.tau());
  switch (x.kind) {
    case SdKind::Disc: return {SdKind::DiscHat, k};
    case SdKind::Annular: return {SdKind::Annular, k};
    case SdKind::DiscHat: return {SdKind::Disc, k};
  }
  throw std::logic_error("unreachable");
}

SdElement kr_hat_inv(const SdElement& x, const Annulus& ann) {
  const Permutation k = kreweras_inv(x.perm, ann.tau());
  switch (x.kind) {
    case SdKind::Disc: return {SdKind::DiscHat, k};
    case SdKind::Annular: return {SdKind::Annular, k};
    case SdKind::DiscHat: return {SdKind::Disc, k};
  }
  throw std::logic_error("unreachable");
}

Permutation disc_perm(const SetPartition& w, const Annulus& ann) {
  if (w.size() != ann.size()) throw std::invalid_argument("disc_perm: partition size differs from annulus");
  std::vector<Cycle> cs;
  for (const Block& b : w.blocks()) {
    if (ann.in_first(b.front()) != ann.in_first(b.back())) {
      throw std::invalid_argument("disc_perm: partition has a block meeting both circles");
    }
    cs.push_back(b);
  }
  return Permutation::from_cycles(ann.size(), cs);
}

}  // namespace annc
