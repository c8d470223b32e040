#ifndef OLIGO_PARTIAL_AUTO_HPP_
#define OLIGO_PARTIAL_AUTO_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "oligo/element.hpp"

namespace oligo {

using ElementPair = std::pair<Element, Element>;

// A finite injective map on structure elements, stored as pairs sorted by
// domain element. Construction enforces that the pair set is a function and
// injective; whether it is a partial isomorphism depends on the structure and
// is checked by the factory in partials.hpp.
class PartialAuto {
 public:
  PartialAuto() = default;  // the empty map

  // Sorts and validates function-ness and injectivity (errc::not_a_function /
  // errc::non_injective). Does not check the partial-isomorphism property.
  static PartialAuto from_pairs(std::vector<ElementPair> pairs);

  const std::vector<ElementPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Domain in enumeration order and the corresponding images (aligned).
  const Tuple& domain() const { return domain_; }
  const Tuple& images() const { return images_; }

  std::optional<Element> apply(Element x) const;
  std::optional<Element> preimage(Element y) const;
  bool defined_on(Element x) const { return apply(x).has_value(); }
  bool has_pair(Element x, Element y) const;

  FiniteSet domain_set() const { return FiniteSet(domain_); }
  FiniteSet image_set() const { return FiniteSet(images_); }

  // New map with one extra pair; throws if x is already assigned or y taken.
  PartialAuto with_pair(Element x, Element y) const;
  // Restriction to the given domain elements.
  PartialAuto restrict_to(const FiniteSet& dom) const;

  friend bool operator==(const PartialAuto& a, const PartialAuto& b) {
    return a.pairs_ == b.pairs_;
  }
  friend auto operator<=>(const PartialAuto& a, const PartialAuto& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  void rebuild_cache();

  std::vector<ElementPair> pairs_;
  Tuple domain_;
  Tuple images_;
};

// g extends s: every pair of s is a pair of g.
bool extends(const PartialAuto& g, const PartialAuto& s);

// Composition where defined: pairs (x, u(v(x))) for x with v(x) in dom(u).
PartialAuto compose(const PartialAuto& u, const PartialAuto& v);

// Pairwise swap; an involution.
PartialAuto inverse(const PartialAuto& u);

// Identity map on the given set.
PartialAuto identity_on(const FiniteSet& a);

}  // namespace oligo

#endif  // OLIGO_PARTIAL_AUTO_HPP_
