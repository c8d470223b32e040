#include "oligo/element.hpp"

#include <algorithm>

namespace oligo {

FiniteSet::FiniteSet(std::vector<Element> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FiniteSet::contains(Element e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

FiniteSet FiniteSet::union_with(const FiniteSet& other) const {
  std::vector<Element> merged;
  merged.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(merged));
  FiniteSet out;
  out.elems_ = std::move(merged);
  return out;
}

}  // namespace oligo
