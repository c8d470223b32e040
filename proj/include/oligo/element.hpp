#ifndef OLIGO_ELEMENT_HPP_
#define OLIGO_ELEMENT_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oligo {

// A point of the underlying countable structure, identified by its position in
// the structure's fixed enumeration. The index is the canonical encoding:
// equality of indices is equality of elements, and index order is the
// enumeration order used for all sorting and tie-breaking.
struct Element {
  std::uint64_t idx = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

using Tuple = std::vector<Element>;

// Canonical serialized normal form of the quantifier-free type of a tuple.
// Codes are only comparable between tuples of the same structure.
struct TypeCode {
  std::string repr;

  friend bool operator==(const TypeCode&, const TypeCode&) = default;
  friend auto operator<=>(const TypeCode&, const TypeCode&) = default;
};

// Finite set of elements, stored sorted in enumeration order, duplicate-free.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<Element> elems);

  const std::vector<Element>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(Element e) const;
  bool subset_of(const FiniteSet& other) const;

  FiniteSet union_with(const FiniteSet& other) const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
  friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<Element> elems_;
};

}  // namespace oligo

template <>
struct std::hash<oligo::Element> {
  std::size_t operator()(const oligo::Element& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.idx);
  }
};

#endif  // OLIGO_ELEMENT_HPP_
