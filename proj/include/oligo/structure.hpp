#ifndef OLIGO_STRUCTURE_HPP_
#define OLIGO_STRUCTURE_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oligo/element.hpp"
#include "oligo/partial_auto.hpp"

namespace oligo {

enum class StructureKind { pure_set, dlo, rado, vector_space };

const char* kind_name(StructureKind k);

struct SearchBounds {
  std::uint64_t enum_cap = 4096;
  std::uint64_t search_cap = 4096;
};

struct StructureConfig {
  StructureKind kind = StructureKind::pure_set;
  std::uint32_t q = 2;  // vector_space only; a prime power >= 2
  SearchBounds bounds;
};

// Parses {"kind": ..., "params": {"q": n}, "bounds": {"enum_cap": n,
// "search_cap": n}}; also accepts preset names (see parse_structure_preset).
StructureConfig config_from_json(const std::string& text);
std::string config_to_json(const StructureConfig& cfg);

// "pure_set", "dlo", "rado", "vec<q>" (e.g. "vec2", "vec3").
StructureConfig parse_structure_preset(std::string_view name);

// Exact finiteness verdict for a realization query. When finite, elems holds
// the full realization list in enumeration order.
struct Realizations {
  bool finite = false;
  std::vector<Element> elems;
};

// Oracle bundle presenting one countable homogeneous structure. All methods
// are pure with respect to the immutable config, so concurrent use is safe.
class Structure {
 public:
  static std::unique_ptr<const Structure> make(const StructureConfig& cfg);

  virtual ~Structure() = default;

  const StructureConfig& config() const { return cfg_; }
  StructureKind kind() const { return cfg_.kind; }

  // First n elements of the fixed enumeration; enumerate_elements(n) is a
  // prefix of enumerate_elements(n+1).
  std::vector<Element> enumerate_elements(std::uint64_t n) const;

  virtual std::string element_literal(Element e) const = 0;
  // Throws errc::unknown_element_literal.
  virtual Element parse_element(std::string_view text) const = 0;

  // Canonical quantifier-free type code; two tuples get equal codes iff some
  // automorphism maps one onto the other.
  virtual TypeCode tuple_type(std::span<const Element> t) const = 0;

  // True iff the map preserves quantifier-free types; for the builtins this
  // is equivalent to extendability to a total automorphism. The raw-pair
  // overload validates injectivity first (errc::non_injective).
  bool is_partial_iso(std::span<const ElementPair> pairs) const;
  bool is_partial_iso(const PartialAuto& m) const;

  // All y with tuple_type(anchor + y) == target. Throws
  // errc::unrealizable_code when no y can satisfy the code.
  virtual Realizations realizations(std::span<const Element> anchor,
                                    const TypeCode& target) const = 0;

  // Exact per-structure algebraic closure of a finite set.
  virtual std::vector<Element> acl(std::span<const Element> a) const = 0;

  // Smallest y (enumeration order) outside `forbidden` such that
  // s + {x -> y} is a partial isomorphism. Throws errc::exhausted /
  // errc::bound_exceeded per the realization verdict.
  Element extend_one_avoiding(const PartialAuto& s, Element x,
                              const FiniteSet& forbidden) const;

  // Image for a point x free over dom(w), avoiding the hull strongly: the
  // default avoids the hull as a finite set; vector_space avoids its span so
  // that later forced images can never collide with hull values.
  virtual Element generic_image(const PartialAuto& w, Element x,
                                std::span<const Element> hull) const;

  // Candidate elements realizing every 1-type over the context tuple: each
  // distinct context value plus one representative per fresh class. Complete
  // by construction; see each structure for the argument.
  virtual std::vector<Element> type_candidates(
      std::span<const Element> context) const = 0;

 protected:
  explicit Structure(StructureConfig cfg) : cfg_(cfg) {}

  // Upper bound on the enumeration index needed to find a realization when
  // the verdict is Infinite, given how many values are forbidden.
  virtual std::uint64_t infinite_scan_limit(std::span<const Element> anchor,
                                            const TypeCode& target,
                                            std::size_t forbidden_count) const = 0;

  // Scan for the smallest realization of an infinite class outside
  // `forbidden`. The default walks the enumeration up to the scan limit.
  virtual Element scan_infinite(std::span<const Element> anchor,
                                const TypeCode& target,
                                const FiniteSet& forbidden) const;

  StructureConfig cfg_;
};

}  // namespace oligo

#endif  // OLIGO_STRUCTURE_HPP_
