#ifndef OLIGO_PARTIALS_HPP_
#define OLIGO_PARTIALS_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <span>

#include "oligo/partial_auto.hpp"
#include "oligo/structure.hpp"

namespace oligo {

// Checked constructor: validates injectivity and the partial-isomorphism
// property against the structure.
PartialAuto make_partial_auto(const Structure& s,
                              std::vector<ElementPair> pairs);

// The unique common extension s | t when the pair union is an injective
// partial isomorphism; nullopt (Incompatible) otherwise.
std::optional<PartialAuto> join(const Structure& s, const PartialAuto& a,
                                const PartialAuto& b);

inline constexpr std::size_t kPatternLimit = 12;

// Finite w extending u, defined on dom(u) and every constraint domain, with
// s_i contained in w exactly when s_i is contained in u. Requires dom(u)
// algebraically closed.
PartialAuto selective_extension(const Structure& s, const PartialAuto& u,
                                std::span<const PartialAuto> constraints);

// Exact truth patterns: the masks S such that some automorphism extends s_i
// precisely for i in S. Masks use bit i for family[i].
std::set<std::uint32_t> realizable_patterns(const Structure& s,
                                            std::span<const PartialAuto> family,
                                            std::size_t limit = kPatternLimit);

// Whether e_s and e_t agree as functions on the whole group, decided through
// realizable_patterns.
bool function_equal(const Structure& s, const PartialAuto& a,
                    const PartialAuto& b);

}  // namespace oligo

#endif  // OLIGO_PARTIALS_HPP_
