#ifndef OLIGO_CLOSURE_HPP_
#define OLIGO_CLOSURE_HPP_

#include <cstdint>

#include "oligo/element.hpp"
#include "oligo/partial_auto.hpp"
#include "oligo/structure.hpp"

namespace oligo {

// Exact algebraic closure (per-structure closed form).
FiniteSet acl(const Structure& s, const FiniteSet& a);

// Orbit-finiteness estimator: the elements among the first `bound` whose
// realization class over A is finite. Agrees with acl on the builtins; kept
// as an independent oracle, never as the production path.
FiniteSet acl_generic(const Structure& s, const FiniteSet& a, std::uint64_t bound);

bool is_acl_closed(const Structure& s, const FiniteSet& a);

struct RelativeIndex {
  bool finite = false;
  std::uint64_t count = 0;
};

// Finite(n) iff B lies in acl(A), with n the number of tuples realizing the
// joint type of (A, B) over A; Infinite otherwise.
RelativeIndex relative_index(const Structure& s, const FiniteSet& a,
                             const FiniteSet& b);

// Unique extension of a partial isomorphism over the algebraic closure of its
// domain; on the builtins every algebraic point has a forced image.
PartialAuto forced_extension(const Structure& s, const PartialAuto& u);

}  // namespace oligo

#endif  // OLIGO_CLOSURE_HPP_
