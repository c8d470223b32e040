#ifndef OLIGO_SRC_STRUCTURES_HPP_
#define OLIGO_SRC_STRUCTURES_HPP_

#include <memory>
#include <span>
#include <vector>

#include "oligo/structure.hpp"

namespace oligo::detail {

std::unique_ptr<const Structure> make_pure_set(const StructureConfig& cfg);
std::unique_ptr<const Structure> make_dlo(const StructureConfig& cfg);
std::unique_ptr<const Structure> make_rado(const StructureConfig& cfg);
std::unique_ptr<const Structure> make_vector_space(const StructureConfig& cfg);

// First-occurrence encoding of the equality pattern of a tuple:
// out[i] = least j with t[j] == t[i].
std::vector<std::size_t> eq_partition(std::span<const Element> t);

}  // namespace oligo::detail

#endif  // OLIGO_SRC_STRUCTURES_HPP_
