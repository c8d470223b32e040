#ifndef OLIGO_RATIONAL_HPP_
#define OLIGO_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace oligo {

// Exact rational scalar; always kept in lowest terms by the backend.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q" with an optional leading '-'. Throws errc::syntax_error.
Rat rat_from_string(std::string_view text);

}  // namespace oligo

#endif  // OLIGO_RATIONAL_HPP_
