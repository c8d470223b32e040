#ifndef OLIGO_ERRORS_HPP_
#define OLIGO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace oligo {

// Library-level error kinds. CLI serializes these as {"error": {"kind", "detail"}}.
enum class errc {
  non_injective,
  unrealizable_code,
  exhausted,
  bound_exceeded,
  limit_exceeded,
  undecided_domain,
  insufficient_support,
  undecided,
  not_a_function,
  not_partial_iso,
  inconsistent,
  not_acl_closed,
  precondition,
  syntax_error,
  unknown_element_literal,
  bad_config,
  internal,
};

const char* errc_name(errc kind);

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& detail);
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] void fail(errc kind, const std::string& detail);

}  // namespace oligo

#endif  // OLIGO_ERRORS_HPP_
