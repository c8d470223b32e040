#include "oligo/errors.hpp"

namespace oligo {

const char* errc_name(errc kind) {
  switch (kind) {
    case errc::non_injective: return "NonInjective";
    case errc::unrealizable_code: return "UnrealizableCode";
    case errc::exhausted: return "Exhausted";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::undecided_domain: return "UndecidedDomain";
    case errc::insufficient_support: return "InsufficientSupport";
    case errc::undecided: return "Undecided";
    case errc::not_a_function: return "NotAFunction";
    case errc::not_partial_iso: return "NotPartialIso";
    case errc::inconsistent: return "Inconsistent";
    case errc::not_acl_closed: return "NotAclClosed";
    case errc::precondition: return "Precondition";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_element_literal: return "UnknownElementLiteral";
    case errc::bad_config: return "BadConfig";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

error::error(errc kind, const std::string& detail)
    : std::runtime_error(std::string(errc_name(kind)) + ": " + detail),
      kind_(kind) {}

void fail(errc kind, const std::string& detail) { throw error(kind, detail); }

}  // namespace oligo
