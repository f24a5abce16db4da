#pragma once

#include <stdexcept>
#include <string>

namespace crossnum {

enum class errc {
  invalid_order,     // cyclic factor < 2
  no_lift,           // prime_divide precondition violated
  bound_exceeded,    // group too large for the requested operation
  not_a_group,       // element set matches no abelian group
  not_a_subsequence, // removal of a non-sub-multiset
  out_of_range,      // construction parameter outside its valid range
  budget_exceeded,   // search ran out of states or time
  parse_error,       // malformed group spec or sequence literal
  overflow,          // cross-number numerator exceeded the engine's mask width
  verification_failed,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

} // namespace crossnum
