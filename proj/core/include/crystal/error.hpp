#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

// Every recoverable failure in the library carries one of these kinds so
// callers (and tests) can distinguish, e.g., a malformed LS datum from a
// weight that is not in the orbit at all.  Kind::internal marks conditions
// that theory rules out; hitting one is a bug, not bad input.
enum class ErrorKind {
  index_out_of_range,
  weight_not_in_orbit,
  unordered_chain,
  bad_cuts,
  missing_a_chain,
  non_semistandard,
  shape_mismatch,
  unsorted_biword,
  not_lower_triangular,
  not_minimal_coset_rep,
  parse_error,
  budget_exceeded,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace crystal
