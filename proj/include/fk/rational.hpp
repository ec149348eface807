#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fk {

// Exact arbitrary-precision scalars. mpq_class keeps fractions normalized
// with positive denominator, which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Errors raised when a configured cap (rule count, matrix rows, nodes
// visited, ...) is exceeded. Callers treat this as "no answer", never as
// a wrong answer.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fk
