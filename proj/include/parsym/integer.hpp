#pragma once

#include <string>

#include <gmpxx.h>

namespace parsym {

// Exact coefficients and sequence terms.
using Integer = mpz_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace parsym
