#pragma once

#include <gmpxx.h>

#include <string>

namespace tesserae {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace tesserae
