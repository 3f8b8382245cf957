#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hhgr {

/// Arbitrary-precision rational; every symmetric-function coefficient lives here.
using Rational = mpq_class;

/// Returns the value as an int64, throwing std::logic_error unless the
/// denominator is 1 and the value fits.
std::int64_t require_integer(const Rational& q);

std::string to_string(const Rational& q);

}  // namespace hhgr
