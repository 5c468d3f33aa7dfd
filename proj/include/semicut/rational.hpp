#pragma once

#include <gmpxx.h>

#include <string>

namespace semicut {

/** Exact rational weight/cost value. All weighted arithmetic in the
 *  library is exact: text-format weights (integers, decimals, p/q) are
 *  rationals, so no floating-point tolerance is ever involved. */
using Weight = mpq_class;

/** Arbitrary-precision integer; partition tables and cut caps exceed
 *  64 bits already for moderate k. */
using BigInt = mpz_class;

/** Parses "7", "3/2" or "1.25" into an exact rational.
 *  Throws InvalidParameterError on malformed input or zero denominator. */
Weight parse_weight(const std::string& text);

/** Canonical text form: "7" for integers, "3/2" otherwise. */
std::string weight_to_string(const Weight& w);

} // namespace semicut
