#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace epw {

// Exact rational scalar. gmpxx keeps mpq_class canonical (lowest terms,
// positive denominator) under arithmetic, which is what the serialized
// "p/q" grammar expects.
using Scalar = mpq_class;
using BigInt = mpz_class;

inline std::string scalar_str(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Strict parse of "p" or "p/q" with q > 0 after canonicalization.
// Returns nullopt on malformed input instead of throwing.
std::optional<Scalar> parse_scalar(const std::string& s);

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

}  // namespace epw
