#pragma once

#include <array>
#include <cstdint>

#include "epwlab/matrix.hpp"
#include "epwlab/polynomial.hpp"

namespace epw {

// Fixed 31-bit primes: products fit comfortably in uint64_t. The first three
// are the working set; the rest are spares for when a denominator happens to
// reduce to zero.
inline constexpr std::array<uint64_t, 6> kRankPrimes = {
    2147483647ull, 2147483629ull, 2147483587ull,
    2147483579ull, 2147483563ull, 2147483549ull};

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p);
inline uint64_t mod_inv(uint64_t a, uint64_t p) { return mod_pow(a % p, p - 2, p); }

// Reduce a rational matrix mod p and row-reduce there. Returns false when a
// denominator (or needed inverse) vanishes mod p.
bool rank_mod_p(const Mat& m, uint64_t p, int* rank_out);

struct ModularRankResult {
  int rank = -1;
  bool certified = false;            // three usable primes agreed
  std::array<uint64_t, 3> primes{};  // the primes actually used
};

// Rank certified by agreement across three primes near 2^31. Spare primes
// substitute for any prime hitting a denominator; `certified` is false if
// fewer than three primes were usable or they disagree (rank then reports
// the maximum seen, a lower bound that is almost surely exact).
ModularRankResult modular_rank(const Mat& m);

// Degree of gcd of two rational polynomials computed over F_p. Returns false
// if reduction fails or a leading coefficient dies mod p (degree drop).
bool poly_gcd_degree_mod_p(const UniPoly& a, const UniPoly& b, uint64_t p, int* deg_out);

}  // namespace epw
