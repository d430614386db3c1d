#include "epwlab/modular.hpp"

#include <vector>

namespace epw {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

namespace {

// mpz mod p for 31-bit p, sign-corrected into [0, p).
uint64_t big_mod(const BigInt& z, uint64_t p) {
  BigInt r = z % BigInt(static_cast<unsigned long>(p));
  long v = r.get_si();
  if (v < 0) v += static_cast<long>(p);
  return static_cast<uint64_t>(v);
}

bool scalar_mod(const Scalar& q, uint64_t p, uint64_t* out) {
  uint64_t den = big_mod(q.get_den(), p);
  if (den == 0) return false;
  uint64_t num = big_mod(q.get_num(), p);
  *out = num * mod_inv(den, p) % p;
  return true;
}

}  // namespace

bool rank_mod_p(const Mat& m, uint64_t p, int* rank_out) {
  std::vector<uint64_t> w(static_cast<size_t>(m.rows) * m.cols);
  for (size_t i = 0; i < m.a.size(); ++i)
    if (!scalar_mod(m.a[i], p, &w[i])) return false;
  auto at = [&](int i, int j) -> uint64_t& { return w[static_cast<size_t>(i) * m.cols + j]; };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(at(piv, j), at(rank, j));
    uint64_t inv = mod_inv(at(rank, c), p);
    for (int i = rank + 1; i < m.rows; ++i) {
      if (at(i, c) == 0) continue;
      uint64_t f = at(i, c) * inv % p;
      for (int j = c; j < m.cols; ++j) at(i, j) = (at(i, j) + (p - f) * at(rank, j)) % p;
    }
    ++rank;
  }
  *rank_out = rank;
  return true;
}

ModularRankResult modular_rank(const Mat& m) {
  ModularRankResult res;
  int got = 0;
  int ranks[3] = {-1, -1, -1};
  for (uint64_t p : kRankPrimes) {
    int r;
    if (!rank_mod_p(m, p, &r)) continue;
    res.primes[got] = p;
    ranks[got] = r;
    if (++got == 3) break;
  }
  if (got == 0) return res;
  res.rank = ranks[0];
  for (int i = 1; i < got; ++i) res.rank = std::max(res.rank, ranks[i]);
  res.certified = (got == 3 && ranks[0] == ranks[1] && ranks[1] == ranks[2]);
  return res;
}

bool poly_gcd_degree_mod_p(const UniPoly& a, const UniPoly& b, uint64_t p, int* deg_out) {
  auto reduce = [&](const UniPoly& f, std::vector<uint64_t>* out) {
    out->resize(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i)
      if (!scalar_mod(f.c[i], p, &(*out)[i])) return false;
    // a leading coefficient that dies mod p silently drops the degree;
    // callers treat that prime as unusable
    if (!f.c.empty() && out->back() == 0) return false;
    return true;
  };
  std::vector<uint64_t> fa, fb;
  if (!reduce(a, &fa) || !reduce(b, &fb)) return false;
  auto trim = [](std::vector<uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(fa);
  trim(fb);
  while (!fb.empty()) {
    // fa mod fb
    uint64_t lead_inv = mod_inv(fb.back(), p);
    while (fa.size() >= fb.size() && !fa.empty()) {
      uint64_t f = fa.back() * lead_inv % p;
      size_t shift = fa.size() - fb.size();
      for (size_t i = 0; i < fb.size(); ++i)
        fa[shift + i] = (fa[shift + i] + (p - f) * fb[i] % p) % p;
      trim(fa);
      if (fa.size() < fb.size()) break;
    }
    std::swap(fa, fb);
  }
  *deg_out = static_cast<int>(fa.size()) - 1;
  return true;
}

}  // namespace epw
