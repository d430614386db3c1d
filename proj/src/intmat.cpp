#include "epwlab/intmat.hpp"

#include <cassert>
#include <cstdlib>

#include "epwlab/polynomial.hpp"

namespace epw {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  assert(x.cols == y.rows);
  IntMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

IntMat operator-(const IntMat& x, const IntMat& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  IntMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

BigInt int_det(IntMat m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // Bareiss: division is exact
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMat& a, IntMat& l, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
  for (int c = 0; c < l.cols; ++c) std::swap(l.at(i, c), l.at(j, c));
}

void swap_cols(IntMat& a, IntMat& r, int i, int j) {
  if (i == j) return;
  for (int x = 0; x < a.rows; ++x) std::swap(a.at(x, i), a.at(x, j));
  for (int x = 0; x < r.rows; ++x) std::swap(r.at(x, i), r.at(x, j));
}

// row i -= q * row k
void row_submul(IntMat& a, IntMat& l, int i, int k, const BigInt& q) {
  if (q == 0) return;
  for (int c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(k, c);
  for (int c = 0; c < l.cols; ++c) l.at(i, c) -= q * l.at(k, c);
}

// col j -= q * col k
void col_submul(IntMat& a, IntMat& r, int j, int k, const BigInt& q) {
  if (q == 0) return;
  for (int x = 0; x < a.rows; ++x) a.at(x, j) -= q * a.at(x, k);
  for (int x = 0; x < r.rows; ++x) r.at(x, j) -= q * r.at(x, k);
}

void negate_row(IntMat& a, IntMat& l, int i) {
  for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
  for (int c = 0; c < l.cols; ++c) l.at(i, c) = -l.at(i, c);
}

bool find_min_nonzero(const IntMat& a, int k, int* oi, int* oj) {
  bool found = false;
  BigInt best;
  for (int i = k; i < a.rows; ++i)
    for (int j = k; j < a.cols; ++j) {
      if (a.at(i, j) == 0) continue;
      BigInt v = abs(a.at(i, j));
      if (!found || v < best) {
        best = v;
        *oi = i;
        *oj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

Snf smith_normal_form(IntMat a) {
  Snf out;
  out.left = IntMat::identity(a.rows);
  out.right = IntMat::identity(a.cols);
  int n = std::min(a.rows, a.cols);
  for (int k = 0; k < n; ++k) {
    int pi, pj;
    if (!find_min_nonzero(a, k, &pi, &pj)) break;  // rest is zero
    swap_rows(a, out.left, k, pi);
    swap_cols(a, out.right, k, pj);
    for (;;) {
      // clear column k with the pivot; truncated quotients shrink remainders
      bool touched = false;
      for (int i = k + 1; i < a.rows; ++i) {
        if (a.at(i, k) == 0) continue;
        BigInt q = a.at(i, k) / a.at(k, k);
        row_submul(a, out.left, i, k, q);
        if (a.at(i, k) != 0) touched = true;
      }
      for (int j = k + 1; j < a.cols; ++j) {
        if (a.at(k, j) == 0) continue;
        BigInt q = a.at(k, j) / a.at(k, k);
        col_submul(a, out.right, j, k, q);
        if (a.at(k, j) != 0) touched = true;
      }
      if (touched) {
        // a smaller remainder appeared somewhere in row/col k; re-pivot on it
        if (!find_min_nonzero(a, k, &pi, &pj)) break;
        swap_rows(a, out.left, k, pi);
        swap_cols(a, out.right, k, pj);
        continue;
      }
      // row/col clean; enforce pivot | submatrix for the divisor chain
      bool fixed = true;
      for (int i = k + 1; i < a.rows && fixed; ++i)
        for (int j = k + 1; j < a.cols && fixed; ++j)
          if (a.at(i, j) % a.at(k, k) != 0) {
            row_submul(a, out.left, k, i, BigInt(-1));  // row k += row i
            fixed = false;
          }
      if (fixed) break;
    }
    if (a.at(k, k) < 0) negate_row(a, out.left, k);
  }
  out.diag.resize(n);
  for (int k = 0; k < n; ++k) out.diag[k] = a.at(k, k);
  return out;
}

std::vector<BigInt> nontrivial_invariant_factors(const Snf& s) {
  std::vector<BigInt> f;
  for (const auto& d : s.diag)
    if (d != 0 && d != 1) f.push_back(d);
  return f;
}

IntMat integer_kernel(const IntMat& a) {
  Snf s = smith_normal_form(a);
  std::vector<int> free_idx;
  int n = std::min(a.rows, a.cols);
  for (int i = 0; i < a.cols; ++i)
    if (i >= n || s.diag[i] == 0) free_idx.push_back(i);
  // kernel basis = columns of `right` at the zero-diagonal indices
  IntMat ker(static_cast<int>(free_idx.size()), a.cols);
  for (size_t r = 0; r < free_idx.size(); ++r)
    for (int i = 0; i < a.cols; ++i) ker.at(static_cast<int>(r), i) = s.right.at(i, free_idx[r]);
  return ker;
}

std::vector<BigInt> char_poly(const IntMat& a) {
  assert(a.rows == a.cols);
  int n = a.rows;
  std::vector<Scalar> xs, ys;
  xs.reserve(n + 1);
  ys.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = -a.at(i, j);
        if (i == j) m.at(i, j) += k;
      }
    xs.push_back(Scalar(k));
    ys.push_back(Scalar(int_det(std::move(m))));
  }
  UniPoly p = interpolate(xs, ys);
  std::vector<BigInt> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) {
    Scalar ci = p.coeff(i);
    assert(ci.get_den() == 1);
    coeffs[i] = ci.get_num();
  }
  assert(coeffs[n] == 1);
  return coeffs;
}

std::pair<int, int> signature_of_symmetric(const IntMat& g) {
  std::vector<BigInt> cp = char_poly(g);
  // strip zero eigenvalues
  size_t lo = 0;
  while (lo < cp.size() && cp[lo] == 0) ++lo;
  auto variations = [](const std::vector<BigInt>& v, bool flip_odd) {
    int count = 0, prev = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      int s = sgn(v[i]);
      if (flip_odd && (i % 2 == 1)) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  std::vector<BigInt> stripped(cp.begin() + lo, cp.end());
  // Descartes is exact here: all eigenvalues of a symmetric matrix are real.
  int pos = variations(stripped, false);
  int neg = variations(stripped, true);
  return {pos, neg};
}

}  // namespace epw
