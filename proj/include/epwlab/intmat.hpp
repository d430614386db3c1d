#pragma once

#include <vector>

#include "epwlab/scalar.hpp"

namespace epw {

// Dense integer matrix (arbitrary precision entries).
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n);
  IntMat transpose() const;
  bool operator==(const IntMat&) const = default;
};

IntMat operator*(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x, const IntMat& y);

// Fraction-free determinant (Bareiss).
BigInt int_det(IntMat m);

// Smith normal form with unimodular transforms: left * A * right is diagonal
// with diag[i] | diag[i+1], diag entries >= 0.
struct Snf {
  std::vector<BigInt> diag;  // length min(rows, cols)
  IntMat left;               // rows x rows
  IntMat right;              // cols x cols
};
Snf smith_normal_form(IntMat a);

// Nontrivial invariant factors (diag entries != 0 and != 1), in order.
std::vector<BigInt> nontrivial_invariant_factors(const Snf& s);

// Saturated basis of {x : A x = 0} over Z, kernel vectors as rows.
IntMat integer_kernel(const IntMat& a);

// Characteristic polynomial det(x I - A), monic; coeffs[i] multiplies x^i.
std::vector<BigInt> char_poly(const IntMat& a);

// (positive, negative) eigenvalue counts of a symmetric integer matrix via
// Descartes' rule on the characteristic polynomial (exact: all roots real).
std::pair<int, int> signature_of_symmetric(const IntMat& g);

}  // namespace epw
