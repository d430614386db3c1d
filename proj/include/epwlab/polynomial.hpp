#pragma once

#include <vector>

#include "epwlab/matrix.hpp"
#include "epwlab/scalar.hpp"

namespace epw {

// Univariate polynomial over Q. c[i] is the coefficient of t^i; the vector
// carries no trailing zeros, so the zero polynomial is the empty vector and
// degree() == -1 for it.
struct UniPoly {
  std::vector<Scalar> c;

  static UniPoly zero() { return {}; }
  static UniPoly constant(const Scalar& s);
  static UniPoly linear(const Scalar& a0, const Scalar& a1);  // a0 + a1 t
  static UniPoly from_coeffs(std::vector<Scalar> cs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Scalar coeff(int i) const;
  Scalar lead() const;

  Scalar eval(const Scalar& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  void trim();

  bool operator==(const UniPoly&) const = default;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Scalar& s, const UniPoly& a);

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0,0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// Multiplicity of the root t = r (0 if p(r) != 0). p must be nonzero.
int root_multiplicity(const UniPoly& p, const Scalar& r);

// Lagrange interpolation through (xs[i], ys[i]); xs must be distinct.
UniPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

// Matrix with polynomial entries; used for degeneracy matrices restricted to
// a line or pencil of parameters.
struct PolyMat {
  int rows = 0;
  int cols = 0;
  std::vector<UniPoly> a;

  PolyMat() = default;
  PolyMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  UniPoly& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const UniPoly& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  Mat eval(const Scalar& t) const;
  PolyMat select_rows(const std::vector<int>& idx) const;
  int degree_bound_det() const;  // min of row-wise / column-wise max-degree sums
};

// Determinant of a square polynomial matrix by evaluation at degree_bound+1
// rational points and interpolation. Exact.
UniPoly det_poly(const PolyMat& m);

}  // namespace epw
