#include "epwlab/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace epw {

UniPoly UniPoly::constant(const Scalar& s) {
  UniPoly p;
  if (s != 0) p.c = {s};
  return p;
}

UniPoly UniPoly::linear(const Scalar& a0, const Scalar& a1) {
  UniPoly p;
  p.c = {a0, a1};
  p.trim();
  return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Scalar> cs) {
  UniPoly p;
  p.c = std::move(cs);
  p.trim();
  return p;
}

Scalar UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return Scalar(0);
  return c[i];
}

Scalar UniPoly::lead() const {
  assert(!c.empty());
  return c.back();
}

Scalar UniPoly::eval(const Scalar& t) const {
  Scalar v(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  for (size_t i = 1; i < c.size(); ++i) d.c.push_back(Scalar(static_cast<long>(i)) * c[i]);
  d.trim();
  return d;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = 1 / c.back();
  UniPoly p = *this;
  for (auto& x : p.c) x *= inv;
  return p;
}

void UniPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly s;
  s.c.resize(std::max(a.c.size(), b.c.size()), Scalar(0));
  for (size_t i = 0; i < a.c.size(); ++i) s.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) s.c[i] += b.c[i];
  s.trim();
  return s;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  UniPoly s;
  s.c.resize(std::max(a.c.size(), b.c.size()), Scalar(0));
  for (size_t i = 0; i < a.c.size(); ++i) s.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) s.c[i] -= b.c[i];
  s.trim();
  return s;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero();
  UniPoly p;
  p.c.assign(a.c.size() + b.c.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
  }
  p.trim();
  return p;
}

UniPoly operator*(const Scalar& s, const UniPoly& a) {
  if (s == 0) return UniPoly::zero();
  UniPoly p = a;
  for (auto& x : p.c) x *= s;
  return p;
}

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b) {
  assert(!b.is_zero());
  UniPoly r = a;
  UniPoly q;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Scalar(0));
  Scalar lead_inv = 1 / b.c.back();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Scalar f = r.c.back() * lead_inv;
    q.c[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c[shift + i] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int root_multiplicity(const UniPoly& p, const Scalar& r) {
  assert(!p.is_zero());
  // divide out (t - r) as long as it is a root
  UniPoly lin = UniPoly::linear(-r, Scalar(1));
  UniPoly cur = p;
  int mult = 0;
  while (cur.eval(r) == 0) {
    auto [q, rem] = poly_divmod(cur, lin);
    assert(rem.is_zero());
    cur = std::move(q);
    ++mult;
    if (cur.is_zero()) break;
  }
  return mult;
}

UniPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  assert(xs.size() == ys.size());
  size_t n = xs.size();
  UniPoly acc = UniPoly::zero();
  for (size_t i = 0; i < n; ++i) {
    // basis polynomial through xs[i]
    UniPoly li = UniPoly::constant(Scalar(1));
    Scalar denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      li = li * UniPoly::linear(-xs[j], Scalar(1));
      denom *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / denom) * li;
  }
  acc.trim();
  return acc;
}

Mat PolyMat::eval(const Scalar& t) const {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j).eval(t);
  return m;
}

PolyMat PolyMat::select_rows(const std::vector<int>& idx) const {
  PolyMat m(static_cast<int>(idx.size()), cols);
  for (size_t k = 0; k < idx.size(); ++k)
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(k), j) = at(idx[k], j);
  return m;
}

int PolyMat::degree_bound_det() const {
  assert(rows == cols);
  long by_rows = 0, by_cols = 0;
  for (int i = 0; i < rows; ++i) {
    int mx = 0;
    for (int j = 0; j < cols; ++j) mx = std::max(mx, std::max(0, at(i, j).degree()));
    by_rows += mx;
  }
  for (int j = 0; j < cols; ++j) {
    int mx = 0;
    for (int i = 0; i < rows; ++i) mx = std::max(mx, std::max(0, at(i, j).degree()));
    by_cols += mx;
  }
  return static_cast<int>(std::min(by_rows, by_cols));
}

UniPoly det_poly(const PolyMat& m) {
  assert(m.rows == m.cols);
  if (m.rows == 0) return UniPoly::constant(Scalar(1));
  int bound = m.degree_bound_det();
  std::vector<Scalar> xs, ys;
  xs.reserve(bound + 1);
  ys.reserve(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    Scalar t(k);
    xs.push_back(t);
    ys.push_back(det(m.eval(t)));
  }
  return interpolate(xs, ys);
}

}  // namespace epw
