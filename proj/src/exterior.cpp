#include "epwlab/exterior.hpp"

#include <array>
#include <bit>
#include <cassert>

namespace epw {

namespace {

std::array<std::vector<unsigned>, 7> build_masks() {
  std::array<std::vector<unsigned>, 7> table;
  for (unsigned m = 0; m < 64; ++m) table[std::popcount(m)].push_back(m);
  // lexicographic on ascending subsets == increasing numeric bitmask? No:
  // {0,5} (100001b = 33) must come before {1,2} (000110b = 6). Sort by the
  // sorted element tuple instead.
  for (auto& v : table) {
    std::sort(v.begin(), v.end(), [](unsigned a, unsigned b) {
      while (a && b) {
        int ea = std::countr_zero(a), eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
      }
      return a == 0 && b != 0;
    });
  }
  return table;
}

const std::array<std::vector<unsigned>, 7>& mask_table() {
  static const auto t = build_masks();
  return t;
}

// mask -> lex index, one flat lookup per grade
const std::array<std::array<int, 64>, 7>& index_table() {
  static const auto t = [] {
    std::array<std::array<int, 64>, 7> idx{};
    for (int k = 0; k <= 6; ++k) {
      for (auto& x : idx[k]) x = -1;
      const auto& masks = mask_table()[k];
      for (size_t i = 0; i < masks.size(); ++i) idx[k][masks[i]] = static_cast<int>(i);
    }
    return idx;
  }();
  return t;
}

// parity of merging disjoint masks: count pairs (s in S, t in T) with s > t
int merge_sign(unsigned s, unsigned t) {
  int inv = 0;
  unsigned tt = t;
  while (tt) {
    int e = std::countr_zero(tt);
    inv += std::popcount(s >> (e + 1));
    tt &= tt - 1;
  }
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

int binom6(int k) {
  static constexpr std::array<int, 7> c = {1, 6, 15, 20, 15, 6, 1};
  if (k < 0 || k > 6) throw std::invalid_argument("grade out of range");
  return c[k];
}

const std::vector<unsigned>& grade_masks(int k) {
  if (k < 0 || k > 6) throw std::invalid_argument("grade out of range");
  return mask_table()[k];
}

int mask_to_index(int k, unsigned mask) {
  int i = index_table()[k][mask & 63u];
  assert(i >= 0);
  return i;
}

KVector KVector::zero(int grade) {
  KVector v;
  v.grade = grade;
  v.coords.assign(binom6(grade), Scalar(0));
  return v;
}

KVector KVector::basis(int i) {
  assert(0 <= i && i < 6);
  KVector v = zero(1);
  v.coords[mask_to_index(1, 1u << i)] = 1;
  return v;
}

KVector KVector::from_coords(int grade, Vec c) {
  if (static_cast<int>(c.size()) != binom6(grade))
    throw std::invalid_argument("coordinate length does not match grade");
  KVector v;
  v.grade = grade;
  v.coords = std::move(c);
  return v;
}

KVector operator+(const KVector& a, const KVector& b) {
  if (a.grade != b.grade) throw std::invalid_argument("grade mismatch");
  KVector v = a;
  for (size_t i = 0; i < v.coords.size(); ++i) v.coords[i] += b.coords[i];
  return v;
}

KVector operator-(const KVector& a, const KVector& b) {
  if (a.grade != b.grade) throw std::invalid_argument("grade mismatch");
  KVector v = a;
  for (size_t i = 0; i < v.coords.size(); ++i) v.coords[i] -= b.coords[i];
  return v;
}

KVector operator*(const Scalar& s, const KVector& a) {
  KVector v = a;
  for (auto& x : v.coords) x *= s;
  return v;
}

KVector wedge(const KVector& a, const KVector& b) {
  int g = a.grade + b.grade;
  if (g > 6) throw std::invalid_argument("wedge: grade overflow");
  KVector out = KVector::zero(g);
  const auto& ma = grade_masks(a.grade);
  const auto& mb = grade_masks(b.grade);
  for (size_t i = 0; i < ma.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (size_t j = 0; j < mb.size(); ++j) {
      if (b.coords[j] == 0) continue;
      if (ma[i] & mb[j]) continue;
      Scalar term = a.coords[i] * b.coords[j];
      if (merge_sign(ma[i], mb[j]) < 0) term = -term;
      out.coords[mask_to_index(g, ma[i] | mb[j])] += term;
    }
  }
  return out;
}

Scalar top_coefficient(const KVector& w) {
  if (w.grade != 6) throw std::invalid_argument("top_coefficient needs grade 6");
  return w.coords[0];
}

Scalar symplectic_form(const KVector& a, const KVector& b) {
  if (a.grade != 3 || b.grade != 3) throw std::invalid_argument("symplectic_form needs grade 3");
  return top_coefficient(wedge(a, b));
}

const Mat& omega_matrix() {
  static const Mat omega = [] {
    Mat m(20, 20);
    const auto& masks = grade_masks(3);
    for (int i = 0; i < 20; ++i) {
      unsigned comp = 63u ^ masks[i];
      int j = mask_to_index(3, comp);
      m.at(i, j) = Scalar(merge_sign(masks[i], comp));
    }
    return m;
  }();
  return omega;
}

Mat wedge_map_matrix(const KVector& v) {
  if (v.grade != 1) throw std::invalid_argument("wedge_map_matrix expects grade 1");
  if (v.is_zero()) throw std::invalid_argument("wedge_map_matrix expects nonzero v");
  Mat m(15, 20);
  for (int c = 0; c < 20; ++c) {
    Vec e(20, Scalar(0));
    e[c] = 1;
    KVector col = wedge(v, KVector::from_coords(3, std::move(e)));
    for (int r = 0; r < 15; ++r) m.at(r, c) = col.coords[r];
  }
  return m;
}

KVector contract(const Vec& f, const KVector& a) {
  if (f.size() != 6) throw std::invalid_argument("contract expects a 6-entry covector");
  if (a.grade == 0) return KVector::zero(0);
  KVector out = KVector::zero(a.grade - 1);
  const auto& masks = grade_masks(a.grade);
  for (size_t i = 0; i < masks.size(); ++i) {
    if (a.coords[i] == 0) continue;
    unsigned s = masks[i];
    int pos = 0;
    unsigned ss = s;
    while (ss) {
      int e = std::countr_zero(ss);
      if (f[e] != 0) {
        Scalar term = f[e] * a.coords[i];
        if (pos % 2 == 1) term = -term;
        out.coords[mask_to_index(a.grade - 1, s & ~(1u << e))] += term;
      }
      ++pos;
      ss &= ss - 1;
    }
  }
  return out;
}

Vec covector_of_5vector(const KVector& w) {
  if (w.grade != 5) throw std::invalid_argument("covector_of_5vector needs grade 5");
  Vec f(6, Scalar(0));
  for (int i = 0; i < 6; ++i) f[i] = top_coefficient(wedge(KVector::basis(i), w));
  return f;
}

Mat two_form_matrix(const KVector& xi) {
  if (xi.grade != 2) throw std::invalid_argument("two_form_matrix needs grade 2");
  Mat b(6, 6);
  const auto& masks = grade_masks(2);
  for (size_t k = 0; k < masks.size(); ++k) {
    int i = std::countr_zero(masks[k]);                    // smaller index
    int j = std::countr_zero(masks[k] & (masks[k] - 1));   // larger index
    b.at(i, j) = xi.coords[k];
    b.at(j, i) = -xi.coords[k];
  }
  return b;
}

DecompRank decomposable_rank(const KVector& a) {
  if (a.grade != 3) throw std::invalid_argument("decomposable_rank needs grade 3");
  if (a.is_zero()) throw std::invalid_argument("decomposable_rank: zero input");
  // kernel of v |-> v^a as a map V6 -> grade 4
  Mat m(15, 6);
  for (int c = 0; c < 6; ++c) {
    KVector col = wedge(KVector::basis(c), a);
    for (int r = 0; r < 15; ++r) m.at(r, c) = col.coords[r];
  }
  RankKernel rk = rank_kernel(m);
  DecompRank out;
  out.kdim = rk.kernel.rows;
  out.decomposable = (out.kdim == 3);
  out.kernel = row_space(rk.kernel);
  return out;
}

namespace {

KVector row_to_vector(const Mat& rows, int i) {
  Vec v = rows.row(i);
  return KVector::from_coords(1, v);
}

KVector wedge_rows(const Mat& rows, const std::vector<int>& which) {
  KVector acc = row_to_vector(rows, which[0]);
  for (size_t i = 1; i < which.size(); ++i) acc = wedge(acc, row_to_vector(rows, which[i]));
  return acc;
}

}  // namespace

SkewForm5 two_form_of_trivector(const KVector& a, const Mat& v5basis) {
  if (a.grade != 3) throw std::invalid_argument("two_form_of_trivector needs grade 3");
  if (v5basis.rows != 5 || v5basis.cols != 6 || rank_of(v5basis) != 5)
    throw std::invalid_argument("two_form_of_trivector: v5basis must span a hyperplane");
  InducedSubspace cube = induced_cube_v5(v5basis);
  if (!span_contains(cube.span, a.coords))
    throw std::invalid_argument("two_form_of_trivector: trivector not in the hyperplane");
  KVector vol5 = wedge_rows(v5basis, {0, 1, 2, 3, 4});
  int anchor = -1;
  for (int i = 0; i < 6; ++i)
    if (vol5.coords[i] != 0) {
      anchor = i;
      break;
    }
  assert(anchor >= 0);
  SkewForm5 out;
  out.gram = Mat(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      KVector w = wedge(wedge(row_to_vector(v5basis, i), row_to_vector(v5basis, j)), a);
      Scalar lambda = w.coords[anchor] / vol5.coords[anchor];
      out.gram.at(i, j) = lambda;
      out.gram.at(j, i) = -lambda;
    }
  return out;
}

Vec pfaffian_adjoint(const Mat& k5) {
  assert(k5.rows == 5 && k5.cols == 5);
  Vec w(5, Scalar(0));
  for (int skip = 0; skip < 5; ++skip) {
    int idx[4];
    int n = 0;
    for (int i = 0; i < 5; ++i)
      if (i != skip) idx[n++] = i;
    Scalar pf = k5.at(idx[0], idx[1]) * k5.at(idx[2], idx[3]) -
                k5.at(idx[0], idx[2]) * k5.at(idx[1], idx[3]) +
                k5.at(idx[0], idx[3]) * k5.at(idx[1], idx[2]);
    w[skip] = (skip % 2 == 0) ? pf : -pf;
  }
  return w;
}

namespace {

InducedSubspace make_induced(InducedKind kind, Mat rows, int expect_dim, const char* what) {
  InducedSubspace out;
  out.kind = kind;
  out.span = row_space(rows);
  if (out.span.rows != expect_dim)
    throw std::runtime_error(std::string(what) + ": unexpected dimension");
  return out;
}

}  // namespace

InducedSubspace induced_fv(const KVector& v) {
  if (v.grade != 1 || v.is_zero()) throw std::invalid_argument("induced_fv: need nonzero vector");
  Mat rows(15, 20);
  const auto& m2 = grade_masks(2);
  for (size_t k = 0; k < m2.size(); ++k) {
    Vec xi(15, Scalar(0));
    xi[k] = 1;
    KVector w = wedge(v, KVector::from_coords(2, xi));
    rows.set_row(static_cast<int>(k), w.coords);
  }
  return make_induced(InducedKind::Fv, std::move(rows), 10, "induced_fv");
}

InducedSubspace induced_wu3(const Mat& u3) {
  if (u3.rows != 3 || u3.cols != 6 || rank_of(u3) != 3)
    throw std::invalid_argument("induced_wu3: need a 3-dimensional subspace");
  Mat rows(18, 20);
  int r = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      KVector lam = wedge(row_to_vector(u3, i), row_to_vector(u3, j));
      for (int k = 0; k < 6; ++k) rows.set_row(r++, wedge(lam, KVector::basis(k)).coords);
    }
  return make_induced(InducedKind::WU3, std::move(rows), 10, "induced_wu3");
}

InducedSubspace induced_cube_v5(const Mat& v5) {
  if (v5.rows != 5 || v5.cols != 6 || rank_of(v5) != 5)
    throw std::invalid_argument("induced_cube_v5: need a hyperplane basis");
  Mat rows(10, 20);
  int r = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) rows.set_row(r++, wedge_rows(v5, {i, j, k}).coords);
  return make_induced(InducedKind::CubeV5, std::move(rows), 10, "induced_cube_v5");
}

InducedSubspace induced_u3_v5(const Mat& u3, const Mat& v5) {
  if (u3.rows != 3 || rank_of(u3) != 3) throw std::invalid_argument("induced_u3_v5: bad U3");
  if (v5.rows != 5 || rank_of(v5) != 5) throw std::invalid_argument("induced_u3_v5: bad V5");
  if (!span_contains_all(v5, u3))
    throw std::invalid_argument("induced_u3_v5: U3 not contained in V5");
  Mat rows(15, 20);
  int r = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      KVector lam = wedge(row_to_vector(u3, i), row_to_vector(u3, j));
      for (int k = 0; k < 5; ++k) rows.set_row(r++, wedge(lam, row_to_vector(v5, k)).coords);
    }
  return make_induced(InducedKind::U3V5, std::move(rows), 7, "induced_u3_v5");
}

InducedSubspace induced_v_wedge2_v5(const KVector& v, const Mat& v5) {
  if (v.grade != 1 || v.is_zero()) throw std::invalid_argument("induced_v_wedge2_v5: bad v");
  if (v5.rows != 5 || rank_of(v5) != 5) throw std::invalid_argument("induced_v_wedge2_v5: bad V5");
  if (!span_contains(v5, v.coords))
    throw std::invalid_argument("induced_v_wedge2_v5: v not in V5");
  Mat rows(10, 20);
  int r = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      rows.set_row(r++, wedge(v, wedge(row_to_vector(v5, i), row_to_vector(v5, j))).coords);
  return make_induced(InducedKind::VWedge2V5, std::move(rows), 6, "induced_v_wedge2_v5");
}

Mat hyperplane_basis(const Vec& f) {
  if (f.size() != 6 || vec_is_zero(f)) throw std::invalid_argument("hyperplane_basis: bad covector");
  Mat fm(1, 6);
  fm.set_row(0, f);
  RankKernel rk = rank_kernel(fm);
  assert(rk.kernel.rows == 5);
  return row_space(rk.kernel);
}

}  // namespace epw
