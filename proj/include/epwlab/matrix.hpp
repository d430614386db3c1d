#pragma once

#include <optional>
#include <vector>

#include "epwlab/rng.hpp"
#include "epwlab/scalar.hpp"

namespace epw {

using Vec = std::vector<Scalar>;

// Dense rational matrix, row-major. Sizes here are tiny (<= ~30), so no
// attempt at sparsity or pivoting heuristics beyond "first nonzero".
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  Mat transpose() const;
  bool is_zero() const;

  Vec row(int i) const;
  void set_row(int i, const Vec& v);
  Mat select_rows(const std::vector<int>& idx) const;
  Mat select_cols(const std::vector<int>& idx) const;

  bool operator==(const Mat&) const = default;
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Scalar& s, const Mat& x);

Mat stack_rows(const Mat& top, const Mat& bottom);

Vec mat_vec(const Mat& m, const Vec& x);   // m * x (x as column)
Vec vec_mat(const Vec& x, const Mat& m);   // x as row times m
Scalar dot(const Vec& x, const Vec& y);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const Scalar& s, const Vec& x);
bool vec_is_zero(const Vec& x);

struct Rref {
  Mat mat;
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank = 0;
};
Rref rref(Mat m);

// rank plus a basis of the right kernel {x : m x = 0}, kernel vectors as rows.
struct RankKernel {
  int rank = 0;
  Mat kernel;
};
RankKernel rank_kernel(const Mat& m);

int rank_of(const Mat& m);
Scalar det(Mat m);
std::optional<Mat> inverse(const Mat& m);

// One solution of A x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& A, const Vec& b);

// Subspaces are handled as row spans; row_space() is the canonical form
// (RREF with zero rows dropped), so equal spans compare equal with ==.
Mat row_space(const Mat& m);
Mat subspace_sum(const Mat& u, const Mat& v);
Mat subspace_intersect(const Mat& u, const Mat& v);
bool span_contains(const Mat& u, const Vec& v);
bool span_contains_all(const Mat& u, const Mat& v);
// Coordinates x with x^T u = v, if v lies in the row span of u.
std::optional<Vec> coords_in_span(const Mat& u, const Vec& v);

Mat random_mat(SplitMix64& rng, int r, int c, int lo = -10, int hi = 10);
Vec random_vec(SplitMix64& rng, int n, int lo = -10, int hi = 10);

}  // namespace epw
