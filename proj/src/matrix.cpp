#include "epwlab/matrix.hpp"

#include <cassert>
#include <cctype>

namespace epw {

std::optional<Scalar> parse_scalar(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // grammar: -?digits(/digits)?   (no spaces, no leading +)
  size_t i = 0;
  auto run_digits = [&](size_t from) -> size_t {
    size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '-') ++i;
  size_t num_end = run_digits(i);
  if (num_end == i) return std::nullopt;
  if (num_end == s.size()) {
    return Scalar(BigInt(s.substr(0, num_end)));
  }
  if (s[num_end] != '/') return std::nullopt;
  size_t den_begin = num_end + 1;
  size_t den_end = run_digits(den_begin);
  if (den_end == den_begin || den_end != s.size()) return std::nullopt;
  BigInt den(s.substr(den_begin));
  if (den == 0) return std::nullopt;
  Scalar q(BigInt(s.substr(0, num_end)), den);
  q.canonicalize();
  return q;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec Mat::row(int i) const {
  return Vec(a.begin() + static_cast<size_t>(i) * cols,
             a.begin() + static_cast<size_t>(i + 1) * cols);
}

void Mat::set_row(int i, const Vec& v) {
  assert(static_cast<int>(v.size()) == cols);
  for (int j = 0; j < cols; ++j) at(i, j) = v[j];
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
  Mat m(static_cast<int>(idx.size()), cols);
  for (size_t k = 0; k < idx.size(); ++k) m.set_row(static_cast<int>(k), row(idx[k]));
  return m;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
  Mat m(rows, static_cast<int>(idx.size()));
  for (int i = 0; i < rows; ++i)
    for (size_t k = 0; k < idx.size(); ++k) m.at(i, static_cast<int>(k)) = at(i, idx[k]);
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  assert(x.cols == y.rows);
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

Mat operator+(const Mat& x, const Mat& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

Mat operator-(const Mat& x, const Mat& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

Mat operator*(const Scalar& s, const Mat& x) {
  Mat z = x;
  for (auto& v : z.a) v *= s;
  return z;
}

Mat stack_rows(const Mat& top, const Mat& bottom) {
  if (top.rows == 0) return bottom;
  if (bottom.rows == 0) return top;
  assert(top.cols == bottom.cols);
  Mat m(top.rows + bottom.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), m.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(), m.a.begin() + top.a.size());
  return m;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  assert(static_cast<int>(x.size()) == m.cols);
  Vec y(m.rows, Scalar(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) y[i] += m.at(i, j) * x[j];
  return y;
}

Vec vec_mat(const Vec& x, const Mat& m) {
  assert(static_cast<int>(x.size()) == m.rows);
  Vec y(m.cols, Scalar(0));
  for (int i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j) y[j] += x[i] * m.at(i, j);
  }
  return y;
}

Scalar dot(const Vec& x, const Vec& y) {
  assert(x.size() == y.size());
  Scalar s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vec vec_add(const Vec& x, const Vec& y) {
  assert(x.size() == y.size());
  Vec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

Vec vec_sub(const Vec& x, const Vec& y) {
  assert(x.size() == y.size());
  Vec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

Vec vec_scale(const Scalar& s, const Vec& x) {
  Vec z = x;
  for (auto& v : z) v *= s;
  return z;
}

bool vec_is_zero(const Vec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

Rref rref(Mat m) {
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Scalar inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

RankKernel rank_kernel(const Mat& m) {
  Rref rr = rref(m);
  RankKernel out;
  out.rank = rr.rank;
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    for (int c = 0; c < m.cols; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  out.kernel = Mat(static_cast<int>(free_cols.size()), m.cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    out.kernel.at(static_cast<int>(k), fc) = 1;
    for (int r = 0; r < rr.rank; ++r)
      out.kernel.at(static_cast<int>(k), rr.pivots[r]) = -rr.mat.at(r, fc);
  }
  return out;
}

int rank_of(const Mat& m) { return rref(m).rank; }

Scalar det(Mat m) {
  assert(m.rows == m.cols);
  Scalar d(1);
  for (int c = 0; c < m.cols; ++c) {
    int piv = -1;
    for (int i = c; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = 1 / m.at(c, c);
    for (int i = c + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Scalar f = m.at(i, c) * inv;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref rr = rref(std::move(aug));
  if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  assert(static_cast<int>(b.size()) == A.rows);
  Mat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  Rref rr = rref(std::move(aug));
  Vec x(A.cols, Scalar(0));
  for (int r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] == A.cols) return std::nullopt;  // 0 = 1 row
    x[rr.pivots[r]] = rr.mat.at(r, A.cols);
  }
  return x;
}

Mat row_space(const Mat& m) {
  Rref rr = rref(m);
  Mat out(rr.rank, m.cols);
  for (int i = 0; i < rr.rank; ++i) out.set_row(i, rr.mat.row(i));
  return out;
}

Mat subspace_sum(const Mat& u, const Mat& v) { return row_space(stack_rows(u, v)); }

// Zassenhaus: reduce [u|u ; v|0]; rows whose left half died span the
// intersection in the right half.
Mat subspace_intersect(const Mat& u, const Mat& v) {
  assert(u.cols == v.cols);
  int n = u.cols;
  Mat big(u.rows + v.rows, 2 * n);
  for (int i = 0; i < u.rows; ++i)
    for (int j = 0; j < n; ++j) {
      big.at(i, j) = u.at(i, j);
      big.at(i, n + j) = u.at(i, j);
    }
  for (int i = 0; i < v.rows; ++i)
    for (int j = 0; j < n; ++j) big.at(u.rows + i, j) = v.at(i, j);
  Rref rr = rref(std::move(big));
  Mat inter(0, n);
  for (int r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] >= n) {
      Mat one(1, n);
      for (int j = 0; j < n; ++j) one.at(0, j) = rr.mat.at(r, n + j);
      inter = stack_rows(inter, one);
    }
  }
  return row_space(inter);
}

bool span_contains(const Mat& u, const Vec& v) {
  Mat vm(1, u.cols);
  vm.set_row(0, v);
  return rank_of(stack_rows(u, vm)) == rank_of(u);
}

bool span_contains_all(const Mat& u, const Mat& v) {
  return rank_of(stack_rows(u, v)) == rank_of(u);
}

std::optional<Vec> coords_in_span(const Mat& u, const Vec& v) {
  return solve(u.transpose(), v);
}

Mat random_mat(SplitMix64& rng, int r, int c, int lo, int hi) {
  Mat m(r, c);
  for (auto& x : m.a) x = Scalar(rng.uniform_int(lo, hi));
  return m;
}

Vec random_vec(SplitMix64& rng, int n, int lo, int hi) {
  Vec v(n);
  for (auto& x : v) x = Scalar(rng.uniform_int(lo, hi));
  return v;
}

}  // namespace epw
