#include "epwlab/quadrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "epwlab/parallel.hpp"

namespace epw {

namespace {

bool small_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13; }

// rank of a row-major matrix over the field, destroying the copy
int ff_rank(const Fq& f, std::vector<int> a, int rows, int cols) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[static_cast<size_t>(i * cols + col)] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j)
      std::swap(a[static_cast<size_t>(rank * cols + j)], a[static_cast<size_t>(pivot * cols + j)]);
    int lead = f.inv(a[static_cast<size_t>(rank * cols + col)]);
    for (int j = col; j < cols; ++j)
      a[static_cast<size_t>(rank * cols + j)] = f.mul(lead, a[static_cast<size_t>(rank * cols + j)]);
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      int factor = a[static_cast<size_t>(i * cols + col)];
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j)
        a[static_cast<size_t>(i * cols + j)] =
            f.sub(a[static_cast<size_t>(i * cols + j)],
                  f.mul(factor, a[static_cast<size_t>(rank * cols + j)]));
    }
    ++rank;
  }
  return rank;
}

int ff_det(const Fq& f, std::vector<int> a, int m) {
  int det = 1;
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int i = col; i < m; ++i)
      if (a[static_cast<size_t>(i * m + col)] != 0) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < m; ++j)
        std::swap(a[static_cast<size_t>(col * m + j)], a[static_cast<size_t>(pivot * m + j)]);
      det = f.neg(det);
    }
    int lead = a[static_cast<size_t>(col * m + col)];
    det = f.mul(det, lead);
    int linv = f.inv(lead);
    for (int i = col + 1; i < m; ++i) {
      int factor = f.mul(a[static_cast<size_t>(i * m + col)], linv);
      if (factor == 0) continue;
      for (int j = col; j < m; ++j)
        a[static_cast<size_t>(i * m + j)] =
            f.sub(a[static_cast<size_t>(i * m + j)], f.mul(factor, a[static_cast<size_t>(col * m + j)]));
    }
  }
  return det;
}

}  // namespace

QuadraticForm QuadraticForm::from_gram(const Mat& g) {
  if (g.rows != g.cols) throw std::invalid_argument("QuadraticForm: gram matrix must be square");
  if (!(g == g.transpose())) throw std::invalid_argument("QuadraticForm: gram matrix must be symmetric");
  return QuadraticForm{g, g.rows};
}

int corank(const QuadraticForm& q) { return q.m - rank_of(q.gram); }

std::optional<int> hilbert_dimension(int m, int r, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("hilbert_dimension: only lines (k=1) and planes (k=2) have closed forms");
  if (r < 1 || r > m) throw std::invalid_argument("hilbert_dimension: rank must satisfy 1 <= r <= m");
  int c = m - r;
  if (k + 1 > c + r / 2) return std::nullopt;
  if (k == 1) return r >= 3 ? 2 * m - 7 : 2 * m - 6;
  if (r >= 5) return 3 * m - 15;
  if (r >= 3) return 3 * m - 14;
  return 3 * m - 12;
}

namespace {

// dimension of the variety of isotropic subspaces of linear dimension `rows`
// for a form of corank c on an m-space: a subspace is (kernel part) + (graph
// of a lift over an isotropic subspace of the rank-r core), and the largest
// stratum wins
int strata_dimension(int m, int c, int rows) {
  int r = m - c;
  int best = -1;
  for (int t = std::max(0, rows - r); t <= std::min(c, rows); ++t) {
    int j = rows - t;
    if (j > r / 2) continue;
    int d = t * (c - t) + j * (r - j) - j * (j + 1) / 2 + j * (c - t);
    best = std::max(best, d);
  }
  return best;
}

struct CaseRow {
  int m, c, k;
  FamilyStructure structure;
  int dim, families, components;
};

const CaseRow kCaseTable[] = {
    {3, 1, 1, FamilyStructure::TwoFamilies, 0, 2, 2},   // two lines: two reduced points
    {3, 2, 1, FamilyStructure::DoubleFamily, 0, 1, 1},  // double line: one double point
    {3, 3, 1, FamilyStructure::DualPlane, 2, 1, 1},     // the whole plane
    {4, 0, 1, FamilyStructure::TwoFamilies, 1, 2, 2},   // rulings P^1 ⊔ P^1
    {4, 1, 1, FamilyStructure::SingleFamily, 1, 1, 1},  // cone: a single P^1
    {4, 2, 1, FamilyStructure::TwoFamilies, 2, 2, 1},   // two dual planes, glued
    {4, 3, 1, FamilyStructure::DualPlane, 2, 1, 1},     // double plane
    {4, 2, 2, FamilyStructure::TwoFamilies, 0, 2, 2},   // two planes: two reduced points
    {4, 3, 2, FamilyStructure::DoubleFamily, 0, 1, 1},  // double plane: one double point
    {5, 0, 1, FamilyStructure::SingleFamily, 3, 1, 1},  // lines on a smooth threefold: P^3
    {5, 1, 1, FamilyStructure::SingleFamily, 3, 1, 1},
    {5, 2, 1, FamilyStructure::SingleFamily, 3, 1, 1},
    {5, 3, 1, FamilyStructure::TwoFamilies, 4, 2, 1},
    {5, 1, 2, FamilyStructure::TwoFamilies, 1, 2, 2},   // two P^1 families of planes
    {5, 2, 2, FamilyStructure::DoubleFamily, 1, 1, 1},  // one P^1 of planes, doubled
    {5, 3, 2, FamilyStructure::TwoSpaces, 3, 2, 1},     // P^3 ∪ P^3 meeting in a point
    {5, 3, 3, FamilyStructure::TwoFamilies, 0, 2, 2},   // two distinct 3-spaces
    {6, 0, 1, FamilyStructure::SingleFamily, 5, 1, 1},
    {6, 0, 2, FamilyStructure::TwoFamilies, 3, 2, 2},
};

}  // namespace

FamilyDescriptor classify_linear_families(int m, int c, int k) {
  if (m < 2 || c < 0 || c > m || k < 1)
    throw std::invalid_argument("classify_linear_families: need m >= 2, 0 <= c <= m, k >= 1");
  FamilyDescriptor fd;
  fd.k = k;
  int r = m - c;
  int rows = k + 1;
  if (rows > c + r / 2) return fd;  // empty
  for (const CaseRow& row : kCaseTable) {
    if (row.m == m && row.c == c && row.k == k) {
      fd.structure = row.structure;
      fd.dim = row.dim;
      fd.families = row.families;
      fd.components = row.components;
      fd.from_table = true;
      return fd;
    }
  }
  fd.dim = strata_dimension(m, c, rows);
  fd.components = (r >= 2 && r % 2 == 0 && rows - c == r / 2) ? 2 : 1;
  fd.families = (r >= 2 && r % 2 == 0 && rows >= r / 2) ? 2 : 1;
  fd.structure = fd.families == 2 ? FamilyStructure::TwoFamilies : FamilyStructure::SingleFamily;
  return fd;
}

Fq Fq::prime(int p) {
  if (!small_prime(p)) throw std::invalid_argument("Fq: characteristic must be a small prime");
  Fq f;
  f.p = p;
  f.deg = 1;
  f.n = p;
  f.add_t.resize(static_cast<size_t>(p * p));
  f.mul_t.resize(static_cast<size_t>(p * p));
  f.neg_t.resize(static_cast<size_t>(p));
  for (int a = 0; a < p; ++a) {
    f.neg_t[static_cast<size_t>(a)] = (p - a) % p;
    for (int b = 0; b < p; ++b) {
      f.add_t[static_cast<size_t>(a * p + b)] = (a + b) % p;
      f.mul_t[static_cast<size_t>(a * p + b)] = (a * b) % p;
    }
  }
  return f;
}

Fq Fq::quadratic(int p) {
  if (!small_prime(p) || p > 7) throw std::invalid_argument("Fq: quadratic extension supported for p <= 7");
  Fq f;
  f.p = p;
  f.deg = 2;
  f.n = p * p;
  int n = f.n;
  f.add_t.resize(static_cast<size_t>(n * n));
  f.mul_t.resize(static_cast<size_t>(n * n));
  f.neg_t.resize(static_cast<size_t>(n));
  // modulus: x^2 + x + 1 for p = 2, otherwise x^2 - s with s a non-residue
  int s = 0;
  if (p != 2) {
    std::vector<bool> is_sq(static_cast<size_t>(p), false);
    for (int a = 0; a < p; ++a) is_sq[static_cast<size_t>(a * a % p)] = true;
    for (int a = 1; a < p; ++a)
      if (!is_sq[static_cast<size_t>(a)]) { s = a; break; }
  }
  auto enc = [p](int a0, int a1) { return ((a0 % p + p) % p) + ((a1 % p + p) % p) * p; };
  for (int a = 0; a < n; ++a) {
    int a0 = a % p, a1 = a / p;
    f.neg_t[static_cast<size_t>(a)] = enc(-a0, -a1);
    for (int b = 0; b < n; ++b) {
      int b0 = b % p, b1 = b / p;
      f.add_t[static_cast<size_t>(a * n + b)] = enc(a0 + b0, a1 + b1);
      int c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
      if (p == 2)
        f.mul_t[static_cast<size_t>(a * n + b)] = enc(c0 + c2, c1 + c2);  // x^2 = x + 1
      else
        f.mul_t[static_cast<size_t>(a * n + b)] = enc(c0 + c2 * s, c1);   // x^2 = s
    }
  }
  return f;
}

int Fq::inv(int a) const {
  if (a == 0) throw std::invalid_argument("Fq: zero has no inverse");
  for (int b = 1; b < n; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("Fq: inverse not found");
}

bool Fq::is_square(int a) const {
  for (int b = 0; b < n; ++b)
    if (mul(b, b) == a) return true;
  return false;
}

FFQuadraticForm FFQuadraticForm::from_gram(const Fq& field, int m, std::vector<int> gram) {
  if (m < 1 || gram.size() != static_cast<size_t>(m) * static_cast<size_t>(m))
    throw std::invalid_argument("FFQuadraticForm: gram must be m x m");
  for (int v : gram)
    if (v < 0 || v >= field.n) throw std::invalid_argument("FFQuadraticForm: entry out of field range");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (gram[static_cast<size_t>(i * m + j)] != gram[static_cast<size_t>(j * m + i)])
        throw std::invalid_argument("FFQuadraticForm: gram must be symmetric");
  return FFQuadraticForm{field, m, std::move(gram)};
}

std::vector<int> split_gram(int m, int c) {
  if (m < 1 || c < 0 || c > m) throw std::invalid_argument("split_gram: need 0 <= c <= m");
  std::vector<int> g(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
  int r = m - c;
  int i = 0;
  for (; i + 1 < r; i += 2) {
    g[static_cast<size_t>(i * m + i + 1)] = 1;
    g[static_cast<size_t>((i + 1) * m + i)] = 1;
  }
  if (i < r) g[static_cast<size_t>(i * m + i)] = 1;
  return g;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// all size-`take` subsets of {0..m-1}, lexicographic
std::vector<std::vector<int>> pivot_patterns(int m, int take) {
  std::vector<std::vector<int>> out;
  if (take > m) return out;
  std::vector<int> cur(static_cast<size_t>(take));
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    int i = take - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == m - take + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < take; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

FFEnumeration enumerate_linear_spaces_ff(const FFQuadraticForm& q, int k) {
  const Fq& f = q.field;
  if (f.p != 2 && f.p != 3 && f.p != 5)
    throw std::invalid_argument("enumerate_linear_spaces_ff: characteristic must be 2, 3, or 5");
  if (q.m < 2 || q.m > 6) throw std::invalid_argument("enumerate_linear_spaces_ff: need 2 <= m <= 6");
  if (k < 1 || k > 3) throw std::invalid_argument("enumerate_linear_spaces_ff: need 1 <= k <= 3");

  const int m = q.m;
  const int rows = k + 1;
  const bool odd_char = f.p != 2;
  std::vector<std::vector<int>> patterns = pivot_patterns(m, rows);

  long double estimate = 0;
  std::vector<std::vector<std::pair<int, int>>> free_slots(patterns.size());
  for (size_t pi = 0; pi < patterns.size(); ++pi) {
    const std::vector<int>& piv = patterns[pi];
    for (int i = 0; i < rows; ++i)
      for (int j = piv[static_cast<size_t>(i)] + 1; j < m; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end())
          free_slots[pi].push_back({i, j});
    estimate += std::pow(static_cast<long double>(f.n), static_cast<long double>(free_slots[pi].size()));
  }
  if (estimate > 6.5e6L)
    throw std::runtime_error("enumerate_linear_spaces_ff: instance too large");

  // each pattern contributes its isotropic echelon bases independently
  std::vector<std::vector<std::vector<int>>> found(patterns.size());
  parallel_for_index(static_cast<int>(patterns.size()), [&](int pi) {
    const std::vector<int>& piv = patterns[static_cast<size_t>(pi)];
    const auto& slots = free_slots[static_cast<size_t>(pi)];
    std::vector<int> basis(static_cast<size_t>(rows * m), 0);
    for (int i = 0; i < rows; ++i) basis[static_cast<size_t>(i * m + piv[static_cast<size_t>(i)])] = 1;
    std::vector<int> digits(slots.size(), 0);
    std::vector<int> gb(static_cast<size_t>(rows * m));  // gram * basis rows
    for (;;) {
      for (size_t d = 0; d < slots.size(); ++d)
        basis[static_cast<size_t>(slots[d].first * m + slots[d].second)] = digits[d];
      for (int i = 0; i < rows; ++i)
        for (int col = 0; col < m; ++col) {
          int acc = 0;
          for (int a = 0; a < m; ++a)
            acc = f.add(acc, f.mul(basis[static_cast<size_t>(i * m + a)], q.entry(a, col)));
          gb[static_cast<size_t>(i * m + col)] = acc;
        }
      bool ok = true;
      for (int i = 0; i < rows && ok; ++i) {
        // char 2: cross bilinear values vanish identically, test squares only
        int jmax = odd_char ? rows - 1 : i;
        for (int j = i; j <= jmax && ok; ++j) {
          int acc = 0;
          for (int col = 0; col < m; ++col)
            acc = f.add(acc, f.mul(gb[static_cast<size_t>(i * m + col)], basis[static_cast<size_t>(j * m + col)]));
          if (acc != 0) ok = false;
        }
      }
      if (ok) found[static_cast<size_t>(pi)].push_back(basis);
      size_t d = 0;
      while (d < digits.size() && ++digits[d] == f.n) digits[d++] = 0;
      if (d == digits.size()) break;
    }
  });

  FFEnumeration out;
  for (auto& per : found)
    for (auto& b : per) out.planes.push_back(std::move(b));
  out.count = static_cast<long long>(out.planes.size());

  if (out.count == 0) {
    out.components = 0;
    return out;
  }
  if (out.count > 4000) {
    out.components = -1;
    return out;
  }

  const int nplanes = static_cast<int>(out.count);
  const int core_rank = ff_rank(f, q.gram, m, m);
  const int kernel_dim = m - core_rank;
  // two components exactly when the subspaces are maximal over an even core:
  // the two spinor families then meet only in codimension >= 1 with opposite
  // intersection parity, and must not be merged; in every other case a
  // codimension-one meet witnesses a pencil gluing the family together
  const bool two_spinor_families =
      core_rank % 2 == 0 && core_rank >= 2 && rows - kernel_dim == core_rank / 2;
  std::vector<std::vector<int>> edges(static_cast<size_t>(nplanes));
  parallel_for_index(nplanes, [&](int i) {
    std::vector<int> stacked(static_cast<size_t>(2 * rows * m));
    for (int j = i + 1; j < nplanes; ++j) {
      std::copy(out.planes[static_cast<size_t>(i)].begin(), out.planes[static_cast<size_t>(i)].end(), stacked.begin());
      std::copy(out.planes[static_cast<size_t>(j)].begin(), out.planes[static_cast<size_t>(j)].end(),
                stacked.begin() + rows * m);
      int meet = 2 * rows - ff_rank(f, stacked, 2 * rows, m);
      bool adjacent = (meet % 2 == rows % 2) || (!two_spinor_families && meet == rows - 1);
      if (adjacent) edges[static_cast<size_t>(i)].push_back(j);
    }
  });
  DisjointSets ds(nplanes);
  for (int i = 0; i < nplanes; ++i)
    for (int j : edges[static_cast<size_t>(i)]) ds.join(i, j);
  std::vector<int> size_of(static_cast<size_t>(nplanes), 0);
  for (int i = 0; i < nplanes; ++i) ++size_of[static_cast<size_t>(ds.find(i))];
  for (int i = 0; i < nplanes; ++i)
    if (size_of[static_cast<size_t>(i)] > 0) out.component_sizes.push_back(size_of[static_cast<size_t>(i)]);
  std::sort(out.component_sizes.begin(), out.component_sizes.end());
  out.components = static_cast<int>(out.component_sizes.size());
  return out;
}

DiscriminantSplit family_count_vs_discriminant(const FFQuadraticForm& q) {
  if (q.field.deg != 1 || q.field.p == 2)
    throw std::invalid_argument("family_count_vs_discriminant: expects an odd prime field");
  if (q.m != 4)
    throw std::invalid_argument("family_count_vs_discriminant: expects a quadric surface in P^3");
  const Fq& f = q.field;
  int det = ff_det(f, q.gram, 4);
  if (det == 0) throw std::invalid_argument("family_count_vs_discriminant: degenerate form");
  // normalized discriminant (-1)^{m(m-1)/2} det; the sign is trivial for m = 4
  int sign = (q.m * (q.m - 1) / 2) % 2 == 0 ? 1 : f.neg(1);
  int disc = f.mul(det, sign);
  bool square = f.is_square(disc);

  FFEnumeration base = enumerate_linear_spaces_ff(q, 1);
  if (square) {
    if (base.count != 2LL * (f.n + 1) || base.components != 2)
      throw std::logic_error("family_count_vs_discriminant: enumeration disagrees with a split discriminant");
  } else {
    if (base.count != 0)
      throw std::logic_error("family_count_vs_discriminant: rulings found despite a non-square discriminant");
    Fq ext = Fq::quadratic(f.p);
    FFQuadraticForm lifted = FFQuadraticForm::from_gram(ext, 4, q.gram);
    FFEnumeration over_ext = enumerate_linear_spaces_ff(lifted, 1);
    if (over_ext.count != 2LL * (ext.n + 1) || over_ext.components != 2)
      throw std::logic_error("family_count_vs_discriminant: conjugate rulings missing over the quadratic extension");
  }
  return DiscriminantSplit{square ? 2 : 0, square};
}

}  // namespace epw
