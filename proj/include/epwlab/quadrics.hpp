#pragma once

#include <optional>
#include <vector>

#include "epwlab/matrix.hpp"

namespace epw {

// Exact quadratic form on an m-dimensional rational vector space, given by a
// symmetric Gram matrix. The quadric lives in P^{m-1}.
struct QuadraticForm {
  Mat gram;
  int m = 0;

  static QuadraticForm from_gram(const Mat& g);  // throws unless g is symmetric
};

// dim ker(gram); rank + corank = m
int corank(const QuadraticForm& q);

// Closed-form dimension of the family of projective k-planes on a quadric of
// rank r in P^{m-1} (k = 1 lines, k = 2 planes). nullopt when no such plane
// exists: an isotropic (k+1)-subspace needs k+1 <= (m-r) + floor(r/2), and
// that gate overrides the formula value.
std::optional<int> hilbert_dimension(int m, int r, int k);

enum class FamilyStructure {
  Empty,
  SingleFamily,   // one irreducible family
  TwoFamilies,    // two families (disjoint or glued; see components)
  TwoSpaces,      // two dual 3-spaces meeting in a point
  DoubleFamily,   // one family carrying multiplicity 2
  DualPlane,      // all lines in a plane
};

struct FamilyDescriptor {
  int k = 0;
  FamilyStructure structure = FamilyStructure::Empty;
  int dim = -1;        // dimension of the parameter space (-1 when empty)
  int families = 0;    // irreducible pieces
  int components = 0;  // connected pieces
  bool from_table = false;  // true when pinned by a quoted case analysis
};

// Families of projective k-planes on a quadric of corank c in P^{m-1}. Cases
// from the fiber analyses are tabulated; everything else falls back to the
// dimension formula plus a parity-based connectedness rule.
FamilyDescriptor classify_linear_families(int m, int c, int k);

// Small finite field F_p or F_{p^2} with full lookup tables. Elements are
// integers 0..n-1; for degree 2 the element a + b*x maps to a + b*p, so F_p
// sits inside F_{p^2} with unchanged labels.
struct Fq {
  int p = 0;    // characteristic
  int deg = 1;  // 1 or 2
  int n = 0;    // p^deg
  std::vector<int> add_t, mul_t, neg_t, inv_t;

  static Fq prime(int p);
  static Fq quadratic(int p);  // F_{p^2}

  int add(int a, int b) const { return add_t[static_cast<size_t>(a * n + b)]; }
  int mul(int a, int b) const { return mul_t[static_cast<size_t>(a * n + b)]; }
  int neg(int a) const { return neg_t[static_cast<size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;  // throws on 0
  bool is_square(int a) const;
};

// Quadratic form over a small finite field; gram is m x m row-major with
// entries in [0, field.n).
struct FFQuadraticForm {
  Fq field;
  int m = 0;
  std::vector<int> gram;

  static FFQuadraticForm from_gram(const Fq& field, int m, std::vector<int> gram);
  int entry(int i, int j) const { return gram[static_cast<size_t>(i * m + j)]; }
};

// Gram matrix of the split form of rank r = m - c on an m-space: hyperbolic
// blocks, one square term when r is odd, then a zero block of size c.
std::vector<int> split_gram(int m, int c);

struct FFEnumeration {
  long long count = 0;
  // connected components of the incidence graph, or -1 when the pair graph
  // was skipped because the instance has too many planes
  int components = 0;
  std::vector<int> component_sizes;            // sorted ascending
  std::vector<std::vector<int>> planes;        // echelon bases, (k+1) x m
};

// Exhaustive list of (k+1)-dimensional totally isotropic subspaces over the
// field, as canonical reduced echelon bases. Two planes are adjacent in the
// incidence graph when their intersection dimension has the parity of k+1
// (the classical same-family criterion), or when it equals k and the
// subspaces are not maximal over an even-rank core (outside that split case
// a codimension-one meet spans a pencil gluing the family together); the
// graph components then match the geometric components.
FFEnumeration enumerate_linear_spaces_ff(const FFQuadraticForm& q, int k);

struct DiscriminantSplit {
  int families = 0;        // rulings defined over F_p: 2 or 0
  bool disc_square = false;
};

// Rulings of a smooth quadric surface over F_p: split (two P^1 families over
// F_p) exactly when the normalized discriminant is a square; otherwise the
// two rulings are Galois-conjugate and only appear over F_{p^2}. Both sides
// are verified against the enumeration.
DiscriminantSplit family_count_vs_discriminant(const FFQuadraticForm& q);

}  // namespace epw
