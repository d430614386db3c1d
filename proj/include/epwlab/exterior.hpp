#pragma once

#include <stdexcept>
#include <vector>

#include "epwlab/matrix.hpp"

namespace epw {

// Exterior algebra of a fixed 6-dimensional space. Basis of grade k is the
// ascending k-subsets of {0..5} in lexicographic order; all signs come from
// sort parities. Index 0..5 corresponds to e1..e6 of the write-ups.
inline constexpr int kDimV6 = 6;
int binom6(int k);                         // 1 6 15 20 15 6 1
const std::vector<unsigned>& grade_masks(int k);  // bitmask of each basis subset
int mask_to_index(int k, unsigned mask);

struct KVector {
  int grade = 0;
  Vec coords;  // length binom6(grade)

  static KVector zero(int grade);
  static KVector basis(int i);  // e_i, grade 1
  static KVector from_coords(int grade, Vec c);

  bool is_zero() const { return vec_is_zero(coords); }
  bool operator==(const KVector&) const = default;
};

KVector operator+(const KVector& a, const KVector& b);
KVector operator-(const KVector& a, const KVector& b);
KVector operator*(const Scalar& s, const KVector& a);

KVector wedge(const KVector& a, const KVector& b);  // throws on grade overflow

// Coefficient on e1^...^e6 of a grade-6 vector.
Scalar top_coefficient(const KVector& w);

// omega(a,b) = coefficient of a^b on the volume form; grade 3 only.
Scalar symplectic_form(const KVector& a, const KVector& b);
const Mat& omega_matrix();  // 20x20 Gram of omega in the lex basis

// Matrix of a |-> v^a from grade 3 (dim 20) to grade 4 (dim 15); its kernel
// is exactly v ^ (grade 2), of dimension 10.
Mat wedge_map_matrix(const KVector& v);

// Interior product with a covector (6 coefficients against the dual basis).
KVector contract(const Vec& f, const KVector& a);

// Identification of grade 5 with covectors: w |-> (u |-> top_coefficient(u^w)).
Vec covector_of_5vector(const KVector& w);

// Skew 6x6 matrix of a grade-2 vector; rank is 0, 2, 4 or 6.
Mat two_form_matrix(const KVector& xi);

// kdim = dim{v : v^a = 0} for a trivector; 3 iff a is a pure wedge,
// 1 iff a = v0^beta with beta of rank 4, 0 otherwise.
struct DecompRank {
  int kdim = 0;
  bool decomposable = false;
  Mat kernel;  // kdim x 6, canonical rows
};
DecompRank decomposable_rank(const KVector& a);

// 5x5 skew Gram of the 2-form kappa_a(u,w) = [u^w^a / vol(V5)] for a
// trivector a of the 5-space spanned by the rows of v5basis (5x6).
struct SkewForm5 {
  Mat gram;  // 5x5, coordinates relative to the given basis of V5
};
SkewForm5 two_form_of_trivector(const KVector& a, const Mat& v5basis);

// Kernel vector of a rank-4 skew 5x5 matrix, entries quadratic in the input
// (signed 4x4 Pfaffians). Zero vector iff rank <= 2.
Vec pfaffian_adjoint(const Mat& k5);

enum class InducedKind { Fv, WU3, CubeV5, U3V5, VWedge2V5 };

struct InducedSubspace {
  InducedKind kind;
  Mat span;  // rows in grade-3 coordinates, canonical echelon form
  int dim() const { return span.rows; }
};

InducedSubspace induced_fv(const KVector& v);                      // v^(grade 2), dim 10
InducedSubspace induced_wu3(const Mat& u3);                        // (^2 U3)^V6, dim 10
InducedSubspace induced_cube_v5(const Mat& v5);                    // ^3 V5, dim 10
InducedSubspace induced_u3_v5(const Mat& u3, const Mat& v5);       // (^2 U3)^V5, dim 7
InducedSubspace induced_v_wedge2_v5(const KVector& v, const Mat& v5);  // v^(^2 V5), dim 6

// Canonical basis (rows) of the hyperplane ker f.
Mat hyperplane_basis(const Vec& f);

}  // namespace epw
