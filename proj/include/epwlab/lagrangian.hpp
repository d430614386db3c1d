#pragma once

#include <optional>
#include <string>

#include "epwlab/exterior.hpp"
#include "epwlab/matrix.hpp"
#include "epwlab/rng.hpp"

namespace epw {

// A Lagrangian datum: a 10-dimensional omega-isotropic subspace of grade 3,
// optionally together with a marked hyperplane (as the covector cutting it)
// and generation provenance. Rows of A are kept in canonical echelon form.
struct LagrangianData {
  Mat A;  // 10 x 20
  std::optional<Vec> v5;  // covector f, V5 = ker f
  uint64_t seed = 0;
  std::string generator;
  std::optional<int> ell;          // dim(A ∩ ^3 V5), cached when v5 is present
  std::optional<Vec> plant_v;      // planted degeneracy point, if any
  std::optional<Mat> plant_u3;     // planted 3-space (3x6 rows), if any
};

struct LagrangianCheck {
  bool ok = false;
  int dim = 0;
  int bad_i = -1, bad_j = -1;  // offending row pair when isotropy fails
};
LagrangianCheck is_lagrangian(const Mat& a_rows);

// dim(A ∩ ^3 ker f).
int ell_of(const Mat& A, const Vec& f);

// Graph construction over the splitting ^3V6 = ^3V5 ⊕ e6^(^2V5), V5 = <e1..e5>:
// A = { a + q~(a) } with the symmetric matrix q acting through the volume
// pairing of ^3V5 x ^2V5. dim(A ∩ ^3V5) = dim ker q.
LagrangianData from_graph(const Mat& q);

// Random symmetric 10x10 with prescribed kernel dimension.
Mat random_symmetric_with_kernel(SplitMix64& rng, int kernel_dim);

// Randomized completion of an isotropic subspace to a Lagrangian one.
Mat extend_isotropic_to_lagrangian(const Mat& s, SplitMix64& rng);

// Heuristic search for a decomposable (pure wedge) vector of A: inspects the
// echelon basis, then random pencils inside A, locating parameters where the
// wedge map degenerates. A hit is verified exactly; a miss proves nothing.
struct DecomposableSearch {
  std::optional<KVector> found;
  int budget = 0;
  int trials_used = 0;
};
DecomposableSearch find_decomposable(const Mat& A, int budget, SplitMix64& rng);

// Annihilator of A inside grade-3 covectors (coordinates in the dual basis);
// Lagrangian for the dual form, which has the same Gram matrix.
Mat dual_lagrangian(const Mat& A);

// Presentation of the symplectic quotient B^⊥/B for isotropic B:
// `complement` rows lift a basis, omega_bar is the induced (nondegenerate)
// form on them.
struct SymplecticReduction {
  Mat b;           // the isotropic rows (echelon)
  Mat complement;  // (20 - 2 dim B) x 20
  Mat omega_bar;
};
SymplecticReduction symplectic_reduction(const Mat& b);

// Coordinates of the image of span(rows) in B^⊥/B w.r.t. the complement
// basis; rows must lie in B^⊥.
Mat reduce_subspace(const SymplecticReduction& red, const Mat& rows);

struct ReducedLagrangian {
  SymplecticReduction space;
  Mat a_bar;  // Lagrangian in omega_bar
};
ReducedLagrangian isotropic_reduction(const Mat& A, const Mat& B);

// The pencil of Lagrangians through B = A1 ∩ A2 (codimension 2 in each):
// A(t) = B + <x(t), y(t)> with x(t) = x0 + t x1 running through the reduced
// plane of A1 and y(t) the unique omega-orthogonal direction in the reduced
// plane of A2. The affine chart is t ∈ Q; infinity is the pair (x1, y1).
struct LagrangianPencil {
  Mat b;  // 8 x 20
  Vec x0, x1, y0, y1;  // grade-3 coordinate paths, degree 1 in t

  Mat at(const Scalar& t) const;
  Mat at_infinity() const;
};
LagrangianPencil lagrangian_pencil(const Mat& a1, const Mat& a2);

// Seed-driven generators used by the CLI and the test harness.
LagrangianData generate_graph_data(uint64_t seed, int ell);
LagrangianData generate_planted_y2(uint64_t seed, const Vec& v);
LagrangianData generate_planted_z1(uint64_t seed, const Mat& u3);

}  // namespace epw
