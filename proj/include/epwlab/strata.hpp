#pragma once

#include <vector>

#include "epwlab/exterior.hpp"
#include "epwlab/lagrangian.hpp"
#include "epwlab/polynomial.hpp"
#include "epwlab/rng.hpp"

namespace epw {

// Pointwise degeneracy strata of a Lagrangian A ⊂ grade 3: for a point v of
// P(V6) the Y-stratum is dim(A ∩ v∧(grade 2)); for a hyperplane ker f it is
// dim(A ∩ ^3 ker f); for a 3-space U3 it is dim(A ∩ (^2 U3)∧V6). All three
// are rank conditions, computed exactly.

enum class StratumKind { Y, Ydual, Z };

struct StratumReport {
  StratumKind kind = StratumKind::Y;
  Vec point;    // v (Y) or the covector f (Ydual); empty for Z
  Mat u3;       // 3x6 row basis for Z; empty otherwise
  int ell = 0;  // dimension of the intersection below
  Mat witness;  // ell x 20 canonical row basis of the intersection with A
  // ell above the ceiling seen off degenerate inputs (3 for Y/Ydual, 4 for Z).
  bool degenerate = false;
};

StratumReport y_stratum(const Mat& a, const Vec& v);
StratumReport y_dual_stratum(const Mat& a, const Vec& f);
StratumReport z_stratum(const Mat& a, const Mat& u3);

// ---------------------------------------------------------------------------
// Degree probes. Restricting the degeneracy matrix to a line of parameters
// turns each stratum condition into a determinantal equation in t; the common
// divisor of several random maximal minors is the restriction of the locus
// equation to the line (individual minors carry extraneous factors, but those
// differ between row choices).

enum class ProbeKind { Y, Ydual, Z };

struct DegreeProbeResult {
  ProbeKind which = ProbeKind::Y;
  Mat line;          // 2x6 rows (start, direction) for Y/Ydual; 4x6 for Z
  UniPoly equation;  // monic gcd of the sampled maximal minors
  int degree = 0;
  int minors_used = 0;
  int retries = 0;  // line resamples plus gcd-instability rounds
};

// Degeneracy matrix along the line, entries polynomials in t. Y and Ydual
// give 15 x dim A with degree <= 1 entries (v(t)∧a, resp. contraction by
// f(t)); Z gives 18 x dim A from double contractions against a degree <= 1
// basis of the annihilator of U3(t) = <u1, u2, u3 + t u4>.
PolyMat degeneracy_line_matrix(const Mat& a, ProbeKind which, const Mat& line);

// Probe along a caller-supplied line (throws if the whole line sits inside
// the locus) or along random lines (resampled when stuck in the locus).
DegreeProbeResult degree_probe_line(const Mat& a, ProbeKind which,
                                    const Mat& line, SplitMix64& rng);
DegreeProbeResult degree_probe(const Mat& a, ProbeKind which, SplitMix64& rng);

// ---------------------------------------------------------------------------
// The kernel locus attached to a marked hyperplane: every representative a of
// A ∩ ^3 V5 has a 5x5 skew form whose kernel line v0 satisfies
// a ∈ v0∧(^2 V5), so v0 lands back in the Y-stratum of A. For a pencil of
// representatives the kernel lines sweep a conic (never a line): the sampled
// points are checked to span a plane, to lie on a unique conic there, and to
// contain no three collinear points.

struct KernelLocusPoint {
  KVector a;  // representative of A ∩ ^3 V5, grade 3
  Vec v0;     // kernel line of its skew form, in V6 coordinates
};

struct KernelLocusResult {
  int ell = 0;  // dim(A ∩ ^3 V5)
  std::vector<KernelLocusPoint> points;
  bool veronese_checked = false;  // the conic certificate ran (ell >= 2)
};

KernelLocusResult kernel_locus(const Mat& a, const Vec& f);

// dim(A ∩ (^2 U3)∧V5) for U3 inside the marked hyperplane V5 = ker f.
int isotropic_locus_membership(const Mat& a, const Vec& f, const Mat& u3);

// Samples of the fiber over a marked hyperplane with dim(A ∩ ^3 V5) = 1:
// the 3-spaces U3 ⊂ V5 isotropic for the skew form of the generator a0. Each
// sample passes the membership test above; the family is three-dimensional,
// certified by the tangent-direction count at the first sample.
struct FiberSamples {
  KVector a0;
  std::vector<Mat> u3;  // 3x6 canonical rows, inside ker f
  int tangent_dim = 0;
};

FiberSamples prz2_fiber_samples(const Mat& a, const Vec& f, int count,
                                SplitMix64& rng);

// ---------------------------------------------------------------------------
// Contact hyperplanes of a doubly-degenerate point: for v with Y-stratum 2
// and witness pencil v∧ξ1, v∧ξ2, each parameter gives the covector
// f = v∧ξ∧ξ (grade 5 read as a covector). The triple (a = v∧ξ, v, f) is a
// compatible hat point: a ∈ A, v∧a = 0, f(v) = 0 and a ∈ ^3 ker f.

struct HatPoint {
  KVector a;  // grade 3
  KVector v;  // grade 1
  Vec f;      // covector, V5 = ker f
};

// Throws std::runtime_error when any hat-point condition fails.
void validate_hat_point(const HatPoint& h, const Mat& a_basis);

struct ContactResult {
  std::vector<HatPoint> hats;
  int skipped = 0;  // parameters where v∧ξ∧ξ degenerated to zero
};

ContactResult contact_hyperplanes(const Mat& a, const Vec& v);

// ---------------------------------------------------------------------------
// Joint stratum witness: when v has Y-stratum >= 1 for both end Lagrangians
// of a pencil but misses the base (B ∩ v∧(grade 2) = 0), the space
// B + <a1, a2> built from the two witnesses is itself a member of the pencil
// and sees v with Y-stratum >= 2. The parameter is located exactly.

struct JointWitness {
  bool at_infinity = false;
  Scalar t;              // pencil parameter, valid when !at_infinity
  Mat member;            // 10x20 canonical rows of the located member
  StratumReport report;  // its Y-stratum at v, ell >= 2
};

JointWitness joint_stratum_witness(const LagrangianPencil& pencil, const Vec& v);

}  // namespace epw
