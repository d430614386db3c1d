#pragma once

#include <string>
#include <vector>

namespace epw {

// Integer highest weight for a general linear group block, listed weakly decreasing.
using GLWeight = std::vector<long>;

bool weakly_decreasing(const GLWeight& w);

// Dimension of the irreducible GL_n representation with highest weight w,
// by the Weyl product formula  prod_{p<q} (w_p - w_q + q - p) / (q - p).
long weyl_dimension(const GLWeight& w, int n);

// A Schur-functor sheaf on the relative Grassmannian Gr(sub_rank, E) for a
// rank-ambient_rank bundle E: a weight on the tautological subbundle U, a weight
// on the quotient Q, an external multiplicity factor carried as a labeled
// dimension (never expanded), and a power of the auxiliary line bundle L.
struct SheafTerm {
  int sub_rank = 0;
  int ambient_rank = 0;
  GLWeight sub_weight;       // length sub_rank
  GLWeight quotient_weight;  // length ambient_rank - sub_rank
  long multiplicity = 1;     // dimension of the external factor
  std::string label;         // e.g. "O", "L^2 * S(3,1,0)(U)"
  int l_power = 0;
};

// The fiberwise Serre dual (dualize and tensor by the relative canonical bundle
// det(U)^{m-k} * det(Q)^{-k}).  Pushing the dual forward lands in complementary
// degree with the negated, reversed output weight; used as a self-check.
SheafTerm serre_dual(const SheafTerm& term);

// Derived pushforward of a single Schur term down the Grassmannian fibration:
// either everything vanishes or exactly one degree survives.
struct BottResult {
  bool vanishes = true;
  int degree = -1;
  GLWeight weight;  // highest weight on E, length ambient_rank
};

// Bott's algorithm.  Form w = (quotient weight | sub weight), add
// rho = (m-1, ..., 0); a repeated entry kills all cohomology, otherwise the
// surviving degree is the number of strictly increasing pairs and the output
// weight is the descending sort minus rho.
BottResult bott_pushforward(const SheafTerm& term);

// One row of a pushforward report: a Koszul term together with its surviving
// derived pushforward (if any) and the rank of that pushforward over the base.
struct PushforwardLine {
  int koszul_index = 0;  // 0 = the structure-sheaf end of the resolution
  std::string label;
  int l_power = 0;
  long multiplicity = 1;
  BottResult bott;
  long rank = 0;  // multiplicity * weyl_dimension(bott.weight) when it survives
};

// Pushforward of the Koszul resolution of a relative family of k-planes in the
// quadric fibration cut out of P(E), assembled degree by degree.
struct PropReport {
  int m = 0;                           // rank of E
  std::vector<PushforwardLine> lines;  // one per Koszul constituent
  std::string assembled;               // the pushforward, as a direct-sum label
  bool has_extension = false;   // a two-term complex survives and its cokernel
                                // is torsion; reported at dimension level only
  long generic_rank = 0;        // alternating sum of ranks = rank of the pushforward
  bool matches_expected = true; // checked against the frozen table (throws on mismatch)
};

// Lines on the fibers of a quadric bundle in P(E), rank m >= 3: Koszul terms
// O, L*Sym2(U), L^2*Sym2(U)*det(U), L^3*det(U)^3 on Gr(2,E).
PropReport verify_prop_a1(int m);

// Planes on the fibers, rank m >= 4: the seven-step Koszul resolution on
// Gr(3,E) whose middle stage splits as S(4,1,1) + S(3,3,0).
PropReport verify_prop_a2(int m);

// Sheaf cohomology on P^5 of (Schur functor of the rank-5 quotient) twisted by
// O(t), with an external multiplicity: at most one degree survives.
struct P5Cohomology {
  bool vanishes = true;
  int degree = -1;
  long dimension = 0;
};
P5Cohomology p5_cohomology(const GLWeight& quotient_weight, long twist, long multiplicity);

// Cohomology of O(t) on the double-degeneracy surface of a generic sextic,
// assembled from the four-term ambient resolution for t = 0..6.
struct SurfaceCohomologyRow {
  int t = 0;
  long h0 = 0, h1 = 0, h2 = 0;
  bool euler_consistent = false;  // h0 - h1 + h2 equals the alternating term sum
  bool degenerate = false;        // no spectral differential is even possible
  bool forced = false;            // ranks pinned by vanishing outside degrees 0..2
};
struct SurfaceCohomologyTable {
  std::vector<SurfaceCohomologyRow> rows;
  bool matches_expected = true;
};
SurfaceCohomologyTable y2_cohomology_table();

// The two ideal-sheaf vanishings that keep the surface (and its hyperplane
// curve sections) out of any quadric: H^0 of the twist-2 ideal and H^1 of the
// twist-1 ideal, both recomputed from the truncated resolution.
struct IdealVanishingReport {
  long h0_ideal_twist2 = -1;
  long h1_ideal_twist1 = -1;
  long h2_ideal_twist2 = -1;           // the one surviving group, for the record
  long quadric_sections_ambient = 0;   // h^0 of O(2) on P^5
  long quadric_sections_on_surface = 0;
  bool quadrics_restrict_isomorphically = false;
  bool curve_section_in_no_quadric = false;
};
IdealVanishingReport quadric_section_vanishing();

}  // namespace epw
