#pragma once

#include <string>
#include <vector>

#include "epwlab/intmat.hpp"

namespace epw {

// Nondegenerate integral quadratic lattice given by a symmetric Gram matrix.
struct IntegerLattice {
  IntMat gram;
  std::string name;
  int rank() const { return gram.rows; }
};

IntegerLattice lattice_from_gram(IntMat gram, std::string name = "");

// Building blocks: the odd lattice diag(1^r, -1^s), the even hyperbolic
// plane, and the positive even unimodular rank-8 lattice.
IntegerLattice lattice_I(int r, int s);
IntegerLattice lattice_U();
IntegerLattice lattice_E8();

// L(m): same module, bilinear form scaled by m (m != 0).
IntegerLattice rescale(const IntegerLattice& l, long m);
IntegerLattice direct_sum(const std::vector<IntegerLattice>& parts, std::string name = "");

// Catalog parser for expressions like "U", "E8(-1)", "I_{2,0}(2)",
// "E8(-1) + E8(-1) + U + U + U + U", plus the named lattices
// "Gamma4", "Gamma6", "Lambda". Throws invalid_argument on malformed input.
IntegerLattice make_lattice(const std::string& expr);

struct LatticeInvariants {
  int rank = 0;
  int sig_pos = 0;
  int sig_neg = 0;
  bool even = false;       // x.x in 2Z for all x, i.e. even Gram diagonal
  bool unimodular = false;
  BigInt det;
  std::vector<BigInt> discriminant;  // invariant factors > 1 of the discriminant group

  bool operator==(const LatticeInvariants&) const = default;
};
LatticeInvariants invariants(const IntegerLattice& l);

// x.y == y.y (mod 2) for every y; tested on a basis, which suffices since
// both sides are linear resp. quadratic mod 2.
bool is_characteristic(const std::vector<BigInt>& x, const IntegerLattice& l);

// g (rows = images of basis vectors) must satisfy g G g^T = G; returns
// whether g acts trivially on the discriminant group, i.e. whether
// G^{-1} (g - 1) is integral. Throws invalid_argument if g is not an
// isometry.
bool stable_orthogonal_member(const IntMat& g, const IntegerLattice& l);

// The rank-2 embedding of diag(2,2) into the degree-n middle cohomology
// lattice (n = 4 or 6) with its orthogonal complement and all the checks
// that identify the complement.
struct EmbeddingReport {
  int n = 0;
  IntegerLattice ambient;
  std::vector<BigInt> e1, e2;
  IntMat pair_gram;                 // 2x2 Gram of (e1, e2)
  bool pair_gram_ok = false;        // equals diag(2,2)
  bool characteristic_checked = false;  // n = 4 only
  bool characteristic_ok = false;       // e1 + e2 characteristic
  IntMat complement;                // rows: saturated basis of <e1,e2>^perp
  LatticeInvariants complement_invariants;
  LatticeInvariants target_invariants;   // Lambda (n=4) or Lambda(-1) (n=6)
  bool complement_matches_target = false;
  bool primitive_embedding = false;  // Smith form of the assembled basis is (1,...,1,2,2)
  bool explicit_isometry = false;    // n = 6: a hand-built basis realizes the target Gram
  std::string uniqueness_note;
};
EmbeddingReport gm_embedding_report(int n);

// Hodge diamond of a smooth variety from the six-case table, with internal
// symmetry and Euler-characteristic checks.
struct HodgeDiamond {
  int n = 0;
  std::vector<std::vector<int>> h;  // h[p][q]

  int betti(int k) const;
  long euler() const;
};
HodgeDiamond hodge_numerology(int n);

}  // namespace epw
