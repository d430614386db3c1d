#include "doctest.h"

#include "epwlab/exterior.hpp"
#include "epwlab/rng.hpp"

using namespace epw;

namespace {

KVector random_kvector(SplitMix64& rng, int grade, int lo = -10, int hi = 10) {
  Vec c(binom6(grade));
  for (auto& x : c) x = Scalar(rng.uniform_int(lo, hi));
  return KVector::from_coords(grade, c);
}

KVector basis_wedge(std::initializer_list<int> idx) {
  KVector acc = KVector::from_coords(0, {Scalar(1)});
  for (int i : idx) acc = wedge(acc, KVector::basis(i));
  return acc;
}

Mat std_v5() {
  Mat m(5, 6);
  for (int i = 0; i < 5; ++i) m.at(i, i) = 1;
  return m;
}

}  // namespace

TEST_SUITE("exterior") {

TEST_CASE("basis indexing round-trips") {
  for (int k = 0; k <= 6; ++k) {
    const auto& masks = grade_masks(k);
    CHECK(static_cast<int>(masks.size()) == binom6(k));
    for (size_t i = 0; i < masks.size(); ++i)
      CHECK(mask_to_index(k, masks[i]) == static_cast<int>(i));
    // lexicographic: first subset is {0..k-1}, last is {6-k..5}
    if (k > 0) {
      CHECK(masks.front() == (1u << k) - 1);
      CHECK(masks.back() == ((1u << k) - 1) << (6 - k));
    }
  }
}

TEST_CASE("wedge basics: alternation, signs, graded commutation") {
  KVector e1 = KVector::basis(0), e2 = KVector::basis(1);
  KVector e12 = wedge(e1, e2);
  CHECK(e12.coords[mask_to_index(2, 0b11)] == 1);
  CHECK(wedge(e1, e1).is_zero());
  CHECK(top_coefficient(wedge(basis_wedge({0, 1, 2}), basis_wedge({3, 4, 5}))) == 1);

  SplitMix64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    int ga = static_cast<int>(rng.next() % 4);
    int gb = static_cast<int>(rng.next() % (7 - ga > 4 ? 4 : 7 - ga));
    KVector a = random_kvector(rng, ga), b = random_kvector(rng, gb);
    KVector ab = wedge(a, b), ba = wedge(b, a);
    // a^b = (-1)^{|a||b|} b^a
    if ((ga * gb) % 2 == 1) ba = Scalar(-1) * ba;
    CHECK(ab == ba);
  }
  // associativity across grades
  for (int trial = 0; trial < 25; ++trial) {
    KVector a = random_kvector(rng, 1), b = random_kvector(rng, 2), c = random_kvector(rng, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
  CHECK_THROWS(wedge(random_kvector(rng, 4), random_kvector(rng, 3)));
}

TEST_CASE("symplectic form: values, antisymmetry, nondegeneracy, Lagrangian cube") {
  CHECK(symplectic_form(basis_wedge({0, 1, 2}), basis_wedge({3, 4, 5})) == 1);
  CHECK(symplectic_form(basis_wedge({3, 4, 5}), basis_wedge({0, 1, 2})) == -1);
  SplitMix64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    KVector a = random_kvector(rng, 3), b = random_kvector(rng, 3);
    CHECK(symplectic_form(a, a) == 0);
    CHECK(symplectic_form(a, b) == -symplectic_form(b, a));
    CHECK(symplectic_form(a, b) == dot(a.coords, mat_vec(omega_matrix(), b.coords)));
  }
  CHECK(det(omega_matrix()) != 0);
  // omega vanishes identically on ^3 of the hyperplane <e0..e4>
  InducedSubspace cube = induced_cube_v5(std_v5());
  for (int i = 0; i < cube.span.rows; ++i)
    for (int j = 0; j < cube.span.rows; ++j)
      CHECK(symplectic_form(KVector::from_coords(3, cube.span.row(i)),
                            KVector::from_coords(3, cube.span.row(j))) == 0);
}

TEST_CASE("wedge map matrix: coordinate kernel and 50 random kernels") {
  KVector e1 = KVector::basis(0);
  Mat m = wedge_map_matrix(e1);
  RankKernel rk = rank_kernel(m);
  CHECK(rk.kernel.rows == 10);
  CHECK(row_space(rk.kernel) == induced_fv(e1).span);
  // kernel = all coordinate trivectors containing index 0
  const auto& m3 = grade_masks(3);
  for (int i = 0; i < 20; ++i) {
    Vec e(20, Scalar(0));
    e[i] = 1;
    bool contains0 = (m3[i] & 1u) != 0;
    CHECK(span_contains(rk.kernel, e) == contains0);
  }
  SplitMix64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    KVector v = random_kvector(rng, 1);
    if (v.is_zero()) continue;
    CHECK(rank_kernel(wedge_map_matrix(v)).kernel.rows == 10);
  }
}

TEST_CASE("wedge map entries are linear along a line of vectors") {
  SplitMix64 rng(24);
  KVector v0 = random_kvector(rng, 1), v1 = random_kvector(rng, 1);
  Mat m0 = wedge_map_matrix(v0);
  Mat m1 = wedge_map_matrix(v1);
  for (int t : {2, 5, -3}) {
    KVector vt = v0 + Scalar(t) * v1;
    CHECK(wedge_map_matrix(vt) == m0 + Scalar(t) * m1);
  }
}

TEST_CASE("a ∈ F_v iff v∧a = 0") {
  SplitMix64 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    KVector v = random_kvector(rng, 1);
    if (v.is_zero()) continue;
    InducedSubspace fv = induced_fv(v);
    KVector inside = wedge(v, random_kvector(rng, 2));
    CHECK(span_contains(fv.span, inside.coords));
    CHECK(wedge(v, inside).is_zero());
    KVector outside = random_kvector(rng, 3);
    CHECK(span_contains(fv.span, outside.coords) == wedge(v, outside).is_zero());
  }
}

TEST_CASE("decomposable rank trichotomy") {
  auto d3 = decomposable_rank(basis_wedge({0, 1, 2}));
  CHECK(d3.kdim == 3);
  CHECK(d3.decomposable);
  auto d0 = decomposable_rank(basis_wedge({0, 1, 2}) + basis_wedge({3, 4, 5}));
  CHECK(d0.kdim == 0);
  CHECK(!d0.decomposable);
  KVector mixed = wedge(KVector::basis(0), wedge(KVector::basis(1), KVector::basis(2)) +
                                               wedge(KVector::basis(3), KVector::basis(4)));
  auto d1 = decomposable_rank(mixed);
  CHECK(d1.kdim == 1);
  CHECK(!d1.decomposable);
  Vec e0(6, Scalar(0));
  e0[0] = 1;
  CHECK(span_contains(d1.kernel, e0));
  CHECK(d1.kernel.rows == 1);

  SplitMix64 rng(26);
  for (int trial = 0; trial < 40; ++trial) {
    KVector a = random_kvector(rng, 3);
    if (a.is_zero()) continue;
    int kd = decomposable_rank(a).kdim;
    CHECK((kd == 0 || kd == 1 || kd == 3));
    // pure wedges of random independent vectors are decomposable
    KVector u1 = random_kvector(rng, 1), u2 = random_kvector(rng, 1), u3 = random_kvector(rng, 1);
    KVector pure = wedge(u1, wedge(u2, u3));
    if (!pure.is_zero()) CHECK(decomposable_rank(pure).kdim == 3);
  }
}

TEST_CASE("two-form of a trivector in a hyperplane") {
  Mat v5 = std_v5();
  KVector rank4 = wedge(KVector::basis(0), wedge(KVector::basis(1), KVector::basis(2)) +
                                               wedge(KVector::basis(3), KVector::basis(4)));
  SkewForm5 k4 = two_form_of_trivector(rank4, v5);
  CHECK(rank_of(k4.gram) == 4);
  CHECK(k4.gram + k4.gram.transpose() == Mat(5, 5));
  RankKernel rk = rank_kernel(k4.gram);
  CHECK(rk.kernel.rows == 1);
  Vec e0(5, Scalar(0));
  e0[0] = 1;
  CHECK(span_contains(rk.kernel, e0));

  SkewForm5 k2 = two_form_of_trivector(basis_wedge({0, 1, 2}), v5);
  CHECK(rank_of(k2.gram) == 2);

  CHECK_THROWS(two_form_of_trivector(basis_wedge({0, 1, 5}), v5));  // not in the hyperplane

  // kernel of kappa_a equals {v in V5 : v^a = 0}, on random trivectors of V5
  SplitMix64 rng(27);
  InducedSubspace cube = induced_cube_v5(v5);
  for (int trial = 0; trial < 30; ++trial) {
    Vec coef = random_vec(rng, 10, -6, 6);
    KVector a = KVector::zero(3);
    for (int i = 0; i < 10; ++i)
      a = a + Scalar(coef[i]) * KVector::from_coords(3, cube.span.row(i));
    if (a.is_zero()) continue;
    SkewForm5 ka = two_form_of_trivector(a, v5);
    RankKernel kk = rank_kernel(ka.gram);
    Mat wedge_kernel = decomposable_rank(a).kernel;  // inside V6, but lands in V5
    // lift kappa kernel rows (coords in the v5 basis) into V6 coordinates
    Mat lifted(kk.kernel.rows, 6);
    for (int i = 0; i < kk.kernel.rows; ++i) lifted.set_row(i, vec_mat(kk.kernel.row(i), v5));
    CHECK(row_space(lifted) == wedge_kernel);
    // rank-4 pfaffian adjoint spans the kernel
    if (rank_of(ka.gram) == 4) {
      Vec pa = pfaffian_adjoint(ka.gram);
      CHECK(!vec_is_zero(pa));
      CHECK(vec_is_zero(mat_vec(ka.gram, pa)));
    }
  }
}

TEST_CASE("induced subspaces have the stated dimensions") {
  Mat v5 = std_v5();
  Mat u3(3, 6);
  u3.at(0, 0) = 1;
  u3.at(1, 1) = 1;
  u3.at(2, 2) = 1;
  CHECK(induced_fv(KVector::basis(0)).dim() == 10);
  CHECK(induced_wu3(u3).dim() == 10);
  CHECK(induced_cube_v5(v5).dim() == 10);
  CHECK(induced_u3_v5(u3, v5).dim() == 7);
  CHECK(induced_v_wedge2_v5(KVector::basis(0), v5).dim() == 6);

  // ^2U3^V5 sits inside ^2U3^V6 with codimension 3
  CHECK(span_contains_all(induced_wu3(u3).span, induced_u3_v5(u3, v5).span));

  SplitMix64 rng(28);
  for (int trial = 0; trial < 20; ++trial) {
    Mat ru3 = random_mat(rng, 3, 6, -5, 5);
    if (rank_of(ru3) != 3) continue;
    CHECK(induced_wu3(ru3).dim() == 10);
    // W_{U3} is isotropic (hence Lagrangian at dim 10)
    Mat span = induced_wu3(ru3).span;
    for (int i = 0; i < span.rows; ++i)
      for (int j = i; j < span.rows; ++j)
        CHECK(symplectic_form(KVector::from_coords(3, span.row(i)),
                              KVector::from_coords(3, span.row(j))) == 0);
  }
  // F_v is isotropic for random v
  for (int trial = 0; trial < 10; ++trial) {
    KVector v = random_kvector(rng, 1);
    if (v.is_zero()) continue;
    Mat span = induced_fv(v).span;
    for (int i = 0; i < span.rows; ++i)
      for (int j = i; j < span.rows; ++j)
        CHECK(symplectic_form(KVector::from_coords(3, span.row(i)),
                              KVector::from_coords(3, span.row(j))) == 0);
  }

  CHECK_THROWS(induced_u3_v5(Mat(3, 6), v5));  // degenerate U3
  Mat u3_out(3, 6);
  u3_out.at(0, 0) = 1;
  u3_out.at(1, 1) = 1;
  u3_out.at(2, 5) = 1;  // contains e5, not inside V5
  CHECK_THROWS(induced_u3_v5(u3_out, v5));
  CHECK_THROWS(induced_v_wedge2_v5(KVector::basis(5), v5));
}

TEST_CASE("grade-5 / covector identification") {
  // e_i contracted into the functional of w: f(u) = [u ^ w]
  SplitMix64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    KVector w = random_kvector(rng, 5);
    Vec f = covector_of_5vector(w);
    for (int i = 0; i < 6; ++i)
      CHECK(f[i] == top_coefficient(wedge(KVector::basis(i), w)));
    // v ^ xi ^ xi maps to a functional vanishing on v
    KVector v = random_kvector(rng, 1);
    KVector xi = random_kvector(rng, 2);
    if (v.is_zero()) continue;
    KVector vxx = wedge(v, wedge(xi, xi));
    Vec fv = covector_of_5vector(vxx);
    CHECK(dot(fv, v.coords) == 0);
  }
}

TEST_CASE("contraction is a graded derivation pairing with wedge") {
  SplitMix64 rng(30);
  for (int trial = 0; trial < 20; ++trial) {
    Vec f = random_vec(rng, 6, -5, 5);
    KVector a = random_kvector(rng, 1), b = random_kvector(rng, 2);
    // iota_f(a^b) = f(a) b - a ^ iota_f b
    KVector lhs = contract(f, wedge(a, b));
    KVector rhs = dot(f, a.coords) * b - wedge(a, contract(f, b));
    CHECK(lhs == rhs);
    // iota_f iota_f = 0
    KVector c = random_kvector(rng, 3);
    CHECK(contract(f, contract(f, c)).is_zero());
  }
  // coordinate check: iota_{e0*} e_{012} = e_{12}
  Vec f(6, Scalar(0));
  f[0] = 1;
  KVector got = contract(f, basis_wedge({0, 1, 2}));
  KVector want = basis_wedge({1, 2});
  CHECK(got == want);
}

TEST_CASE("two_form_matrix rank classification") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    KVector xi = random_kvector(rng, 2);
    Mat b = two_form_matrix(xi);
    CHECK(b + b.transpose() == Mat(6, 6));
    int r = rank_of(b);
    CHECK(r % 2 == 0);
    // xi decomposable iff xi^xi = 0 iff rank <= 2
    CHECK((wedge(xi, xi).is_zero()) == (r <= 2));
  }
}

}  // TEST_SUITE
