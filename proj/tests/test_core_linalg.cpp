#include "doctest.h"

#include "epwlab/intmat.hpp"
#include "epwlab/matrix.hpp"
#include "epwlab/modular.hpp"
#include "epwlab/polynomial.hpp"
#include "epwlab/rng.hpp"

using namespace epw;

namespace {

// independent determinant oracle: cofactor expansion, only sane for n <= 4
Scalar det_cofactor(const Mat& m) {
  int n = m.rows;
  if (n == 0) return Scalar(1);
  if (n == 1) return m.at(0, 0);
  Scalar acc(0);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    Mat sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Scalar term = m.at(0, j) * det_cofactor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

UniPoly det_poly_cofactor(const PolyMat& m) {
  int n = m.rows;
  if (n == 0) return UniPoly::constant(Scalar(1));
  if (n == 1) return m.at(0, 0);
  UniPoly acc = UniPoly::zero();
  for (int j = 0; j < n; ++j) {
    PolyMat sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    UniPoly term = m.at(0, j) * det_poly_cofactor(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

PolyMat random_poly_mat(SplitMix64& rng, int n, int deg) {
  PolyMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> cs;
      for (int d = 0; d <= deg; ++d) cs.emplace_back(rng.uniform_int(-5, 5));
      m.at(i, j) = UniPoly::from_coeffs(cs);
    }
  return m;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("scalar parse / print round trip") {
  CHECK(scalar_str(Scalar(-7, 2)) == "-7/2");
  CHECK(scalar_str(Scalar(4)) == "4");
  CHECK(*parse_scalar("-7/2") == Scalar(-7, 2));
  CHECK(*parse_scalar("6/4") == Scalar(3, 2));   // canonicalized
  CHECK(*parse_scalar("0/9") == Scalar(0));
  CHECK(!parse_scalar("").has_value());
  CHECK(!parse_scalar("1/0").has_value());
  CHECK(!parse_scalar("2/-3").has_value());
  CHECK(!parse_scalar("a").has_value());
  CHECK(!parse_scalar("1/2/3").has_value());
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Scalar q(rng.uniform_int(-999, 999), rng.uniform_int(1, 999));
    q.canonicalize();
    CHECK(*parse_scalar(scalar_str(q)) == q);
  }
}

TEST_CASE("rref is idempotent and rank matches kernel dimension") {
  SplitMix64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng.next() % 8);
    int c = 1 + static_cast<int>(rng.next() % 8);
    Mat m = random_mat(rng, r, c, -6, 6);
    Rref rr = rref(m);
    CHECK(rref(rr.mat).mat == rr.mat);
    RankKernel rk = rank_kernel(m);
    CHECK(rk.rank == rr.rank);
    CHECK(rk.kernel.rows == c - rr.rank);
    // kernel rows actually annihilate
    for (int i = 0; i < rk.kernel.rows; ++i)
      CHECK(vec_is_zero(mat_vec(m, rk.kernel.row(i))));
    CHECK(rank_of(rk.kernel) == rk.kernel.rows);
  }
}

TEST_CASE("determinant vs cofactor oracle, inverse, singularity") {
  SplitMix64 rng(2);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 4);
    Mat m = random_mat(rng, n, n, -7, 7);
    Scalar d = det(m);
    CHECK(d == det_cofactor(m));
    auto inv = inverse(m);
    if (d == 0) {
      CHECK(!inv.has_value());
      CHECK(rank_of(m) < n);
    } else {
      REQUIRE(inv.has_value());
      CHECK((*inv) * m == Mat::identity(n));
    }
  }
}

TEST_CASE("solve returns a solution exactly when consistent") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + static_cast<int>(rng.next() % 6);
    int c = 1 + static_cast<int>(rng.next() % 6);
    Mat A = random_mat(rng, r, c, -5, 5);
    Vec x0 = random_vec(rng, c, -5, 5);
    Vec b = mat_vec(A, x0);
    auto x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK(mat_vec(A, *x) == b);
    // random rhs: if solve succeeds it must be a genuine solution
    Vec b2 = random_vec(rng, r, -5, 5);
    auto x2 = solve(A, b2);
    if (x2.has_value()) CHECK(mat_vec(A, *x2) == b2);
  }
}

TEST_CASE("subspace intersection: dimension formula and membership oracle") {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng.next() % 6);
    Mat u = row_space(random_mat(rng, 1 + static_cast<int>(rng.next() % n), n, -4, 4));
    Mat v = row_space(random_mat(rng, 1 + static_cast<int>(rng.next() % n), n, -4, 4));
    Mat w = subspace_intersect(u, v);
    Mat s = subspace_sum(u, v);
    CHECK(w.rows + s.rows == u.rows + v.rows);  // dim(U∩V)+dim(U+V)=dimU+dimV
    for (int i = 0; i < w.rows; ++i) {
      CHECK(span_contains(u, w.row(i)));
      CHECK(span_contains(v, w.row(i)));
    }
    CHECK(subspace_intersect(v, u) == w);  // canonical form is symmetric
    CHECK(row_space(w) == w);
    // everything in U that lies in V must be in W
    for (int i = 0; i < u.rows; ++i)
      if (span_contains(v, u.row(i))) CHECK(span_contains(w, u.row(i)));
  }
}

TEST_CASE("coords_in_span reconstructs vectors") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5 + static_cast<int>(rng.next() % 4);
    Mat u = row_space(random_mat(rng, 3, n, -5, 5));
    Vec combo(u.cols, Scalar(0));
    for (int i = 0; i < u.rows; ++i)
      combo = vec_add(combo, vec_scale(Scalar(rng.uniform_int(-3, 3)), u.row(i)));
    auto c = coords_in_span(u, combo);
    REQUIRE(c.has_value());
    CHECK(vec_mat(*c, u) == combo);
  }
}

TEST_CASE("modular rank certifies against exact rank") {
  SplitMix64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    int r = 1 + static_cast<int>(rng.next() % 10);
    int c = 1 + static_cast<int>(rng.next() % 10);
    Mat m = random_mat(rng, r, c, -10, 10);
    if (trial % 3 == 0) {
      // plant rank deficiency: duplicate a row combination
      if (r >= 2) {
        Vec sum = vec_add(m.row(0), m.row(r - 1));
        m.set_row(r / 2, sum);
      }
    }
    ModularRankResult mr = modular_rank(m);
    CHECK(mr.certified);
    CHECK(mr.rank == rank_of(m));
  }
}

TEST_CASE("modular rank survives denominators divisible by a working prime") {
  Mat m(2, 2);
  m.at(0, 0) = Scalar(1, 2147483647);  // denominator kills the first prime
  m.at(0, 1) = Scalar(1);
  m.at(1, 0) = Scalar(3);
  m.at(1, 1) = Scalar(5);
  ModularRankResult mr = modular_rank(m);
  CHECK(mr.certified);
  CHECK(mr.rank == 2);
  CHECK(mr.primes[0] != 2147483647ull);
}

TEST_CASE("poly arithmetic, gcd, multiplicity") {
  UniPoly t = UniPoly::linear(Scalar(0), Scalar(1));
  UniPoly p = (t - UniPoly::constant(Scalar(1))) * (t - UniPoly::constant(Scalar(1))) *
              (t + UniPoly::constant(Scalar(3)));
  CHECK(p.degree() == 3);
  CHECK(root_multiplicity(p, Scalar(1)) == 2);
  CHECK(root_multiplicity(p, Scalar(-3)) == 1);
  CHECK(root_multiplicity(p, Scalar(7)) == 0);
  UniPoly g = poly_gcd(p, p.derivative());
  CHECK(g.degree() == 1);  // (t-1)
  CHECK(g.eval(Scalar(1)) == 0);

  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    // gcd(a*c, b*c) is divisible by c and divides both products
    auto rand_poly = [&](int deg) {
      std::vector<Scalar> cs;
      for (int i = 0; i <= deg; ++i) cs.emplace_back(rng.uniform_int(-4, 4));
      return UniPoly::from_coeffs(cs);
    };
    UniPoly a = rand_poly(3), b = rand_poly(3), c = rand_poly(2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    UniPoly g2 = poly_gcd(a * c, b * c);
    CHECK(poly_divmod(g2, c.monic()).second.is_zero());  // c | gcd(ac, bc)
    CHECK(g2.degree() == c.degree() + poly_gcd(a, b).degree());
    CHECK(poly_divmod(a * c, g2).second.is_zero());
    CHECK(poly_divmod(b * c, g2).second.is_zero());
  }
}

TEST_CASE("interpolation reproduces polynomials") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    int deg = static_cast<int>(rng.next() % 7);
    std::vector<Scalar> cs;
    for (int i = 0; i <= deg; ++i) cs.emplace_back(rng.uniform_int(-9, 9));
    UniPoly p = UniPoly::from_coeffs(cs);
    std::vector<Scalar> xs, ys;
    for (int k = 0; k <= deg; ++k) {
      xs.emplace_back(k);
      ys.push_back(p.eval(Scalar(k)));
    }
    CHECK(interpolate(xs, ys) == p);
  }
}

TEST_CASE("det_poly vs cofactor oracle on small polynomial matrices") {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 4);
    int deg = static_cast<int>(rng.next() % 3);
    PolyMat m = random_poly_mat(rng, n, deg);
    CHECK(det_poly(m) == det_poly_cofactor(m));
  }
}

TEST_CASE("det_poly matches scalar det after evaluation") {
  SplitMix64 rng(10);
  PolyMat m = random_poly_mat(rng, 5, 2);
  UniPoly d = det_poly(m);
  for (int k : {-3, 2, 11}) {
    CHECK(d.eval(Scalar(k)) == det(m.eval(Scalar(k))));
  }
}

TEST_CASE("smith normal form: transforms, divisor chain, known instances") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng.next() % 6);
    int c = 1 + static_cast<int>(rng.next() % 6);
    IntMat m(r, c);
    for (auto& x : m.a) x = rng.uniform_int(-9, 9);
    Snf s = smith_normal_form(m);
    // left * m * right is the diagonal
    IntMat d = s.left * m * s.right;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        if (i == j && i < static_cast<int>(s.diag.size()))
          CHECK(d.at(i, j) == s.diag[i]);
        else
          CHECK(d.at(i, j) == 0);
      }
    for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
      CHECK(s.diag[i] >= 0);
      if (s.diag[i] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
      if (s.diag[i] == 0) CHECK(s.diag[i + 1] == 0);
    }
    // transforms unimodular
    CHECK(abs(int_det(s.left)) == 1);
    CHECK(abs(int_det(s.right)) == 1);
  }
  // classic instance: diag(2,6,12)-like chain
  IntMat m(3, 3);
  long vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
  Snf s = smith_normal_form(m);
  CHECK(s.diag[0] == 2);
  CHECK(s.diag[1] == 2);
  CHECK(s.diag[2] == 156);
}

TEST_CASE("integer kernel is saturated and annihilates") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + static_cast<int>(rng.next() % 4);
    int c = 2 + static_cast<int>(rng.next() % 5);
    IntMat m(r, c);
    for (auto& x : m.a) x = rng.uniform_int(-6, 6);
    IntMat ker = integer_kernel(m);
    for (int i = 0; i < ker.rows; ++i)
      for (int j = 0; j < m.rows; ++j) {
        BigInt acc = 0;
        for (int k = 0; k < c; ++k) acc += m.at(j, k) * ker.at(i, k);
        CHECK(acc == 0);
      }
    if (ker.rows > 0) {
      // saturation: SNF of the kernel basis has all invariant factors 1
      Snf s = smith_normal_form(ker);
      for (int i = 0; i < ker.rows; ++i) CHECK(s.diag[i] == 1);
    }
    // rank + nullity
    Mat mq(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) mq.at(i, j) = Scalar(m.at(i, j));
    CHECK(ker.rows == c - rank_of(mq));
  }
}

TEST_CASE("char poly and Descartes signature") {
  // diag(3, -5, 2, 0) has signature (2,1) with one zero eigenvalue
  IntMat d(4, 4);
  d.at(0, 0) = 3;
  d.at(1, 1) = -5;
  d.at(2, 2) = 2;
  auto cp = char_poly(d);
  CHECK(cp.size() == 5);
  CHECK(cp[4] == 1);
  CHECK(cp[0] == 0);  // singular
  auto sig = signature_of_symmetric(d);
  CHECK(sig.first == 2);
  CHECK(sig.second == 1);

  // hyperbolic plane: eigenvalues ±1
  IntMat u(2, 2);
  u.at(0, 1) = 1;
  u.at(1, 0) = 1;
  auto sigu = signature_of_symmetric(u);
  CHECK(sigu.first == 1);
  CHECK(sigu.second == 1);

  // char poly of companion-ish matrix matches direct expansion for n=3
  SplitMix64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat m(3, 3);
    for (auto& x : m.a) x = rng.uniform_int(-5, 5);
    auto c = char_poly(m);
    // trace and determinant read off the coefficients
    BigInt tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
    CHECK(c[2] == -tr);
    IntMat mc = m;
    CHECK(c[0] == -int_det(mc));
  }
}

}  // TEST_SUITE
