#include "epwlab/lagrangian.hpp"

#include <cassert>

#include "epwlab/polynomial.hpp"

namespace epw {

LagrangianCheck is_lagrangian(const Mat& a_rows) {
  LagrangianCheck out;
  if (a_rows.cols != 20) throw std::invalid_argument("is_lagrangian: ambient must be grade 3");
  out.dim = rank_of(a_rows);
  if (out.dim != 10 || a_rows.rows != 10) return out;
  for (int i = 0; i < a_rows.rows; ++i)
    for (int j = i + 1; j < a_rows.rows; ++j) {
      if (symplectic_form(KVector::from_coords(3, a_rows.row(i)),
                          KVector::from_coords(3, a_rows.row(j))) != 0) {
        out.bad_i = i;
        out.bad_j = j;
        return out;
      }
    }
  out.ok = true;
  return out;
}

int ell_of(const Mat& A, const Vec& f) {
  Mat v5 = hyperplane_basis(f);
  return subspace_intersect(A, induced_cube_v5(v5).span).rows;
}

namespace {

// indices of grade-3 basis subsets inside {0..4}, and their positions
std::vector<int> cube_v5_indices() {
  std::vector<int> idx;
  const auto& masks = grade_masks(3);
  for (int i = 0; i < 20; ++i)
    if ((masks[i] & (1u << 5)) == 0) idx.push_back(i);
  return idx;
}

}  // namespace

LagrangianData from_graph(const Mat& q) {
  if (q.rows != 10 || q.cols != 10) throw std::invalid_argument("from_graph: q must be 10x10");
  if (q != q.transpose()) throw std::invalid_argument("from_graph: q must be symmetric");

  const auto& masks3 = grade_masks(3);
  std::vector<int> v5idx = cube_v5_indices();  // the ^3V5 slots, lex order
  assert(v5idx.size() == 10);

  // dual basis of ^2V5 under the volume pairing of V5 = <e0..e4>:
  // [m_T_dual ^ m_S] = delta_{TS} * e0..e4
  KVector vol5 = KVector::zero(5);
  vol5.coords[mask_to_index(5, 0b011111u)] = 1;
  std::vector<KVector> dual2(10, KVector::zero(2));
  for (int t = 0; t < 10; ++t) {
    unsigned mask = masks3[v5idx[t]];
    unsigned comp = 0b011111u & ~mask;
    KVector cand = KVector::zero(2);
    cand.coords[mask_to_index(2, comp)] = 1;
    KVector e_t = KVector::zero(3);
    e_t.coords[v5idx[t]] = 1;
    Scalar eps = wedge(cand, e_t).coords[mask_to_index(5, 0b011111u)];
    assert(eps == 1 || eps == -1);
    dual2[t] = (1 / eps) * cand;
  }

  Mat A(10, 20);
  KVector e5 = KVector::basis(5);
  for (int s = 0; s < 10; ++s) {
    KVector beta = KVector::zero(2);
    for (int t = 0; t < 10; ++t)
      if (q.at(t, s) != 0) beta = beta + q.at(t, s) * dual2[t];
    KVector row = wedge(e5, beta);
    row.coords[v5idx[s]] += 1;
    A.set_row(s, row.coords);
  }
  LagrangianData data;
  data.A = row_space(A);
  assert(data.A.rows == 10);
  Vec f(6, Scalar(0));
  f[5] = 1;
  data.v5 = f;
  data.ell = rank_kernel(q).kernel.rows;
  assert(*data.ell == ell_of(data.A, f));
  return data;
}

Mat random_symmetric_with_kernel(SplitMix64& rng, int kernel_dim) {
  assert(0 <= kernel_dim && kernel_dim <= 10);
  for (;;) {
    Mat s = random_mat(rng, 10, 10, -6, 6);
    if (rank_of(s) != 10) continue;
    Mat d(10, 10);
    for (int i = 0; i < 10 - kernel_dim; ++i) {
      long v = rng.uniform_int(-6, 6);
      if (v == 0) v = 1;
      d.at(i, i) = Scalar(v);
    }
    Mat q = s.transpose() * d * s;
    assert(rank_of(q) == 10 - kernel_dim);
    return q;
  }
}

Mat extend_isotropic_to_lagrangian(const Mat& s, SplitMix64& rng) {
  Mat cur = row_space(s);
  if (!(cur * omega_matrix() * cur.transpose()).is_zero())
    throw std::invalid_argument("extend_isotropic_to_lagrangian: input not isotropic");
  while (cur.rows < 10) {
    RankKernel perp = rank_kernel(cur * omega_matrix());
    // random element of the symplectic orthogonal, retried until it leaves cur
    for (;;) {
      Vec x(20, Scalar(0));
      for (int i = 0; i < perp.kernel.rows; ++i) {
        Scalar c(rng.uniform_int(-5, 5));
        if (c != 0) x = vec_add(x, vec_scale(c, perp.kernel.row(i)));
      }
      if (vec_is_zero(x) || span_contains(cur, x)) continue;
      Mat one(1, 20);
      one.set_row(0, x);
      cur = row_space(stack_rows(cur, one));
      break;
    }
  }
  assert(is_lagrangian(cur).ok);
  return cur;
}

namespace {

// candidate rational roots of a polynomial by small-height scan; the verified
// decomposability check downstream makes false positives harmless
std::vector<Scalar> small_rational_roots(const UniPoly& p) {
  std::vector<Scalar> roots;
  if (p.is_zero()) return roots;
  for (long den = 1; den <= 6; ++den)
    for (long num = -48; num <= 48; ++num) {
      Scalar r(num, den);
      r.canonicalize();
      if (r.get_den() != den) continue;  // already seen in lower terms
      if (p.eval(r) == 0) roots.push_back(r);
    }
  return roots;
}

}  // namespace

DecomposableSearch find_decomposable(const Mat& A, int budget, SplitMix64& rng) {
  DecomposableSearch out;
  out.budget = budget;
  // echelon basis vectors first: catches coordinate-flavored Lagrangians
  for (int i = 0; i < A.rows; ++i) {
    KVector a = KVector::from_coords(3, A.row(i));
    if (decomposable_rank(a).decomposable) {
      out.found = a;
      return out;
    }
  }
  for (int trial = 0; trial < budget; ++trial) {
    out.trials_used = trial + 1;
    Vec ca = random_vec(rng, A.rows, -3, 3), cb = random_vec(rng, A.rows, -3, 3);
    KVector a = KVector::from_coords(3, vec_mat(ca, A));
    KVector b = KVector::from_coords(3, vec_mat(cb, A));
    if (a.is_zero() || b.is_zero()) continue;
    // wedge map along the pencil a + s b: 15x6 with entries linear in s
    PolyMat m(15, 6);
    Mat ma(15, 6), mb(15, 6);
    for (int c = 0; c < 6; ++c) {
      KVector col_a = wedge(KVector::basis(c), a);
      KVector col_b = wedge(KVector::basis(c), b);
      for (int r = 0; r < 15; ++r) {
        ma.at(r, c) = col_a.coords[r];
        mb.at(r, c) = col_b.coords[r];
      }
    }
    for (int r = 0; r < 15; ++r)
      for (int c = 0; c < 6; ++c) m.at(r, c) = UniPoly::linear(ma.at(r, c), mb.at(r, c));
    // gcd of a few maximal minors pins the parameters where rank drops
    UniPoly g;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
      std::vector<int> pick;
      while (pick.size() < 6) {
        int r = static_cast<int>(rng.next() % 15);
        bool seen = false;
        for (int x : pick) seen |= (x == r);
        if (!seen) pick.push_back(r);
      }
      std::sort(pick.begin(), pick.end());
      UniPoly d = det_poly(m.select_rows(pick));
      g = first ? d : poly_gcd(g, d);
      first = false;
      if (!first && g.degree() == 0) break;
    }
    std::vector<Scalar> candidates;
    if (g.is_zero()) {
      // wedge map degenerate along the whole pencil: probe a few points
      candidates = {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)};
    } else {
      candidates = small_rational_roots(g);
    }
    for (const Scalar& s : candidates) {
      KVector cand = a + s * b;
      if (cand.is_zero()) continue;
      if (decomposable_rank(cand).decomposable) {
        out.found = cand;
        return out;
      }
    }
    if (decomposable_rank(b).kdim == 3) {  // pencil point at infinity
      out.found = b;
      return out;
    }
  }
  return out;
}

Mat dual_lagrangian(const Mat& A) {
  LagrangianCheck chk = is_lagrangian(A);
  if (!chk.ok) throw std::invalid_argument("dual_lagrangian: input not Lagrangian");
  Mat ann = row_space(rank_kernel(A).kernel);
  assert(ann.rows == 10);
  return ann;
}

SymplecticReduction symplectic_reduction(const Mat& b) {
  SymplecticReduction red;
  red.b = row_space(b);
  if (!(red.b * omega_matrix() * red.b.transpose()).is_zero())
    throw std::invalid_argument("symplectic_reduction: B not isotropic");
  int d = red.b.rows;
  RankKernel perp = rank_kernel(red.b * omega_matrix());
  assert(perp.kernel.rows == 20 - d);
  // complement of B inside B-perp
  Mat cur = red.b;
  Mat comp(0, 20);
  for (int i = 0; i < perp.kernel.rows && comp.rows < 20 - 2 * d; ++i) {
    Vec r = perp.kernel.row(i);
    if (span_contains(cur, r)) continue;
    Mat one(1, 20);
    one.set_row(0, r);
    cur = row_space(stack_rows(cur, one));
    comp = stack_rows(comp, one);
  }
  assert(comp.rows == 20 - 2 * d);
  red.complement = comp;
  red.omega_bar = comp * omega_matrix() * comp.transpose();
  assert(det(red.omega_bar) != 0);
  return red;
}

Mat reduce_subspace(const SymplecticReduction& red, const Mat& rows) {
  int m = red.complement.rows;
  Mat basis = stack_rows(red.b, red.complement);
  Mat reduced(rows.rows, m);
  for (int i = 0; i < rows.rows; ++i) {
    auto coords = coords_in_span(basis, rows.row(i));
    if (!coords)
      throw std::invalid_argument("reduce_subspace: row not inside B-perp");
    for (int j = 0; j < m; ++j) reduced.at(i, j) = (*coords)[red.b.rows + j];
  }
  return row_space(reduced);
}

ReducedLagrangian isotropic_reduction(const Mat& A, const Mat& B) {
  if (!span_contains_all(A, B))
    throw std::invalid_argument("isotropic_reduction: B must be contained in A");
  ReducedLagrangian out;
  out.space = symplectic_reduction(B);
  out.a_bar = reduce_subspace(out.space, A);
  assert(out.a_bar.rows == 10 - out.space.b.rows);
  assert((out.a_bar * out.space.omega_bar * out.a_bar.transpose()).is_zero());
  return out;
}

Mat LagrangianPencil::at(const Scalar& t) const {
  Vec x = vec_add(x0, vec_scale(t, x1));
  Vec y = vec_add(y0, vec_scale(t, y1));
  Mat two(2, 20);
  two.set_row(0, x);
  two.set_row(1, y);
  return row_space(stack_rows(b, two));
}

Mat LagrangianPencil::at_infinity() const {
  Mat two(2, 20);
  two.set_row(0, x1);
  two.set_row(1, y1);
  return row_space(stack_rows(b, two));
}

LagrangianPencil lagrangian_pencil(const Mat& a1, const Mat& a2) {
  if (!is_lagrangian(a1).ok || !is_lagrangian(a2).ok)
    throw std::invalid_argument("lagrangian_pencil: inputs must be Lagrangian");
  Mat b = subspace_intersect(a1, a2);
  if (b.rows != 8)
    throw std::invalid_argument("lagrangian_pencil: intersection must have dimension 8");
  SymplecticReduction red = symplectic_reduction(b);
  Mat abar1 = reduce_subspace(red, a1);
  Mat abar2 = reduce_subspace(red, a2);
  assert(abar1.rows == 2 && abar2.rows == 2);
  assert(subspace_intersect(abar1, abar2).rows == 0);  // skew planes

  auto wbar = [&](const Vec& u, const Vec& v) { return dot(u, mat_vec(red.omega_bar, v)); };
  Vec xb0 = abar1.row(0), xb1 = abar1.row(1);
  Vec w1 = abar2.row(0), w2 = abar2.row(1);
  auto ybar = [&](const Vec& x) {
    return vec_sub(vec_scale(wbar(x, w2), w1), vec_scale(wbar(x, w1), w2));
  };
  LagrangianPencil pencil;
  pencil.b = b;
  pencil.x0 = vec_mat(xb0, red.complement);
  pencil.x1 = vec_mat(xb1, red.complement);
  pencil.y0 = vec_mat(ybar(xb0), red.complement);
  pencil.y1 = vec_mat(ybar(xb1), red.complement);
  return pencil;
}

LagrangianData generate_graph_data(uint64_t seed, int ell) {
  if (ell < 0 || ell > 3) throw std::invalid_argument("generate_graph_data: ell must be 0..3");
  SplitMix64 rng = sub_rng(seed, "gen/graph");
  Mat q = random_symmetric_with_kernel(rng, ell);
  LagrangianData data = from_graph(q);
  data.seed = seed;
  data.generator = "graph-ell" + std::to_string(ell);
  return data;
}

LagrangianData generate_planted_y2(uint64_t seed, const Vec& v) {
  if (v.size() != 6 || vec_is_zero(v))
    throw std::invalid_argument("generate_planted_y2: need a nonzero point");
  SplitMix64 rng = sub_rng(seed, "gen/plant-y2");
  KVector vk = KVector::from_coords(1, v);
  for (;;) {
    KVector x1 = wedge(vk, KVector::from_coords(2, random_vec(rng, 15, -6, 6)));
    KVector x2 = wedge(vk, KVector::from_coords(2, random_vec(rng, 15, -6, 6)));
    Mat s(2, 20);
    s.set_row(0, x1.coords);
    s.set_row(1, x2.coords);
    if (rank_of(s) != 2) continue;  // wedges collapsed; resample
    LagrangianData data;
    data.A = extend_isotropic_to_lagrangian(s, rng);
    data.seed = seed;
    data.generator = "plant-y2";
    data.plant_v = v;
    return data;
  }
}

LagrangianData generate_planted_z1(uint64_t seed, const Mat& u3) {
  InducedSubspace w = induced_wu3(u3);  // validates u3
  SplitMix64 rng = sub_rng(seed, "gen/plant-z1");
  for (;;) {
    Vec coef = random_vec(rng, w.span.rows, -6, 6);
    Vec elt = vec_mat(coef, w.span);
    if (vec_is_zero(elt)) continue;
    Mat s(1, 20);
    s.set_row(0, elt);
    LagrangianData data;
    data.A = extend_isotropic_to_lagrangian(s, rng);
    data.seed = seed;
    data.generator = "plant-z1";
    data.plant_u3 = row_space(u3);
    return data;
  }
}

}  // namespace epw
