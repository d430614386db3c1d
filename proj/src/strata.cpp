#include "epwlab/strata.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "epwlab/parallel.hpp"

namespace epw {

namespace {

void require_grade3_rows(const Mat& a, const char* who) {
  if (a.cols != binom6(3))
    throw std::invalid_argument(std::string(who) +
                                ": rows must be grade-3 coordinate vectors");
}

Mat one_row(const Vec& v) {
  Mat m(1, static_cast<int>(v.size()));
  m.set_row(0, v);
  return m;
}

Mat two_rows(const Vec& u, const Vec& v) {
  Mat m(2, static_cast<int>(u.size()));
  m.set_row(0, u);
  m.set_row(1, v);
  return m;
}

// Matrix of a |-> contract(f, a) from grade 3 to grade 2 (15 x 20).
Mat contraction_matrix(const Vec& f) {
  Mat m(15, 20);
  for (int j = 0; j < 20; ++j) {
    Vec unit(20, Scalar(0));
    unit[j] = 1;
    KVector img = contract(f, KVector::from_coords(3, std::move(unit)));
    for (int i = 0; i < 15; ++i) m.at(i, j) = img.coords[i];
  }
  return m;
}

// Matrix of a |-> contract(g, contract(h, a)) from grade 3 to grade 1 (6 x 20).
Mat double_contraction_matrix(const Vec& g, const Vec& h) {
  Mat m(6, 20);
  for (int j = 0; j < 20; ++j) {
    Vec unit(20, Scalar(0));
    unit[j] = 1;
    KVector img = contract(g, contract(h, KVector::from_coords(3, std::move(unit))));
    for (int i = 0; i < 6; ++i) m.at(i, j) = img.coords[i];
  }
  return m;
}

StratumReport kernel_report(StratumKind kind, const Mat& a, const Mat& m,
                            int ceiling) {
  RankKernel rk = rank_kernel(m);
  StratumReport rep;
  rep.kind = kind;
  rep.ell = rk.kernel.rows;
  rep.witness = rep.ell ? row_space(rk.kernel * a) : Mat(0, 20);
  rep.degenerate = rep.ell > ceiling;
  return rep;
}

}  // namespace

StratumReport y_stratum(const Mat& a, const Vec& v) {
  require_grade3_rows(a, "y_stratum");
  if (static_cast<int>(v.size()) != 6 || vec_is_zero(v))
    throw std::invalid_argument("y_stratum: need a nonzero point of V6");
  Mat m = wedge_map_matrix(KVector::from_coords(1, v)) * a.transpose();
  StratumReport rep = kernel_report(StratumKind::Y, a, m, 3);
  rep.point = v;
  return rep;
}

StratumReport y_dual_stratum(const Mat& a, const Vec& f) {
  require_grade3_rows(a, "y_dual_stratum");
  if (static_cast<int>(f.size()) != 6 || vec_is_zero(f))
    throw std::invalid_argument("y_dual_stratum: need a nonzero covector");
  Mat m = contraction_matrix(f) * a.transpose();
  StratumReport rep = kernel_report(StratumKind::Ydual, a, m, 3);
  rep.point = f;
  return rep;
}

StratumReport z_stratum(const Mat& a, const Mat& u3) {
  require_grade3_rows(a, "z_stratum");
  if (u3.rows != 3 || u3.cols != 6 || rank_of(u3) != 3)
    throw std::invalid_argument("z_stratum: u3 must be 3x6 of rank 3");

  Mat witness = subspace_intersect(row_space(a), induced_wu3(u3).span);

  // Independent formulation: membership in (^2 U3)∧V6 is the vanishing of
  // both contractions against any two annihilators of U3.
  Mat ann = rank_kernel(u3).kernel;  // 3 x 6 covectors cutting U3
  Mat at = a.transpose();
  Mat big;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int p = 0; p < 3; ++p) {
    Mat blk = double_contraction_matrix(ann.row(pairs[p][0]), ann.row(pairs[p][1])) * at;
    big = p == 0 ? blk : stack_rows(big, blk);
  }
  if (rank_kernel(big).kernel.rows != witness.rows)
    throw std::logic_error("z_stratum: span and double-contraction formulations disagree");

  StratumReport rep;
  rep.kind = StratumKind::Z;
  rep.u3 = row_space(u3);
  rep.ell = witness.rows;
  rep.witness = witness;
  rep.degenerate = rep.ell > 4;
  return rep;
}

// ---------------------------------------------------------------------------
// Degree probes.

namespace {

PolyMat pencil_entries(const Mat& m0, const Mat& m1) {
  PolyMat pm(m0.rows, m0.cols);
  for (int i = 0; i < m0.rows; ++i)
    for (int j = 0; j < m0.cols; ++j)
      pm.at(i, j) = UniPoly::linear(m0.at(i, j), m1.at(i, j));
  return pm;
}

bool contains_int(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

struct MinorGcd {
  UniPoly g;  // monic
  int minors_used = 0;
  int rounds = 0;
};

// Square compression R * pm by a random constant matrix. By Cauchy-Binet the
// determinant is a combination of the maximal minors of pm, so it stays
// divisible by the locus equation along the line; the cofactors move with R.
PolyMat left_project(const PolyMat& pm, const Mat& r) {
  PolyMat out(r.rows, pm.cols);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < pm.cols; ++j) {
      UniPoly acc;
      for (int l = 0; l < pm.rows; ++l) acc = acc + r.at(i, l) * pm.at(l, j);
      out.at(i, j) = acc;
    }
  return out;
}

// Common divisor of determinants of random square compressions of pm,
// compared across two independently drawn families. Coordinate row subsets
// are no good here: the columns of pm span a moving subspace of the ambient
// coordinates, so sparse subsets share structural cofactor roots that survive
// the gcd. Dense random compressions have no common root beyond the locus
// equation. Returns nullopt when every determinant vanishes identically (the
// whole line sits in the locus); widens the families when the gcds disagree.
std::optional<MinorGcd> minor_gcd(const PolyMat& pm, SplitMix64& rng) {
  const int n = pm.rows, k = pm.cols;
  for (int round = 0; round < 3; ++round) {
    const int need = 5 + 3 * round;
    const int cap = need + 3;

    std::vector<Mat> projections;
    projections.reserve(static_cast<size_t>(2 * cap));
    for (int i = 0; i < 2 * cap; ++i) projections.push_back(random_mat(rng, k, n, -9, 9));

    std::vector<UniPoly> dets(projections.size());
    parallel_for_index(static_cast<int>(projections.size()), [&](int i) {
      dets[static_cast<size_t>(i)] = det_poly(left_project(pm, projections[static_cast<size_t>(i)]));
    });

    std::vector<UniPoly> fam[2];
    bool any_nonzero = false;
    for (size_t i = 0; i < dets.size(); ++i) {
      if (dets[i].is_zero()) continue;
      any_nonzero = true;
      int f = i < static_cast<size_t>(cap) ? 0 : 1;
      if (static_cast<int>(fam[f].size()) < need) fam[f].push_back(dets[i]);
    }
    if (!any_nonzero) return std::nullopt;
    if (fam[0].size() < 2 || fam[1].size() < 2) continue;  // unlucky draws; widen

    UniPoly g[2];
    for (int f = 0; f < 2; ++f) {
      g[f] = fam[f][0].monic();
      for (size_t i = 1; i < fam[f].size(); ++i) g[f] = poly_gcd(g[f], fam[f][i]);
    }
    if (g[0] == g[1])
      return MinorGcd{g[0], static_cast<int>(fam[0].size() + fam[1].size()), round};
  }
  throw std::runtime_error("degree probe: compression gcd unstable across families");
}

Mat sample_probe_line(SplitMix64& rng, ProbeKind which) {
  const int r = which == ProbeKind::Z ? 4 : 2;
  for (;;) {
    Mat line = random_mat(rng, r, 6, -8, 8);
    if (rank_of(line) == r) return line;
  }
}

DegreeProbeResult assemble_probe(ProbeKind which, Mat line, MinorGcd mg,
                                 int line_resamples) {
  DegreeProbeResult res;
  res.which = which;
  res.line = std::move(line);
  res.equation = std::move(mg.g);
  res.degree = res.equation.degree();
  res.minors_used = mg.minors_used;
  res.retries = mg.rounds + line_resamples;
  return res;
}

}  // namespace

PolyMat degeneracy_line_matrix(const Mat& a, ProbeKind which, const Mat& line) {
  require_grade3_rows(a, "degeneracy_line_matrix");
  Mat at = a.transpose();

  if (which == ProbeKind::Y || which == ProbeKind::Ydual) {
    if (line.rows != 2 || line.cols != 6 || rank_of(line) != 2)
      throw std::invalid_argument("degeneracy_line_matrix: line must be 2x6 of rank 2");
    Mat m0, m1;
    if (which == ProbeKind::Y) {
      m0 = wedge_map_matrix(KVector::from_coords(1, line.row(0))) * at;
      m1 = wedge_map_matrix(KVector::from_coords(1, line.row(1))) * at;
    } else {
      m0 = contraction_matrix(line.row(0)) * at;
      m1 = contraction_matrix(line.row(1)) * at;
    }
    return pencil_entries(m0, m1);
  }

  if (line.rows != 4 || line.cols != 6 || rank_of(line) != 4)
    throw std::invalid_argument("degeneracy_line_matrix: 3-space pencil needs 4x6 of rank 4");

  // Fixed completion of u1..u4 by unit vectors on the free columns, so the
  // dual basis (and hence the annihilator of U3(t) = <u1, u2, u3 + t u4>)
  // has entries of degree <= 1: g1(t) = u4* - t u3*, g2 = u5*, g3 = u6*.
  Rref r = rref(line);
  Mat u(6, 6);
  for (int i = 0; i < 4; ++i) u.set_row(i, line.row(i));
  int placed = 4;
  for (int j = 0; j < 6 && placed < 6; ++j) {
    if (contains_int(r.pivots, j)) continue;
    Vec unit(6, Scalar(0));
    unit[static_cast<size_t>(j)] = 1;
    u.set_row(placed++, unit);
  }
  auto inv = inverse(u);
  if (!inv) throw std::logic_error("degeneracy_line_matrix: completion failed to be a basis");
  auto dual = [&](int kcol) {
    Vec f(6);
    for (int i = 0; i < 6; ++i) f[static_cast<size_t>(i)] = inv->at(i, kcol);
    return f;
  };
  Vec s3 = dual(2), s4 = dual(3), s5 = dual(4), s6 = dual(5);

  Mat b12_0 = double_contraction_matrix(s4, s5) * at;
  Mat b12_1 = Scalar(-1) * (double_contraction_matrix(s3, s5) * at);
  Mat b13_0 = double_contraction_matrix(s4, s6) * at;
  Mat b13_1 = Scalar(-1) * (double_contraction_matrix(s3, s6) * at);
  Mat b23 = double_contraction_matrix(s5, s6) * at;

  PolyMat pm(18, a.rows);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < a.rows; ++j) {
      pm.at(i, j) = UniPoly::linear(b12_0.at(i, j), b12_1.at(i, j));
      pm.at(6 + i, j) = UniPoly::linear(b13_0.at(i, j), b13_1.at(i, j));
      pm.at(12 + i, j) = UniPoly::constant(b23.at(i, j));
    }
  return pm;
}

DegreeProbeResult degree_probe_line(const Mat& a, ProbeKind which,
                                    const Mat& line, SplitMix64& rng) {
  if (!is_lagrangian(a).ok)
    throw std::invalid_argument("degree_probe_line: need a Lagrangian subspace");
  PolyMat pm = degeneracy_line_matrix(a, which, line);
  auto mg = minor_gcd(pm, rng);
  if (!mg) throw std::runtime_error("degree probe: the line lies inside the locus");
  return assemble_probe(which, line, std::move(*mg), 0);
}

DegreeProbeResult degree_probe(const Mat& a, ProbeKind which, SplitMix64& rng) {
  if (!is_lagrangian(a).ok)
    throw std::invalid_argument("degree_probe: need a Lagrangian subspace");
  int resamples = 0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Mat line = sample_probe_line(rng, which);
    PolyMat pm = degeneracy_line_matrix(a, which, line);
    auto mg = minor_gcd(pm, rng);
    if (!mg) {
      ++resamples;
      continue;
    }
    return assemble_probe(which, std::move(line), std::move(*mg), resamples);
  }
  throw std::runtime_error("degree probe: every sampled line lies inside the locus");
}

// ---------------------------------------------------------------------------
// Kernel locus.

namespace {

struct KernelDirection {
  Vec w5;  // coordinates in the hyperplane basis
  Vec v6;
};

// Kernel line of the skew form of rep; checks the defining properties
// (rep is divisible by the line, which lands in the Y-stratum of A).
KernelDirection kernel_direction(const Mat& a, const KVector& rep, const Mat& v5b) {
  SkewForm5 k = two_form_of_trivector(rep, v5b);
  Vec w = pfaffian_adjoint(k.gram);
  if (vec_is_zero(w))
    throw std::runtime_error(
        "kernel locus: representative has a rank <= 2 skew form (decomposable)");
  if (!vec_is_zero(mat_vec(k.gram, w)))
    throw std::logic_error("kernel locus: adjoint vector escaped the kernel");
  Vec v6 = vec_mat(w, v5b);
  KVector v0 = KVector::from_coords(1, v6);
  if (!span_contains(induced_v_wedge2_v5(v0, v5b).span, rep.coords))
    throw std::logic_error("kernel locus: representative is not divisible by its kernel line");
  if (y_stratum(a, v6).ell < 1)
    throw std::logic_error("kernel locus: kernel line missed the Y-stratum");
  return {std::move(w), std::move(v6)};
}

// Certificate that six plane points sit on a unique conic with no three on a
// line. Points arrive as rows (5 coordinates); they must span a plane.
void conic_certificate(const Mat& pts5) {
  for (int i = 0; i < pts5.rows; ++i)
    for (int j = i + 1; j < pts5.rows; ++j)
      if (rank_of(two_rows(pts5.row(i), pts5.row(j))) != 2)
        throw std::runtime_error("kernel locus: repeated kernel points on the pencil");

  int span_rank = rank_of(pts5);
  if (span_rank < 3)
    throw std::runtime_error("kernel locus: kernel points collapsed onto a line");
  if (span_rank > 3)
    throw std::logic_error("kernel locus: kernel points left the plane");

  Mat plane = row_space(pts5);  // 3 x 5
  Mat mono(pts5.rows, 6);
  std::vector<Vec> pc(static_cast<size_t>(pts5.rows));
  for (int i = 0; i < pts5.rows; ++i) {
    auto c = coords_in_span(plane, pts5.row(i));
    if (!c) throw std::logic_error("kernel locus: point fell out of its own span");
    pc[static_cast<size_t>(i)] = *c;
    const Vec& p = pc[static_cast<size_t>(i)];
    mono.at(i, 0) = p[0] * p[0];
    mono.at(i, 1) = p[0] * p[1];
    mono.at(i, 2) = p[0] * p[2];
    mono.at(i, 3) = p[1] * p[1];
    mono.at(i, 4) = p[1] * p[2];
    mono.at(i, 5) = p[2] * p[2];
  }
  int mr = rank_of(mono);
  if (mr == 6)
    throw std::runtime_error("kernel locus: sampled points admit no common conic");
  if (mr < 5)
    throw std::runtime_error("kernel locus: conic through the sampled points is not unique");

  for (int i = 0; i < pts5.rows; ++i)
    for (int j = i + 1; j < pts5.rows; ++j)
      for (int k = j + 1; k < pts5.rows; ++k) {
        Mat trip(3, 3);
        trip.set_row(0, pc[static_cast<size_t>(i)]);
        trip.set_row(1, pc[static_cast<size_t>(j)]);
        trip.set_row(2, pc[static_cast<size_t>(k)]);
        if (det(trip) == 0)
          throw std::runtime_error("kernel locus: three sampled points are collinear");
      }
}

}  // namespace

KernelLocusResult kernel_locus(const Mat& a, const Vec& f) {
  StratumReport r = y_dual_stratum(a, f);
  if (r.ell == 0)
    throw std::runtime_error("kernel locus: the hyperplane stratum is empty");
  Mat v5b = hyperplane_basis(f);

  KernelLocusResult out;
  out.ell = r.ell;
  for (int i = 0; i < r.ell; ++i) {
    KVector rep = KVector::from_coords(3, r.witness.row(i));
    KernelDirection kd = kernel_direction(a, rep, v5b);
    out.points.push_back({std::move(rep), std::move(kd.v6)});
  }

  if (r.ell >= 2) {
    // Six parameters on the witness pencil; the kernel lines are quadratic in
    // the parameter, so they trace a conic in the plane they span.
    const Scalar params[] = {Scalar(0), Scalar(1), Scalar(-1), Scalar(2),
                             Scalar(-2), Scalar(3), Scalar(4),  Scalar(-3),
                             Scalar(5),  Scalar(-4)};
    Mat pts5(6, 5);
    int got = 0;
    for (const Scalar& s : params) {
      if (got == 6) break;
      KVector rep = KVector::from_coords(3, r.witness.row(0)) +
                    s * KVector::from_coords(3, r.witness.row(1));
      KernelDirection kd;
      try {
        kd = kernel_direction(a, rep, v5b);
      } catch (const std::runtime_error&) {
        continue;  // decomposable member of the pencil; take another parameter
      }
      pts5.set_row(got++, kd.w5);
      out.points.push_back({std::move(rep), std::move(kd.v6)});
    }
    if (got < 6)
      throw std::runtime_error("kernel locus: pencil kept hitting degenerate members");
    conic_certificate(pts5);
    out.veronese_checked = true;
  }
  return out;
}

int isotropic_locus_membership(const Mat& a, const Vec& f, const Mat& u3) {
  require_grade3_rows(a, "isotropic_locus_membership");
  if (static_cast<int>(f.size()) != 6 || vec_is_zero(f))
    throw std::invalid_argument("isotropic_locus_membership: need a nonzero covector");
  if (u3.rows != 3 || u3.cols != 6 || rank_of(u3) != 3)
    throw std::invalid_argument("isotropic_locus_membership: u3 must be 3x6 of rank 3");
  for (int i = 0; i < 3; ++i)
    if (dot(f, u3.row(i)) != 0)
      throw std::invalid_argument("isotropic_locus_membership: u3 is not inside ker f");
  Mat v5b = hyperplane_basis(f);
  return subspace_intersect(row_space(a), induced_u3_v5(u3, v5b).span).rows;
}

FiberSamples prz2_fiber_samples(const Mat& a, const Vec& f, int count,
                                SplitMix64& rng) {
  if (count <= 0)
    throw std::invalid_argument("prz2_fiber_samples: count must be positive");
  StratumReport r = y_dual_stratum(a, f);
  if (r.ell != 1)
    throw std::runtime_error("prz2_fiber_samples: need dim(A ∩ ^3 V5) = 1");
  Mat v5b = hyperplane_basis(f);
  KVector a0 = KVector::from_coords(3, r.witness.row(0));
  Mat k5 = two_form_of_trivector(a0, v5b).gram;
  if (rank_of(k5) != 4)
    throw std::runtime_error("prz2_fiber_samples: skew form of the generator must have rank 4");
  Vec k0 = pfaffian_adjoint(k5);
  if (!vec_is_zero(mat_vec(k5, k0)))
    throw std::logic_error("prz2_fiber_samples: adjoint vector escaped the kernel");

  FiberSamples out;
  out.a0 = a0;

  // Every isotropic 3-space contains the kernel line: its image in the rank-4
  // quotient is isotropic, so at most 2-dimensional. Sample the other two
  // directions as (x, y) with y in the radical of kappa(x, .).
  int guard = 0;
  while (static_cast<int>(out.u3.size()) < count && ++guard < 80 * count) {
    Vec x = random_vec(rng, 5, -6, 6);
    Vec fx = vec_mat(x, k5);
    if (vec_is_zero(fx)) continue;
    Mat perp = rank_kernel(one_row(fx)).kernel;  // 4 x 5
    Vec y(5, Scalar(0));
    for (int i = 0; i < perp.rows; ++i)
      y = vec_add(y, vec_scale(Scalar(rng.uniform_int(-6, 6)), perp.row(i)));
    Mat cand(3, 5);
    cand.set_row(0, k0);
    cand.set_row(1, x);
    cand.set_row(2, y);
    if (rank_of(cand) != 3) continue;
    if (dot(x, mat_vec(k5, y)) != 0)
      throw std::logic_error("prz2_fiber_samples: sampled pair is not isotropic");

    Mat u36 = row_space(cand * v5b);
    bool dup = false;
    for (const Mat& have : out.u3)
      if (have == u36) { dup = true; break; }
    if (dup) continue;

    if (isotropic_locus_membership(a, f, u36) < 1)
      throw std::logic_error("prz2_fiber_samples: isotropic 3-space failed membership");
    out.u3.push_back(std::move(u36));
  }
  if (static_cast<int>(out.u3.size()) < count)
    throw std::runtime_error("prz2_fiber_samples: sampling budget exhausted");

  // Tangent count at the first sample: deformations phi: U3 -> V5/U3 keeping
  // the form zero satisfy kappa(phi(u_i), u_j) - kappa(phi(u_j), u_i) = 0 for
  // the three pairs i < j; six unknowns, so the family is 3-dimensional
  // exactly when the condition matrix has rank 3.
  Mat w3(3, 5);
  for (int i = 0; i < 3; ++i) {
    auto c = coords_in_span(v5b, out.u3[0].row(i));
    if (!c) throw std::logic_error("prz2_fiber_samples: sample left the hyperplane");
    w3.set_row(i, *c);
  }
  Rref rr = rref(w3);
  std::vector<Vec> comp;
  for (int j = 0; j < 5 && static_cast<int>(comp.size()) < 2; ++j) {
    if (std::find(rr.pivots.begin(), rr.pivots.end(), j) != rr.pivots.end()) continue;
    Vec unit(5, Scalar(0));
    unit[static_cast<size_t>(j)] = 1;
    comp.push_back(std::move(unit));
  }
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  Mat cond(3, 6);
  for (int p = 0; p < 3; ++p) {
    int i = pairs[p][0], j = pairs[p][1];
    for (int k = 0; k < 2; ++k) {
      cond.at(p, 2 * i + k) = dot(comp[static_cast<size_t>(k)], mat_vec(k5, w3.row(j)));
      cond.at(p, 2 * j + k) = Scalar(-1) * dot(comp[static_cast<size_t>(k)], mat_vec(k5, w3.row(i)));
    }
  }
  out.tangent_dim = 6 - rank_of(cond);
  return out;
}

// ---------------------------------------------------------------------------
// Contact hyperplanes.

void validate_hat_point(const HatPoint& h, const Mat& a_basis) {
  if (h.a.grade != 3 || h.v.grade != 1)
    throw std::runtime_error("hat point: wrong grades");
  if (h.a.is_zero() || h.v.is_zero())
    throw std::runtime_error("hat point: zero member");
  if (static_cast<int>(h.f.size()) != 6 || vec_is_zero(h.f))
    throw std::runtime_error("hat point: zero covector");
  if (!span_contains(row_space(a_basis), h.a.coords))
    throw std::runtime_error("hat point: a is outside A");
  if (!wedge(h.v, h.a).is_zero())
    throw std::runtime_error("hat point: v does not divide a");
  if (dot(h.f, h.v.coords) != 0)
    throw std::runtime_error("hat point: f(v) != 0");
  if (!contract(h.f, h.a).is_zero())
    throw std::runtime_error("hat point: a is not inside ^3 ker f");
}

ContactResult contact_hyperplanes(const Mat& a, const Vec& v) {
  StratumReport r = y_stratum(a, v);
  if (r.ell != 2)
    throw std::runtime_error("contact hyperplanes: Y-stratum must be exactly 2");
  KVector kv = KVector::from_coords(1, v);

  // Peel xi from each witness w = v∧xi by solving the wedge-by-v system.
  Mat wmap(20, 15);
  for (int j = 0; j < 15; ++j) {
    Vec unit(15, Scalar(0));
    unit[static_cast<size_t>(j)] = 1;
    KVector img = wedge(kv, KVector::from_coords(2, std::move(unit)));
    for (int i = 0; i < 20; ++i) wmap.at(i, j) = img.coords[i];
  }
  auto peel = [&](const Vec& w) {
    auto x = solve(wmap, w);
    if (!x) throw std::logic_error("contact hyperplanes: witness is not divisible by v");
    return KVector::from_coords(2, *x);
  };
  KVector xi1 = peel(r.witness.row(0));
  KVector xi2 = peel(r.witness.row(1));

  const Scalar params[] = {Scalar(0), Scalar(1), Scalar(-1), Scalar(2),
                           Scalar(-2), Scalar(3), Scalar(4),  Scalar(-3),
                           Scalar(5),  Scalar(-4)};
  ContactResult out;
  for (const Scalar& s : params) {
    if (static_cast<int>(out.hats.size()) >= 6) break;
    KVector xi = xi1 + s * xi2;
    KVector f5 = wedge(kv, wedge(xi, xi));
    if (f5.is_zero()) {
      ++out.skipped;  // decomposable member of the pencil
      continue;
    }
    Vec f = covector_of_5vector(f5);
    HatPoint h{wedge(kv, xi), kv, std::move(f)};
    validate_hat_point(h, a);
    if (y_dual_stratum(a, h.f).ell < 1)
      throw std::logic_error("contact hyperplanes: covector missed the dual stratum");
    out.hats.push_back(std::move(h));
  }
  if (static_cast<int>(out.hats.size()) < 5)
    throw std::runtime_error("contact hyperplanes: pencil kept degenerating");
  return out;
}

// ---------------------------------------------------------------------------
// Joint stratum witness.

JointWitness joint_stratum_witness(const LagrangianPencil& pencil, const Vec& v) {
  Mat a1m = row_space(stack_rows(pencil.b, two_rows(pencil.x0, pencil.x1)));
  Mat a2m = row_space(stack_rows(pencil.b, two_rows(pencil.y0, pencil.y1)));
  StratumReport r1 = y_stratum(a1m, v);
  StratumReport r2 = y_stratum(a2m, v);
  if (r1.ell < 1 || r2.ell < 1)
    throw std::invalid_argument("joint witness: v must degenerate both end members");
  if (y_stratum(pencil.b, v).ell > 0)
    throw std::runtime_error("joint witness: v degenerates the base; the member is not unique");

  Vec a1 = r1.witness.row(0);
  Vec a2 = r2.witness.row(0);
  Mat ext = stack_rows(pencil.b, two_rows(a1, a2));
  if (rank_of(ext) != 10)
    throw std::runtime_error("joint witness: witnesses are dependent modulo the base");
  Mat joint = row_space(ext);
  if (!is_lagrangian(joint).ok)
    throw std::logic_error("joint witness: assembled space is not Lagrangian");

  // The member through the joint space: x(t) must hit the direction of a1 in
  // the reduced plane; the polar direction then matches a2 automatically.
  SymplecticReduction red = symplectic_reduction(pencil.b);
  Mat xbar = reduce_subspace(red, two_rows(pencil.x0, pencil.x1));
  Mat a1bar = reduce_subspace(red, one_row(a1));
  auto c = coords_in_span(xbar, a1bar.row(0));
  if (!c) throw std::logic_error("joint witness: witness direction escaped the end plane");

  JointWitness out;
  if ((*c)[0] == 0) {
    out.at_infinity = true;
    out.t = 0;
    out.member = row_space(pencil.at_infinity());
  } else {
    out.t = (*c)[1] / (*c)[0];
    out.member = row_space(pencil.at(out.t));
  }
  if (!(out.member == joint))
    throw std::logic_error("joint witness: located member disagrees with the assembled space");
  out.report = y_stratum(out.member, v);
  if (out.report.ell < 2)
    throw std::logic_error("joint witness: member sees v with stratum < 2");
  return out;
}

}  // namespace epw
