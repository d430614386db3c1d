#include "epwlab/bbw.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace epw {

namespace {

GLWeight zeros(int n) { return GLWeight(n, 0); }

// One surviving cohomology group of a resolution term, placed at its column in
// the complex (col <= 0) with its single nonvanishing degree.
struct SpectralEntry {
  int col = 0;
  int deg = 0;
  long dim = 0;
};

// A differential on page r moves (col, deg) -> (col + r, deg - r + 1); every
// page shifts the total degree col + deg up by one.
bool differential_possible(const SpectralEntry& from, const SpectralEntry& to) {
  int r = to.col - from.col;
  return r >= 1 && to.deg == from.deg - r + 1;
}

bool totals_connected(const std::vector<SpectralEntry>& entries, int total_from) {
  for (const SpectralEntry& e : entries) {
    if (e.col + e.deg != total_from) continue;
    for (const SpectralEntry& f : entries)
      if (f.col + f.deg == total_from + 1 && differential_possible(e, f)) return true;
  }
  return false;
}

}  // namespace

bool weakly_decreasing(const GLWeight& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

long weyl_dimension(const GLWeight& w, int n) {
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("weyl_dimension: weight length must equal n");
  if (!weakly_decreasing(w))
    throw std::invalid_argument("weyl_dimension: weight must be weakly decreasing");
  mpz_class num = 1, den = 1;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      num *= w[p] - w[q] + q - p;
      den *= q - p;
    }
  mpz_class dim = num / den;  // exact: Weyl's formula always divides
  return dim.get_si();
}

SheafTerm serre_dual(const SheafTerm& term) {
  int k = term.sub_rank;
  int q = term.ambient_rank - k;
  SheafTerm dual = term;
  for (int i = 0; i < k; ++i) dual.sub_weight[i] = q - term.sub_weight[k - 1 - i];
  for (int i = 0; i < q; ++i) dual.quotient_weight[i] = -k - term.quotient_weight[q - 1 - i];
  dual.label = term.label + " (dual)";
  return dual;
}

BottResult bott_pushforward(const SheafTerm& term) {
  int k = term.sub_rank;
  int m = term.ambient_rank;
  if (k < 1 || m <= k)
    throw std::invalid_argument("bott_pushforward: need 1 <= sub rank < ambient rank");
  if (static_cast<int>(term.sub_weight.size()) != k ||
      static_cast<int>(term.quotient_weight.size()) != m - k)
    throw std::invalid_argument("bott_pushforward: weight lengths do not match the ranks");
  if (!weakly_decreasing(term.sub_weight) || !weakly_decreasing(term.quotient_weight))
    throw std::invalid_argument("bott_pushforward: weights must be weakly decreasing");

  std::vector<long> w;
  w.reserve(m);
  w.insert(w.end(), term.quotient_weight.begin(), term.quotient_weight.end());
  w.insert(w.end(), term.sub_weight.begin(), term.sub_weight.end());
  for (int p = 0; p < m; ++p) w[p] += m - 1 - p;  // add rho

  int inversions = 0;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      if (w[p] == w[q]) return BottResult{};  // a repeat kills every degree
      if (w[p] < w[q]) ++inversions;
    }

  std::sort(w.begin(), w.end(), std::greater<long>());
  BottResult out;
  out.vanishes = false;
  out.degree = inversions;
  out.weight.resize(m);
  for (int p = 0; p < m; ++p) out.weight[p] = w[p] - (m - 1 - p);
  return out;
}

namespace {

// A Koszul constituent: label, position in the resolution, line-bundle power,
// and the weight on the tautological subbundle.
struct KoszulTerm {
  const char* label;
  int koszul_index;
  int l_power;
  GLWeight sub_weight;
};

// The nonvanishing pushforwards, frozen per ambient rank; everything else must
// come back empty.  `pos` indexes the constituent list (split middle stages get
// their own position).
struct ExpectedPush {
  int m;
  int pos;
  int degree;
  GLWeight weight;
};

PropReport run_pushforward_table(int m, int sub_rank, const std::vector<KoszulTerm>& terms,
                                 const std::vector<ExpectedPush>& expected,
                                 const std::string& assembled, bool has_extension) {
  PropReport report;
  report.m = m;
  report.assembled = assembled;
  report.has_extension = has_extension;

  for (size_t pos = 0; pos < terms.size(); ++pos) {
    const KoszulTerm& kt = terms[pos];
    SheafTerm term;
    term.sub_rank = sub_rank;
    term.ambient_rank = m;
    term.sub_weight = kt.sub_weight;
    term.quotient_weight = zeros(m - sub_rank);
    term.label = kt.label;
    term.l_power = kt.l_power;

    PushforwardLine line;
    line.koszul_index = kt.koszul_index;
    line.label = kt.label;
    line.l_power = kt.l_power;
    line.multiplicity = 1;
    line.bott = bott_pushforward(term);
    if (!line.bott.vanishes) line.rank = weyl_dimension(line.bott.weight, m);

    const ExpectedPush* want = nullptr;
    for (const ExpectedPush& e : expected)
      if (e.m == m && e.pos == static_cast<int>(pos)) want = &e;

    bool ok;
    if (pos == 0) {  // the structure sheaf always pushes to degree 0
      ok = !line.bott.vanishes && line.bott.degree == 0 && line.bott.weight == zeros(m);
    } else if (want == nullptr) {
      ok = line.bott.vanishes;
    } else {
      ok = !line.bott.vanishes && line.bott.degree == want->degree &&
           line.bott.weight == want->weight;
    }
    if (!ok) throw std::logic_error("pushforward disagrees with the frozen table: " + line.label);

    if (!line.bott.vanishes) {
      int sign = ((line.koszul_index + line.bott.degree) % 2 == 0) ? 1 : -1;
      report.generic_rank += sign * line.rank;
    }
    report.lines.push_back(std::move(line));
  }

  if (has_extension && report.generic_rank != 0)
    throw std::logic_error("surviving two-term complex should have torsion cokernel");
  report.matches_expected = true;
  return report;
}

}  // namespace

PropReport verify_prop_a1(int m) {
  if (m < 3) throw std::invalid_argument("verify_prop_a1: need ambient rank at least 3");
  // Koszul resolution of the relative line family: exterior powers of the
  // rank-3 bundle of quadric equations on Gr(2,E).
  static const std::vector<KoszulTerm> terms = {
      {"O", 0, 0, {0, 0}},
      {"L * Sym2(U)", 1, 1, {2, 0}},
      {"L^2 * Sym2(U)*det(U)", 2, 2, {3, 1}},
      {"L^3 * det(U)^3", 3, 3, {3, 3}},
  };
  static const std::vector<ExpectedPush> expected = {
      {3, 1, 1, {1, 1, 0}},     // det(E) (x) E^
      {3, 2, 1, {2, 1, 1}},     // det(E) (x) E
      {3, 3, 2, {2, 2, 2}},     // det(E)^2
      {4, 2, 2, {1, 1, 1, 1}},  // det(E)
  };
  std::string assembled = m == 3   ? "O_{D1} + C*L*det(E)"
                          : m == 4 ? "O_S + L^2*det(E)"
                                   : "O_S";
  return run_pushforward_table(m, 2, terms, expected, assembled, m == 3);
}

PropReport verify_prop_a2(int m) {
  if (m < 4) throw std::invalid_argument("verify_prop_a2: need ambient rank at least 4");
  // Plane families: exterior powers of the rank-6 quadric-equation bundle on
  // Gr(3,E); the cube splits into two Schur pieces.
  static const std::vector<KoszulTerm> terms = {
      {"O", 0, 0, {0, 0, 0}},
      {"L * Sym2(U)", 1, 1, {2, 0, 0}},
      {"L^2 * S(3,1,0)(U)", 2, 2, {3, 1, 0}},
      {"L^3 * S(4,1,1)(U)", 3, 3, {4, 1, 1}},
      {"L^3 * S(3,3,0)(U)", 3, 3, {3, 3, 0}},
      {"L^4 * S(4,3,1)(U)", 4, 4, {4, 3, 1}},
      {"L^5 * S(4,4,2)(U)", 5, 5, {4, 4, 2}},
      {"L^6 * S(4,4,4)(U)", 6, 6, {4, 4, 4}},
  };
  static const std::vector<ExpectedPush> expected = {
      {4, 1, 1, {1, 1, 0, 0}},        // det(E) (x) /\2 E^
      {4, 2, 1, {2, 1, 1, 0}},        // det(E) (x) traceless End(E)
      {5, 2, 2, {1, 1, 1, 1, 0}},     // det(E) (x) E^
      {4, 3, 1, {3, 1, 1, 1}},        // det(E) (x) Sym2 E
      {5, 3, 2, {2, 1, 1, 1, 1}},     // det(E) (x) E
      {6, 3, 3, {1, 1, 1, 1, 1, 1}},  // det(E)
      {4, 4, 2, {2, 2, 2, 0}},        // det(E)^2 (x) Sym2 E^
      {4, 5, 2, {3, 2, 2, 1}},        // det(E)^2 (x) traceless End(E)
      {4, 6, 2, {3, 3, 2, 2}},        // det(E)^2 (x) /\2 E
      {5, 6, 4, {2, 2, 2, 2, 2}},     // det(E)^2
      {4, 7, 3, {3, 3, 3, 3}},        // det(E)^3
  };
  std::string assembled = m == 4   ? "O_{D2} + C2*L*det(E)"
                          : m == 5 ? "O_{D1} + C*L^2*det(E)"
                          : m == 6 ? "O_S + L^3*det(E)"
                                   : "O_S";
  return run_pushforward_table(m, 3, terms, expected, assembled, m == 4 || m == 5);
}

P5Cohomology p5_cohomology(const GLWeight& quotient_weight, long twist, long multiplicity) {
  if (quotient_weight.size() != 5)
    throw std::invalid_argument("p5_cohomology: quotient weight must have length 5");
  SheafTerm term;
  term.sub_rank = 1;
  term.ambient_rank = 6;
  term.sub_weight = {-twist};  // O(t) is the -t power of the tautological sub
  term.quotient_weight = quotient_weight;
  term.multiplicity = multiplicity;
  BottResult b = bott_pushforward(term);
  if (b.vanishes) return P5Cohomology{};
  return P5Cohomology{false, b.degree, multiplicity * weyl_dimension(b.weight, 6)};
}

namespace {

// The ambient four-term resolution of the double-degeneracy surface, twisted by
// O(t): column 0 is the structure sheaf, column -j the j-th syzygy.
std::vector<SpectralEntry> surface_resolution_entries(int t) {
  struct ResTerm {
    int col;
    GLWeight quotient;
    long twist_shift;
    long multiplicity;
  };
  static const std::vector<ResTerm> res = {
      {0, {0, 0, 0, 0, 0}, 0, 1},
      {-1, {0, 0, 0, 0, 0}, -6, 56},   // quadric equations plus the sextic itself
      {-2, {1, 1, 0, 0, 0}, -7, 10},   // /\2 of the twisted tangent bundle
      {-3, {2, 1, 1, 0, 0}, -8, 1},    // its exterior square, a single Schur piece
  };
  std::vector<SpectralEntry> entries;
  for (const ResTerm& r : res) {
    P5Cohomology h = p5_cohomology(r.quotient, t + r.twist_shift, r.multiplicity);
    if (!h.vanishes) entries.push_back({r.col, h.degree, h.dimension});
  }
  return entries;
}

// Collapse a one-group-per-column spectral page onto total degrees 0..2, using
// only the vanishing of hypercohomology outside that window to force ranks.
SurfaceCohomologyRow assemble_surface_row(int t) {
  std::vector<SpectralEntry> entries = surface_resolution_entries(t);

  std::map<int, long> totals;
  long euler = 0;
  for (const SpectralEntry& e : entries) {
    totals[e.col + e.deg] += e.dim;
    euler += ((e.col + e.deg) % 2 == 0 ? 1 : -1) * e.dim;
  }

  bool any_differential = false;
  for (const SpectralEntry& e : entries)
    for (const SpectralEntry& f : entries)
      if (differential_possible(e, f)) any_differential = true;

  SurfaceCohomologyRow row;
  row.t = t;
  if (!any_differential) {
    row.degenerate = true;
  } else {
    row.forced = true;
    // Work inward: cohomology above degree 2 dies into the next-lower total,
    // cohomology below degree 0 injects into the next-higher one.
    for (int n = totals.rbegin()->first; n >= 3; --n) {
      long need = totals[n];
      if (need == 0) continue;
      if (!totals_connected(entries, n - 1) || totals[n - 1] < need)
        throw std::logic_error("surface row cannot cancel cohomology above degree 2");
      totals[n - 1] -= need;
      totals[n] = 0;
    }
    for (int n = totals.begin()->first; n <= -1; ++n) {
      long need = totals[n];
      if (need == 0) continue;
      if (!totals_connected(entries, n) || totals[n + 1] < need)
        throw std::logic_error("surface row cannot cancel cohomology below degree 0");
      totals[n + 1] -= need;
      totals[n] = 0;
    }
  }

  for (const auto& [n, dim] : totals) {
    if (dim == 0) continue;
    if (n < 0 || n > 2) throw std::logic_error("surface cohomology escapes degrees 0..2");
    (n == 0 ? row.h0 : n == 1 ? row.h1 : row.h2) = dim;
  }
  row.euler_consistent = (row.h0 - row.h1 + row.h2 == euler);
  if (!row.euler_consistent) throw std::logic_error("surface row fails its Euler check");
  return row;
}

}  // namespace

SurfaceCohomologyTable y2_cohomology_table() {
  static const std::array<std::array<long, 3>, 7> frozen = {{
      {1, 0, 45},
      {6, 0, 0},
      {21, 15, 0},
      {56, 10, 0},
      {126, 0, 0},
      {246, 0, 0},
      {406, 0, 0},
  }};
  SurfaceCohomologyTable table;
  for (int t = 0; t <= 6; ++t) {
    SurfaceCohomologyRow row = assemble_surface_row(t);
    if (row.h0 != frozen[t][0] || row.h1 != frozen[t][1] || row.h2 != frozen[t][2])
      throw std::logic_error("surface twist table disagrees with the frozen dimensions");
    table.rows.push_back(row);
  }
  table.matches_expected = true;
  return table;
}

IdealVanishingReport quadric_section_vanishing() {
  // Dropping the structure sheaf from the surface resolution leaves a
  // three-term resolution of the ideal sheaf; twist and take hypercohomology.
  auto ideal_h = [](int s) -> std::array<long, 6> {
    std::vector<SpectralEntry> entries;
    struct ResTerm {
      int col;
      GLWeight quotient;
      long twist_shift;
      long multiplicity;
    };
    static const std::vector<ResTerm> res = {
        {0, {0, 0, 0, 0, 0}, -6, 56},
        {-1, {1, 1, 0, 0, 0}, -7, 10},
        {-2, {2, 1, 1, 0, 0}, -8, 1},
    };
    for (const ResTerm& r : res) {
      P5Cohomology h = p5_cohomology(r.quotient, s + r.twist_shift, r.multiplicity);
      if (!h.vanishes) entries.push_back({r.col, h.degree, h.dimension});
    }
    for (const SpectralEntry& e : entries)
      for (const SpectralEntry& f : entries)
        if (differential_possible(e, f))
          throw std::logic_error("ideal twist does not degenerate at the first page");
    std::array<long, 6> h{};
    for (const SpectralEntry& e : entries) {
      int n = e.col + e.deg;
      if (n < 0 || n > 5) throw std::logic_error("ideal cohomology out of range");
      h[n] += e.dim;
    }
    return h;
  };

  std::array<long, 6> twist2 = ideal_h(2);
  std::array<long, 6> twist1 = ideal_h(1);

  IdealVanishingReport report;
  report.h0_ideal_twist2 = twist2[0];
  report.h1_ideal_twist1 = twist1[1];
  report.h2_ideal_twist2 = twist2[2];
  report.quadric_sections_ambient = p5_cohomology(zeros(5), 2, 1).dimension;
  report.quadric_sections_on_surface = y2_cohomology_table().rows[2].h0;
  report.quadrics_restrict_isomorphically =
      report.h0_ideal_twist2 == 0 &&
      report.quadric_sections_ambient == report.quadric_sections_on_surface;
  // A hyperplane section sits between the two vanishings: sections of its
  // quadric ideal are squeezed by h^0 of the twist-2 ideal and h^1 of the
  // twist-1 ideal, so both zero means no quadric contains the curve.
  report.curve_section_in_no_quadric =
      report.h0_ideal_twist2 == 0 && report.h1_ideal_twist1 == 0;
  if (report.h0_ideal_twist2 != 0 || report.h1_ideal_twist1 != 0)
    throw std::logic_error("expected ideal-sheaf vanishing failed");
  return report;
}

}  // namespace epw
