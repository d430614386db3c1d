#include "epwlab/lattices.hpp"

#include <regex>
#include <stdexcept>
#include <utility>

#include "epwlab/matrix.hpp"

namespace epw {

namespace {

bool is_symmetric(const IntMat& g) {
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (g.at(i, j) != g.at(j, i)) return false;
  return true;
}

Mat rational_of(const IntMat& m) {
  Mat r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = Scalar(m.at(i, j));
  return r;
}

std::vector<BigInt> mat_vec_int(const IntMat& m, const std::vector<BigInt>& v) {
  std::vector<BigInt> out(static_cast<size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    BigInt acc = 0;
    for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

BigInt dot_int(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

BigInt pair_value(const IntegerLattice& l, const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  return dot_int(x, mat_vec_int(l.gram, y));
}

}  // namespace

IntegerLattice lattice_from_gram(IntMat gram, std::string name) {
  if (gram.rows != gram.cols) throw std::invalid_argument("lattice: gram matrix must be square");
  if (!is_symmetric(gram)) throw std::invalid_argument("lattice: gram matrix must be symmetric");
  if (int_det(gram) == 0) throw std::invalid_argument("lattice: gram matrix must be nondegenerate");
  return IntegerLattice{std::move(gram), std::move(name)};
}

IntegerLattice lattice_I(int r, int s) {
  if (r < 0 || s < 0 || r + s == 0) throw std::invalid_argument("lattice_I: need r, s >= 0, r + s >= 1");
  IntMat g(r + s, r + s);
  for (int i = 0; i < r + s; ++i) g.at(i, i) = i < r ? 1 : -1;
  return IntegerLattice{std::move(g), "I_{" + std::to_string(r) + "," + std::to_string(s) + "}"};
}

IntegerLattice lattice_U() {
  IntMat g(2, 2);
  g.at(0, 1) = 1;
  g.at(1, 0) = 1;
  return IntegerLattice{std::move(g), "U"};
}

IntegerLattice lattice_E8() {
  // Dynkin graph: chain 0-1-2-3-4-5-6 with node 7 attached to node 4
  // (legs of lengths 1, 2, 4 at the trivalent node)
  IntMat g(8, 8);
  for (int i = 0; i < 8; ++i) g.at(i, i) = 2;
  for (int i = 0; i + 1 < 7; ++i) {
    g.at(i, i + 1) = -1;
    g.at(i + 1, i) = -1;
  }
  g.at(4, 7) = -1;
  g.at(7, 4) = -1;
  return IntegerLattice{std::move(g), "E8"};
}

IntegerLattice rescale(const IntegerLattice& l, long m) {
  if (m == 0) throw std::invalid_argument("rescale: factor must be nonzero");
  IntMat g = l.gram;
  for (BigInt& v : g.a) v *= m;
  std::string name = l.name.empty() ? "" : l.name + "(" + std::to_string(m) + ")";
  return IntegerLattice{std::move(g), std::move(name)};
}

IntegerLattice direct_sum(const std::vector<IntegerLattice>& parts, std::string name) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: need at least one summand");
  int n = 0;
  for (const IntegerLattice& p : parts) n += p.rank();
  IntMat g(n, n);
  int off = 0;
  for (const IntegerLattice& p : parts) {
    for (int i = 0; i < p.rank(); ++i)
      for (int j = 0; j < p.rank(); ++j) g.at(off + i, off + j) = p.gram.at(i, j);
    off += p.rank();
  }
  return IntegerLattice{std::move(g), std::move(name)};
}

IntegerLattice make_lattice(const std::string& expr) {
  static const std::regex term_re(
      R"(^\s*(U|E8|Lambda|Gamma4|Gamma6|I_\{\s*(\d+)\s*,\s*(\d+)\s*\})\s*(?:\(\s*(-?\d+)\s*\))?\s*$)");
  std::vector<IntegerLattice> parts;
  size_t pos = 0;
  while (pos <= expr.size()) {
    size_t plus = expr.find('+', pos);
    std::string term = expr.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    std::smatch m;
    if (!std::regex_match(term, m, term_re)) throw std::invalid_argument("make_lattice: malformed term '" + term + "'");
    IntegerLattice base;
    std::string head = m[1].str();
    if (head == "U")
      base = lattice_U();
    else if (head == "E8")
      base = lattice_E8();
    else if (head == "Gamma4")
      base = lattice_I(22, 2);
    else if (head == "Gamma6")
      base = direct_sum({rescale(lattice_E8(), -1), rescale(lattice_E8(), -1), lattice_U(), lattice_U(),
                         lattice_U(), lattice_U()},
                        "Gamma6");
    else if (head == "Lambda")
      base = direct_sum({lattice_E8(), lattice_E8(), lattice_U(), lattice_U(), rescale(lattice_I(2, 0), 2)},
                        "Lambda");
    else
      base = lattice_I(std::stoi(m[2].str()), std::stoi(m[3].str()));
    if (m[4].matched) base = rescale(base, std::stol(m[4].str()));
    parts.push_back(std::move(base));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  if (parts.size() == 1) {
    IntegerLattice out = std::move(parts.front());
    if (out.name.empty()) out.name = expr;
    return out;
  }
  return direct_sum(parts, expr);
}

LatticeInvariants invariants(const IntegerLattice& l) {
  if (l.gram.rows != l.gram.cols || !is_symmetric(l.gram))
    throw std::invalid_argument("invariants: gram matrix must be symmetric");
  LatticeInvariants inv;
  inv.rank = l.rank();
  inv.det = int_det(l.gram);
  if (inv.det == 0) throw std::invalid_argument("invariants: degenerate gram matrix");
  auto [pos, neg] = signature_of_symmetric(l.gram);
  inv.sig_pos = pos;
  inv.sig_neg = neg;
  inv.even = true;
  for (int i = 0; i < l.rank(); ++i)
    if (l.gram.at(i, i) % 2 != 0) inv.even = false;
  inv.unimodular = inv.det == 1 || inv.det == -1;
  inv.discriminant = nontrivial_invariant_factors(smith_normal_form(l.gram));
  return inv;
}

bool is_characteristic(const std::vector<BigInt>& x, const IntegerLattice& l) {
  if (static_cast<int>(x.size()) != l.rank())
    throw std::invalid_argument("is_characteristic: vector length must match the rank");
  std::vector<BigInt> gx = mat_vec_int(l.gram, x);
  for (int i = 0; i < l.rank(); ++i)
    if ((gx[static_cast<size_t>(i)] - l.gram.at(i, i)) % 2 != 0) return false;
  return true;
}

bool stable_orthogonal_member(const IntMat& g, const IntegerLattice& l) {
  if (g.rows != l.rank() || g.cols != l.rank())
    throw std::invalid_argument("stable_orthogonal_member: size mismatch");
  if (!(g * l.gram * g.transpose() == l.gram))
    throw std::invalid_argument("stable_orthogonal_member: not an isometry");
  // trivial action on the discriminant group: (g - 1) maps the dual lattice
  // into the lattice, i.e. G^{-1} (g - 1) is integral
  auto inv = inverse(rational_of(l.gram));
  if (!inv) throw std::invalid_argument("stable_orthogonal_member: degenerate gram matrix");
  Mat ginv = *inv;
  Mat delta = rational_of(g - IntMat::identity(l.rank()));
  Mat image = ginv * delta;
  for (const Scalar& v : image.a)
    if (!is_integer(v)) return false;
  return true;
}

namespace {

std::vector<BigInt> unit_vec(int n, int i) {
  std::vector<BigInt> v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = 1;
  return v;
}

// rows of the inclusion: e1, e2, then the complement basis
IntMat assembled_basis(const std::vector<BigInt>& e1, const std::vector<BigInt>& e2, const IntMat& k) {
  IntMat m(2 + k.rows, k.cols);
  for (int j = 0; j < k.cols; ++j) {
    m.at(0, j) = e1[static_cast<size_t>(j)];
    m.at(1, j) = e2[static_cast<size_t>(j)];
  }
  for (int i = 0; i < k.rows; ++i)
    for (int j = 0; j < k.cols; ++j) m.at(2 + i, j) = k.at(i, j);
  return m;
}

// do the rows of b span the same sublattice as the rows of k?
bool same_row_lattice(const IntMat& b, const IntMat& k) {
  if (b.rows != k.rows || b.cols != k.cols) return false;
  Mat kq = rational_of(k);
  Mat coords(b.rows, b.rows);
  for (int i = 0; i < b.rows; ++i) {
    Vec row(static_cast<size_t>(b.cols));
    for (int j = 0; j < b.cols; ++j) row[static_cast<size_t>(j)] = Scalar(b.at(i, j));
    auto c = coords_in_span(kq, row);
    if (!c) return false;
    for (int j = 0; j < b.rows; ++j) {
      if (!is_integer((*c)[static_cast<size_t>(j)])) return false;
      coords.at(i, j) = (*c)[static_cast<size_t>(j)];
    }
  }
  Scalar d = det(coords);
  return d == 1 || d == -1;
}

}  // namespace

EmbeddingReport gm_embedding_report(int n) {
  if (n != 4 && n != 6) throw std::invalid_argument("gm_embedding_report: n must be 4 or 6");
  EmbeddingReport rep;
  rep.n = n;
  const int rank = 24;

  if (n == 6) {
    rep.ambient = make_lattice("Gamma6");
    // e1 = f + g in the first hyperbolic copy (indices 16, 17),
    // e2 = f' + g' in the second (indices 18, 19); both have square 2
    rep.e1 = unit_vec(rank, 16);
    rep.e1[17] = 1;
    rep.e2 = unit_vec(rank, 18);
    rep.e2[19] = 1;
  } else {
    rep.ambient = make_lattice("Gamma4");
    // e1 = (1,1,0,...,0), e2 = (0,0,1,...,1;3,3): squares 20 - 18 = 2
    rep.e1 = unit_vec(rank, 0);
    rep.e1[1] = 1;
    rep.e2 = std::vector<BigInt>(rank);
    for (int i = 2; i < 22; ++i) rep.e2[static_cast<size_t>(i)] = 1;
    rep.e2[22] = 3;
    rep.e2[23] = 3;
  }

  rep.pair_gram = IntMat(2, 2);
  rep.pair_gram.at(0, 0) = pair_value(rep.ambient, rep.e1, rep.e1);
  rep.pair_gram.at(0, 1) = pair_value(rep.ambient, rep.e1, rep.e2);
  rep.pair_gram.at(1, 0) = pair_value(rep.ambient, rep.e2, rep.e1);
  rep.pair_gram.at(1, 1) = pair_value(rep.ambient, rep.e2, rep.e2);
  IntMat two_two(2, 2);
  two_two.at(0, 0) = 2;
  two_two.at(1, 1) = 2;
  rep.pair_gram_ok = rep.pair_gram == two_two;

  if (n == 4) {
    rep.characteristic_checked = true;
    std::vector<BigInt> sum(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) sum[static_cast<size_t>(i)] = rep.e1[static_cast<size_t>(i)] + rep.e2[static_cast<size_t>(i)];
    rep.characteristic_ok = is_characteristic(sum, rep.ambient);
  }

  IntMat conditions(2, rank);
  std::vector<BigInt> ge1 = mat_vec_int(rep.ambient.gram, rep.e1);
  std::vector<BigInt> ge2 = mat_vec_int(rep.ambient.gram, rep.e2);
  for (int j = 0; j < rank; ++j) {
    conditions.at(0, j) = ge1[static_cast<size_t>(j)];
    conditions.at(1, j) = ge2[static_cast<size_t>(j)];
  }
  rep.complement = integer_kernel(conditions);

  IntMat comp_gram = rep.complement * rep.ambient.gram * rep.complement.transpose();
  rep.complement_invariants = invariants(lattice_from_gram(std::move(comp_gram), "complement"));
  IntegerLattice target = n == 4 ? make_lattice("Lambda") : rescale(make_lattice("Lambda"), -1);
  rep.target_invariants = invariants(target);
  rep.complement_matches_target = rep.complement_invariants == rep.target_invariants;

  Snf snf = smith_normal_form(assembled_basis(rep.e1, rep.e2, rep.complement));
  bool factors_ok = true;
  for (const BigInt& d : snf.diag)
    if (d == 0) factors_ok = false;
  std::vector<BigInt> nontrivial = nontrivial_invariant_factors(snf);
  rep.primitive_embedding = factors_ok && nontrivial == std::vector<BigInt>{2, 2};

  if (n == 6) {
    // hand-built complement basis: both E8(-1) blocks, the two untouched
    // hyperbolic copies, then f - g and f' - g' (squares -2)
    IntMat b(22, rank);
    for (int i = 0; i < 16; ++i) b.at(i, i) = 1;
    for (int i = 0; i < 4; ++i) b.at(16 + i, 20 + i) = 1;
    b.at(20, 16) = 1;
    b.at(20, 17) = -1;
    b.at(21, 18) = 1;
    b.at(21, 19) = -1;
    IntegerLattice handbuilt_target =
        direct_sum({rescale(lattice_E8(), -1), rescale(lattice_E8(), -1), lattice_U(), lattice_U(),
                    rescale(lattice_I(2, 0), -2)},
                   "");
    IntMat b_gram = b * rep.ambient.gram * b.transpose();
    rep.explicit_isometry = b_gram == handbuilt_target.gram && same_row_lattice(b, rep.complement);
    rep.uniqueness_note =
        "An even lattice of rank 22, signature (2,20), and discriminant group (Z/2)^2 is unique up to "
        "isometry; here the identification is also realized by an explicit basis.";
  } else {
    rep.uniqueness_note =
        "An even lattice of rank 22, signature (20,2), and discriminant group (Z/2)^2 is unique up to "
        "isometry, so the invariant match identifies the complement.";
  }
  return rep;
}

int HodgeDiamond::betti(int k) const {
  int b = 0;
  for (int p = 0; p <= n; ++p) {
    int q = k - p;
    if (q >= 0 && q <= n) b += h[static_cast<size_t>(p)][static_cast<size_t>(q)];
  }
  return b;
}

long HodgeDiamond::euler() const {
  long chi = 0;
  for (int k = 0; k <= 2 * n; ++k) chi += (k % 2 == 0 ? 1 : -1) * betti(k);
  return chi;
}

HodgeDiamond hodge_numerology(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("hodge_numerology: dimension must be 1..6");
  HodgeDiamond d;
  d.n = n;
  d.h.assign(static_cast<size_t>(n + 1), std::vector<int>(static_cast<size_t>(n + 1), 0));
  auto set = [&](int p, int q, int v) {
    d.h[static_cast<size_t>(p)][static_cast<size_t>(q)] = v;
    d.h[static_cast<size_t>(q)][static_cast<size_t>(p)] = v;
  };
  set(0, 0, 1);
  set(n, n, 1);
  switch (n) {
    case 1:
      set(1, 0, 6);
      break;
    case 2:
      set(2, 0, 1);
      set(1, 1, 20);
      break;
    case 3:
      set(1, 1, 1);
      set(2, 2, 1);
      set(2, 1, 10);
      break;
    case 4:
      set(1, 1, 1);
      set(3, 3, 1);
      set(3, 1, 1);
      set(2, 2, 22);
      break;
    case 5:
      set(1, 1, 1);
      set(4, 4, 1);
      set(2, 2, 2);
      set(3, 3, 2);
      set(3, 2, 10);
      break;
    case 6:
      set(1, 1, 1);
      set(5, 5, 1);
      set(2, 2, 2);
      set(4, 4, 2);
      set(4, 2, 1);
      set(3, 3, 22);
      break;
  }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (d.h[static_cast<size_t>(p)][static_cast<size_t>(q)] != d.h[static_cast<size_t>(q)][static_cast<size_t>(p)])
        throw std::logic_error("hodge_numerology: conjugation symmetry violated");
      if (d.h[static_cast<size_t>(p)][static_cast<size_t>(q)] !=
          d.h[static_cast<size_t>(n - p)][static_cast<size_t>(n - q)])
        throw std::logic_error("hodge_numerology: duality symmetry violated");
    }
  if (n == 2 && d.euler() != 24) throw std::logic_error("hodge_numerology: surface Euler number");
  if (n == 4 && (d.euler() != 28 || d.betti(4) != 24)) throw std::logic_error("hodge_numerology: fourfold checks");
  if (n == 5 && d.euler() != -12) throw std::logic_error("hodge_numerology: fivefold Euler number");
  if (n == 6 && d.betti(6) != 24) throw std::logic_error("hodge_numerology: sixfold middle Betti number");
  if ((n == 4 || n == 6) && d.betti(n) - 2 != make_lattice("Lambda").rank())
    throw std::logic_error("hodge_numerology: vanishing-cohomology rank");
  return d;
}

}  // namespace epw
