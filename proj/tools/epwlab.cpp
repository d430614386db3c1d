#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "epwlab/bbw.hpp"
#include "epwlab/exterior.hpp"
#include "epwlab/json_io.hpp"
#include "epwlab/lagrangian.hpp"
#include "epwlab/lattices.hpp"
#include "epwlab/matrix.hpp"
#include "epwlab/parallel.hpp"
#include "epwlab/polynomial.hpp"
#include "epwlab/quadrics.hpp"
#include "epwlab/rng.hpp"
#include "epwlab/scalar.hpp"
#include "epwlab/strata.hpp"

using namespace epw;

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

Vec parse_rationals(const std::string& s, int expect) {
  std::vector<std::string> parts = split_on(s, ',');
  if (expect >= 0 && static_cast<int>(parts.size()) != expect)
    throw std::invalid_argument("expected " + std::to_string(expect) + " comma-separated values, got \"" + s + "\"");
  Vec v;
  for (const std::string& p : parts) {
    auto x = parse_scalar(p);
    if (!x) throw std::invalid_argument("malformed rational \"" + p + "\"");
    v.push_back(*x);
  }
  return v;
}

Mat parse_rational_rows(const std::string& s, int expect_rows, int expect_cols) {
  std::vector<std::string> rows = split_on(s, ';');
  if (static_cast<int>(rows.size()) != expect_rows)
    throw std::invalid_argument("expected " + std::to_string(expect_rows) + " semicolon-separated rows");
  Mat m(expect_rows, expect_cols);
  for (int i = 0; i < expect_rows; ++i) {
    Vec row = parse_rationals(rows[static_cast<size_t>(i)], expect_cols);
    for (int j = 0; j < expect_cols; ++j) m.at(i, j) = row[static_cast<size_t>(j)];
  }
  return m;
}

std::vector<long> parse_integers(const std::string& s) {
  std::vector<long> out;
  for (const std::string& p : split_on(s, ',')) out.push_back(std::stol(p));
  return out;
}

Json kvector_to_json(const KVector& a) {
  Json j;
  j["grade"] = a.grade;
  j["coords"] = vec_to_json(a.coords);
  return j;
}

Json poly_to_json(const UniPoly& p) {
  Json j = Json::array();
  for (const Scalar& x : p.c) j.push_back(scalar_str(x));
  return j;
}

Json bigint_vec_to_json(const std::vector<BigInt>& v) {
  Json j = Json::array();
  for (const BigInt& x : v) j.push_back(x.get_str());
  return j;
}

Json intmat_to_json(const IntMat& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols; ++k) row.push_back(m.at(i, k).get_str());
    j.push_back(std::move(row));
  }
  return j;
}

Json invariants_to_json(const LatticeInvariants& inv) {
  Json j;
  j["rank"] = inv.rank;
  j["signature"] = Json::array({inv.sig_pos, inv.sig_neg});
  j["even"] = inv.even;
  j["unimodular"] = inv.unimodular;
  j["det"] = inv.det.get_str();
  j["discriminant"] = bigint_vec_to_json(inv.discriminant);
  return j;
}

const char* structure_name(FamilyStructure s) {
  switch (s) {
    case FamilyStructure::Empty: return "empty";
    case FamilyStructure::SingleFamily: return "single-family";
    case FamilyStructure::TwoFamilies: return "two-families";
    case FamilyStructure::TwoSpaces: return "two-spaces";
    case FamilyStructure::DoubleFamily: return "double-family";
    case FamilyStructure::DualPlane: return "dual-plane";
  }
  return "?";
}

Json bott_to_json(const BottResult& b, int m) {
  Json j;
  j["vanishes"] = b.vanishes;
  if (!b.vanishes) {
    j["degree"] = b.degree;
    j["weight"] = b.weight;
    j["dimension"] = weyl_dimension(b.weight, m);
  }
  return j;
}

Json prop_report_to_json(const PropReport& r) {
  Json lines = Json::array();
  for (const PushforwardLine& line : r.lines) {
    Json l;
    l["term"] = line.label;
    l["koszul_index"] = line.koszul_index;
    l["l_power"] = line.l_power;
    l["bott"] = bott_to_json(line.bott, r.m);
    l["rank"] = line.rank;
    lines.push_back(std::move(l));
  }
  Json j;
  j["m"] = r.m;
  j["assembled"] = r.assembled;
  j["has_extension"] = r.has_extension;
  j["generic_rank"] = r.generic_rank;
  j["matches_expected"] = r.matches_expected;
  j["lines"] = std::move(lines);
  return j;
}

int ff_rank_of(const FFQuadraticForm& q) {
  const Fq& F = q.field;
  int m = q.m;
  std::vector<int> a = q.gram;
  int rank = 0;
  for (int col = 0; col < m && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (a[static_cast<size_t>(r * m + col)] != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int c = 0; c < m; ++c)
      std::swap(a[static_cast<size_t>(piv * m + c)], a[static_cast<size_t>(rank * m + c)]);
    int inv = F.inv(a[static_cast<size_t>(rank * m + col)]);
    for (int r = 0; r < m; ++r) {
      if (r == rank || a[static_cast<size_t>(r * m + col)] == 0) continue;
      int factor = F.mul(a[static_cast<size_t>(r * m + col)], inv);
      for (int c = 0; c < m; ++c)
        a[static_cast<size_t>(r * m + c)] =
            F.sub(a[static_cast<size_t>(r * m + c)], F.mul(factor, a[static_cast<size_t>(rank * m + c)]));
    }
    ++rank;
  }
  return rank;
}

struct LoadedDatum {
  LagrangianData data;
  std::string digest;
};

LoadedDatum load_datum(const std::string& path) {
  Json j = read_json_file(path);
  return {lagrangian_from_json(j), json_digest(j)};
}

// ---------------------------------------------------------------------------
// command bodies; each returns the result payload

Json run_gen(uint64_t seed, int ell, const std::string& plant, const std::string& out) {
  if (out.empty()) throw std::invalid_argument("gen needs -o/--out for the datum file");
  LagrangianData data;
  if (plant.empty() || plant == "none") {
    data = generate_graph_data(seed, ell);
  } else if (plant.rfind("y2:", 0) == 0) {
    data = generate_planted_y2(seed, parse_rationals(plant.substr(3), 6));
  } else if (plant.rfind("z1:", 0) == 0) {
    data = generate_planted_z1(seed, parse_rational_rows(plant.substr(3), 3, 6));
  } else {
    throw std::invalid_argument("--plant must be none, y2:<6 coords>, or z1:<3 rows of 6>");
  }

  SplitMix64 rng = sub_rng(seed, "cli/gen/decomposable");
  DecomposableSearch ds = find_decomposable(data.A, 200, rng);

  Json file = lagrangian_to_json(data);
  file["decomposable_search"] = Json{{"budget", ds.budget},
                                     {"trials_used", ds.trials_used},
                                     {"found", ds.found.has_value()}};
  write_json_file(out, file);

  Json result;
  result["path"] = out;
  result["digest"] = json_digest(file);
  result["generator"] = data.generator;
  if (data.ell) result["ell"] = *data.ell;
  result["decomposable_found"] = ds.found.has_value();
  return result;
}

Json run_stratum(const LagrangianData& data, const std::string& v, const std::string& f,
                 const std::string& u3) {
  int given = (!v.empty()) + (!f.empty()) + (!u3.empty());
  if (given != 1) throw std::invalid_argument("stratum needs exactly one of --v, --f, --u3");
  StratumReport rep;
  std::string kind;
  if (!v.empty()) {
    rep = y_stratum(data.A, parse_rationals(v, 6));
    kind = "y";
  } else if (!f.empty()) {
    rep = y_dual_stratum(data.A, parse_rationals(f, 6));
    kind = "ydual";
  } else {
    rep = z_stratum(data.A, parse_rational_rows(u3, 3, 6));
    kind = "z";
  }
  Json result;
  result["kind"] = kind;
  result["ell"] = rep.ell;
  result["degenerate"] = rep.degenerate;
  result["witness"] = mat_to_json(rep.witness);
  return result;
}

Json run_degree(const LagrangianData& data, const std::string& which, uint64_t seed) {
  ProbeKind kind = which == "y" ? ProbeKind::Y : which == "ydual" ? ProbeKind::Ydual : ProbeKind::Z;
  SplitMix64 rng = sub_rng(seed, "cli/degree/" + which);
  DegreeProbeResult r = degree_probe(data.A, kind, rng);
  Json result;
  result["which"] = which;
  result["degree"] = r.degree;
  result["minors_used"] = r.minors_used;
  result["retries"] = r.retries;
  result["equation"] = poly_to_json(r.equation);
  result["line"] = mat_to_json(r.line);
  return result;
}

Json run_sigma(const LagrangianData& data) {
  if (!data.v5)
    throw std::invalid_argument("sigma needs a datum with a marked hyperplane (v5)");
  KernelLocusResult r = kernel_locus(data.A, *data.v5);
  Json points = Json::array();
  for (const KernelLocusPoint& p : r.points) {
    Json e;
    e["a"] = kvector_to_json(p.a);
    e["v0"] = vec_to_json(p.v0);
    points.push_back(std::move(e));
  }
  Json result;
  result["ell"] = r.ell;
  result["veronese_checked"] = r.veronese_checked;
  result["points"] = std::move(points);
  return result;
}

Json run_pencil(const LagrangianData& d1, const LagrangianData& d2, int samples) {
  LagrangianPencil pencil = lagrangian_pencil(d1.A, d2.A);
  Mat base = row_space(pencil.b);

  std::vector<Mat> members;
  for (int i = 0; i < samples; ++i) members.push_back(pencil.at(Scalar(i)));
  members.push_back(pencil.at_infinity());

  bool all_lagrangian = true;
  for (const Mat& m : members) all_lagrangian = all_lagrangian && is_lagrangian(m).ok;

  bool meets_in_base = true;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      Mat meet = subspace_intersect(members[i], members[j]);
      meets_in_base = meets_in_base && meet.rows == base.rows && row_space(meet) == base;
    }

  Json result;
  result["base_dim"] = base.rows;
  result["samples"] = static_cast<int>(members.size());
  result["all_lagrangian"] = all_lagrangian;
  result["pairwise_intersection_is_base"] = meets_in_base;
  return result;
}

Json run_quadric_count(const Json& input, int k) {
  if (!input.contains("gram") || !input.contains("p"))
    throw std::invalid_argument("quadric-count input needs \"p\" and \"gram\"");
  const Json& grid = input.at("gram");
  if (!grid.is_array() || grid.empty())
    throw std::invalid_argument("\"gram\" must be a square integer grid");
  int m = static_cast<int>(grid.size());

  Json result;
  result["k"] = k;
  if (input.at("p").is_string()) {
    if (input.at("p").get<std::string>() != "Q")
      throw std::invalid_argument("\"p\" must be a small prime or \"Q\"");
    Mat g(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g.at(i, j) = Scalar(grid.at(i).at(j).get<long>());
    QuadraticForm qf = QuadraticForm::from_gram(g);
    int c = corank(qf);
    FamilyDescriptor fd = classify_linear_families(m, c, k);
    result["corank"] = c;
    result["families"] = fd.families;
    result["components"] = fd.components;
    result["dim_estimate"] = fd.dim;
    result["structure"] = structure_name(fd.structure);
  } else {
    int p = input.at("p").get<int>();
    Fq field = Fq::prime(p);
    std::vector<int> gram(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        long x = grid.at(i).at(j).get<long>();
        gram[static_cast<size_t>(i * m + j)] = static_cast<int>(((x % p) + p) % p);
      }
    FFQuadraticForm q = FFQuadraticForm::from_gram(field, m, gram);
    FFEnumeration e = enumerate_linear_spaces_ff(q, k);
    int c = m - ff_rank_of(q);
    FamilyDescriptor fd = classify_linear_families(m, c, k);
    result["count"] = e.count;
    result["components"] = e.components;
    result["component_sizes"] = e.component_sizes;
    result["corank"] = c;
    result["families"] = fd.families;
    result["dim_estimate"] = fd.dim;
    result["structure"] = structure_name(fd.structure);
  }
  return result;
}

Json run_lattice(const std::string& report) {
  Json result;
  if (report == "catalog") {
    Json list = Json::array();
    for (const char* name : {"U", "E8", "E8(-1)", "I_{2,0}(2)", "Gamma4", "Gamma6",
                             "Lambda", "Lambda(-1)"}) {
      IntegerLattice l = make_lattice(name);
      Json e = invariants_to_json(invariants(l));
      e["name"] = name;
      list.push_back(std::move(e));
    }
    result["catalog"] = std::move(list);
    return result;
  }
  int n = report == "gm4" ? 4 : 6;
  EmbeddingReport r = gm_embedding_report(n);
  result["n"] = r.n;
  result["pair_gram"] = intmat_to_json(r.pair_gram);
  result["pair_gram_ok"] = r.pair_gram_ok;
  result["characteristic_checked"] = r.characteristic_checked;
  result["characteristic_ok"] = r.characteristic_ok;
  result["complement_invariants"] = invariants_to_json(r.complement_invariants);
  result["target_invariants"] = invariants_to_json(r.target_invariants);
  result["complement_matches_target"] = r.complement_matches_target;
  result["primitive_embedding"] = r.primitive_embedding;
  result["explicit_isometry"] = r.explicit_isometry;
  result["uniqueness_note"] = r.uniqueness_note;
  result["all_checks"] = r.pair_gram_ok && r.complement_matches_target &&
                         r.primitive_embedding &&
                         (n == 6 ? r.explicit_isometry : r.characteristic_ok);
  return result;
}

Json run_bbw(const std::string& verify, const std::string& grass, const std::string& u_weight,
             const std::string& q_weight, long twist) {
  Json result;
  if (!verify.empty()) {
    if (verify == "a1" || verify == "a2") {
      bool a1 = verify == "a1";
      Json cases = Json::array();
      bool all = true;
      for (int m = a1 ? 3 : 4; m <= (a1 ? 6 : 7); ++m) {
        PropReport r = a1 ? verify_prop_a1(m) : verify_prop_a2(m);
        all = all && r.matches_expected;
        cases.push_back(prop_report_to_json(r));
      }
      result["verify"] = verify;
      result["all_match"] = all;
      result["cases"] = std::move(cases);
    } else if (verify == "b-table") {
      SurfaceCohomologyTable table = y2_cohomology_table();
      Json rows = Json::array();
      for (const SurfaceCohomologyRow& row : table.rows)
        rows.push_back(Json{{"t", row.t},
                            {"h0", row.h0},
                            {"h1", row.h1},
                            {"h2", row.h2},
                            {"degenerate", row.degenerate},
                            {"forced", row.forced},
                            {"euler_consistent", row.euler_consistent}});
      result["verify"] = verify;
      result["matches_expected"] = table.matches_expected;
      result["rows"] = std::move(rows);
    } else {  // b-vanishing
      IdealVanishingReport r = quadric_section_vanishing();
      result["verify"] = verify;
      result["h0_ideal_twist2"] = r.h0_ideal_twist2;
      result["h1_ideal_twist1"] = r.h1_ideal_twist1;
      result["h2_ideal_twist2"] = r.h2_ideal_twist2;
      result["quadric_sections_ambient"] = r.quadric_sections_ambient;
      result["quadric_sections_on_surface"] = r.quadric_sections_on_surface;
      result["quadrics_restrict_isomorphically"] = r.quadrics_restrict_isomorphically;
      result["curve_section_in_no_quadric"] = r.curve_section_in_no_quadric;
    }
    return result;
  }

  if (grass.empty()) throw std::invalid_argument("bbw needs --verify or --grass");
  std::vector<long> km = parse_integers(grass);
  if (km.size() != 2) throw std::invalid_argument("--grass wants \"k,m\"");
  SheafTerm term;
  term.sub_rank = static_cast<int>(km[0]);
  term.ambient_rank = static_cast<int>(km[1]);
  term.sub_weight = parse_integers(u_weight);
  term.quotient_weight = q_weight.empty() ? GLWeight{} : parse_integers(q_weight);
  if (term.quotient_weight.empty())
    term.quotient_weight = GLWeight(static_cast<size_t>(term.ambient_rank - term.sub_rank), 0);
  for (long& x : term.sub_weight) x -= twist;  // tensor by O(twist)
  result["grass"] = Json{{"k", term.sub_rank}, {"m", term.ambient_rank}};
  result["u_weight"] = term.sub_weight;
  result["q_weight"] = term.quotient_weight;
  result["twist"] = twist;
  result["bott"] = bott_to_json(bott_pushforward(term), term.ambient_rank);
  return result;
}

Json run_hodge(int n) {
  HodgeDiamond d = hodge_numerology(n);
  Json betti = Json::array();
  for (int k = 0; k <= 2 * n; ++k) betti.push_back(d.betti(k));
  Json result;
  result["n"] = n;
  result["h"] = d.h;
  result["betti"] = std::move(betti);
  result["euler"] = d.euler();
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for degeneracy strata of Lagrangian trivector families"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand name

  uint64_t seed = 0;
  int threads = 0;
  bool timing = false;
  bool json_flag = false;
  std::string out;
  app.add_option("--seed", seed, "root seed; sub-tasks derive labeled streams");
  app.add_option("--threads", threads, "worker threads (0 = auto, or EPWLAB_THREADS)");
  app.add_flag("--timing", timing, "include wall-clock time in the manifest");
  app.add_flag("--json", json_flag, "emit JSON (the only format; accepted for symmetry)");
  app.add_option("-o,--out", out, "output file (gen: the datum; otherwise the report)");

  auto* gen = app.add_subcommand("gen", "generate a Lagrangian datum file");
  int ell = 0;
  std::string plant;
  gen->add_option("--ell", ell, "kernel dial: dim(A in ^3 V5)")->check(CLI::Range(0, 3));
  gen->add_option("--plant", plant, "none | y2:<6 coords> | z1:<3 rows of 6>");

  auto* stratum = app.add_subcommand("stratum", "pointwise stratum of a datum");
  std::string in_path, v_arg, f_arg, u3_arg;
  stratum->add_option("--in", in_path, "datum file")->required();
  stratum->add_option("--v", v_arg, "point of P(V6), 6 coords");
  stratum->add_option("--f", f_arg, "hyperplane covector, 6 coords");
  stratum->add_option("--u3", u3_arg, "3-space rows \"r1;r2;r3\"");

  auto* degree = app.add_subcommand("degree", "degree probe along random lines");
  std::string which;
  degree->add_option("--in", in_path, "datum file")->required();
  degree->add_option("--which", which, "y | ydual | z")
      ->required()
      ->check(CLI::IsMember({"y", "ydual", "z"}));

  auto* sigma = app.add_subcommand("sigma", "kernel locus over the marked hyperplane");
  sigma->add_option("--in", in_path, "datum file")->required();

  auto* pencil = app.add_subcommand("pencil", "pencil through two data with common base");
  std::string in1, in2;
  int samples = 5;
  pencil->add_option("--in1", in1, "first datum")->required();
  pencil->add_option("--in2", in2, "second datum")->required();
  pencil->add_option("--samples", samples, "member samples (plus infinity)")
      ->check(CLI::Range(1, 50));

  auto* quadric = app.add_subcommand("quadric-count", "isotropic subspace census");
  int k_planes = 1;
  quadric->add_option("--in", in_path, "JSON with \"p\" (prime or \"Q\") and \"gram\"")->required();
  quadric->add_option("--k", k_planes, "projective dimension of the subspaces")
      ->check(CLI::Range(1, 3));

  auto* lattice = app.add_subcommand("lattice", "integral lattice reports");
  std::string report;
  lattice->add_option("--report", report, "gm4 | gm6 | catalog")
      ->required()
      ->check(CLI::IsMember({"gm4", "gm6", "catalog"}));

  auto* bbw = app.add_subcommand("bbw", "derived pushforwards of Schur bundles");
  std::string verify, grass, u_weight, q_weight;
  long twist = 0;
  bbw->add_option("--verify", verify, "a1 | a2 | b-table | b-vanishing")
      ->check(CLI::IsMember({"a1", "a2", "b-table", "b-vanishing"}));
  bbw->add_option("--grass", grass, "Grassmannian \"k,m\"");
  bbw->add_option("--u-weight", u_weight, "weight on the tautological sub, comma ints");
  bbw->add_option("--q-weight", q_weight, "weight on the quotient (default zero)");
  bbw->add_option("--twist", twist, "tensor by O(t): subtract t from the sub weight");

  auto* hodge = app.add_subcommand("hodge", "Hodge diamond of the degree-n family");
  int hodge_n = 0;
  hodge->add_option("--n", hodge_n, "1..6")->required()->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    set_thread_budget(threads);
    RunManifest manifest;
    manifest.seed = seed;
    auto t0 = std::chrono::steady_clock::now();

    Json result;
    if (gen->parsed()) {
      manifest.command = "gen";
      result = run_gen(seed, ell, plant, out);
    } else if (stratum->parsed()) {
      manifest.command = "stratum";
      LoadedDatum d = load_datum(in_path);
      manifest.input_digests["in"] = d.digest;
      result = run_stratum(d.data, v_arg, f_arg, u3_arg);
    } else if (degree->parsed()) {
      manifest.command = "degree";
      LoadedDatum d = load_datum(in_path);
      manifest.input_digests["in"] = d.digest;
      result = run_degree(d.data, which, seed);
    } else if (sigma->parsed()) {
      manifest.command = "sigma";
      LoadedDatum d = load_datum(in_path);
      manifest.input_digests["in"] = d.digest;
      result = run_sigma(d.data);
    } else if (pencil->parsed()) {
      manifest.command = "pencil";
      LoadedDatum d1 = load_datum(in1), d2 = load_datum(in2);
      manifest.input_digests["in1"] = d1.digest;
      manifest.input_digests["in2"] = d2.digest;
      result = run_pencil(d1.data, d2.data, samples);
    } else if (quadric->parsed()) {
      manifest.command = "quadric-count";
      Json input = read_json_file(in_path);
      manifest.input_digests["in"] = json_digest(input);
      result = run_quadric_count(input, k_planes);
    } else if (lattice->parsed()) {
      manifest.command = "lattice";
      result = run_lattice(report);
    } else if (bbw->parsed()) {
      manifest.command = "bbw";
      result = run_bbw(verify, grass, u_weight, q_weight, twist);
    } else {
      manifest.command = "hodge";
      result = run_hodge(hodge_n);
    }

    if (timing) {
      auto t1 = std::chrono::steady_clock::now();
      manifest.wall_ms = static_cast<long>(
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    }

    Json env = envelope(manifest, result);
    if (!out.empty() && !gen->parsed()) {
      write_json_file(out, env);
    } else {
      std::cout << canonical_dump(env);
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
