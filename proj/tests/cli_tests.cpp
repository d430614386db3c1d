// End-to-end checks of the epwlab binary: envelope shape, determinism,
// exit codes, and agreement with the library on a handful of commands.
// Driven by ctest with EPWLAB_BIN / EPWLAB_TMP in the environment.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "epwlab/json_io.hpp"
#include "epwlab/lagrangian.hpp"
#include "epwlab/matrix.hpp"
#include "epwlab/rng.hpp"

using namespace epw;

namespace {

int failures = 0;

#define CHECK_TRUE(cond)                                                     \
  do {                                                                       \
    if (!(cond)) {                                                           \
      ++failures;                                                            \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  " << #cond \
                << "\n";                                                     \
    }                                                                        \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string bin_path;
std::filesystem::path tmp_dir;

RunResult run(const std::string& args) {
  std::string cmd = bin_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json parse_envelope(const RunResult& r) {
  Json j = Json::parse(r.out, nullptr, false);
  CHECK_TRUE(!j.is_discarded());
  if (j.is_discarded()) return Json::object();
  CHECK_TRUE(j.contains("manifest") && j.contains("result"));
  return j;
}

std::string path_of(const char* name) { return (tmp_dir / name).string(); }

std::string slurp(const std::string& path) {
  FILE* f = fopen(path.c_str(), "rb");
  if (!f) return {};
  std::string s;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) s.append(buf, n);
  fclose(f);
  return s;
}

// rank-2 symmetric perturbation of a graph datum gives a pair meeting in
// dimension 8, the input the pencil command wants
void write_pencil_pair(const std::string& p1, const std::string& p2) {
  SplitMix64 rng(20260816);
  Mat q = random_mat(rng, 10, 10, -4, 4);
  q = q + q.transpose();
  Mat u = random_mat(rng, 2, 10, -3, 3);
  while (rank_of(u) != 2) u = random_mat(rng, 2, 10, -3, 3);
  Mat qp = q + u.transpose() * u;
  write_json_file(p1, lagrangian_to_json(from_graph(q)));
  write_json_file(p2, lagrangian_to_json(from_graph(qp)));
}

}  // namespace

int main() {
  const char* bin = std::getenv("EPWLAB_BIN");
  const char* tmp = std::getenv("EPWLAB_TMP");
  if (!bin || !tmp) {
    std::cerr << "[FAIL] EPWLAB_BIN / EPWLAB_TMP not set\n";
    return 1;
  }
  bin_path = bin;
  tmp_dir = tmp;
  std::filesystem::create_directories(tmp_dir);

  // --- gen: envelope shape, datum file, byte determinism ------------------
  std::string d1 = path_of("d1.json");
  RunResult g1 = run("gen --seed 7 --ell 1 -o " + d1);
  CHECK_TRUE(g1.exit_code == 0);
  Json env = parse_envelope(g1);
  CHECK_TRUE(env["manifest"]["command"] == "gen");
  CHECK_TRUE(env["manifest"]["seed"] == 7);
  CHECK_TRUE(!env["manifest"].contains("wall_ms"));
  CHECK_TRUE(env["result"]["ell"] == 1);
  std::string digest = env["result"]["digest"].get<std::string>();
  CHECK_TRUE(digest.rfind("fnv1a:", 0) == 0 && digest.size() == 22);

  std::string d1b = path_of("d1b.json");
  RunResult g2 = run("gen --seed 7 --ell 1 -o " + d1b);
  CHECK_TRUE(g2.exit_code == 0);
  CHECK_TRUE(slurp(d1) == slurp(d1b) && !slurp(d1).empty());

  // --- datum file round-trips through the library verbatim ----------------
  Json stored = read_json_file(d1);
  LagrangianData data = lagrangian_from_json(stored);
  CHECK_TRUE(is_lagrangian(data.A).ok);
  CHECK_TRUE(data.seed == 7 && data.ell && *data.ell == 1);
  Json re = lagrangian_to_json(data);
  CHECK_TRUE(re["A"] == stored["A"] && re["generator"] == stored["generator"]);

  // --- degree: frozen degrees, identical bytes across repeat runs ---------
  RunResult dz = run("degree --in " + d1 + " --which z --seed 5");
  CHECK_TRUE(dz.exit_code == 0);
  Json envz = parse_envelope(dz);
  CHECK_TRUE(envz["result"]["degree"] == 4);
  CHECK_TRUE(envz["manifest"]["inputs"].contains("in"));
  RunResult dz2 = run("degree --in " + d1 + " --which z --seed 5");
  CHECK_TRUE(dz.out == dz2.out);

  RunResult dy = run("degree --in " + d1 + " --which y --seed 5");
  CHECK_TRUE(dy.exit_code == 0 && parse_envelope(dy)["result"]["degree"] == 6);
  RunResult dd = run("degree --in " + d1 + " --which ydual --seed 5");
  CHECK_TRUE(dd.exit_code == 0 && parse_envelope(dd)["result"]["degree"] == 6);

  // --- planted point shows up in its stratum ------------------------------
  std::string d2 = path_of("d2.json");
  CHECK_TRUE(run("gen --seed 8 --plant y2:1,0,2,0,0,1 -o " + d2).exit_code == 0);
  RunResult st = run("stratum --in " + d2 + " --v 1,0,2,0,0,1");
  CHECK_TRUE(st.exit_code == 0);
  Json envs = parse_envelope(st);
  CHECK_TRUE(envs["result"]["kind"] == "y");
  CHECK_TRUE(envs["result"]["ell"].get<int>() >= 2);

  // --- sigma on a two-dimensional kernel dial -----------------------------
  std::string d3 = path_of("d3.json");
  CHECK_TRUE(run("gen --seed 11 --ell 2 -o " + d3).exit_code == 0);
  RunResult sg = run("sigma --in " + d3);
  CHECK_TRUE(sg.exit_code == 0);
  Json envg = parse_envelope(sg);
  CHECK_TRUE(envg["result"]["ell"] == 2);
  CHECK_TRUE(envg["result"]["veronese_checked"] == true);
  CHECK_TRUE(envg["result"]["points"].size() >= 5);

  // --- pencil: compatible pair passes, independent pair is a usage error --
  std::string p1 = path_of("p1.json"), p2 = path_of("p2.json");
  write_pencil_pair(p1, p2);
  RunResult pc = run("pencil --in1 " + p1 + " --in2 " + p2 + " --samples 4");
  CHECK_TRUE(pc.exit_code == 0);
  Json envp = parse_envelope(pc);
  CHECK_TRUE(envp["result"]["base_dim"] == 8);
  CHECK_TRUE(envp["result"]["samples"] == 5);
  CHECK_TRUE(envp["result"]["all_lagrangian"] == true);
  CHECK_TRUE(envp["result"]["pairwise_intersection_is_base"] == true);
  CHECK_TRUE(run("pencil --in1 " + d1 + " --in2 " + d3).exit_code == 2);

  // --- quadric-count over F3 and over Q ------------------------------------
  std::string q1 = path_of("q1.json");
  write_json_file(q1, Json{{"p", 3},
                           {"gram", Json::parse("[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],"
                                                "[0,0,0,1,0],[0,0,0,0,0]]")}});
  RunResult qc = run("quadric-count --in " + q1 + " --k 1");
  CHECK_TRUE(qc.exit_code == 0);
  Json envq = parse_envelope(qc);
  CHECK_TRUE(envq["result"]["count"] == 88);
  CHECK_TRUE(envq["result"]["components"] == 1);
  CHECK_TRUE(envq["result"]["corank"] == 1);

  std::string q2 = path_of("q2.json");
  write_json_file(q2, Json{{"p", "Q"},
                           {"gram", Json::parse("[[2,1,0,0,0,0],[1,2,0,0,0,0],[0,0,2,0,0,0],"
                                                "[0,0,0,2,0,0],[0,0,0,0,2,0],[0,0,0,0,0,2]]")}});
  RunResult qq = run("quadric-count --in " + q2 + " --k 2");
  CHECK_TRUE(qq.exit_code == 0);
  Json envqq = parse_envelope(qq);
  CHECK_TRUE(envqq["result"]["families"] == 2);
  CHECK_TRUE(!envqq["result"].contains("count"));

  // --- lattice, bbw, hodge -------------------------------------------------
  RunResult lt = run("lattice --report gm6");
  CHECK_TRUE(lt.exit_code == 0);
  CHECK_TRUE(parse_envelope(lt)["result"]["all_checks"] == true);
  RunResult lc = run("lattice --report catalog");
  CHECK_TRUE(lc.exit_code == 0);
  CHECK_TRUE(parse_envelope(lc)["result"]["catalog"].size() == 8);

  RunResult ba = run("bbw --verify a2");
  CHECK_TRUE(ba.exit_code == 0);
  Json envb = parse_envelope(ba);
  CHECK_TRUE(envb["result"]["all_match"] == true);
  CHECK_TRUE(envb["result"]["cases"].size() == 4);

  RunResult bg = run("bbw --grass 3,5 --u-weight 4,4,2");
  CHECK_TRUE(bg.exit_code == 0);
  Json envbg = parse_envelope(bg);
  CHECK_TRUE(envbg["result"]["bott"]["degree"] == 4);
  CHECK_TRUE(envbg["result"]["bott"]["dimension"] == 1);

  RunResult hd = run("hodge --n 5");
  CHECK_TRUE(hd.exit_code == 0);
  CHECK_TRUE(parse_envelope(hd)["result"]["euler"] == -12);

  // --- -o redirect and --timing --------------------------------------------
  std::string rpt = path_of("report.json");
  RunResult rd = run("degree --in " + d1 + " --which z --seed 5 -o " + rpt);
  CHECK_TRUE(rd.exit_code == 0 && rd.out.empty());
  Json redirected = read_json_file(rpt);
  CHECK_TRUE(redirected["result"]["degree"] == 4);

  RunResult tm = run("hodge --n 4 --timing");
  CHECK_TRUE(tm.exit_code == 0);
  CHECK_TRUE(parse_envelope(tm)["manifest"].contains("wall_ms"));

  // --- exit codes -----------------------------------------------------------
  CHECK_TRUE(run("stratum --in " + path_of("nope.json") + " --v 1,0,0,0,0,0").exit_code == 2);
  CHECK_TRUE(run("bogus").exit_code == 2);
  CHECK_TRUE(run("hodge --n 9").exit_code == 2);
  CHECK_TRUE(run("hodge").exit_code == 2);
  CHECK_TRUE(run("stratum --in " + d1 + " --v 1,0,0,0,0,0 --f 0,0,0,0,0,1").exit_code == 2);
  CHECK_TRUE(run("stratum --in " + d1 + " --v 1,0").exit_code == 2);
  CHECK_TRUE(run("bbw").exit_code == 2);
  CHECK_TRUE(run("--help").exit_code == 0);

  if (failures) {
    std::cerr << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
