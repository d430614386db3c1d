#include "epwlab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "epwlab/rng.hpp"
#include "epwlab/scalar.hpp"

namespace epw {

const char* const kToolVersion = "epwlab 0.1.0";

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& x : v) out.push_back(scalar_str(x));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
  Vec v;
  v.reserve(j.size());
  for (const Json& e : j) {
    if (!e.is_string()) throw std::invalid_argument("rational entries must be strings");
    auto x = parse_scalar(e.get<std::string>());
    if (!x) throw std::invalid_argument("malformed rational: " + e.get<std::string>());
    v.push_back(*x);
  }
  return v;
}

Json mat_to_json(const Mat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(scalar_str(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a JSON grid");
  std::vector<Vec> rows;
  for (const Json& r : j) rows.push_back(vec_from_json(r));
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("ragged JSON grid");
    for (size_t k = 0; k < rows[i].size(); ++k)
      m.at(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
  }
  return m;
}

Json lagrangian_to_json(const LagrangianData& data) {
  Json j;
  j["dim_v6"] = 6;
  j["A"] = mat_to_json(data.A);
  j["seed"] = data.seed;
  j["generator"] = data.generator;
  if (data.v5) j["v5"] = vec_to_json(*data.v5);
  if (data.ell) j["ell"] = *data.ell;
  if (data.plant_v) j["plant_v"] = vec_to_json(*data.plant_v);
  if (data.plant_u3) j["plant_u3"] = mat_to_json(*data.plant_u3);
  return j;
}

LagrangianData lagrangian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A"))
    throw std::invalid_argument("not a Lagrangian datum: missing \"A\"");
  LagrangianData data;
  data.A = mat_from_json(j.at("A"));
  if (data.A.rows != 10 || data.A.cols != 20)
    throw std::invalid_argument("Lagrangian matrix must be 10 x 20");
  data.seed = j.value("seed", uint64_t{0});
  data.generator = j.value("generator", std::string{});
  if (j.contains("v5")) data.v5 = vec_from_json(j.at("v5"));
  if (j.contains("ell")) data.ell = j.at("ell").get<int>();
  if (j.contains("plant_v")) data.plant_v = vec_from_json(j.at("plant_v"));
  if (j.contains("plant_u3")) data.plant_u3 = mat_from_json(j.at("plant_u3"));
  return data;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << canonical_dump(j);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

std::string json_digest(const Json& j) {
  uint64_t h = fnv1a64(canonical_dump(j));
  std::ostringstream os;
  os << "fnv1a:" << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
  return os.str();
}

Json envelope(const RunManifest& manifest, const Json& result) {
  Json m;
  m["command"] = manifest.command;
  m["seed"] = manifest.seed;
  m["version"] = kToolVersion;
  m["inputs"] = Json::object();
  for (const auto& [name, digest] : manifest.input_digests) m["inputs"][name] = digest;
  if (manifest.wall_ms) m["wall_ms"] = *manifest.wall_ms;
  Json out;
  out["manifest"] = std::move(m);
  out["result"] = result;
  return out;
}

}  // namespace epw
