#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "epwlab/lagrangian.hpp"
#include "epwlab/matrix.hpp"

namespace epw {

using Json = nlohmann::json;

// Exact values cross the JSON boundary as "p/q" strings (integers drop the
// denominator), matrices as row grids of them.
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json lagrangian_to_json(const LagrangianData& data);
LagrangianData lagrangian_from_json(const Json& j);

// Canonical form: sorted keys, two-space indent, trailing newline. Equal
// inputs serialize to equal bytes, which is what the digests hash.
std::string canonical_dump(const Json& j);
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);
std::string json_digest(const Json& j);  // "fnv1a:" + 16 hex digits

// Every CLI report carries one of these next to its payload.
struct RunManifest {
  std::string command;
  uint64_t seed = 0;
  std::map<std::string, std::string> input_digests;
  std::optional<long> wall_ms;  // present only when timing was requested
};

extern const char* const kToolVersion;

// {"manifest": {...}, "result": ...}
Json envelope(const RunManifest& manifest, const Json& result);

}  // namespace epw
