#pragma once
// JSON forms of quivers, words, surfaces and run reports (indices are 1-based)

#include <json.hpp>

#include "cl/surface.hpp"

namespace cl::io {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

json to_json(const Word& w);
// structural parsing only; range checks are left to validate_word
Word word_from_json(const json& j);

json to_json(const SurfaceSpec& s);
SurfaceSpec surface_from_json(const json& j);

json to_json(const Triangulation& t);
json to_json(const IntMatrix& m);

// 64-bit FNV-1a, hex
std::string digest(const std::string& s);

json read_file(const std::string& path);

}  // namespace cl::io
